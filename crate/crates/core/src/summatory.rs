//! Discrete sums of `E(n)` and its powers, and the decomposition of
//! `sum_{n <= x} E(n)` into `pi x`, the `psi`-weighted zeta integral and `G(x)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::divisor::psi_of;
use crate::fit::{fit_coefficient, loglog_slope};
use crate::mean_square::{g_of, main_term, ErrorTermTable};
use crate::quadrature::{gauss_legendre_8, max_panel_width};
use crate::summation::Neumaier;
use crate::zeta::{zeta_sq, ZetaEvalConfig};
use crate::{Error, Result};

/// Largest moment accepted.
pub const MAX_MOMENT: u32 = 9;

/// Shortest span, in decades, accepted by [`moment_fit`].
pub const MIN_GRID_DECADES: f64 = 1.3;

fn check_k(k: u32) -> Result<()> {
    if !(1..=MAX_MOMENT).contains(&k) {
        return Err(Error::OutOfRange {
            what: "k",
            value: f64::from(k),
            lo: 1.0,
            hi: f64::from(MAX_MOMENT),
        });
    }
    Ok(())
}

/// `sum_{n <= x} E(n)^k`; zero for `x < 1`.
pub fn sum_e_k(x: f64, k: u32, table: &ErrorTermTable) -> Result<f64> {
    check_k(k)?;
    if x < 1.0 {
        if x < 0.0 {
            return Err(Error::OutOfRange {
                what: "x",
                value: x,
                lo: 0.0,
                hi: table.x_max,
            });
        }
        return Ok(0.0);
    }
    let acc: Neumaier = table.e_integers(x)?.map(|e| e.powi(k as i32)).collect();
    Ok(acc.value())
}

/// `int_0^x psi(t) |zeta(1/2+it)|^2 dt`.
pub fn psi_zeta_integral(x: f64, table: &ErrorTermTable) -> Result<f64> {
    table.cum_psi_at(x)
}

/// `sum_{n <= x} E(n) = pi x + int_0^x psi |zeta|^2 + G(x) + residual`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem2Decomposition {
    pub x: f64,
    pub sum_e: f64,
    pub pi_x: f64,
    pub psi_int: f64,
    pub g_x: f64,
    pub residual: f64,
    /// `|residual| / (x^(1/3) max(log x, 1))`.
    pub scaled_residual: f64,
    /// `|sum_e - pi x - G(x)| / x^(0.55)`.
    pub h_minus_g: f64,
}

pub fn theorem2_decomposition(x: f64, table: &ErrorTermTable) -> Result<Theorem2Decomposition> {
    let sum_e = sum_e_k(x, 1, table)?;
    let pi_x = PI * x;
    let psi_int = psi_zeta_integral(x, table)?;
    let g_x = g_of(x, table)?;
    let residual = sum_e - pi_x - psi_int - g_x;
    Ok(Theorem2Decomposition {
        x,
        sum_e,
        pi_x,
        psi_int,
        g_x,
        residual,
        scaled_residual: residual.abs() / (x.cbrt() * x.ln().max(1.0)),
        h_minus_g: (sum_e - pi_x - g_x).abs() / x.powf(0.55),
    })
}

/// Power sums of `E` over a grid with their scaling fits.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSummary {
    pub k: u32,
    pub x_grid: Vec<f64>,
    pub sums: Vec<f64>,
    /// Log-log slope of `|sums|`.
    pub fitted_exponent: f64,
    /// Least-squares `C_k` at the exponent `1 + k/4`.
    pub fitted_coeff: f64,
    /// `C_k` fitted separately on the lower and upper halves of the grid.
    pub coeff_lower: f64,
    pub coeff_upper: f64,
    /// `(sum - C_k x^(1+k/4)) / sum` per grid point.
    pub residual_report: Vec<f64>,
}

pub fn moment_fit(k: u32, x_grid: &[f64], table: &ErrorTermTable) -> Result<MomentSummary> {
    check_k(k)?;
    if x_grid.len() < 3 || x_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Degenerate("grid needs at least three increasing points"));
    }
    let (lo, hi) = (x_grid[0], x_grid[x_grid.len() - 1]);
    if !(lo >= 1.0) || (hi / lo).log10() < MIN_GRID_DECADES {
        return Err(Error::Degenerate("grid must span at least 1.3 decades above 1"));
    }
    let sums = x_grid
        .iter()
        .map(|&x| sum_e_k(x, k, table))
        .collect::<Result<Vec<_>>>()?;
    let abs: Vec<(f64, f64)> = x_grid.iter().copied().zip(sums.iter().map(|s| s.abs())).collect();
    let fit = loglog_slope(&abs)?;
    let signed: Vec<(f64, f64)> = x_grid.iter().copied().zip(sums.iter().copied()).collect();
    let p = 1.0 + f64::from(k) / 4.0;
    let coeff = fit_coefficient(&signed, p)?;
    let half = signed.len().div_ceil(2);
    let residual_report = signed.iter().map(|&(x, s)| (s - coeff * x.powf(p)) / s).collect();
    Ok(MomentSummary {
        k,
        x_grid: x_grid.to_vec(),
        fitted_exponent: fit.slope,
        fitted_coeff: coeff,
        coeff_lower: fit_coefficient(&signed[..half], p)?,
        coeff_upper: fit_coefficient(&signed[signed.len() - half..], p)?,
        sums,
        residual_report,
    })
}

/// `sum_{T <= n <= 2T} (E(n + U) - E(n))^2`.
pub fn e_short_interval_sq(t: u64, u: u64, table: &ErrorTermTable) -> Result<f64> {
    let end = 2 * t + u;
    if end as f64 > table.x_max {
        return Err(Error::OutOfRange {
            what: "2T + U",
            value: end as f64,
            lo: 0.0,
            hi: table.x_max,
        });
    }
    if u == 0 {
        return Ok(0.0);
    }
    let mut acc = Neumaier::new();
    for n in t..=2 * t {
        let d = table.e_at_integer(n + u)? - table.e_at_integer(n)?;
        acc.add(d * d);
    }
    Ok(acc.value())
}

/// Terms of the summation-by-parts identity for `sum_{n <= x} E^k(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StieltjesCheck {
    pub sum: f64,
    pub integral: f64,
    pub boundary: f64,
    pub psi_term: f64,
    /// `sum - integral + boundary - psi_term`.
    pub residual: f64,
}

fn gl8<F: FnMut(f64) -> Result<f64>>(mut f: F, a: f64, b: f64) -> Result<f64> {
    Ok(gauss_legendre_8(&mut |u| f(u).map(|v| [v]), a, b)?[0])
}

/// Evaluates `sum E^k(n) - int_0^x E^k + E^k(x) psi(x) - k int_0^x psi E^(k-1) E'`
/// from scratch, with `E` and `E'` computed directly from `zeta` on fine
/// fixed panels (no table).
pub fn stieltjes_residual(k: u32, x: f64, cfg: &ZetaEvalConfig) -> Result<StieltjesCheck> {
    check_k(k)?;
    if !(1.0..=5e3).contains(&x) {
        return Err(Error::OutOfRange {
            what: "x",
            value: x,
            lo: 1.0,
            hi: 5e3,
        });
    }
    let kf = k as i32;
    let mut sum = Neumaier::new();
    let mut integral = Neumaier::new();
    let mut psi_term = Neumaier::new();
    let mut i0 = Neumaier::new(); // int_0^a |zeta|^2
    let mut a = 0.0;
    while a < x {
        let next_int = a.floor() + 1.0;
        let end = next_int.min(x);
        let count = ((end - a) / (0.5 * max_panel_width(a))).ceil().max(1.0) as usize;
        let h = (end - a) / count as f64;
        for i in 0..count {
            let lo = a + h * i as f64;
            let hi = if i + 1 == count { end } else { a + h * (i + 1) as f64 };
            let base = i0.value();
            let e_at = |u: f64| -> Result<f64> {
                let part = gl8(|v| zeta_sq(v, cfg), lo, u)?;
                Ok(base + part - main_term(u))
            };
            let n = lo.floor();
            integral.add(gl8(|u| e_at(u).map(|e| e.powi(kf)), lo, hi)?);
            psi_term.add(gl8(
                |u| {
                    let e = e_at(u)?;
                    let de = zeta_sq(u, cfg)? - crate::mean_square::main_term_derivative(u);
                    Ok((u - n - 0.5) * e.powi(kf - 1) * de)
                },
                lo,
                hi,
            )?);
            i0.add(gl8(|v| zeta_sq(v, cfg), lo, hi)?);
        }
        a = end;
        if a == next_int {
            sum.add((i0.value() - main_term(a)).powi(kf));
        }
    }
    let e_x = i0.value() - main_term(x);
    let boundary = e_x.powi(kf) * psi_of(x);
    let psi_term = f64::from(k) * psi_term.value();
    let (sum, integral) = (sum.value(), integral.value());
    Ok(StieltjesCheck {
        sum,
        integral,
        boundary,
        psi_term,
        residual: sum - integral + boundary - psi_term,
    })
}
