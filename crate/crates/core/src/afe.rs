//! The approximate functional equation for `|zeta(1/2+it)|^2` and the mean
//! square of its remainder `R(t)`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_4, TAU};

#[allow(unused_imports)]
use num_traits::Float;

use crate::divisor::DivisorTable;
use crate::fit::{fit_coefficient, loglog_slope, PowerLawFit};
use crate::quadrature::integrate_panels;
use crate::summation::Neumaier;
use crate::zeta::{zeta_sq, ZetaEvalConfig};
use crate::{Error, Result};

/// `|zeta|^2` split into the explicit sum and the remainder at one height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfeSample {
    pub t: f64,
    pub afe_sum: f64,
    pub remainder: f64,
}

fn check(t: f64, table: &DivisorTable) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain("t must be positive and finite"));
    }
    if (t / TAU).floor() > table.n_max() as f64 {
        return Err(Error::Capacity {
            requested: (t / TAU).floor() as u64,
            limit: table.n_max(),
        });
    }
    Ok(())
}

/// `2 sum_{n <= t/2pi} d(n) n^(-1/2) cos(t log(t/(2 pi n)) - t - pi/4)`.
pub fn afe_sum(t: f64, table: &DivisorTable) -> Result<f64> {
    check(t, table)?;
    let n_max = (t / TAU).floor() as u64;
    let mut acc = Neumaier::new();
    for n in 1..=n_max {
        let nf = n as f64;
        let phase = t.mul_add((t / (TAU * nf)).ln() - 1.0, -FRAC_PI_4);
        acc.add(f64::from(table.d(n)) * phase.cos() / nf.sqrt());
    }
    Ok(2.0 * acc.value())
}

/// `R(t) = |zeta(1/2+it)|^2 - afe_sum(t)`.
pub fn afe_remainder(t: f64, table: &DivisorTable, cfg: &ZetaEvalConfig) -> Result<f64> {
    afe_sample(t, table, cfg).map(|s| s.remainder)
}

pub fn afe_sample(t: f64, table: &DivisorTable, cfg: &ZetaEvalConfig) -> Result<AfeSample> {
    let s = afe_sum(t, table)?;
    let z = zeta_sq(t, cfg)?;
    Ok(AfeSample {
        t,
        afe_sum: s,
        remainder: z - s,
    })
}

/// Points `2 pi n` inside `(a, b)`, where `R` jumps.
fn cuts(a: f64, b: f64) -> Vec<f64> {
    let first = (a / TAU).floor() as u64 + 1;
    (first..)
        .map(|n| TAU * n as f64)
        .take_while(|&c| c < b)
        .collect()
}

/// `int_a^b R(t)^2 dt` with panels split at every `2 pi n`.
fn remainder_sq_integral(a: f64, b: f64, table: &DivisorTable, cfg: &ZetaEvalConfig, tol: f64, total: f64) -> Result<f64> {
    let mut f = |t: f64| {
        let r = afe_remainder(t, table, cfg)?;
        Ok([r * r])
    };
    let mut acc = Neumaier::new();
    let mut lo = a;
    for c in cuts(a, b).into_iter().chain(core::iter::once(b)) {
        if c > lo {
            acc.add(integrate_panels(&mut f, lo, c, tol, total)?[0]);
            lo = c;
        }
    }
    Ok(acc.value())
}

/// `int_1^T R(t)^2 dt`.
pub fn afe_meansquare(t: f64, table: &DivisorTable, cfg: &ZetaEvalConfig, tol: f64) -> Result<f64> {
    Ok(afe_meansquare_profile(&[t], table, cfg, tol)?[0])
}

/// `int_1^T R^2` at each `T` of an increasing list, in one ascending sweep.
pub fn afe_meansquare_profile(ts: &[f64], table: &DivisorTable, cfg: &ZetaEvalConfig, tol: f64) -> Result<Vec<f64>> {
    cfg.validate()?;
    if !(tol > 0.0) {
        return Err(Error::Config("quadrature tolerance must be positive"));
    }
    if ts.windows(2).any(|w| !(w[1] >= w[0])) {
        return Err(Error::Degenerate("heights must be nondecreasing"));
    }
    let last = match ts.last() {
        Some(&v) => v,
        None => return Ok(Vec::new()),
    };
    if !(ts[0] >= 1.0) {
        return Err(Error::OutOfRange {
            what: "T",
            value: ts[0],
            lo: 1.0,
            hi: f64::INFINITY,
        });
    }
    check(last, table)?;
    let total = (last - 1.0).max(1.0);
    let mut acc = Neumaier::new();
    let mut lo = 1.0;
    let mut out = Vec::with_capacity(ts.len());
    for &t in ts {
        if t > lo {
            acc.add(remainder_sq_integral(lo, t, table, cfg, tol, total)?);
            lo = t;
        }
        out.push(acc.value());
    }
    Ok(out)
}

/// Scaling summary of `int_1^T R^2` against `A T^(1/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AfeMeanSquareFit {
    pub heights: Vec<f64>,
    pub integrals: Vec<f64>,
    pub slope: PowerLawFit,
    /// Least-squares `A` over all heights.
    pub a: f64,
    /// `A` fitted on the lower and upper halves of the heights.
    pub a_lower: f64,
    pub a_upper: f64,
}

/// Fits `int_1^T R^2 ~ A T^(1/2)` over the given heights (at least 3).
pub fn afe_meansquare_fit(ts: &[f64], table: &DivisorTable, cfg: &ZetaEvalConfig, tol: f64) -> Result<AfeMeanSquareFit> {
    if ts.len() < 3 {
        return Err(Error::Degenerate("at least three heights are required"));
    }
    let integrals = afe_meansquare_profile(ts, table, cfg, tol)?;
    let samples: Vec<(f64, f64)> = ts.iter().copied().zip(integrals.iter().copied()).collect();
    let slope = loglog_slope(&samples)?;
    let half = samples.len().div_ceil(2);
    Ok(AfeMeanSquareFit {
        heights: ts.to_vec(),
        a: fit_coefficient(&samples, 0.5)?,
        a_lower: fit_coefficient(&samples[..half], 0.5)?,
        a_upper: fit_coefficient(&samples[samples.len() - half..], 0.5)?,
        integrals,
        slope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::divisor_sieve;

    #[test]
    fn empty_and_single_term() {
        let table = divisor_sieve(10).unwrap();
        assert_eq!(afe_sum(1.0, &table).unwrap(), 0.0);
        let t = TAU * 1.5;
        let want = 2.0 * (t * (t / TAU).ln() - t - FRAC_PI_4).cos();
        assert!((afe_sum(t, &table).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn remainder_below_first_cut_is_zeta_sq() {
        let table = divisor_sieve(10).unwrap();
        let cfg = ZetaEvalConfig::default();
        assert_eq!(afe_remainder(1.0, &table, &cfg).unwrap(), zeta_sq(1.0, &cfg).unwrap());
    }

    #[test]
    fn table_capacity() {
        let table = divisor_sieve(10).unwrap();
        assert!(matches!(afe_sum(100.0, &table), Err(Error::Capacity { .. })));
    }

    #[test]
    fn cut_points() {
        let c = cuts(1.0, 20.0);
        assert_eq!(c, [TAU, 2.0 * TAU, 3.0 * TAU]);
        assert!(cuts(TAU, 2.0 * TAU).is_empty());
    }

    #[test]
    fn meansquare_at_one_is_zero() {
        let table = divisor_sieve(10).unwrap();
        assert_eq!(afe_meansquare(1.0, &table, &ZetaEvalConfig::default(), 1e-8).unwrap(), 0.0);
    }
}
