//! Exponential sums `D(x, eta) = sum_{n <= x} d(n) e(n eta)` with divisor
//! coefficients.
//!
//! Phases are reduced modulo one in fixed point: `frac(eta)` is held as a
//! 128-bit turn count and `frac(n eta)` is a wrapping product, so large `n`
//! loses nothing to double rounding.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, LN_2};

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::cf::ContinuedFractionExpansion;
use crate::divisor::DivisorTable;
use crate::fit::iterated_log;
use crate::fixed::{exp_pi_m, Fixed};
use crate::summation::ComplexNeumaier;
use crate::{Error, Result};

/// Largest tolerated error in `n eta mod 1`.
pub const PHASE_TOLERANCE: f64 = 1e-12;

/// A high-precision real frequency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eta {
    value: Fixed,
}

impl Eta {
    pub fn new(value: Fixed) -> Self {
        Self { value }
    }

    /// Exact binary value of a double.
    pub fn from_f64(v: f64) -> Result<Self> {
        Ok(Self::new(Fixed::from_f64(v, 128)?))
    }

    /// `num / den` to `bits` fractional bits.
    pub fn ratio(num: i64, den: i64, bits: u32) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("zero denominator"));
        }
        Ok(Self::new(Fixed::from_ratio(&BigInt::from(num), &BigInt::from(den), bits)))
    }

    /// `e^(-2 pi m)`.
    pub fn exp_neg_two_pi(m: i64, digits: u32) -> Result<Self> {
        Ok(Self::new(exp_pi_m(-2 * m, digits)?))
    }

    /// `frac(e^(2 pi m))`, mapped into `(0, 1]`.
    pub fn frac_exp_two_pi(m: i64, digits: u32) -> Result<Self> {
        let v = exp_pi_m(2 * m, digits)?;
        let f = v.fract();
        if f.mantissa().sign() == Sign::NoSign {
            return Ok(Self::new(Fixed::from_int(1, f.bits())));
        }
        Ok(Self::new(f))
    }

    pub fn value(&self) -> &Fixed {
        &self.value
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn neg(&self) -> Self {
        Self::new(self.value.neg())
    }

    /// `eta + k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self::new(self.value.add(&Fixed::from_int(k, self.value.bits())))
    }

    pub fn recip(&self) -> Result<Self> {
        Ok(Self::new(self.value.recip()?))
    }

    /// Keeps only `bits` fractional bits.
    pub fn truncated(&self, bits: u32) -> Self {
        Self::new(self.value.with_bits(bits))
    }

    /// Worst error in `n eta mod 1` over `n <= x`.
    pub fn phase_error_bound(&self, x: f64) -> f64 {
        let ulp = 2f64.powi(-(self.value.bits().min(1000) as i32));
        x * (f64::from(self.value.err_ulps().max(1)) * ulp + 2f64.powi(-128))
    }

    fn turns(&self) -> (u128, bool) {
        let negative = self.value.mantissa().sign() == Sign::Minus;
        let mag = if negative { self.value.neg() } else { self.value.clone() };
        (mag.fract_u128(), negative)
    }
}

/// `e(turn / 2^128)`, exact at multiples of a quarter turn and satisfying
/// `cis(-t) == conj(cis(t))` bit for bit.
fn cis_turns(turn: u128) -> Complex64 {
    const HALF: u128 = 1 << 127;
    const QUARTER_MASK: u128 = (1 << 126) - 1;
    let (t, flip) = if turn > HALF { (turn.wrapping_neg(), true) } else { (turn, false) };
    let quadrant = t >> 126;
    let r = t & QUARTER_MASK;
    let a = r as f64 * (FRAC_PI_2 / 2f64.powi(126));
    let (s, c) = if r == 0 { (0.0, 1.0) } else { a.sin_cos() };
    let (re, im) = match quadrant {
        0 => (c, s),
        1 => (-s, c),
        _ => (-c, -s),
    };
    if flip {
        Complex64::new(re, -im)
    } else {
        Complex64::new(re, im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    FullExponential,
    SineOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WiltonSumRecord {
    pub x: f64,
    pub eta: Eta,
    pub value: Complex64,
    pub mode: SumMode,
}

fn check_x(x: f64, table: &DivisorTable) -> Result<u64> {
    if !(x >= 1.0 && x <= table.n_max() as f64) {
        return Err(Error::OutOfRange {
            what: "x",
            value: x,
            lo: 1.0,
            hi: table.n_max() as f64,
        });
    }
    Ok(x.floor() as u64)
}

fn check_precision(x: f64, eta: &Eta) -> Result<()> {
    let bound = eta.phase_error_bound(x);
    if bound > PHASE_TOLERANCE {
        return Err(Error::InsufficientPrecision { bound });
    }
    Ok(())
}

/// Core summation over `1..=n`.
fn sum_terms(n: u64, eta: &Eta, table: &DivisorTable) -> Complex64 {
    let (f, negative) = eta.turns();
    let mut acc = ComplexNeumaier::new();
    let mut turn: u128 = 0;
    for k in 1..=n {
        turn = turn.wrapping_add(f);
        let t = if negative { turn.wrapping_neg() } else { turn };
        acc.add(cis_turns(t) * f64::from(table.d(k)));
    }
    acc.value()
}

/// `D(x, eta)`.
pub fn wilton_sum(x: f64, eta: &Eta, table: &DivisorTable) -> Result<WiltonSumRecord> {
    let n = check_x(x, table)?;
    check_precision(x, eta)?;
    Ok(WiltonSumRecord {
        x,
        eta: eta.clone(),
        value: sum_terms(n, eta, table),
        mode: SumMode::FullExponential,
    })
}

/// `sum_{n <= x} d(n) sin(2 pi n eta)`, the imaginary part of [`wilton_sum`].
pub fn wilton_sine_sum(x: f64, eta: &Eta, table: &DivisorTable) -> Result<f64> {
    wilton_sum(x, eta, table).map(|r| r.value.im)
}

/// `D(x, eta) - eta^-1 D(eta^2 x, -1/eta)` and its size relative to
/// `x^(1/2) log x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformResidual {
    pub x: f64,
    pub y: f64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: Complex64,
    pub ratio: f64,
}

/// Checks the transformation formula for `eta` in `(0, 1]`; needs `eta^2 x >= 10`.
/// `D(y, -theta)` is taken as `conj(D(y, theta))`.
pub fn transform_residual(x: f64, eta: &Eta, table: &DivisorTable) -> Result<TransformResidual> {
    let e = eta.to_f64();
    if !(e > 0.0 && e <= 1.0) {
        return Err(Error::OutOfRange {
            what: "eta",
            value: e,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let y = e * e * x;
    if y < 10.0 {
        return Err(Error::Domain("eta^2 x must be at least 10"));
    }
    let lhs = wilton_sum(x, eta, table)?.value;
    let inv = eta.recip()?;
    let d = wilton_sum(y, &inv, table)?.value;
    let rhs = d.conj() * inv.to_f64();
    let residual = lhs - rhs;
    Ok(TransformResidual {
        x,
        y,
        lhs,
        rhs,
        residual,
        ratio: residual.norm() / (x.sqrt() * x.ln()),
    })
}

/// Digits of `e^(-2 pi m)` needed for phases up to `x`.
fn eta_digits(x: f64, m: i64) -> u32 {
    // leading zeros of e^{-2 pi m} plus the phase budget
    let zeros = (2.0 * core::f64::consts::PI * m as f64 / core::f64::consts::LN_10).ceil() as u32;
    zeros + 20 + x.log10().ceil().max(0.0) as u32 + 10
}

/// One row of the Theorem-1 style comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Row {
    pub x: f64,
    pub m: i64,
    pub abs_d: f64,
    /// `|D| / (x log x)`.
    pub weak_ratio: f64,
    /// `|D| / (x log x exp(-C log_2 x / log_3 x))`.
    pub ratio: f64,
}

/// `|D(x, e^(-2 pi m))| / (x log x exp(-C log_2 x / log_3 x))` for `x >= 1000`
/// and `1 <= m <= log_2 x / log_3 x`.
pub fn theorem1_ratio(x: f64, m: i64, table: &DivisorTable, c: f64) -> Result<Theorem1Row> {
    if !(x >= 1e3) {
        return Err(Error::OutOfRange {
            what: "x",
            value: x,
            lo: 1e3,
            hi: table.n_max() as f64,
        });
    }
    if !(c > 0.0) {
        return Err(Error::Domain("C must be positive"));
    }
    let l2 = iterated_log(x, 2)?;
    let l3 = iterated_log(x, 3)?;
    if m < 1 || m as f64 > l2 / l3 {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as f64,
            lo: 1.0,
            hi: l2 / l3,
        });
    }
    let eta = Eta::exp_neg_two_pi(m, eta_digits(x, m))?;
    let abs_d = wilton_sum(x, &eta, table)?.value.norm();
    let xl = x * x.ln();
    Ok(Theorem1Row {
        x,
        m,
        abs_d,
        weak_ratio: abs_d / xl,
        ratio: abs_d / (xl * (-c * l2 / l3).exp()),
    })
}

/// `x^(1/2) log^2 x + min(a_N(2m) x^(1/2) log x, 2^(-N/2) x log x)`, where `cf`
/// is the expansion of `e^(2 pi m)`.
pub fn quotient_envelope(x: f64, m: i64, n: usize, cf: &ContinuedFractionExpansion) -> Result<f64> {
    if cf.m != 2 * m {
        return Err(Error::Domain("expansion must be of e^(2 pi m)"));
    }
    if !(x > 1.0) {
        return Err(Error::Domain("x must exceed 1"));
    }
    if n >= cf.certified_len {
        return Err(Error::OutOfRange {
            what: "N",
            value: n as f64,
            lo: 0.0,
            hi: cf.certified_len as f64 - 1.0,
        });
    }
    let a_n = cf.quotient_f64(n).unwrap_or(f64::INFINITY);
    let (s, l) = (x.sqrt(), x.ln());
    let dyadic = (-(n as f64) * 0.5 * LN_2).exp() * x * l;
    Ok(s * l * l + (a_n * s * l).min(dyadic))
}

/// Envelope minimised over `N` in `[1, certified_len)`, compared with `|D|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeReport {
    pub x: f64,
    pub m: i64,
    pub best_n: usize,
    pub envelope: f64,
    pub abs_d: f64,
    pub within: bool,
}

pub fn envelope_report(x: f64, m: i64, table: &DivisorTable, cf: &ContinuedFractionExpansion) -> Result<EnvelopeReport> {
    let mut best: Option<(usize, f64)> = None;
    for n in 1..cf.certified_len {
        let v = quotient_envelope(x, m, n, cf)?;
        if best.map_or(true, |(_, b)| v < b) {
            best = Some((n, v));
        }
    }
    let (best_n, envelope) = best.ok_or(Error::Domain("expansion too short"))?;
    let eta = Eta::exp_neg_two_pi(m, eta_digits(x, m))?;
    let abs_d = wilton_sum(x, &eta, table)?.value.norm();
    Ok(EnvelopeReport {
        x,
        m,
        best_n,
        envelope,
        abs_d,
        within: abs_d <= envelope,
    })
}

/// `H = (4K + log 2) / (4K + 2 log 2)`.
pub fn wilton_h(k: f64) -> f64 {
    (4.0 * k + LN_2) / (4.0 * k + 2.0 * LN_2)
}

/// `|D(x, eta)|` over a list of `x` in one ascending pass.
pub fn abs_sums(xs: &[f64], eta: &Eta, table: &DivisorTable) -> Result<Vec<f64>> {
    xs.iter().map(|&x| wilton_sum(x, eta, table).map(|r| r.value.norm())).collect()
}

/// Mantissa digits of `eta`, for reports.
pub fn eta_bits(eta: &Eta) -> u32 {
    eta.value.bits()
}

/// `frac(eta)` as a double.
pub fn eta_fraction(eta: &Eta) -> f64 {
    eta.value.fract().to_f64()
}
