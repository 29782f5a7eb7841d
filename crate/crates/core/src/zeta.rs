//! `zeta(1/2 + it)` on the critical line in double precision.
//!
//! Small heights use Euler–Maclaurin summation; above `em_cutoff` the
//! Riemann–Siegel main sum is combined with up to [`RS_MAX_CORRECTIONS`]
//! correction terms. The correction functions are stored as Taylor series in
//! `p - 1/2` (see `tools/gen_tables.py`).

use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::summation::{ComplexNeumaier, Neumaier};
use crate::tables::{BERNOULLI_2K, BERNOULLI_2K_OVER_FACT, RS_COEFFS};
use crate::{Error, Result};

/// Number of Riemann–Siegel correction terms available (`C_0..C_4`).
pub const RS_MAX_CORRECTIONS: usize = 5;

/// Method selection and accuracy goal for [`zeta_half_line`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEvalConfig {
    /// Heights `t < em_cutoff` use Euler–Maclaurin summation.
    pub em_cutoff: f64,
    /// Riemann–Siegel correction terms used above the cutoff.
    pub rs_correction_terms: usize,
    /// Point-wise absolute error goal for `|zeta(1/2+it)|^2`.
    pub target_abs_err: f64,
}

impl Default for ZetaEvalConfig {
    fn default() -> Self {
        Self {
            em_cutoff: 600.0,
            rs_correction_terms: RS_MAX_CORRECTIONS,
            target_abs_err: 1e-8,
        }
    }
}

impl ZetaEvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.em_cutoff > 0.0) || !self.em_cutoff.is_finite() {
            return Err(Error::Config("em_cutoff must be positive and finite"));
        }
        if !(self.target_abs_err > 0.0 && self.target_abs_err <= 1e-3) {
            return Err(Error::Config("target_abs_err must lie in (0, 1e-3]"));
        }
        if self.rs_correction_terms > RS_MAX_CORRECTIONS {
            return Err(Error::Config("rs_correction_terms exceeds the implemented maximum of 5"));
        }
        Ok(())
    }
}

/// A sample of `zeta` on the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaPoint {
    pub t: f64,
    pub value: Complex64,
    pub sq_modulus: f64,
}

/// Evaluates `zeta(1/2 + it)`. Negative `t` is handled by Schwarz reflection.
pub fn zeta_half_line(t: f64, cfg: &ZetaEvalConfig) -> Result<ZetaPoint> {
    cfg.validate()?;
    if !t.is_finite() {
        return Err(Error::Domain("t must be finite"));
    }
    if t < 0.0 {
        let p = zeta_half_line(-t, cfg)?;
        return Ok(ZetaPoint {
            t,
            value: p.value.conj(),
            sq_modulus: p.sq_modulus,
        });
    }
    if use_euler_maclaurin(t, cfg) {
        let value = euler_maclaurin(t);
        Ok(ZetaPoint {
            t,
            value,
            sq_modulus: value.norm_sqr(),
        })
    } else {
        let theta = theta_asymptotic(t);
        let z = riemann_siegel_z(t, theta, cfg.rs_correction_terms);
        Ok(ZetaPoint {
            t,
            value: Complex64::new(z * theta.cos(), -z * theta.sin()),
            sq_modulus: z * z,
        })
    }
}

/// `|zeta(1/2 + it)|^2`.
#[inline]
pub fn zeta_sq(t: f64, cfg: &ZetaEvalConfig) -> Result<f64> {
    zeta_half_line(t, cfg).map(|p| p.sq_modulus)
}

/// Hardy's function `Z(t) = e^{i theta(t)} zeta(1/2 + it)`, real for real `t > 0`.
pub fn hardy_z(t: f64, cfg: &ZetaEvalConfig) -> Result<f64> {
    cfg.validate()?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain("hardy_z needs finite t > 0"));
    }
    let theta = riemann_siegel_theta(t)?;
    if use_euler_maclaurin(t, cfg) {
        let z = euler_maclaurin(t);
        Ok((Complex64::new(theta.cos(), theta.sin()) * z).re)
    } else {
        Ok(riemann_siegel_z(t, theta, cfg.rs_correction_terms))
    }
}

fn use_euler_maclaurin(t: f64, cfg: &ZetaEvalConfig) -> bool {
    t < cfg.em_cutoff || t < TAU
}

/// Riemann–Siegel theta function `arg Gamma(1/4 + it/2) - (t/2) log pi`.
///
/// Uses the Stirling asymptotic series for `t >= 10` and a shifted complex
/// log-Gamma below that.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain("theta needs finite t > 0"));
    }
    if t >= 10.0 {
        Ok(theta_asymptotic(t))
    } else {
        Ok(ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln())
    }
}

fn theta_asymptotic(t: f64) -> f64 {
    let r = 1.0 / t;
    let r2 = r * r;
    let series = r
        * (1.0 / 48.0
            + r2 * (7.0 / 5760.0
                + r2 * (31.0 / 80640.0 + r2 * (127.0 / 430080.0 + r2 * (511.0 / 1216512.0)))));
    0.5 * t * (t / TAU).ln() - 0.5 * t - PI / 8.0 + series
}

/// Riemann–Siegel `Z(t)` with `corrections` remainder terms, `t >= 2 pi`.
fn riemann_siegel_z(t: f64, theta: f64, corrections: usize) -> f64 {
    let a = (t / TAU).sqrt();
    let n_terms = a.floor() as u64;
    let tail = theta - theta_asymptotic_main(t);
    let mut acc = Neumaier::new();
    for n in 1..=n_terms {
        let nf = n as f64;
        // theta - t log n, with the large pieces folded into one log
        let ln_ratio = (t / (TAU * nf * nf)).ln();
        let phase = (0.5 * t).mul_add(ln_ratio - 1.0, -PI / 8.0) + tail;
        acc.add(phase.cos() / nf.sqrt());
    }
    let main = 2.0 * acc.value();
    if corrections == 0 {
        return main;
    }
    let z = a - n_terms as f64 - 0.5;
    let inv_a = 1.0 / a;
    let mut rem = 0.0;
    let mut scale = 1.0;
    for coeffs in RS_COEFFS.iter().take(corrections) {
        rem += scale * horner(coeffs, z);
        scale *= inv_a;
    }
    let sign = if n_terms % 2 == 1 { 1.0 } else { -1.0 };
    main + sign * rem / a.sqrt()
}

fn theta_asymptotic_main(t: f64) -> f64 {
    0.5 * t * (t / TAU).ln() - 0.5 * t - PI / 8.0
}

fn horner(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc.mul_add(z, c))
}

/// Euler–Maclaurin summation for `zeta(1/2 + it)`, `t >= 0`.
fn euler_maclaurin(t: f64) -> Complex64 {
    let s = Complex64::new(0.5, t);
    // With this N consecutive Bernoulli terms shrink by at least 4x for the
    // first 30 terms.
    let n = ((t + 61.0) / PI).ceil().max(10.0) as u64;
    let mut acc = ComplexNeumaier::new();
    for k in 1..n {
        acc.add(n_pow_neg_s(k as f64, t));
    }
    let nf = n as f64;
    let n_s = n_pow_neg_s(nf, t);
    acc.add(n_s * nf / (s - 1.0));
    acc.add(n_s * 0.5);

    let mut q = s / nf; // s (s+1) ... (s+2k-2) N^{1-2k}
    for (k, &b) in BERNOULLI_2K_OVER_FACT.iter().enumerate() {
        let term = n_s * q * b;
        acc.add(term);
        if term.norm() < 1e-18 {
            break;
        }
        let j = 2.0 * (k as f64 + 1.0);
        q = q * (s + (j - 1.0)) * (s + j) / (nf * nf);
    }
    acc.value()
}

/// `n^{-(1/2 + it)}`.
#[inline]
fn n_pow_neg_s(n: f64, t: f64) -> Complex64 {
    let ph = t * n.ln();
    Complex64::new(ph.cos(), -ph.sin()) / n.sqrt()
}

/// Complex `ln Gamma(z)` for `Re z > 0`, continuous in `z`, via upward shift
/// and Stirling's series.
fn ln_gamma(z: Complex64) -> Complex64 {
    const SHIFT: u32 = 12;
    let mut w = z;
    let mut shift_sum = Complex64::new(0.0, 0.0);
    for _ in 0..SHIFT {
        shift_sum += w.ln();
        w += 1.0;
    }
    let half_ln_tau = 0.5 * TAU.ln();
    let mut stirling = (w - 0.5) * w.ln() - w + half_ln_tau;
    let w2 = w * w;
    let mut wpow = w;
    for (k, &b) in BERNOULLI_2K.iter().take(10).enumerate() {
        let m = 2.0 * (k as f64 + 1.0);
        stirling += b / (m * (m - 1.0) * wpow);
        wpow *= w2;
    }
    stirling - shift_sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_rejects_bad_values() {
        let cfg = ZetaEvalConfig {
            rs_correction_terms: 6,
            ..Default::default()
        };
        assert!(matches!(zeta_half_line(100.0, &cfg), Err(Error::Config(_))));
        let cfg = ZetaEvalConfig {
            target_abs_err: 1e-2,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = ZetaEvalConfig {
            em_cutoff: 0.0,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn zeta_at_one_half() {
        // zeta(1/2) = -1.4603545088095868...
        let p = zeta_half_line(0.0, &ZetaEvalConfig::default()).unwrap();
        assert!((p.value.re + 1.460_354_508_809_586_8).abs() < 1e-13);
        assert!(p.value.im.abs() < 1e-15);
        assert!((p.sq_modulus - 2.132_635_291_400_489_6).abs() < 1e-12);
    }

    #[test]
    fn reflection_conjugates() {
        let cfg = ZetaEvalConfig::default();
        for t in [3.0, 40.0, 1234.5] {
            let a = zeta_half_line(t, &cfg).unwrap();
            let b = zeta_half_line(-t, &cfg).unwrap();
            assert_eq!(a.value.conj(), b.value);
            assert_eq!(a.sq_modulus, b.sq_modulus);
        }
    }

    #[test]
    fn theta_domain() {
        assert!(riemann_siegel_theta(0.0).is_err());
        assert!(riemann_siegel_theta(-1.0).is_err());
    }

    #[test]
    fn theta_branches_agree_at_switch() {
        let below = ln_gamma(Complex64::new(0.25, 5.0)).im - 5.0 * PI.ln();
        assert!((below - theta_asymptotic(10.0)).abs() < 1e-10);
    }

    #[test]
    fn methods_agree_across_cutoff() {
        let em = ZetaEvalConfig {
            em_cutoff: 1e4,
            ..Default::default()
        };
        let rs = ZetaEvalConfig {
            em_cutoff: 100.0,
            ..Default::default()
        };
        for t in [650.0, 700.25, 900.0] {
            let a = zeta_half_line(t, &em).unwrap();
            let b = zeta_half_line(t, &rs).unwrap();
            assert!((a.sq_modulus - b.sq_modulus).abs() < 1e-8, "t={t}");
            assert!((a.value - b.value).norm() < 1e-8, "t={t}");
        }
    }
}
