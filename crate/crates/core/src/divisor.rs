//! The divisor function, the Dirichlet divisor problem error term `Delta(x)`
//! and the sawtooth `psi`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::summation::Neumaier;
use crate::{Error, Result, EULER_GAMMA};

/// Largest sieve accepted by [`divisor_sieve`].
pub const MAX_SIEVE: u64 = 100_000_000;

/// `d(n)` for `n <= n_max` together with the prefix sums `D(k)` and
/// `W(k) = sum_{n <= k} n d(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    n_max: u64,
    d: Vec<u32>,
    prefix: Vec<u64>,
    weighted: Vec<u64>,
}

/// Multiples sieve for `d(n)`, `O(N log N)`.
pub fn divisor_sieve(n_max: u64) -> Result<DivisorTable> {
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1"));
    }
    if n_max > MAX_SIEVE {
        return Err(Error::Capacity {
            requested: n_max,
            limit: MAX_SIEVE,
        });
    }
    let n = n_max as usize;
    let mut d = vec![0u32; n + 1];
    for k in 1..=n {
        for m in (k..=n).step_by(k) {
            d[m] += 1;
        }
    }
    let mut prefix = vec![0u64; n + 1];
    let mut weighted = vec![0u64; n + 1];
    for k in 1..=n {
        prefix[k] = prefix[k - 1] + u64::from(d[k]);
        weighted[k] = weighted[k - 1] + k as u64 * u64::from(d[k]);
    }
    Ok(DivisorTable {
        n_max,
        d,
        prefix,
        weighted,
    })
}

impl DivisorTable {
    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    /// `d(n)`; `d(0)` is reported as 0.
    pub fn d(&self, n: u64) -> u32 {
        self.d[n as usize]
    }

    pub fn divisor_counts(&self) -> &[u32] {
        &self.d
    }

    /// `D(k) = sum_{n <= k} d(n)`.
    pub fn prefix(&self, k: u64) -> u64 {
        self.prefix[k as usize]
    }

    /// `sum_{n <= k} n d(n)`.
    pub fn weighted_prefix(&self, k: u64) -> u64 {
        self.weighted[k as usize]
    }

    fn check(&self, x: f64, lo: f64) -> Result<()> {
        if !(x >= lo && x <= self.n_max as f64) {
            return Err(Error::OutOfRange {
                what: "x",
                value: x,
                lo,
                hi: self.n_max as f64,
            });
        }
        Ok(())
    }
}

/// `x (log x + 2 gamma - 1)`.
#[inline]
pub fn divisor_main_term(x: f64) -> f64 {
    x * (x.ln() + 2.0 * EULER_GAMMA - 1.0)
}

/// Antiderivative of [`divisor_main_term`].
fn main_antiderivative(x: f64) -> f64 {
    0.5 * x * x * (x.ln() + 2.0 * EULER_GAMMA - 1.0) - 0.25 * x * x
}

/// `Delta(x) = sum_{n <= x} d(n) - x (log x + 2 gamma - 1)`, right-continuous.
pub fn delta_of(x: f64, table: &DivisorTable) -> Result<f64> {
    table.check(x, 1.0)?;
    Ok(table.prefix(x.floor() as u64) as f64 - divisor_main_term(x))
}

/// `int_1^x Delta(t) dt`, exact up to rounding.
///
/// Between integers `Delta(t) = D(n) - t(log t + 2 gamma - 1)`, so the prefix
/// part integrates to `x D(x) - sum_{m <= x} m d(m)` and the main term has a
/// closed antiderivative.
pub fn integral_delta(x: f64, table: &DivisorTable) -> Result<f64> {
    table.check(x, 1.0)?;
    let n = x.floor() as u64;
    let d_n = table.prefix(n);
    // floor(x) D(x) - W(x) is an exact integer
    let exact = i128::from(n) * i128::from(d_n) - i128::from(table.weighted_prefix(n));
    let prefix_part = exact as f64 + (x - n as f64) * d_n as f64;
    Ok(prefix_part - (main_antiderivative(x) - main_antiderivative(1.0)))
}

/// `R_1(x) = int_1^x Delta(t) dt - x/4`.
pub fn r1_of(x: f64, table: &DivisorTable) -> Result<f64> {
    Ok(integral_delta(x, table)? - 0.25 * x)
}

/// Residual of the summatory identity for `Delta`:
/// `sum_{n<=x} Delta(n) - [x log x / 2 + (gamma - 1/2) x + Delta(x) + int_1^x Delta]`.
pub fn delta_summatory_identity(x: u64, table: &DivisorTable) -> Result<f64> {
    if x < 2 {
        return Err(Error::Domain("x must be at least 2"));
    }
    let xf = x as f64;
    table.check(xf, 2.0)?;
    let sum: Neumaier = (1..=x).map(|n| delta_of(n as f64, table).unwrap()).collect();
    let rhs = 0.5 * xf * xf.ln() + (EULER_GAMMA - 0.5) * xf + delta_of(xf, table)? + integral_delta(xf, table)?;
    Ok(sum.value() - rhs)
}

/// `sum_{n <= x} Delta(n)`.
pub fn delta_sum(x: u64, table: &DivisorTable) -> Result<f64> {
    table.check(x as f64, 1.0)?;
    let sum: Neumaier = (1..=x).map(|n| delta_of(n as f64, table).unwrap()).collect();
    Ok(sum.value())
}

/// Sawtooth `psi(x) = x - floor(x) - 1/2`; equals `-1/2` at integers.
#[inline]
pub fn psi_of(x: f64) -> f64 {
    x - x.floor() - 0.5
}

/// Partial Fourier sum `-(1/pi) sum_{m <= M} sin(2 pi m x) / m`.
pub fn psi_fourier(x: f64, terms: u32) -> Result<f64> {
    if terms < 1 {
        return Err(Error::Domain("at least one Fourier term is required"));
    }
    let frac = x - x.round();
    if frac.abs() < 1e-12 {
        return Err(Error::Domain("the Fourier series of psi does not converge to psi at integers"));
    }
    // sin(2 pi m x) depends only on x mod 1; use the reduced argument
    let mut acc = Neumaier::new();
    for m in 1..=terms {
        let mf = f64::from(m);
        acc.add((2.0 * PI * mf * frac).sin() / mf);
    }
    Ok(-acc.value() / PI)
}

/// Result of the short-interval mean square of `Delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShortIntervalSq {
    pub sum: f64,
    pub main: f64,
    pub ratio: f64,
}

/// Smallest admissible `U` for [`delta_short_interval_sq`].
pub const SHORT_INTERVAL_MIN_U: u64 = 3;

/// `sum_{T <= n <= 2T} (Delta(n+U) - Delta(n))^2` against
/// `(8 / pi^2) T U log^3(sqrt(T) / U)`, for `3 <= U <= sqrt(T)/2`.
pub fn delta_short_interval_sq(t: u64, u: u64, table: &DivisorTable) -> Result<ShortIntervalSq> {
    let tf = t as f64;
    let uf = u as f64;
    if u < SHORT_INTERVAL_MIN_U || uf > 0.5 * tf.sqrt() {
        return Err(Error::OutOfRange {
            what: "U",
            value: uf,
            lo: SHORT_INTERVAL_MIN_U as f64,
            hi: 0.5 * tf.sqrt(),
        });
    }
    table.check((2 * t + u) as f64, 1.0)?;
    let mut acc = Neumaier::new();
    for n in t..=2 * t {
        let diff = delta_of((n + u) as f64, table)? - delta_of(n as f64, table)?;
        acc.add(diff * diff);
    }
    let main = 8.0 / (PI * PI) * tf * uf * (tf.sqrt() / uf).ln().powi(3);
    if !(main > 0.0) {
        return Err(Error::Degenerate("main term vanishes"));
    }
    let sum = acc.value();
    Ok(ShortIntervalSq {
        sum,
        main,
        ratio: sum / main,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let t = divisor_sieve(12).unwrap();
        assert_eq!(t.d(1), 1);
        assert_eq!(t.d(6), 4);
        assert_eq!(t.d(12), 6);
        assert_eq!(t.d(7), 2);
        assert_eq!(t.prefix(10), 27);
        assert_eq!(t.weighted_prefix(3), 1 + 2 * 2 + 3 * 2);
    }

    #[test]
    fn sieve_guards() {
        assert!(matches!(divisor_sieve(0), Err(Error::Domain(_))));
        assert!(matches!(divisor_sieve(MAX_SIEVE + 1), Err(Error::Capacity { .. })));
    }

    #[test]
    fn delta_examples() {
        let t = divisor_sieve(100).unwrap();
        assert!((delta_of(10.0, &t).unwrap() - 2.429_835_772_028_886).abs() < 1e-12);
        // 1 - (2 gamma - 1) = 2 - 2 gamma
        assert!((delta_of(1.0, &t).unwrap() - 0.845_568_670_196_934_3).abs() < 1e-14);
        let jump = delta_of(10.0, &t).unwrap() - delta_of(10.0 - 1e-9, &t).unwrap();
        assert!((jump - 4.0).abs() < 1e-6);
        assert!(delta_of(0.5, &t).is_err());
        assert!(delta_of(101.0, &t).is_err());
    }

    #[test]
    fn r1_at_one() {
        let t = divisor_sieve(10).unwrap();
        assert_eq!(integral_delta(1.0, &t).unwrap(), 0.0);
        assert_eq!(r1_of(1.0, &t).unwrap(), -0.25);
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi_of(0.25), -0.25);
        assert_eq!(psi_of(3.5), 0.0);
        assert_eq!(psi_of(2.0), -0.5);
        assert_eq!(psi_of(-0.25), 0.25);
    }

    #[test]
    fn psi_fourier_examples() {
        for m in [1, 7, 100] {
            assert!(psi_fourier(0.5, m).unwrap().abs() < 1e-15);
        }
        assert!((psi_fourier(0.25, 10_000).unwrap() + 0.25).abs() < 1e-3);
        assert!(psi_fourier(3.0, 10).is_err());
        assert!(psi_fourier(3.0 + 1e-13, 10).is_err());
        assert!(psi_fourier(0.3, 0).is_err());
    }

    #[test]
    fn short_interval_range() {
        let t = divisor_sieve(30_000).unwrap();
        // U = sqrt(T): log^3(1) = 0, outside the admissible range
        assert!(delta_short_interval_sq(10_000, 100, &t).is_err());
        assert!(delta_short_interval_sq(10_000, 2, &t).is_err());
        let r = delta_short_interval_sq(10_000, 10, &t).unwrap();
        assert!(r.sum > 0.0 && r.main > 0.0);
    }
}
