//! Certified continued-fraction expansions of `e^(pi m)` and diagnostics on
//! their partial quotients.
//!
//! A quotient is certified when both ends of a guaranteed enclosure of the
//! value expand to it; the working precision is doubled until the requested
//! number of quotients is certified and a re-expansion at twice the precision
//! reproduces them.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::fixed::{exp_pi_m, ln_big, ln_biguint, Fixed};
use crate::{Error, Result};

/// Largest number of quotients [`cf_expand`] will certify.
pub const MAX_TERMS: usize = 500;

/// Working precision ceiling, in decimal digits.
pub const MAX_DIGITS: u32 = 100_000;

/// Certified continued fraction of `e^(pi m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFractionExpansion {
    pub m: i64,
    /// `a_0, a_1, ...`, all certified.
    pub quotients: Vec<BigUint>,
    /// `(p_n, q_n)` for every certified quotient.
    pub convergents: Vec<(BigUint, BigUint)>,
    pub working_digits: u32,
    pub certified_len: usize,
    value: Fixed,
}

impl ContinuedFractionExpansion {
    /// Enclosure of `e^(pi m)` the expansion was certified against.
    pub fn value(&self) -> &Fixed {
        &self.value
    }

    /// `a_n` as a double (saturating).
    pub fn quotient_f64(&self, n: usize) -> Option<f64> {
        self.quotients.get(n).map(|a| a.to_f64().unwrap_or(f64::INFINITY))
    }
}

/// Quotients of the rational `num / den` (`den > 0`), stopping after `limit`
/// terms, at termination, or when a fractional part drops below
/// `2^-guard_bits`. The flag is true only when `limit` was reached.
fn expand_rational(num: &BigInt, den: &BigInt, limit: usize, guard_bits: u64) -> (Vec<BigInt>, bool) {
    let mut out = Vec::new();
    let mut p = num.clone();
    let mut q = den.clone();
    while out.len() < limit {
        let (a, r) = p.div_mod_floor(&q);
        out.push(a);
        // r / q < 2^-g: indistinguishable from an integer
        if r.is_zero() || (r.clone() << guard_bits) < q {
            return (out, false);
        }
        p = q;
        q = r;
    }
    (out, true)
}

/// Quotients shared by every real in `[lo, hi] / 2^bits`.
///
/// A prefix `a_0..a_{k-1}` is shared by the whole interval when both ends
/// have it with a complete quotient `x_k > 1`; the final quotient of an
/// expansion that stopped early does not qualify.
fn certified_prefix(value: &Fixed, limit: usize, guard_bits: u64) -> Vec<BigUint> {
    let (lo, hi) = value.enclosure();
    let den = BigInt::one() << value.bits();
    let (a, a_full) = expand_rational(&lo, &den, limit, guard_bits);
    let (b, b_full) = expand_rational(&hi, &den, limit, guard_bits);
    let usable = |v: &Vec<BigInt>, full: bool| if full { v.len() } else { v.len() - 1 };
    let k = usable(&a, a_full).min(usable(&b, b_full));
    a.iter()
        .zip(&b)
        .take(k)
        .take_while(|(x, y)| x == y)
        .map_while(|(x, _)| x.to_biguint())
        .collect()
}

fn convergents(quotients: &[BigUint]) -> Vec<(BigUint, BigUint)> {
    let mut out = Vec::with_capacity(quotients.len());
    // (p_{-2}, q_{-2}) = (0, 1), (p_{-1}, q_{-1}) = (1, 0)
    let (mut p_prev, mut q_prev) = (BigUint::zero(), BigUint::one());
    let (mut p, mut q) = (BigUint::one(), BigUint::zero());
    for a in quotients {
        let pn = a * &p + &p_prev;
        let qn = a * &q + &q_prev;
        p_prev = core::mem::replace(&mut p, pn);
        q_prev = core::mem::replace(&mut q, qn);
        out.push((p.clone(), q.clone()));
    }
    out
}

fn expansion_at(m: i64, digits: u32, n_terms: usize) -> Result<(Vec<BigUint>, Fixed)> {
    let value = exp_pi_m(m, digits)?;
    let guard = (f64::from(digits) * 0.5 * crate::fixed::BITS_PER_DIGIT) as u64;
    Ok((certified_prefix(&value, n_terms, guard), value))
}

/// Expands `e^(pi m)` to `n_terms` certified partial quotients.
pub fn cf_expand(m: i64, n_terms: usize) -> Result<ContinuedFractionExpansion> {
    if !(1..=MAX_TERMS).contains(&n_terms) {
        return Err(Error::OutOfRange {
            what: "n_terms",
            value: n_terms as f64,
            lo: 1.0,
            hi: MAX_TERMS as f64,
        });
    }
    let mut digits = 40 + 4 * n_terms as u32;
    let mut best = 0;
    loop {
        if digits > MAX_DIGITS / 2 {
            return Err(Error::PrecisionLimit {
                digits,
                certified: best,
            });
        }
        let (q, value) = expansion_at(m, digits, n_terms)?;
        best = best.max(q.len());
        if q.len() >= n_terms {
            let (q2, _) = expansion_at(m, 2 * digits, n_terms)?;
            if q2.len() >= n_terms && q2[..n_terms] == q[..n_terms] {
                let convergents = convergents(&q);
                return Ok(ContinuedFractionExpansion {
                    m,
                    certified_len: q.len(),
                    quotients: q,
                    convergents,
                    working_digits: digits,
                    value,
                });
            }
        }
        digits *= 2;
    }
}

/// `p_n q_{n-1} - p_{n-1} q_n == (-1)^(n-1)` for every `n >= 1`.
pub fn determinant_identity_holds(exp: &ContinuedFractionExpansion) -> bool {
    exp.convergents.windows(2).enumerate().all(|(i, w)| {
        let n = i + 1;
        let (p0, q0) = (&w[0].0, &w[0].1);
        let (p1, q1) = (&w[1].0, &w[1].1);
        let lhs = BigInt::from(p1 * q0) - BigInt::from(p0 * q1);
        let want = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        lhs == want
    })
}

/// One line of a [`GapReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapRow {
    pub n: usize,
    /// `|xi - p_n/q_n| q_n q_{n+1}`, rounded.
    pub ratio: f64,
    /// Whether `0 < ratio < 1` holds for the whole enclosure of `xi`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub rows: Vec<GapRow>,
    /// Largest ratio seen.
    pub tightest: f64,
    pub all_hold: bool,
}

/// Checks `|xi - p_n/q_n| < 1/(q_n q_{n+1})` for `1 <= n < certified_len - 1`
/// against an enclosure of `xi` at twice the working precision.
pub fn convergent_gap_check(exp: &ContinuedFractionExpansion) -> Result<GapReport> {
    if exp.certified_len < 3 {
        return Err(Error::Domain("at least three certified quotients are required"));
    }
    let xi = exp_pi_m(exp.m, 2 * exp.working_digits)?;
    let (lo, hi) = xi.enclosure();
    let scale = BigInt::one() << xi.bits();
    let mut rows = Vec::new();
    for n in 1..exp.certified_len - 1 {
        let (p, q) = &exp.convergents[n];
        let q_next = BigInt::from(exp.convergents[n + 1].1.clone());
        let p = BigInt::from(p.clone());
        let q = BigInt::from(q.clone());
        // (xi q - p) 2^bits at both ends of the enclosure
        let a = &lo * &q - &p * &scale;
        let b = &hi * &q - &p * &scale;
        let same_sign = a.sign() == b.sign() && a.sign() != Sign::NoSign;
        let worst = a.abs().max(b.abs());
        let holds = same_sign && &worst * &q_next < scale;
        let mid: BigInt = (&a + &b) / 2u32;
        let ratio = crate::fixed::big_to_f64_scaled(&(mid.abs() * &q_next), -(i64::from(xi.bits())));
        rows.push(GapRow { n, ratio, holds });
    }
    let tightest = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    let all_hold = rows.iter().all(|r| r.holds);
    Ok(GapReport {
        rows,
        tightest,
        all_hold,
    })
}

/// Rebuilds `p_N / q_N` from the quotient prefix and checks it brackets the
/// value within `1 / (q_N q_{N+1})`.
pub fn reconstruction_holds(exp: &ContinuedFractionExpansion) -> bool {
    let n = exp.certified_len;
    if n < 2 {
        return false;
    }
    // fold from the back: [a_0; a_1, ..., a_k] = a_0 + 1/[a_1; ...]
    let k = n - 2;
    let mut num = exp.quotients[k].clone();
    let mut den = BigUint::one();
    for a in exp.quotients[..k].iter().rev() {
        let next = a * &num + &den;
        den = num;
        num = next;
    }
    let (p, q) = &exp.convergents[k];
    if &num != p || &den != q {
        return false;
    }
    let q_next = BigInt::from(exp.convergents[k + 1].1.clone());
    let (lo, hi) = exp.value.enclosure();
    let scale = BigInt::one() << exp.value.bits();
    let qi = BigInt::from(q.clone());
    let pi = BigInt::from(p.clone());
    let worst = (&lo * &qi - &pi * &scale).abs().max((&hi * &qi - &pi * &scale).abs());
    worst * q_next < scale
}

/// One admissible index of [`lemma1_ratio`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma1Row {
    pub n: usize,
    pub ln_a_n: f64,
    /// `None` when the index is skipped by the guard.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Lemma1Report {
    pub m: i64,
    pub n_max: usize,
    /// Largest ratio over admissible `n`, with its index.
    pub sup: Option<(usize, f64)>,
    pub rows: Vec<Lemma1Row>,
}

/// `log log a_n / ((n + log m) log(n + log m))` for `1 <= n <= n_max`,
/// skipping `n` with `n + log m < 3` or `a_n < 16`.
pub fn lemma1_ratio(m: i64, n_max: usize) -> Result<Lemma1Report> {
    if m < 1 {
        return Err(Error::Domain("m must be at least 1"));
    }
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1"));
    }
    let exp = cf_expand(m, n_max + 1)?;
    Ok(lemma1_from(&exp, n_max))
}

/// [`lemma1_ratio`] on an existing expansion.
pub fn lemma1_from(exp: &ContinuedFractionExpansion, n_max: usize) -> Lemma1Report {
    let ln_m = (exp.m as f64).ln();
    let sixteen = BigUint::from(16u32);
    let mut rows = Vec::new();
    let mut sup: Option<(usize, f64)> = None;
    for n in 1..=n_max.min(exp.certified_len.saturating_sub(1)) {
        let a = &exp.quotients[n];
        let ln_a = ln_biguint(a);
        let s = n as f64 + ln_m;
        let ratio = if s >= 3.0 && *a >= sixteen {
            Some(ln_a.ln() / (s * s.ln()))
        } else {
            None
        };
        if let Some(r) = ratio {
            if sup.map_or(true, |(_, v)| r > v) {
                sup = Some((n, r));
            }
        }
        rows.push(Lemma1Row { n, ln_a_n: ln_a, ratio });
    }
    Lemma1Report {
        m: exp.m,
        n_max,
        sup,
        rows,
    }
}

/// `|e^(pi m) - p/q|` against the lower bound
/// `exp(-2^72 log(2m) log p log log p)`, all in natural logarithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrrationalityGap {
    pub gap: f64,
    pub ln_gap: f64,
    pub ln_bound: f64,
    /// `ln_gap - ln_bound`.
    pub margin: f64,
}

pub fn irrationality_gap(m: i64, p: &BigUint, q: &BigUint) -> Result<IrrationalityGap> {
    if m < 1 {
        return Err(Error::Domain("m must be at least 1"));
    }
    if *p < BigUint::from(3u32) {
        return Err(Error::Domain("p must be at least 3"));
    }
    if q.is_zero() {
        return Err(Error::Domain("q must be positive"));
    }
    let size = (p.bits() + q.bits()) as f64 / crate::fixed::BITS_PER_DIGIT;
    let mut digits = 40 + 2 * size.ceil() as u32;
    loop {
        let xi = exp_pi_m(m, digits)?;
        let (lo, hi) = xi.enclosure();
        let scale = BigInt::one() << xi.bits();
        let pi = BigInt::from(p.clone());
        let qi = BigInt::from(q.clone());
        let a = &lo * &qi - &pi * &scale;
        let b = &hi * &qi - &pi * &scale;
        if a.sign() == b.sign() && a.sign() != Sign::NoSign {
            // gap = |mid| / (q 2^bits)
            let mid: BigInt = ((a + b) / 2u32).abs();
            let ln_gap = ln_big(&mid) - ln_biguint(q) - f64::from(xi.bits()) * core::f64::consts::LN_2;
            let ln_p = ln_biguint(p);
            let ln_bound = -(2f64.powi(72)) * (2.0 * m as f64).ln() * ln_p * ln_p.ln();
            return Ok(IrrationalityGap {
                gap: ln_gap.exp(),
                ln_gap,
                ln_bound,
                margin: ln_gap - ln_bound,
            });
        }
        if digits > MAX_DIGITS / 2 {
            return Err(Error::PrecisionLimit { digits, certified: 0 });
        }
        digits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &ContinuedFractionExpansion) -> Vec<u64> {
        v.quotients.iter().map(|a| a.to_u64().unwrap()).collect()
    }

    #[test]
    fn e_pi_prefix() {
        let e = cf_expand(1, 8).unwrap();
        assert_eq!(&q(&e)[..8], &[23, 7, 9, 3, 1, 1, 591, 2]);
        assert_eq!(e.convergents[1], (BigUint::from(162u32), BigUint::from(7u32)));
        assert!(e.certified_len >= 8);
    }

    #[test]
    fn reciprocal_shifts() {
        let e = cf_expand(-1, 4).unwrap();
        assert_eq!(&q(&e)[..4], &[0, 23, 7, 9]);
    }

    #[test]
    fn convergent_identities() {
        let e = cf_expand(2, 30).unwrap();
        assert!(determinant_identity_holds(&e));
        assert!(reconstruction_holds(&e));
        let r = convergent_gap_check(&e).unwrap();
        assert!(r.all_hold);
        assert!(r.tightest < 1.0 && r.tightest > 0.0);
    }

    #[test]
    fn expand_guards() {
        assert!(cf_expand(1, 0).is_err());
        assert!(cf_expand(1, 501).is_err());
        assert!(cf_expand(0, 5).is_err());
    }

    #[test]
    fn gap_for_small_convergents() {
        let g = irrationality_gap(1, &BigUint::from(23u32), &BigUint::one()).unwrap();
        assert!((g.gap - 0.140_692_632_779_269).abs() < 1e-12);
        assert!(g.margin > 0.0);
        let g = irrationality_gap(1, &BigUint::from(162u32), &BigUint::from(7u32)).unwrap();
        assert!((g.gap - (162.0 / 7.0 - 23.140_692_632_779_27)).abs() < 1e-12);
        assert!(g.ln_bound < -1e20);
        assert!(irrationality_gap(1, &BigUint::from(2u32), &BigUint::one()).is_err());
    }

    #[test]
    fn lemma1_skips_small_quotients() {
        let r = lemma1_ratio(1, 10).unwrap();
        for row in &r.rows {
            if row.n < 3 || row.ln_a_n < 16f64.ln() {
                assert!(row.ratio.is_none());
            }
        }
        // a_6 = 591 dominates the first ten quotients
        assert_eq!(r.sup.unwrap().0, 6);
    }
}
