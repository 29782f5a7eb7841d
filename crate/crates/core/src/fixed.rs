//! Binary fixed-point reals on top of `num-bigint`.
//!
//! A [`Fixed`] is `mantissa / 2^bits`. Every constructor that rounds records
//! an absolute error bound in units of the last place, so callers can turn a
//! value into a guaranteed enclosing interval.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// `log2(10)`.
pub const BITS_PER_DIGIT: f64 = core::f64::consts::LOG2_10;

/// `mantissa / 2^bits`, accurate to `err_ulps` units of `2^-bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    mantissa: BigInt,
    bits: u32,
    err_ulps: u32,
}

/// Number of fractional bits that carry `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * BITS_PER_DIGIT).ceil() as u32
}

impl Fixed {
    /// An exact value.
    pub fn from_parts(mantissa: BigInt, bits: u32) -> Self {
        Self {
            mantissa,
            bits,
            err_ulps: 0,
        }
    }

    pub fn from_int(v: i64, bits: u32) -> Self {
        Self::from_parts(BigInt::from(v) << bits, bits)
    }

    /// Exact conversion of a finite `f64` (every double is a dyadic rational).
    pub fn from_f64(v: f64, bits: u32) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::Domain("cannot convert a non-finite value"));
        }
        let (man, exp, sign) = Float::integer_decode(v);
        let mut m = BigInt::from(man);
        if sign < 0 {
            m = -m;
        }
        let shift = i64::from(exp) + i64::from(bits);
        let (mantissa, err) = if shift >= 0 {
            (m << shift as u32, 0)
        } else {
            let s = (-shift) as u32;
            let floor = m.clone() >> s;
            let exact = (floor.clone() << s) == m;
            (floor, u32::from(!exact))
        };
        Ok(Self {
            mantissa,
            bits,
            err_ulps: err,
        })
    }

    /// `num / den` to `bits` fractional bits (floor).
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        let (q, r) = (num << bits).div_mod_floor(den);
        Self {
            mantissa: q,
            bits,
            err_ulps: u32::from(!r.is_zero()),
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn err_ulps(&self) -> u32 {
        self.err_ulps
    }

    /// Guaranteed decimal digits after the point.
    pub fn digits(&self) -> u32 {
        let lost = f64::from(self.err_ulps.max(1)).log2().ceil() as u32 + 1;
        (f64::from(self.bits.saturating_sub(lost)) / BITS_PER_DIGIT).floor() as u32
    }

    /// Lower and upper mantissas of the enclosing interval (same scale).
    pub fn enclosure(&self) -> (BigInt, BigInt) {
        let e = BigInt::from(self.err_ulps);
        (&self.mantissa - &e, &self.mantissa + &e)
    }

    /// Rescales to `bits` fractional bits, truncating toward -inf when
    /// shrinking.
    pub fn with_bits(&self, bits: u32) -> Self {
        match bits.cmp(&self.bits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = bits - self.bits;
                Self {
                    mantissa: &self.mantissa << s,
                    bits,
                    err_ulps: self.err_ulps.saturating_mul(1u32.checked_shl(s).unwrap_or(u32::MAX)),
                }
            }
            Ordering::Less => {
                let s = self.bits - bits;
                let m = &self.mantissa >> s;
                // a carried error below one new ulp still needs one ulp
                let carried = self.err_ulps.checked_shr(s).unwrap_or(0) + 1;
                let exact = self.err_ulps == 0 && (&m << s) == self.mantissa;
                Self {
                    mantissa: m,
                    bits,
                    err_ulps: if exact { 0 } else { carried },
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        let a = self.with_bits(bits);
        let b = other.with_bits(bits);
        Self {
            mantissa: a.mantissa + b.mantissa,
            bits,
            err_ulps: a.err_ulps.saturating_add(b.err_ulps),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mantissa: -&self.mantissa,
            bits: self.bits,
            err_ulps: self.err_ulps,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product rounded to `self.bits`. Error bound assumes both magnitudes
    /// are below `2^(err_headroom)`; used only where operands are modest.
    pub fn mul(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        let a = self.with_bits(bits);
        let b = other.with_bits(bits);
        let m = (&a.mantissa * &b.mantissa) >> bits;
        // |a| e_b + |b| e_a + 1, with |a|, |b| bounded by their integer parts
        let ia = a.mantissa.abs() >> bits;
        let ib = b.mantissa.abs() >> bits;
        let err = (ia + 1u32) * b.err_ulps + (ib + 1u32) * a.err_ulps + 1u32;
        Self {
            mantissa: m,
            bits,
            err_ulps: err.to_u32().unwrap_or(u32::MAX),
        }
    }

    /// Integer part (floor).
    pub fn floor(&self) -> BigInt {
        self.mantissa.div_floor(&(BigInt::one() << self.bits))
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let one = BigInt::one() << self.bits;
        Self {
            mantissa: self.mantissa.mod_floor(&one),
            bits: self.bits,
            err_ulps: self.err_ulps,
        }
    }

    /// Reciprocal to `self.bits` fractional bits.
    pub fn recip(&self) -> Result<Self> {
        if self.mantissa.is_zero() {
            return Err(Error::Domain("reciprocal of zero"));
        }
        let one = BigInt::one() << (2 * self.bits);
        let (q, _) = one.div_mod_floor(&self.mantissa);
        // d(1/x) = dx / x^2; bound |x| from below by its mantissa minus error
        let lo = self.mantissa.abs() - BigInt::from(self.err_ulps);
        if lo.sign() != Sign::Plus {
            return Err(Error::Domain("reciprocal of a value indistinguishable from zero"));
        }
        let scale = BigInt::one() << self.bits;
        let num = BigInt::from(self.err_ulps) * &scale * &scale;
        let den = &lo * &lo;
        let err = num.div_ceil(&den) + 1u32;
        Ok(Self {
            mantissa: q,
            bits: self.bits,
            err_ulps: err.to_u32().unwrap_or(u32::MAX),
        })
    }

    pub fn to_f64(&self) -> f64 {
        big_to_f64_scaled(&self.mantissa, -(i64::from(self.bits)))
    }

    /// Natural logarithm of a positive value, in double precision.
    pub fn ln(&self) -> f64 {
        ln_big(&self.mantissa) - f64::from(self.bits) * core::f64::consts::LN_2
    }

    /// `floor(frac(x) * 2^128)`, the fractional part as a 128-bit turn count.
    pub fn fract_u128(&self) -> u128 {
        let f = self.fract();
        let m = if self.bits >= 128 {
            f.mantissa >> (self.bits - 128)
        } else {
            f.mantissa << (128 - self.bits)
        };
        let (_, digits) = m.to_u64_digits();
        let lo = digits.first().copied().unwrap_or(0);
        let hi = digits.get(1).copied().unwrap_or(0);
        (u128::from(hi) << 64) | u128::from(lo)
    }
}

/// `m * 2^exp` as a double, without intermediate overflow.
pub fn big_to_f64_scaled(m: &BigInt, exp: i64) -> f64 {
    if m.is_zero() {
        return 0.0;
    }
    let bits = m.bits() as i64;
    let shift = (bits - 64).max(0);
    let top = (m >> shift as usize).to_f64().unwrap_or(0.0);
    let mut e = exp + shift;
    let mut v = top;
    // scale in steps that stay inside the exponent range
    while e > 0 {
        let s = e.min(1000) as i32;
        v *= 2f64.powi(s);
        e -= i64::from(s);
    }
    while e < 0 {
        let s = e.max(-1000) as i32;
        v *= 2f64.powi(s);
        e -= i64::from(s);
    }
    v
}

/// `ln(n)` for a positive big integer.
pub fn ln_big(n: &BigInt) -> f64 {
    let bits = n.bits() as i64;
    let shift = (bits - 64).max(0);
    let top = (n >> shift as usize).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * core::f64::consts::LN_2
}

/// `ln(n)` for a positive unsigned big integer.
pub fn ln_biguint(n: &BigUint) -> f64 {
    ln_big(&BigInt::from(n.clone()))
}

/// `pi` to `bits` fractional bits via Machin's formula.
pub fn pi(bits: u32) -> Fixed {
    let guard = 32;
    let w = bits + guard;
    let a = arctan_recip(5, w);
    let b = arctan_recip(239, w);
    let m = (a * 16u32 - b * 4u32) >> guard;
    // each series carries at most one ulp per term; the guard bits absorb it
    Fixed {
        mantissa: m,
        bits,
        err_ulps: 1,
    }
}

/// `atan(1/k) * 2^w`, truncated series.
fn arctan_recip(k: u32, w: u32) -> BigInt {
    let one = BigInt::one() << w;
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut power = &one / BigInt::from(k); // 1/k^(2j+1)
    let mut sum = BigInt::zero();
    let mut j: u32 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    sum
}

/// `exp(x)` with `bits` fractional bits of absolute accuracy.
///
/// Works with extra guard bits, halves the argument until it is tiny, sums
/// the Taylor series and squares back.
pub fn exp(x: &Fixed, bits: u32) -> Fixed {
    let mag = x.to_f64().abs();
    // integer bits of the result plus headroom lost by squaring
    let int_bits = (mag / core::f64::consts::LN_2).ceil() as u32 + 2;
    let halvings = ((f64::from(bits)).sqrt() as u32).max(8) + (mag.max(1.0).log2().ceil() as u32);
    let w = bits + int_bits + halvings + 64;
    let xw = x.with_bits(w);
    let y = xw.mantissa >> halvings; // |y| < 2^-sqrt(bits)
    let one = BigInt::one() << w;
    let mut term = one.clone();
    let mut sum = one.clone();
    let mut k: u32 = 1;
    loop {
        term = (&term * &y) >> w;
        term /= BigInt::from(k);
        if term.is_zero() {
            break;
        }
        sum += &term;
        k += 1;
    }
    for _ in 0..halvings {
        sum = (&sum * &sum) >> w;
    }
    let m = sum >> (w - bits);
    Fixed {
        mantissa: m,
        bits,
        err_ulps: 2,
    }
}

/// `e^(pi m)` correct to `digits` significant decimal digits.
///
/// `|m| <= 64`, `20 <= digits <= 100_000`.
pub fn exp_pi_m(m: i64, digits: u32) -> Result<Fixed> {
    if m == 0 || m.abs() > 64 {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as f64,
            lo: -64.0,
            hi: 64.0,
        });
    }
    if !(20..=100_000).contains(&digits) {
        return Err(Error::OutOfRange {
            what: "digits",
            value: f64::from(digits),
            lo: 20.0,
            hi: 100_000.0,
        });
    }
    // magnitude of e^(pi |m|) in bits
    let mag_bits = (core::f64::consts::PI * m.abs() as f64 / core::f64::consts::LN_2).ceil() as u32 + 1;
    let sig_bits = bits_for_digits(digits) + 8;
    let frac_bits = if m > 0 {
        sig_bits.saturating_sub(mag_bits).max(16)
    } else {
        sig_bits + mag_bits
    };
    let work = frac_bits + mag_bits + 32;
    let arg = pi(work + 8).mul(&Fixed::from_int(m.abs(), work + 8));
    let pos = exp(&arg.with_bits(work), work);
    let v = if m > 0 { pos } else { pos.recip()? };
    let out = v.with_bits(frac_bits);
    Ok(Fixed {
        err_ulps: out.err_ulps.max(1),
        ..out
    })
}

/// Decimal expansion with `places` digits after the point (truncated).
pub fn to_decimal(x: &Fixed, places: usize) -> alloc::string::String {
    use alloc::string::ToString;
    let neg = x.mantissa.sign() == Sign::Minus;
    let a = x.mantissa.abs();
    let scale = BigInt::one() << x.bits;
    let (ip, fp) = a.div_mod_floor(&scale);
    let ten = BigInt::from(10u32).pow(places as u32);
    let frac = (fp * ten) >> x.bits;
    let mut s = alloc::string::String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if places > 0 {
        s.push('.');
        let f = frac.to_string();
        for _ in f.len()..places {
            s.push('0');
        }
        s.push_str(&f);
    }
    s
}

/// Digits of a big integer, for reports.
pub fn decimal_digits(n: &BigUint) -> Vec<u8> {
    n.to_radix_be(10)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let p = pi(200);
        assert_eq!(
            to_decimal(&p, 50),
            "3.14159265358979323846264338327950288419716939937510"
        );
    }

    #[test]
    fn exp_of_one() {
        let e = exp(&Fixed::from_int(1, 200), 200);
        assert_eq!(
            to_decimal(&e, 50),
            "2.71828182845904523536028747135266249775724709369995"
        );
    }

    #[test]
    fn exp_pi_examples() {
        let v = exp_pi_m(1, 40).unwrap();
        assert_eq!(&to_decimal(&v, 13), "23.1406926327792");
        assert!((v.to_f64() - 23.140_692_632_779_27).abs() < 1e-13);
        let w = exp_pi_m(2, 40).unwrap();
        assert!(to_decimal(&w, 30).starts_with("535.491655524764736503049329589047"));
        let r = exp_pi_m(-2, 40).unwrap();
        // e^{-2 pi} = 0.0018674427317079888144302129348270303934228
        assert!(to_decimal(&r, 40).starts_with("0.0018674427317079888144302129348270303934"));
    }

    #[test]
    fn exp_pi_guards() {
        assert!(exp_pi_m(0, 30).is_err());
        assert!(exp_pi_m(65, 30).is_err());
        assert!(exp_pi_m(1, 10).is_err());
    }

    #[test]
    fn from_f64_is_exact() {
        let f = Fixed::from_f64(0.375, 10).unwrap();
        assert_eq!(f.mantissa(), &BigInt::from(384));
        assert_eq!(f.err_ulps(), 0);
        let g = Fixed::from_f64(-2.5, 4).unwrap();
        assert_eq!(g.floor(), BigInt::from(-3));
        assert_eq!(g.fract().to_f64(), 0.5);
    }

    #[test]
    fn fract_turns() {
        let half = Fixed::from_f64(0.5, 64).unwrap();
        assert_eq!(half.fract_u128(), 1u128 << 127);
        let x = Fixed::from_f64(7.25, 300).unwrap();
        assert_eq!(x.fract_u128(), 1u128 << 126);
    }

    #[test]
    fn scaled_conversion_handles_extremes() {
        let big = BigInt::one() << 3000u32;
        assert_eq!(big_to_f64_scaled(&big, -3000), 1.0);
        assert!((ln_big(&big) - 3000.0 * core::f64::consts::LN_2).abs() < 1e-9);
    }
}
