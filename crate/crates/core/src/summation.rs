//! Compensated accumulation.
//!
//! All long sums in the crate run through [`Neumaier`] in a fixed index
//! order, so results are bit-reproducible regardless of how the terms were
//! produced.

use core::ops::AddAssign;

use num_complex::Complex64;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub const fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for Neumaier {
    fn add_assign(&mut self, x: f64) {
        self.add(x);
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of a slice, in index order.
pub fn sum(xs: &[f64]) -> f64 {
    xs.iter().copied().collect::<Neumaier>().value()
}

/// Two independent compensated accumulators for the real and imaginary parts.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexNeumaier {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexNeumaier {
    pub const fn new() -> Self {
        Self {
            re: Neumaier::new(),
            im: Neumaier::new(),
        }
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}
