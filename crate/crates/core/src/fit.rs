//! Power-law fits, dyadic envelopes and iterated logarithms.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Least-squares fit `y ~ coeff * x^slope` in log-log coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    pub slope: f64,
    pub slope_stderr: f64,
    pub coeff: f64,
    pub window: (f64, f64),
    pub n_points: usize,
}

/// Ordinary least squares of `log y` on `log x`.
pub fn loglog_slope(samples: &[(f64, f64)]) -> Result<PowerLawFit> {
    if samples.len() < 3 {
        return Err(Error::Degenerate("at least three samples are required"));
    }
    if samples.windows(2).any(|w| !(w[1].0 > w[0].0)) {
        return Err(Error::Degenerate("x must be strictly increasing"));
    }
    if samples.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite())) {
        return Err(Error::Degenerate("samples must be positive and finite"));
    }
    let n = samples.len() as f64;
    let lx: Vec<f64> = samples.iter().map(|s| s.0.ln()).collect();
    let ly: Vec<f64> = samples.iter().map(|s| s.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (a, b) in lx.iter().zip(&ly) {
        sxx += (a - mx) * (a - mx);
        sxy += (a - mx) * (b - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ssr: f64 = lx
        .iter()
        .zip(&ly)
        .map(|(a, b)| {
            let r = b - (intercept + slope * a);
            r * r
        })
        .sum();
    Ok(PowerLawFit {
        slope,
        slope_stderr: (ssr / (n - 2.0) / sxx).sqrt(),
        coeff: intercept.exp(),
        window: (samples[0].0, samples[samples.len() - 1].0),
        n_points: samples.len(),
    })
}

/// Least-squares `C` in `y ~ C x^p` for a fixed exponent.
pub fn fit_coefficient(samples: &[(f64, f64)], p: f64) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::Degenerate("no samples"));
    }
    let (mut num, mut den) = (0.0, 0.0);
    for &(x, y) in samples {
        let s = x.powf(p);
        num += y * s;
        den += s * s;
    }
    if !(den > 0.0) {
        return Err(Error::Degenerate("all basis values vanish"));
    }
    Ok(num / den)
}

/// Maxima of `|y|` over dyadic windows `[2^j, 2^(j+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct DyadicEnvelope {
    /// Geometric window centres.
    pub centers: Vec<f64>,
    pub maxima: Vec<f64>,
}

/// Keeps only windows lying entirely inside the sampled range.
pub fn dyadic_envelope(samples: &[(f64, f64)]) -> Result<DyadicEnvelope> {
    let lo = samples.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let hi = samples.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max);
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::Degenerate("samples must cover a positive range"));
    }
    let j0 = lo.log2().ceil() as i32;
    let j1 = hi.log2().floor() as i32;
    let mut centers = Vec::new();
    let mut maxima = Vec::new();
    for j in j0..j1 {
        let (a, b) = (2f64.powi(j), 2f64.powi(j + 1));
        let m = samples
            .iter()
            .filter(|s| s.0 >= a && s.0 < b)
            .map(|s| s.1.abs())
            .fold(f64::NEG_INFINITY, f64::max);
        if m.is_finite() {
            centers.push((a * b).sqrt());
            maxima.push(m);
        }
    }
    if centers.len() < 2 {
        return Err(Error::Degenerate("fewer than two complete dyadic windows"));
    }
    Ok(DyadicEnvelope { centers, maxima })
}

impl DyadicEnvelope {
    /// Log-log slope of the window maxima.
    pub fn slope(&self) -> Result<PowerLawFit> {
        let s: Vec<(f64, f64)> = self.centers.iter().copied().zip(self.maxima.iter().copied()).collect();
        loglog_slope(&s)
    }
}

/// `log_j x`, the `j`-fold natural logarithm; every intermediate
/// `log_(i) x`, `i < j`, must exceed 1.
pub fn iterated_log(x: f64, j: u32) -> Result<f64> {
    if j < 1 {
        return Err(Error::Domain("j must be at least 1"));
    }
    let mut v = x;
    for _ in 0..j {
        if !(v > 1.0) {
            return Err(Error::Domain("iterated logarithm undefined: an intermediate value is <= 1"));
        }
        v = v.ln();
    }
    Ok(v)
}
