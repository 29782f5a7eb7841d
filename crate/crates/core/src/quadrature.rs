//! Fixed-order Gauss–Legendre panels with adaptive halving.
//!
//! Integrands are vector valued (`[f64; K]`) so several weighted integrals
//! can share one set of expensive `zeta` evaluations.

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Positive nodes of the 8-point Gauss–Legendre rule on [-1, 1].
const GL8_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL8_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// Relative disagreement accepted regardless of `tol`, per unit of abscissa:
/// integrands with phases growing like `t` lose about `t * eps` to rounding.
pub const NOISE_FLOOR: f64 = 64.0 * f64::EPSILON;

/// Deepest halving level tried before giving up on a panel.
pub const MAX_PANEL_DEPTH: u32 = 16;

/// Maximum panel width at height `t`: a quarter of `1 / log(2 + t)`, well
/// below the local spacing of zeros of `zeta(1/2 + it)`.
#[inline]
pub fn max_panel_width(t: f64) -> f64 {
    0.25 / (2.0 + t.max(0.0)).ln()
}

/// One application of the 8-point rule on `[a, b]`.
pub fn gauss_legendre_8<const K: usize, F>(f: &mut F, a: f64, b: f64) -> Result<[f64; K]>
where
    F: FnMut(f64) -> Result<[f64; K]>,
{
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = [0.0; K];
    for (&x, &w) in GL8_NODES.iter().zip(GL8_WEIGHTS.iter()) {
        let lo = f(mid - half * x)?;
        let hi = f(mid + half * x)?;
        for k in 0..K {
            acc[k] += w * (lo[k] + hi[k]);
        }
    }
    for v in acc.iter_mut() {
        *v *= half;
    }
    Ok(acc)
}

/// Integrates `f` over `[a, b]`, halving until the one-panel and two-panel
/// estimates agree within `tol` in every component (the tolerance is split
/// proportionally between halves).
pub fn integrate_adaptive<const K: usize, F>(f: &mut F, a: f64, b: f64, tol: f64) -> Result<[f64; K]>
where
    F: FnMut(f64) -> Result<[f64; K]>,
{
    let whole = gauss_legendre_8(f, a, b)?;
    refine(f, a, b, tol, whole, 0)
}

fn refine<const K: usize, F>(f: &mut F, a: f64, b: f64, tol: f64, whole: [f64; K], depth: u32) -> Result<[f64; K]>
where
    F: FnMut(f64) -> Result<[f64; K]>,
{
    let m = 0.5 * (a + b);
    let left = gauss_legendre_8(f, a, m)?;
    let right = gauss_legendre_8(f, m, b)?;
    let mut split = [0.0; K];
    for k in 0..K {
        split[k] = left[k] + right[k];
    }
    // evaluation noise cannot be halved away; weighted components share the
    // scale of the largest one
    let scale = split.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = NOISE_FLOOR * (1.0 + a.abs().max(b.abs())) * scale;
    let converged = (0..K).all(|k| (split[k] - whole[k]).abs() <= tol.max(floor));
    if converged {
        return Ok(split);
    }
    if depth >= MAX_PANEL_DEPTH {
        return Err(Error::ToleranceNotReached { a, b, tol });
    }
    let l = refine(f, a, m, 0.5 * tol, left, depth + 1)?;
    let r = refine(f, m, b, 0.5 * tol, right, depth + 1)?;
    let mut out = [0.0; K];
    for k in 0..K {
        out[k] = l[k] + r[k];
    }
    Ok(out)
}

/// Splits `[a, b]` into equal panels no wider than [`max_panel_width`] at `a`.
pub fn panels(a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> {
    let width = b - a;
    let count = if width > 0.0 {
        (width / max_panel_width(a)).ceil().max(1.0) as usize
    } else {
        0
    };
    let h = if count > 0 { width / count as f64 } else { 0.0 };
    (0..count).map(move |i| {
        let lo = a + h * i as f64;
        let hi = if i + 1 == count { b } else { a + h * (i + 1) as f64 };
        (lo, hi)
    })
}

/// Integrates over `[a, b]` panel by panel, each panel held to its share of
/// `tol` by width.
pub fn integrate_panels<const K: usize, F>(f: &mut F, a: f64, b: f64, tol: f64, total_width: f64) -> Result<[f64; K]>
where
    F: FnMut(f64) -> Result<[f64; K]>,
{
    let mut acc = [crate::summation::Neumaier::new(); K];
    for (lo, hi) in panels(a, b) {
        let share = tol * (hi - lo) / total_width.max(hi - lo);
        let v = integrate_adaptive(f, lo, hi, share)?;
        for k in 0..K {
            acc[k].add(v[k]);
        }
    }
    let mut out = [0.0; K];
    for k in 0..K {
        out[k] = acc[k].value();
    }
    Ok(out)
}
