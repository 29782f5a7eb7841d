//! The error term `E(T)` in the mean square of `|zeta(1/2 + it)|`, its
//! integral `G(x)`, and dense tables of both.
//!
//! A table is built from independent per-segment quadratures (one segment per
//! grid step, never straddling an integer) followed by a single ascending
//! compensated pass, so the result does not depend on how the segments were
//! scheduled.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

#[allow(unused_imports)]
use num_traits::Float;

use crate::quadrature::integrate_panels;
use crate::summation::Neumaier;
use crate::zeta::{zeta_sq, ZetaEvalConfig};
use crate::{Error, Result, EULER_GAMMA};

/// Tag stored with every table; bump when the numerics change.
pub const METHOD_VERSION: &str = "gl8-panels/em-rs5/v1";

/// Largest height supported by [`e_of`] and table construction.
pub const MAX_HEIGHT: f64 = 1.0e6;

/// `T (log(T / 2 pi) + 2 gamma - 1)`, continuous at `T = 0`.
pub fn main_term(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    t * ((t / TAU).ln() + 2.0 * EULER_GAMMA - 1.0)
}

/// Derivative of [`main_term`].
#[inline]
pub fn main_term_derivative(t: f64) -> f64 {
    (t / TAU).ln() + 2.0 * EULER_GAMMA
}

/// `int_a^b (main_term(u) - main_term(a)) du`, free of the cancellation the
/// naive antiderivative suffers at large `a`.
fn main_increment_integral(a: f64, b: f64) -> f64 {
    let h = b - a;
    if a < 1.0 {
        let m2 = |x: f64| {
            if x <= 0.0 {
                0.0
            } else {
                0.5 * x * x * ((x / TAU).ln() + 2.0 * EULER_GAMMA - 1.0) - 0.25 * x * x
            }
        };
        return m2(b) - m2(a) - h * main_term(a);
    }
    // main(u) - main(a) = (u - a) c + u log(u / a)
    let c = (a / TAU).ln() + 2.0 * EULER_GAMMA - 1.0;
    // int_a^b u log(u/a) du = b^2/2 log(b/a) - (b^2 - a^2)/4, expanded in r = h/a
    let r = h / a;
    let log_term = 0.5 * b * b * r.ln_1p() - 0.25 * h * (a + b);
    0.5 * c * h * h + log_term
}

/// `E(T)` by panel quadrature of `|zeta(1/2+it)|^2` over `[0, T]`.
///
/// `tol` bounds the quadrature error; the point-wise accuracy of `zeta`
/// itself is governed by `cfg`.
pub fn e_of(t: f64, cfg: &ZetaEvalConfig, tol: f64) -> Result<f64> {
    check_height(t)?;
    check_tol(tol)?;
    Ok(zeta_sq_integral(0.0, t, cfg, tol)? - main_term(t))
}

/// `int_a^b |zeta(1/2+it)|^2 dt` with panels split at every integer.
pub fn zeta_sq_integral(a: f64, b: f64, cfg: &ZetaEvalConfig, tol: f64) -> Result<f64> {
    cfg.validate()?;
    if !(b >= a) {
        return Err(Error::Domain("integration bounds must satisfy a <= b"));
    }
    let width = (b - a).max(1e-300);
    let mut f = |t: f64| zeta_sq(t, cfg).map(|z| [z]);
    let mut acc = Neumaier::new();
    let mut lo = a;
    while lo < b {
        let hi = (lo.floor() + 1.0).min(b);
        acc.add(integrate_panels(&mut f, lo, hi, tol, width)?[0]);
        lo = hi;
    }
    Ok(acc.value())
}

fn check_height(t: f64) -> Result<()> {
    if !(0.0..=MAX_HEIGHT).contains(&t) {
        return Err(Error::OutOfRange {
            what: "T",
            value: t,
            lo: 0.0,
            hi: MAX_HEIGHT,
        });
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::Config("quadrature tolerance must be positive"));
    }
    Ok(())
}

/// Sample grid of a table: `samples_per_unit` points per unit interval up to
/// `x_max`, with `x_max` itself appended when it is off-grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TablePlan {
    pub x_max: f64,
    pub samples_per_unit: u32,
}

impl TablePlan {
    pub fn new(x_max: f64, step: f64) -> Result<Self> {
        if !(x_max >= 1.0) {
            return Err(Error::OutOfRange {
                what: "x_max",
                value: x_max,
                lo: 1.0,
                hi: MAX_HEIGHT,
            });
        }
        check_height(x_max)?;
        if !(step > 0.0 && step <= 1.0) {
            return Err(Error::Config("table step must lie in (0, 1]"));
        }
        let per_unit = (1.0 / step).round();
        if (per_unit * step - 1.0).abs() > 1e-12 || per_unit > 1024.0 {
            return Err(Error::Config("table step must be 1/k for an integer k <= 1024"));
        }
        Ok(Self {
            x_max,
            samples_per_unit: per_unit as u32,
        })
    }

    pub fn step(&self) -> f64 {
        1.0 / f64::from(self.samples_per_unit)
    }

    /// Sample abscissae, starting at 0 and ending at `x_max`.
    pub fn grid(&self) -> Vec<f64> {
        let s = f64::from(self.samples_per_unit);
        let last = (self.x_max * s).floor() as u64;
        let mut t: Vec<f64> = (0..=last).map(|i| i as f64 / s).collect();
        if *t.last().unwrap() < self.x_max {
            t.push(self.x_max);
        }
        t
    }

    /// Consecutive grid intervals, each tagged with the integer part of its
    /// left end.
    pub fn segments(&self) -> Vec<Segment> {
        let s = u64::from(self.samples_per_unit);
        let grid = self.grid();
        grid.windows(2)
            .enumerate()
            .map(|(i, w)| Segment {
                a: w[0],
                b: w[1],
                floor: i as u64 / s,
            })
            .collect()
    }
}

/// One grid interval `[a, b]` inside `[floor, floor + 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: f64,
    pub b: f64,
    pub floor: u64,
}

/// Quadratures over one [`Segment`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentIntegrals {
    /// `int |zeta|^2`
    pub zeta_sq: f64,
    /// `int (b - t) |zeta|^2`
    pub tail_weighted: f64,
    /// `int psi(t) |zeta|^2`
    pub psi_weighted: f64,
    /// `|zeta(1/2 + ib)|^2`
    pub zeta_sq_end: f64,
}

/// Integrates one segment; `tol` is the share of the table tolerance
/// allotted to it.
pub fn segment_integrals(seg: &Segment, cfg: &ZetaEvalConfig, tol: f64) -> Result<SegmentIntegrals> {
    let n = seg.floor as f64;
    let b = seg.b;
    let mut f = |t: f64| {
        let z = zeta_sq(t, cfg)?;
        Ok([z, (b - t) * z, (t - n - 0.5) * z])
    };
    let [zeta_sq_int, tail_weighted, psi_weighted] = integrate_panels(&mut f, seg.a, seg.b, tol, seg.b - seg.a)?;
    Ok(SegmentIntegrals {
        zeta_sq: zeta_sq_int,
        tail_weighted,
        psi_weighted,
        zeta_sq_end: zeta_sq(b, cfg)?,
    })
}

/// Samples of `E(t)` with the cumulative integrals `int_0^t E` and
/// `int_0^t psi |zeta|^2` on a fixed grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTermTable {
    pub x_max: f64,
    pub step: f64,
    pub tolerance: f64,
    pub method_version: String,
    pub cfg: ZetaEvalConfig,
    t: Vec<f64>,
    e: Vec<f64>,
    cum_e: Vec<f64>,
    cum_psi: Vec<f64>,
    zeta_sq: Vec<f64>,
}

/// Raw columns of a table, as persisted.
#[derive(Debug, Clone, PartialEq)]
pub struct TableColumns {
    pub t: Vec<f64>,
    pub e: Vec<f64>,
    pub cum_e: Vec<f64>,
    pub cum_psi: Vec<f64>,
    pub zeta_sq: Vec<f64>,
}

impl ErrorTermTable {
    /// Builds a table sequentially.
    pub fn build(x_max: f64, step: f64, cfg: &ZetaEvalConfig, tol: f64) -> Result<Self> {
        let plan = TablePlan::new(x_max, step)?;
        cfg.validate()?;
        check_tol(tol)?;
        let segs = plan.segments();
        let share = tol / plan.x_max;
        let integrals = segs
            .iter()
            .map(|s| segment_integrals(s, cfg, share * (s.b - s.a)))
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(&plan, cfg, tol, &segs, &integrals)
    }

    /// Runs the ascending prefix pass over precomputed segment integrals.
    pub fn assemble(
        plan: &TablePlan,
        cfg: &ZetaEvalConfig,
        tol: f64,
        segs: &[Segment],
        integrals: &[SegmentIntegrals],
    ) -> Result<Self> {
        if segs.len() != integrals.len() || segs.is_empty() {
            return Err(Error::Degenerate("segment and integral counts differ"));
        }
        let n = segs.len() + 1;
        let mut t = Vec::with_capacity(n);
        let mut e = Vec::with_capacity(n);
        let mut cum_e = Vec::with_capacity(n);
        let mut cum_psi = Vec::with_capacity(n);
        let mut zsq = Vec::with_capacity(n);
        t.push(0.0);
        e.push(0.0);
        cum_e.push(0.0);
        cum_psi.push(0.0);
        zsq.push(zeta_sq(0.0, cfg)?);

        let mut i0 = Neumaier::new();
        let mut ie = Neumaier::new();
        let mut ipsi = Neumaier::new();
        let mut e_prev = 0.0;
        for (seg, v) in segs.iter().zip(integrals) {
            let h = seg.b - seg.a;
            ie.add(h * e_prev);
            ie.add(v.tail_weighted);
            ie.add(-main_increment_integral(seg.a, seg.b));
            i0.add(v.zeta_sq);
            ipsi.add(v.psi_weighted);
            e_prev = i0.value() - main_term(seg.b);
            t.push(seg.b);
            e.push(e_prev);
            cum_e.push(ie.value());
            cum_psi.push(ipsi.value());
            zsq.push(v.zeta_sq_end);
        }
        Ok(Self {
            x_max: plan.x_max,
            step: plan.step(),
            tolerance: tol,
            method_version: String::from(METHOD_VERSION),
            cfg: *cfg,
            t,
            e,
            cum_e,
            cum_psi,
            zeta_sq: zsq,
        })
    }

    /// Reassembles a table from persisted columns, checking its invariants.
    pub fn from_columns(
        x_max: f64,
        step: f64,
        tolerance: f64,
        method_version: String,
        cfg: ZetaEvalConfig,
        cols: TableColumns,
    ) -> Result<Self> {
        let plan = TablePlan::new(x_max, step)?;
        let grid = plan.grid();
        let n = grid.len();
        if [cols.t.len(), cols.e.len(), cols.cum_e.len(), cols.cum_psi.len(), cols.zeta_sq.len()]
            .iter()
            .any(|&l| l != n)
        {
            return Err(Error::Degenerate("column lengths do not match the grid"));
        }
        if cols.t != grid {
            return Err(Error::Degenerate("sample abscissae do not match the grid"));
        }
        if cols.e[0] != 0.0 || cols.cum_e[0] != 0.0 || cols.cum_psi[0] != 0.0 {
            return Err(Error::Degenerate("cumulative columns must start at zero"));
        }
        Ok(Self {
            x_max,
            step: plan.step(),
            tolerance,
            method_version,
            cfg,
            t: cols.t,
            e: cols.e,
            cum_e: cols.cum_e,
            cum_psi: cols.cum_psi,
            zeta_sq: cols.zeta_sq,
        })
    }

    pub fn columns(&self) -> TableColumns {
        TableColumns {
            t: self.t.clone(),
            e: self.e.clone(),
            cum_e: self.cum_e.clone(),
            cum_psi: self.cum_psi.clone(),
            zeta_sq: self.zeta_sq.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn e_values(&self) -> &[f64] {
        &self.e
    }

    pub fn cum_e_integral(&self) -> &[f64] {
        &self.cum_e
    }

    pub fn cum_psi_zeta(&self) -> &[f64] {
        &self.cum_psi
    }

    pub fn zeta_sq_values(&self) -> &[f64] {
        &self.zeta_sq
    }

    fn per_unit(&self) -> usize {
        (1.0 / self.step).round() as usize
    }

    /// `E(n)` for an integer `n <= x_max`.
    pub fn e_at_integer(&self, n: u64) -> Result<f64> {
        if n as f64 > self.x_max {
            return Err(self.range_error(n as f64));
        }
        Ok(self.e[n as usize * self.per_unit()])
    }

    /// `E(n)` for `n = 1..=floor(x)`.
    pub fn e_integers(&self, x: f64) -> Result<impl Iterator<Item = f64> + '_> {
        self.check(x)?;
        let s = self.per_unit();
        let last = x.floor() as usize;
        Ok((1..=last).map(move |n| self.e[n * s]))
    }

    /// `E(x)` by cubic Hermite interpolation using `E' = |zeta|^2 - log(t/2pi) - 2 gamma`.
    pub fn e_at(&self, x: f64) -> Result<f64> {
        let (i, exact) = self.locate(x)?;
        if exact {
            return Ok(self.e[i]);
        }
        let d = |j: usize| {
            if self.t[j] == 0.0 {
                // derivative of E is logarithmically singular at 0; one-sided
                // secant keeps the interpolant bounded
                (self.e[j + 1] - self.e[j]) / (self.t[j + 1] - self.t[j])
            } else {
                self.zeta_sq[j] - main_term_derivative(self.t[j])
            }
        };
        Ok(hermite(self.t[i], self.t[i + 1], self.e[i], self.e[i + 1], d(i), d(i + 1), x))
    }

    /// `int_0^x E(u) du`.
    pub fn cum_e_at(&self, x: f64) -> Result<f64> {
        let (i, exact) = self.locate(x)?;
        if exact {
            return Ok(self.cum_e[i]);
        }
        Ok(hermite(
            self.t[i],
            self.t[i + 1],
            self.cum_e[i],
            self.cum_e[i + 1],
            self.e[i],
            self.e[i + 1],
            x,
        ))
    }

    /// `int_0^x psi(t) |zeta(1/2+it)|^2 dt`.
    pub fn cum_psi_at(&self, x: f64) -> Result<f64> {
        let (i, exact) = self.locate(x)?;
        if exact {
            return Ok(self.cum_psi[i]);
        }
        // psi is continuous on the open grid interval; use its one-sided
        // limits at both ends
        let n = self.t[i].floor();
        let d0 = (self.t[i] - n - 0.5) * self.zeta_sq[i];
        let d1 = (self.t[i + 1] - n - 0.5) * self.zeta_sq[i + 1];
        Ok(hermite(
            self.t[i],
            self.t[i + 1],
            self.cum_psi[i],
            self.cum_psi[i + 1],
            d0,
            d1,
            x,
        ))
    }

    fn check(&self, x: f64) -> Result<()> {
        if !(0.0..=self.x_max).contains(&x) {
            return Err(self.range_error(x));
        }
        Ok(())
    }

    fn range_error(&self, x: f64) -> Error {
        Error::OutOfRange {
            what: "x",
            value: x,
            lo: 0.0,
            hi: self.x_max,
        }
    }

    /// Index `i` with `t[i] <= x < t[i+1]`, and whether `x == t[i]`.
    fn locate(&self, x: f64) -> Result<(usize, bool)> {
        self.check(x)?;
        let i = match self.t.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => return Ok((i, true)),
            Err(i) => i - 1,
        };
        Ok((i, false))
    }
}

fn hermite(x0: f64, x1: f64, y0: f64, y1: f64, d0: f64, d1: f64, x: f64) -> f64 {
    let h = x1 - x0;
    let s = (x - x0) / h;
    let s2 = s * s;
    let s3 = s2 * s;
    let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    let h10 = s3 - 2.0 * s2 + s;
    let h01 = -2.0 * s3 + 3.0 * s2;
    let h11 = s3 - s2;
    h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1
}

/// `G(x) = int_0^x (E(u) - pi) du`.
pub fn g_of(x: f64, table: &ErrorTermTable) -> Result<f64> {
    Ok(table.cum_e_at(x)? - PI * x)
}
