//! Numerics for the summatory behaviour of the error term in the mean square
//! of the Riemann zeta function on the critical line.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs: evaluation of `zeta(1/2 + it)`, the error term
//! `E(T)` and its cumulative integrals, the divisor problem error term
//! `Delta(x)`, Wilton-type exponential sums with divisor coefficients,
//! certified continued fractions of `e^(pi m)`, and the power-law fitting used
//! to read exponents off the numerical data.
//!
//! File formats, the on-disk cache, parallel table construction and the
//! command-line front end live in the companion `ezeta` crate.
#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod afe;
pub mod cf;
pub mod divisor;
mod error;
pub mod fit;
pub mod fixed;
pub mod mean_square;
pub mod quadrature;
pub mod summation;
pub mod summatory;
mod tables;
pub mod wilton;
pub mod zeta;

pub use error::{Error, Result};

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
