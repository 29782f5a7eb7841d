use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(&'static str),
    #[error("argument outside the domain: {0}")]
    Domain(&'static str),
    #[error("{what} = {value} is outside the supported range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("quadrature tolerance {tol:e} not reached on [{a}, {b}]")]
    ToleranceNotReached { a: f64, b: f64, tol: f64 },
    #[error("capacity exceeded: {requested} > {limit}")]
    Capacity { requested: u64, limit: u64 },
    #[error("precision limit reached at {digits} digits ({certified} terms certified)")]
    PrecisionLimit { digits: u32, certified: usize },
    #[error("phase reduction error bound {bound:e} exceeds 1e-12; supply more digits of eta")]
    InsufficientPrecision { bound: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
}
