use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0} must be even and at least {1}")]
    BadWeight(i64, i64),
    #[error("{what} must be positive")]
    NonPositive { what: &'static str },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("series is zero to the available precision")]
    ZeroSeries,
    #[error("insufficient precision: need {needed}, have {available}")]
    InsufficientPrecision { needed: usize, available: usize },
    #[error("no normalized cusp form catalogued in weight {0}")]
    NotCuspWeight(u32),
    #[error("M_{0} is zero-dimensional but the series is nonzero")]
    EmptySpace(u32),
    #[error("polynomial is not weight-homogeneous; offending monomials: {}", .0.join(", "))]
    NonHomogeneous(Vec<String>),
    #[error("depth bound {depth} must be below half the weight {weight}")]
    DepthTooLarge { depth: usize, weight: u32 },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown form name `{0}`")]
    UnknownForm(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
