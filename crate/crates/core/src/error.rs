use thiserror::Error;

use crate::exact::HalfInt;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("square root of negative rational {0}")]
    NegativeSqrt(String),

    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),

    #[error("matrix is not nilpotent: N^{0} is nonzero")]
    NotNilpotent(usize),

    #[error("matrix is not unit lower-triangular")]
    NotUnitriangular,

    #[error("{0} has no inverse in the supported domain")]
    NotInvertible(String),

    #[error("polynomial is not divisible by h^{0}")]
    NotDivisibleByH(usize),

    #[error("invalid spin label: 2j = {0} must be non-negative")]
    NegativeSpin(i64),

    #[error("weight m = {m} out of range for j = {j}")]
    WeightOutOfRange { j: HalfInt, m: HalfInt },

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    TooLarge { dim: usize, cap: usize },

    #[error("Pochhammer pole: ({gamma})_{l} vanishes")]
    Pole { gamma: String, l: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
