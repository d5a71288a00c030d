use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: polynomials in {left} and {right} even variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("inexact division")]
    InexactDivision,

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not dominant: entries must be weakly decreasing, got {0:?}")]
    NotDominant(Vec<i64>),

    #[error("not a partition: {0}")]
    NotPartition(String),

    #[error("composite partition is not {m}-standard: l(nu) + l(mu) = {total} > {m}")]
    NotMStandard { m: usize, total: usize },

    #[error("partition of length {len} does not fit in {m} entries")]
    TooLong { len: usize, m: usize },

    #[error("weight {0} is not special")]
    NotSpecial(String),

    #[error("weight {0} is typical")]
    Typical(String),

    #[error("weight {0} is atypical")]
    Atypical(String),

    #[error("index {index} out of range 1..={m}")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("rank must be positive")]
    ZeroRank,

    #[error("sigma reduction of {weight} found {hits} candidates, expected exactly one")]
    Reduction { weight: String, hits: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
