use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter label {0}: labels must be at least 2")]
    InvalidLabel(u64),
    #[error("division by zero")]
    DivByZero,
    #[error("cos(pi/{m}) does not lie in the field of 2cos(pi/{n})")]
    OutOfField { m: u64, n: u64 },
    #[error("Coxeter matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("Coxeter matrix diagonal entry ({0}, {0}) must be 1")]
    BadDiagonal(usize),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("malformed group description: {0}")]
    Parse(String),
    #[error("empty generator subset")]
    EmptySubset,
    #[error("root is not positive")]
    NotPositive,
    #[error("Coxeter system is not of affine type")]
    NotAffine,
    #[error("shadow violation: {0}")]
    ShadowViolation(String),
    #[error("element budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("unsupported rank {0} (expected 3)")]
    UnsupportedRank(usize),
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
