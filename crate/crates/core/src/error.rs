use std::time::Duration;

use crate::integer::ParseIntegerError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which resource cap a computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    Elements(usize),
    Time(Duration),
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("vector is not in the integer kernel of the matrix")]
    NotInKernel,

    #[error("vector is not a member of the given set")]
    NotMember,

    #[error("matrix is not pointed: the kernel meets the non-negative orthant")]
    NotPointed,

    #[error("toric ideal is not simple")]
    NotSimple,

    #[error("invalid subset: {0}")]
    BadSubset(String),

    #[error("entries have gcd {0}, expected 1")]
    GcdNotOne(String),

    #[error("negative entry in a degree vector")]
    NegativeEntry,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not covered by the generalized Lawrence construction: {0}")]
    HypothesisViolation(String),

    #[error("bouquet ideal is not a monomial curve: {0}")]
    NotMonomialCurve(String),

    #[error("budget exceeded ({kind:?}) after {generated} generated candidates")]
    BudgetExceeded { kind: BudgetKind, generated: usize },

    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<ParseIntegerError> for Error {
    fn from(e: ParseIntegerError) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// Resource errors are not mathematical verdicts and are reported separately.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }

    /// Input that could not be read or parsed, as opposed to a failed precondition.
    pub fn is_input(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_) | Error::Json(_))
    }
}
