use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial degree {found} not allowed here ({expected})")]
    BadDegree { found: usize, expected: &'static str },
    #[error("quadratic field mismatch: √{0} vs √{1}")]
    FieldMismatch(i64, i64),
    #[error("{0} is not a valid quadratic field parameter (square-free, not 0 or 1)")]
    BadFieldParameter(i64),
    #[error("degenerate Möbius transformation (ad − bc = 0)")]
    DegenerateMobius,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial must be monic with integer coefficients")]
    NotMonicInteger,
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("repeated roots")]
    RepeatedRoots,
    #[error("numerical stage failed: {0}")]
    Numeric(String),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
