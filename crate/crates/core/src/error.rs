use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Field parameters are invalid (non-prime modulus, reducible polynomial, ...).
    #[error("invalid field parameters: {0}")]
    FieldParams(String),
    /// Two operands belong to different fields or word spaces.
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    /// An operation was called on input that does not meet its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An exhaustive enumeration would exceed the configured bound.
    #[error("enumeration bound `{bound}` exceeded: {required} > {limit}")]
    Bound {
        bound: &'static str,
        required: u128,
        limit: u64,
    },
    /// Malformed fixture or word literal.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A generator matrix that does not have full row rank.
    #[error("generator matrix has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
    /// A computed object failed its own verification.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
