use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("negative exponent")]
    NegativePower,

    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("the unit ideal has no dimension")]
    UnitIdeal,

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("ideal is not generated by monomials")]
    NotMonomial,

    #[error("containment violated: {0}")]
    NotContained(String),

    #[error("variable set {0} is not independent modulo the ideal")]
    NotIndependent(String),

    #[error("the zero operator has no order")]
    ZeroOperator,

    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("factorization budget exceeded: {0}; supply the associated primes externally")]
    BudgetExceeded(String),

    #[error("no stabilization up to order {0}")]
    NoStabilization(usize),

    #[error("no separator found: {0}")]
    NoSeparator(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("data integrity failure: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
