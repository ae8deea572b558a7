use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u64),

    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),

    #[error("polynomials live in different rings")]
    SignatureMismatch,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("exponent overflow (exponents are limited to 32 bits)")]
    ExponentOverflow,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("quotient is not a finite-length module supported at the origin")]
    NotLocalAtOrigin,

    #[error("semigroup has infinitely many gaps: {0}")]
    InfiniteGaps(String),

    #[error("monomial ideal is not cofinite in the semigroup")]
    NotCofinite,

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
