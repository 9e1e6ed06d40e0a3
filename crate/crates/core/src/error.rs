use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A stated hypothesis of a lemma does not hold for the given data.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division by zero")]
    DivisionByZero,

    /// Values from different rings (different `d`, `p`, or group) were combined.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("no quotient with smaller remainder norm found for {dividend} / {divisor}")]
    DivisionFailed { dividend: String, divisor: String },

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
