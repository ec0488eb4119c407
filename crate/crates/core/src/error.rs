use thiserror::Error;

/// Errors raised by the library. Verification failures are never errors;
/// they are recorded in a [`crate::report::CheckReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("links unsupported: diagram has {0} components")]
    LinksUnsupported(usize),
    #[error("not a knot Jones polynomial: {0}")]
    NotKnotJones(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("unknown knot {0:?}")]
    UnknownKnot(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
