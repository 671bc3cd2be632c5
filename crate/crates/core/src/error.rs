use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a valid prime here")]
    InvalidPrime(String),
    #[error("{0} is not a p-adic integer for p = {1}")]
    NotPAdicInteger(String, u64),
    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: String,
        expected: String,
    },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityError { expected: usize, got: usize },
    #[error("recurrence coefficient check failed: {0}")]
    CoefficientError(String),
    #[error("expansion exceeded {limit} monomials")]
    ResourceLimit { limit: usize },
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(
    what: &'static str,
    value: impl ToString,
    expected: impl Into<String>,
) -> Error {
    Error::OutOfRange {
        what,
        value: value.to_string(),
        expected: expected.into(),
    }
}
