use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact")]
    InexactDivision,
    #[error("leading coefficient is not a unit monomial")]
    NonUnitLeading,
    #[error("cannot invert an untruncated series")]
    UnboundedInverse,
    #[error("unexpected half-integer or negative exponent {0}/2")]
    NonIntegralExponent(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("empty braid word")]
    Empty,
    #[error("token {pos}: invalid generator {token:?}")]
    BadToken { pos: usize, token: String },
    #[error("token {pos}: generator index 0 is not allowed")]
    ZeroIndex { pos: usize },
    #[error("token {pos}: generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { pos: usize, index: u32, strands: usize },
    #[error("invalid strand count {0:?}")]
    BadStrandCount(String),
    #[error("closure has {0} components; only knots are supported")]
    NotAKnot(usize),
    #[error("braid is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("braid contains negative crossings")]
    NotPositive,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("strip {0} referenced but not defined")]
    UnknownStrip(usize),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Template(#[from] TemplateError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
