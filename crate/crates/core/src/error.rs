use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid degree {0}")]
    InvalidDegree(usize),
    #[error("odd permutation: {0}")]
    OddPermutation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("group order exceeds cap {cap}")]
    CapExceeded { cap: usize },
    #[error("group is not generated by involutions")]
    NotInvolutionGenerated,
    #[error("element not in group")]
    NotInGroup,
    #[error("modular character computation failed: {0}")]
    Dixon(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid character table: {0}")]
    InvalidTable(String),
    #[error("unknown class name {name:?}; valid names: {valid}")]
    UnknownClass { name: String, valid: String },
    #[error("corrupt character table: structure constant {0} is not a nonnegative integer")]
    CorruptTable(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("non-integral value {0}")]
    NonIntegral(String),
    #[error("out of enumerable range: {0}")]
    OutOfRange(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidTable(e.to_string())
    }
}
