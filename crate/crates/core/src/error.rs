use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("variable sets differ ({0} vs {1} variables)")]
    VariableMismatch(usize, usize),
    #[error("elements live in different rings")]
    RingMismatch,
    #[error("ambient free modules differ")]
    AmbientMismatch,
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("element is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("the resolution is not minimal: {0}")]
    NotMinimal(String),
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("ideal is not contained in the irrelevant ideal")]
    NotInIrrelevantIdeal,
    #[error("lifting condition fails in homological degree {degree}: entry {entry} is not in m^2")]
    LiftingCondition { degree: usize, entry: String },
    #[error("the Hilbert function is not finite in this grading: {0}")]
    InfiniteHilbertFunction(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("computation exceeded its time budget")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
