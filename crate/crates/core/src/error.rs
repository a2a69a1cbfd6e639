use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is declared twice")]
    DuplicateVariable(String),
    #[error("at most {max} odd variables are supported, got {got}")]
    TooManyOddVariables { max: usize, got: usize },
    #[error("operands live over different variable tables")]
    MixedTables,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("generator is not parity-homogeneous: {0}")]
    MixedParityGenerator(String),
    #[error("the point does not lie on the variety")]
    PointNotOnVariety,
    #[error("truncation order {order} is too small (minimum {min})")]
    OrderTooSmall { order: usize, min: usize },
    #[error("supermatrix is not invertible")]
    NotInvertible,
    #[error("cannot decide invertibility over this entry ring: {0}")]
    UndecidableUnits(String),
    #[error("bad dimensions: {0}")]
    BadDims(String),
    #[error("unknown group family `{0}`")]
    UnknownGroup(String),
    #[error("bad bilinear form: {0}")]
    BadForm(String),
    #[error("parity layout violated at entry ({row}, {col})")]
    ParityLayout { row: usize, col: usize },
}
