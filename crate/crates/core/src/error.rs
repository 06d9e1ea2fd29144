use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("super-commutator argument has mixed parity")]
    MixedParity,
    #[error("unsupported signature ({r},{s}): need r + s >= 2")]
    UnsupportedSignature { r: usize, s: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is not null for the metric")]
    NotNull,
    #[error("zero vector")]
    ZeroVector,
    #[error("spinor has a nonzero slot 0 and is not divisible by x")]
    NotDivisible,
    #[error("exceptional weight: {0}")]
    ExceptionalWeight(String),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("operators are not proportional: {0}")]
    NotProportional(String),
    #[error("value does not lie in s(1,2): slot 0 is {0}")]
    NonzeroSlotZero(String),
    #[error("no obstruction found: {0}")]
    NoObstruction(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
