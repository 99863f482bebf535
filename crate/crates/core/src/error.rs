use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("n = {n} exceeds the enumeration bound {bound} (set HYPEROCT_MAX_N to raise it)")]
    BoundExceeded { n: usize, bound: usize },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed signed-set word {0:?}")]
    MalformedWord(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("tableau is not standard: {0}")]
    NonStandard(String),

    #[error("expected an unsigned permutation, got {0}")]
    SignedInput(String),

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),

    #[error("unknown suite or theorem {0:?}")]
    UnknownSuite(String),

    #[error("{name} is not defined for n = {n}")]
    OutOfRange { name: String, n: usize },

    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
