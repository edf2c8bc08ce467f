use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generators: {0}")]
    InvalidGenerators(String),
    #[error("invalid digraph: {0}")]
    InvalidDigraph(String),
    #[error("invalid Apéry modulus {0}: must be a nonzero element of the semigroup")]
    InvalidModulus(u64),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("negative argument {0}")]
    Negative(i64),
    #[error("set is not closed: {0}")]
    NotClosed(String),
    #[error("{value} is not a minimal generator of the semigroup")]
    NotAGenerator { value: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ASCII rendering supports dimension 1 to 3, found {0}")]
    UnsupportedRender(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("closed form disagrees with brute force: {0}")]
    FormulaMismatch(String),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
