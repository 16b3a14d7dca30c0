use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("tableau shape has {shape} boxes but {entries} entries were supplied")]
    TableauSizeMismatch { shape: usize, entries: usize },

    #[error("highest weight of sl_n^(x)k requires |lambda| = |mu| (got {lambda} and {mu})")]
    SizeMismatch { lambda: usize, mu: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("entry {entry} out of range 1..={k}")]
    EntryOutOfRange { entry: usize, k: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid contraction pattern: {0}")]
    InvalidPattern(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("problem too large: {0}")]
    TooLarge(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
