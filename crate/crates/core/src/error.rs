use thiserror::Error;

/// Errors raised by the combinatorial operations and their text/JSON parsers.
///
/// Positions reported in parse errors are 1-based token indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableaux have different shapes: {p} vs {q}")]
    ShapeMismatch { p: String, q: String },

    #[error("entry {0} is already present in the tableau")]
    DuplicateEntry(usize),

    #[error("permutation {0} is not an involution")]
    NotInvolution(String),

    #[error("tableau has {rows} rows; at most 2 are allowed here")]
    TooManyRows { rows: usize },

    #[error("move {mv} does not apply to {word}")]
    MoveMismatch { mv: String, word: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("n_max = {requested} exceeds the ceiling {ceiling} of suite `{suite}`")]
    Budget {
        suite: String,
        requested: usize,
        ceiling: usize,
    },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
