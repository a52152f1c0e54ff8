use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid pair ({i},{j}) for ground set of size {m}")]
    InvalidPair { i: usize, j: usize, m: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what}: requested {requested} exceeds cap {cap}")]
    Capacity {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("form `{form}` is not supporting: violated by vertex {witness}")]
    NotSupporting { form: String, witness: String },

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("vertex {0} is not in the vertex set")]
    NotInSet(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for errors caused by an enumeration or oracle cap.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
