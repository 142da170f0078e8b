use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element belongs to ring #{found}, expected an element of ring #{expected}")]
    ForeignElement { expected: u64, found: u64 },

    #[error("index {index} out of range for ring of size {size}")]
    OutOfRange { index: u64, size: u64 },

    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    Capacity {
        what: String,
        needed: u128,
        limit: u128,
    },

    #[error("{0}")]
    Usage(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),

    #[error("algebra is not finite-dimensional: {0}")]
    NotFiniteDimensional(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn capacity(what: impl Into<String>, needed: u128, limit: u128) -> Self {
        Error::Capacity {
            what: what.into(),
            needed,
            limit,
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
