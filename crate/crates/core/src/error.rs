use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes incompatible for the requested operation.
    #[error("dimension error in {op}: {lhs:?} vs {rhs:?}")]
    Dimension {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// Index outside the valid range.
    #[error("index {index} out of range (valid 0..{bound}) in {context}")]
    Bounds {
        context: &'static str,
        index: usize,
        bound: usize,
    },

    /// Text-format parse failure.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Binary-format failure at a byte offset.
    #[error("format error at byte {offset}: {message}")]
    Format { offset: u64, message: String },

    /// Violated operation precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Invalid experiment/attention configuration.
    #[error("config error: {0}")]
    Config(String),

    /// Checkpoint and model/dataset disagree.
    #[error("compatibility error: {0}")]
    Incompatible(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
