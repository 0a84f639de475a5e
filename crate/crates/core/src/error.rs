use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Dimensions or lengths the requested operation cannot handle.
    #[error("size error: {0}")]
    Size(String),

    /// A parameter outside its valid domain (window alpha, maxval, metadata mismatch).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Malformed input bytes. `offset` is the byte position where decoding stopped.
    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    /// A simulated memory region was asked to hold more points than it has.
    #[error("capacity error: region {region} holds {capacity} points, {requested} requested")]
    Capacity {
        region: String,
        capacity: usize,
        requested: usize,
    },

    /// Numerical post-condition failure (e.g. non-negligible imaginary residue).
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn format(offset: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: msg.into(),
        }
    }
}
