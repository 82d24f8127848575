//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or vector dimensions do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Values violate a precondition (non-finite, negative probability, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Bad run configuration (unknown key, unsupported resolution, ...).
    #[error("config error: {0}")]
    Config(String),

    /// An operation was called in the wrong training phase.
    #[error("phase error: {0}")]
    Phase(String),

    /// A loss term became non-finite; the step was aborted before any write.
    #[error("non-finite loss: {0}")]
    NonFinite(String),

    /// Checkpoint file is corrupt or of an unknown version.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// Dataset could not be loaded.
    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 config, 2 runtime abort, 3 verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidInput(_) => 1,
            _ => 2,
        }
    }
}
