use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid {kind}: {detail}")]
    Invalid { kind: &'static str, detail: String },

    /// The image handed to a quotient is not inside the kernel, i.e. d∘d ≠ 0.
    #[error("image is not contained in the kernel")]
    BrokenComplex,

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("extension rejected: {0}")]
    Rejected(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
