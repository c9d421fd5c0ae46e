use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring: {0}")]
    Ring(String),
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("{0} is not a face of the standard simplex it was applied to")]
    NotAFace(String),
    #[error("vertex list {0} is not weakly increasing")]
    NotOrdered(String),
    #[error("invalid simplicial data: {0}")]
    Invalid(String),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("cochain is not a cocycle: {0}")]
    NotCocycle(String),
    #[error("format: {0}")]
    Format(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
