use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecompError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("duplicate coordinate {0}")]
    DuplicateCoordinate(f64),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, DecompError>;
