use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("empty input")]
    EmptyInput,
    #[error("non-finite coordinate at index {0}")]
    NonFinite(usize),
    #[error("coincident points {0} and {1}")]
    CoincidentPoints(usize, usize),
    #[error("coincident points")]
    Coincident,
    #[error("point not contained in region")]
    NotContained,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
