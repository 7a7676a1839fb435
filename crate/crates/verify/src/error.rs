use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error(transparent)]
    Geom(#[from] geom_core::GeomError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, VerifyError>;
