use thiserror::Error;

#[derive(Debug, Error)]
pub enum CdError {
    #[error("degenerate configuration: {0}; perturb the input (PointSet::perturbed)")]
    Degenerate(String),
    #[error("invalid graph json: {0}")]
    Json(String),
    #[error(transparent)]
    Geom(#[from] geom_core::GeomError),
}

pub type Result<T> = std::result::Result<T, CdError>;
