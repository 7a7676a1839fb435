use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpannerError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("polygon is not {0}-nice")]
    NotNice(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Geom(#[from] geom_core::GeomError),
    #[error(transparent)]
    Decomp(#[from] pair_decomp::DecompError),
    #[error(transparent)]
    Delaunay(#[from] cdelaunay::CdError),
}

pub type Result<T> = std::result::Result<T, SpannerError>;
