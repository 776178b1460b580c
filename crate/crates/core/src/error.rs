use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("matrix does not define a morphism: {0}")]
    NotWellDefined(String),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("endpoint mismatch: {0}")]
    EndMismatch(String),
    #[error("not a monomorphism: {0}")]
    NotMono(String),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
}

pub type Result<T> = std::result::Result<T, Error>;
