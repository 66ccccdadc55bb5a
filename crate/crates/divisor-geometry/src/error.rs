use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("reflection class has square {0}, expected -2")]
    NotRoot(i64),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("support is not a tree: {0}")]
    NotTree(String),
    #[error("divisor is not reduced and no fiber was supplied for the complement step")]
    NonReduced,
    #[error("invalid fiber: {0}")]
    Fiber(String),
    #[error("divisor not in the span of H and the fiber components")]
    NotInSpan,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Lattice(#[from] lattice_core::LatticeError),
}

pub type Result<T> = std::result::Result<T, Error>;
