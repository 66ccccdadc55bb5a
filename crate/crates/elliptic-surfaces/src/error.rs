use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("discriminant vanishes identically")]
    Singular,
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("excluded parameter: {0}")]
    Excluded(String),
    #[error("inconsistent glue: {0}")]
    Glue(String),
    #[error(transparent)]
    Lattice(#[from] lattice_core::LatticeError),
}

pub type Result<T> = std::result::Result<T, Error>;
