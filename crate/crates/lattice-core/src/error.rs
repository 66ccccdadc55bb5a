use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("gram matrix is not square")]
    NotSquare,
    #[error("gram matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("lattice is odd: diagonal entry {0} is odd")]
    Odd(usize),
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("unknown lattice symbol `{0}`")]
    UnknownSymbol(String),
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("lattice is not negative definite")]
    NotNegativeDefinite,
    #[error("glue is not isotropic or not integral: {0}")]
    BadGlue(String),
    #[error("sub-basis is linearly dependent")]
    DependentBasis,
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("integer overflow converting {0}")]
    Overflow(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;
