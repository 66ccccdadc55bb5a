//! Error classes and their stable exit statuses.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input. Exit 2.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input violating a mathematical precondition. Exit 3.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An enumeration limit was hit. Exit 4.
    #[error("bound exceeded: {0}")]
    Bound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Bound(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

impl From<lattice_core::LatticeError> for CliError {
    fn from(e: lattice_core::LatticeError) -> Self {
        use lattice_core::LatticeError as E;
        match e {
            E::Parse(_) | E::UnknownSymbol(_) | E::NotSquare => CliError::Parse(e.to_string()),
            E::BoundExceeded(_) => CliError::Bound(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<elliptic_surfaces::Error> for CliError {
    fn from(e: elliptic_surfaces::Error) -> Self {
        use elliptic_surfaces::Error as E;
        match e {
            E::Parse(_) => CliError::Parse(e.to_string()),
            E::Bound(_) => CliError::Bound(e.to_string()),
            E::Lattice(l) => l.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<ternary_codes::CodeError> for CliError {
    fn from(e: ternary_codes::CodeError) -> Self {
        match e {
            ternary_codes::CodeError::BoundExceeded(_) => CliError::Bound(e.to_string()),
            ternary_codes::CodeError::Invalid(_) => CliError::Precondition(e.to_string()),
        }
    }
}
