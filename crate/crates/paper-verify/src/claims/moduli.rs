//! Moduli-theoretic statements (irreducibility, boundary, overlap) are
//! registered without a check so that coverage stays auditable.

pub(super) const NOT_CHECKABLE: Option<fn() -> super::Check> = None;
