//! Elliptic surfaces over ℚ(t): Weierstrass invariants, Kodaira fibers via
//! Tate's algorithm in characteristic 0, cubic-pencil discriminants, base
//! change and quadratic twists, the height pairing, and Néron–Severi
//! lattices assembled from fibers and sections.

pub mod error;
pub mod expr;
pub mod family;
pub mod fibers;
pub mod model;
pub mod mw;
pub mod pencil;
pub mod poly;

pub use error::{Error, Result};
pub use family::{poly_is_square, twist_family_section, FamilyMember};
pub use fibers::{euler_number, geometric_fibers, FiberData, KodairaType, Place};
pub use model::{named_model, parse_model, Invariants, ModelFile, WeierstrassModel};
pub use mw::{
    build_from_multisection, build_neron_severi, contact_classes, contact_patterns, height_pair, height_pairing,
    shioda_tate, translate_by_torsion, ContactPattern, Frame, NeronSeveri, SectionData, ShiodaTate,
};
pub use pencil::{cubic_discriminant, cubic_pencil_singular_places, TernaryForm};
pub use poly::{RatFunc, RatPoly};
