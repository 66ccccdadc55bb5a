//! Divisor calculus on an Enriques surface S: classes in Num(S) = U + E₈
//! and in π*Num(S) = U(2) + E₈(2), Picard–Lefschetz reflections,
//! reductions on curve trees, fiber decompositions, ADE searches in curve
//! graphs, and 𝔽₃ systems for half-pencil multiples.

pub mod ade;
pub mod class;
pub mod error;
pub mod fiber;
pub mod graph;
pub mod models;
pub mod reduce;
pub mod system;

pub use ade::{find_ade_config, Placement, Shape};
pub use class::{
    apply_word, cover_lattice, enriques_lattice, intersect, pullback_to_cover, reflect, Ambient, DivisorClass,
    ReflectionWord,
};
pub use error::{Error, Result};
pub use fiber::{fiber_decompose, Decomposition, FiberDivisor, Kodaira};
pub use graph::{graph_to_json, parse_graph, CurveGraph, CurveGraphFile};
pub use reduce::{tree_reduce, Reduction};
pub use system::{h_multiplicity_system, F3System, Relation};
