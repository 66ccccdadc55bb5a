//! Exact arithmetic of even integer lattices.
//!
//! Everything is exact: Gram matrices are integer, intermediate linear
//! algebra runs over `BigInt`/`BigRational`, and discriminant-form values
//! are kept as reduced fractions.

pub mod disc;
pub mod error;
pub mod fp;
pub mod glue;
pub mod io;
pub mod lattice;
pub mod matrix;
pub mod roots;

pub use disc::{
    discriminant_form, discriminant_group, isotropic_subgroups, p_length, qforms_isometric, FiniteAbelianGroup,
    FiniteQuadraticForm, Isometry, Subgroup, DEFAULT_SEARCH_BOUND,
};
pub use error::{LatticeError, Result};
pub use fp::{divisibility_kernel, divisibility_kernel_int, kernel_mod, rank_mod};
pub use glue::{glue_vectors, orthogonal_complement, overlattice, project_away, Complement, Overlattice};
pub use lattice::{direct_sum, direct_sum_all, named, scale, GramLattice};
pub use matrix::smith_normal_form;
pub use roots::{admits_orthogonal_a2s, roots_of, A2Pair, RootSystem};

/// Shorthand for an exact rational from a numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> num_rational::BigRational {
    num_rational::BigRational::new(n.into(), d.into())
}
