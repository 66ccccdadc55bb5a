//! Overlattices from rational glue, orthogonal complements and projections.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::disc::{FiniteAbelianGroup, Subgroup};
use crate::error::{LatticeError, Result};
use crate::lattice::GramLattice;
use crate::matrix::{self, RatMatrix};

#[derive(Debug, Clone)]
pub struct Overlattice {
    pub lattice: GramLattice,
    /// Basis rows, in rational coordinates of the original lattice.
    pub basis: RatMatrix,
    pub index: BigInt,
}

impl Overlattice {
    /// Integer coordinates of a rational vector in the overlattice basis,
    /// or `None` if it does not lie in the overlattice.
    pub fn coords_of(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        let x = matrix::solve_row(&self.basis, v)?;
        x.into_iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Same as `coords_of` for an integer vector of the original lattice.
    pub fn coords_of_int(&self, v: &[i64]) -> Option<Vec<i64>> {
        let r: Vec<BigRational> = v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        self.coords_of(&r)?.iter().map(|c| matrix::big_to_i64(c).ok()).collect()
    }
}

/// Overlattice generated by `l` and the rational glue vectors.
pub fn overlattice(l: &GramLattice, glue: &[Vec<BigRational>]) -> Result<Overlattice> {
    let n = l.rank();
    if glue.iter().any(|g| g.len() != n) {
        return Err(LatticeError::Dimension("glue vector length".into()));
    }
    let mut rows: RatMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    rows.extend(glue.iter().cloned());
    let den =
        rows.iter().fold(BigInt::one(), |acc, r| num_integer::Integer::lcm(&acc, &matrix::lcm_of_denominators(r)));
    let den_r = BigRational::from_integer(den.clone());
    let int_rows: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|x| (x * &den_r).to_integer()).collect()).collect();
    let span = matrix::row_span_basis(&int_rows);
    let basis: RatMatrix =
        span.iter().map(|r| r.iter().map(|x| BigRational::new(x.clone(), den.clone())).collect()).collect();
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = l.pair_rat(&basis[i], &basis[j]);
            if !v.is_integer() {
                return Err(LatticeError::BadGlue(format!("non-integral pairing {v}")));
            }
            gram[i][j] = matrix::big_to_i64(&v.to_integer())?;
        }
        if gram[i][i] % 2 != 0 {
            return Err(LatticeError::BadGlue(format!("odd square {}", gram[i][i])));
        }
    }
    let det_b = matrix::determinant(&span);
    // index = den^n / |det(span)|
    let index = num_traits::pow(den, n) / det_b.abs();
    let mut lattice = GramLattice::new(gram)?;
    if let Some(lbl) = l.label() {
        lattice = lattice.with_label(format!("overlattice of {lbl}"));
    }
    Ok(Overlattice { lattice, basis, index })
}

/// Rational glue vectors generating a subgroup of the discriminant group.
pub fn glue_vectors(g: &FiniteAbelianGroup, h: &Subgroup) -> Vec<Vec<BigRational>> {
    h.generators.iter().map(|x| g.lift(x)).collect()
}

#[derive(Debug, Clone)]
pub struct Complement {
    /// Basis of the (saturated) complement in ambient coordinates.
    pub basis: Vec<Vec<i64>>,
    pub lattice: GramLattice,
}

/// Orthogonal complement of the span of `sub_basis` in `ambient`.
pub fn orthogonal_complement(ambient: &GramLattice, sub_basis: &[Vec<i64>]) -> Result<Complement> {
    let n = ambient.rank();
    if sub_basis.iter().any(|v| v.len() != n) {
        return Err(LatticeError::Dimension("sub-basis vector length".into()));
    }
    let sb = matrix::to_big(sub_basis);
    if matrix::rank_q(&matrix::to_rat(&sb)) < sub_basis.len() {
        return Err(LatticeError::DependentBasis);
    }
    let restricted: Vec<Vec<i64>> =
        sub_basis.iter().map(|x| sub_basis.iter().map(|y| ambient.pair(x, y)).collect()).collect();
    if !restricted.is_empty() && matrix::determinant(&matrix::to_big(&restricted)).is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let sg = matrix::mat_mul(&sb, &ambient.gram_big());
    let ker = matrix::integer_kernel(&sg, n);
    let basis: Vec<Vec<i64>> =
        ker.iter().map(|v| v.iter().map(matrix::big_to_i64).collect::<Result<_>>()).collect::<Result<_>>()?;
    let gram = basis.iter().map(|x| basis.iter().map(|y| ambient.pair(x, y)).collect()).collect();
    let lattice = GramLattice::new(gram)?;
    Ok(Complement { basis, lattice })
}

/// Orthogonal projection of `v` away from the span of `sub_basis`
/// (rational coordinates in the ambient basis).
pub fn project_away(ambient: &GramLattice, sub_basis: &[Vec<i64>], v: &[i64]) -> Result<Vec<BigRational>> {
    let k = sub_basis.len();
    let restricted: RatMatrix = sub_basis
        .iter()
        .map(|x| sub_basis.iter().map(|y| BigRational::from_integer(ambient.pair(x, y).into())).collect())
        .collect();
    let inv = matrix::inverse_q(&restricted).ok_or(LatticeError::Degenerate)?;
    let pv: Vec<BigRational> = sub_basis.iter().map(|x| BigRational::from_integer(ambient.pair(x, v).into())).collect();
    let mut out: Vec<BigRational> = v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    for i in 0..k {
        let c: BigRational = (0..k).fold(BigRational::zero(), |acc, j| acc + &inv[i][j] * &pv[j]);
        for (o, s) in out.iter_mut().zip(&sub_basis[i]) {
            *o -= &c * BigRational::from_integer((*s).into());
        }
    }
    Ok(out)
}
