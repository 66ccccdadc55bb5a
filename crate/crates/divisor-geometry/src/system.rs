//! Linear systems over 𝔽₃ for the unknown H-multiples of pulled-back
//! differences F′ − F″.

use lattice_core::{kernel_mod, rank_mod};

use crate::error::{Error, Result};

/// One congruence Σ cᵢ mᵢ ≡ rhs (mod 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

impl Relation {
    pub fn new(coeffs: Vec<i64>, rhs: i64) -> Self {
        Relation { coeffs, rhs }
    }

    /// From a 3-divisible identity Σ εᵢ(F′ᵢ − F″ᵢ) + κH ≡ 0: if the same
    /// signed set is 3-divisible after pulling back, with
    /// F′ᵢ − F″ᵢ ↦ (F′ᵢ − F″ᵢ) + mᵢH, then Σ εᵢmᵢ ≡ κ.
    pub fn from_identity(epsilon: Vec<i64>, h_offset: i64) -> Self {
        Relation { coeffs: epsilon, rhs: h_offset }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F3System {
    pub matrix: Vec<Vec<u64>>,
    pub rhs: Vec<u64>,
    pub rank: usize,
    pub consistent: bool,
    /// All solutions, lexicographic.
    pub solutions: Vec<Vec<u64>>,
}

/// Largest number of unknowns enumerated exhaustively.
pub const MAX_UNKNOWNS: usize = 12;

fn m3(x: i64) -> u64 {
    x.rem_euclid(3) as u64
}

/// Reduce the relations mod 3, enumerate all 3^k assignments, and check
/// the count against 3^(k − rank) (or 0 when inconsistent).
pub fn h_multiplicity_system(relations: &[Relation], unknowns: usize) -> Result<F3System> {
    if unknowns > MAX_UNKNOWNS {
        return Err(Error::Precondition(format!("{unknowns} unknowns exceed the enumeration limit {MAX_UNKNOWNS}")));
    }
    if let Some(r) = relations.iter().find(|r| r.coeffs.len() != unknowns) {
        return Err(Error::Precondition(format!("relation has {} coefficients, expected {unknowns}", r.coeffs.len())));
    }
    let matrix: Vec<Vec<u64>> = relations.iter().map(|r| r.coeffs.iter().map(|&c| m3(c)).collect()).collect();
    let rhs: Vec<u64> = relations.iter().map(|r| m3(r.rhs)).collect();
    let rank = rank_mod(&matrix, 3);
    let augmented: Vec<Vec<u64>> =
        matrix.iter().zip(&rhs).map(|(r, &b)| r.iter().copied().chain([b]).collect()).collect();
    let consistent = rank_mod(&augmented, 3) == rank;

    let mut solutions = Vec::new();
    let total = 3u64.pow(unknowns as u32);
    for code in 0..total {
        let mut x = vec![0u64; unknowns];
        let mut c = code;
        for xi in x.iter_mut().rev() {
            *xi = c % 3;
            c /= 3;
        }
        let ok = matrix.iter().zip(&rhs).all(|(row, &b)| row.iter().zip(&x).map(|(a, v)| a * v).sum::<u64>() % 3 == b);
        if ok {
            solutions.push(x);
        }
    }
    let expected = if consistent { 3usize.pow((unknowns - rank) as u32) } else { 0 };
    if solutions.len() != expected {
        return Err(Error::Precondition(format!(
            "enumeration found {} solutions, rank predicts {expected}",
            solutions.len()
        )));
    }
    // homogeneous part sanity: kernel dimension matches the rank
    debug_assert_eq!(kernel_mod(&matrix, unknowns, 3).len(), unknowns - rank);
    Ok(F3System { matrix, rhs, rank, consistent, solutions })
}
