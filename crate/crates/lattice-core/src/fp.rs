//! Linear algebra over 𝔽_p and p-divisibility kernels of lattice vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{LatticeError, Result};
use crate::matrix::{self, RatMatrix};

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form over 𝔽_p; returns (rows, pivot columns) with
/// zero rows dropped.
pub fn rref_mod(m: &[Vec<u64>], p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let src = a[r].clone();
                for (x, s) in a[i].iter_mut().zip(src) {
                    *x = (*x + p * p - f * s % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank_mod(m: &[Vec<u64>], p: u64) -> usize {
    rref_mod(m, p).1.len()
}

/// Canonical (reduced echelon) basis of the right null space over 𝔽_p
/// of a matrix with `cols` columns.
pub fn kernel_mod(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let (red, piv) = rref_mod(m, p);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    let basis: Vec<Vec<u64>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in red.iter().zip(&piv) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect();
    rref_mod(&basis, p).0
}

/// Coefficient tuples λ (mod p) with Σ λ_i v_i ∈ p·L, where L is the
/// lattice with the given basis rows (rational coordinates in the same
/// space as the vectors). `None` basis means the standard lattice ℤⁿ.
pub fn divisibility_kernel(
    vectors: &[Vec<BigRational>],
    lattice_basis: Option<&RatMatrix>,
    p: u64,
) -> Result<Vec<Vec<u64>>> {
    let coords: Vec<Vec<BigInt>> = match lattice_basis {
        None => vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| {
                        x.is_integer()
                            .then(|| x.to_integer())
                            .ok_or_else(|| LatticeError::Dimension("vector not integral".into()))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?,
        Some(b) => vectors
            .iter()
            .map(|v| {
                let x = matrix::solve_row(b, v)
                    .ok_or_else(|| LatticeError::Dimension("vector outside lattice span".into()))?;
                x.into_iter()
                    .map(|c| {
                        c.is_integer()
                            .then(|| c.to_integer())
                            .ok_or_else(|| LatticeError::Dimension("vector not in lattice".into()))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?,
    };
    let k = coords.len();
    let n = coords.first().map_or(0, |c| c.len());
    let pb = BigInt::from(p);
    // columns are the vectors: row j = coordinate j of each vector
    let m: Vec<Vec<u64>> =
        (0..n).map(|j| (0..k).map(|i| coords[i][j].mod_floor(&pb).to_u64().unwrap_or(0)).collect()).collect();
    Ok(kernel_mod(&m, k, p))
}

/// Integer-vector convenience wrapper over the standard lattice ℤⁿ.
pub fn divisibility_kernel_int(vectors: &[Vec<i64>], p: u64) -> Vec<Vec<u64>> {
    let v: Vec<Vec<BigRational>> =
        vectors.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    divisibility_kernel(&v, None, p).unwrap_or_default()
}
