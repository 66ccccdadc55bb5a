//! Dense exact matrices over ℤ and ℚ: Bareiss determinants, Smith normal
//! form with unimodular transforms, rational inverses and kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{LatticeError, Result};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn to_rat(m: &IntMatrix) -> RatMatrix {
    m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
}

pub fn big_to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| LatticeError::Overflow(x.to_string()))
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j])).collect())
        .collect()
}

pub fn rat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])).collect())
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Smith normal form `u · m · v = d` with `u`, `v` unimodular; `v_inv` is
/// the inverse of `v`. Diagonal entries are nonnegative with d_i | d_{i+1}
/// (zeros last).
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.len().min(self.d.first().map_or(0, |r| r.len()))).map(|i| self.d[i][i].clone()).collect()
    }
}

/// Extended gcd: (g, x, y) with x·a + y·b = g ≥ 0.
fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row Hermite normal form `t · m = h` with entries above each pivot
/// reduced into [0, pivot). Returns (h, t, pivot columns).
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    let mut t = identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            if a[r][c].is_zero() {
                a.swap(r, i);
                t.swap(r, i);
                continue;
            }
            let (g, x, y) = egcd(&a[r][c], &a[i][c]);
            let p = &a[r][c] / &g;
            let q = &a[i][c] / &g;
            combine_rows(&mut a, r, i, &x, &y, &p, &q);
            combine_rows(&mut t, r, i, &x, &y, &p, &q);
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            negate_row(&mut a, r);
            negate_row(&mut t, r);
        }
        for i in 0..r {
            let k = a[i][c].div_floor(&a[r][c]);
            if !k.is_zero() {
                row_axpy(&mut a, i, r, &k);
                row_axpy(&mut t, i, r, &k);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, t, pivots)
}

/// (row_r, row_i) ← (x·row_r + y·row_i, −q·row_r + p·row_i); determinant
/// x·p + y·q = 1.
fn combine_rows(a: &mut IntMatrix, r: usize, i: usize, x: &BigInt, y: &BigInt, p: &BigInt, q: &BigInt) {
    let (rr, ri) = (a[r].clone(), a[i].clone());
    for k in 0..rr.len() {
        a[r][k] = x * &rr[k] + y * &ri[k];
        a[i][k] = p * &ri[k] - q * &rr[k];
    }
}

fn negate_row(a: &mut IntMatrix, r: usize) {
    for x in a[r].iter_mut() {
        *x = -x.clone();
    }
}

fn is_diagonal(a: &IntMatrix) -> bool {
    a.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    // alternate row and column Hermite forms until diagonal
    loop {
        let (h, t, _) = hermite_normal_form(&a);
        a = h;
        u = mat_mul(&t, &u);
        if is_diagonal(&a) {
            break;
        }
        let (h, t, _) = hermite_normal_form(&transpose(&a));
        a = transpose(&h);
        v = mat_mul(&v, &transpose(&t));
        if is_diagonal(&a) {
            break;
        }
    }
    let n = rows.min(cols);
    // zeros last
    for i in 0..n {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                u.swap(i, j);
                swap_cols(&mut a, i, j);
                swap_cols(&mut v, i, j);
            }
        }
    }
    let rank = (0..n).take_while(|&i| !a[i][i].is_zero()).count();
    // divisibility chain via 2×2 gcd/lcm moves
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..rank {
            for j in i + 1..rank {
                let (di, dj) = (a[i][i].clone(), a[j][j].clone());
                if (&dj % &di).is_zero() {
                    continue;
                }
                let (g, x, y) = egcd(&di, &dj);
                let (ag, bg) = (&di / &g, &dj / &g);
                // u2 = [[x, y], [−b/g, a/g]], v2 = [[1, −y·b/g], [1, x·a/g]]
                let (ui, uj) = (u[i].clone(), u[j].clone());
                for k in 0..rows {
                    u[i][k] = &x * &ui[k] + &y * &uj[k];
                    u[j][k] = &ag * &uj[k] - &bg * &ui[k];
                }
                let c1 = -(&y * &bg);
                let c2 = &x * &ag;
                for row in v.iter_mut() {
                    let (vi, vj) = (row[i].clone(), row[j].clone());
                    row[i] = &vi + &vj;
                    row[j] = &c1 * &vi + &c2 * &vj;
                }
                a[i][i] = g.clone();
                a[j][j] = &di * &dj / &g;
                changed = true;
            }
        }
    }
    let v_inv = inverse_unimodular(&v);
    Snf { d: a, u, v, v_inv, rank }
}

/// Exact inverse of a unimodular integer matrix.
pub fn inverse_unimodular(v: &IntMatrix) -> IntMatrix {
    let inv = inverse_q(&to_rat(v)).expect("unimodular matrix is invertible");
    inv.into_iter().map(|r| r.into_iter().map(|x| x.to_integer()).collect()).collect()
}

fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// row_i -= q · row_t
fn row_axpy(a: &mut IntMatrix, i: usize, t: usize, q: &BigInt) {
    let src = a[t].clone();
    for (x, s) in a[i].iter_mut().zip(src.iter()) {
        *x -= q * s;
    }
}

/// Reduced row echelon form over ℚ; returns (rref, pivot columns).
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let src = a[r].clone();
                for (x, s) in a[i].iter_mut().zip(src.iter()) {
                    *x -= &f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank_q(m: &RatMatrix) -> usize {
    rref(m).1.len()
}

pub fn inverse_q(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    let (red, piv) = rref(&aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `x · m = v` for a row vector x (m has rows as generators).
/// Returns `None` if v is not in the rational row space.
pub fn solve_row(m: &RatMatrix, v: &[BigRational]) -> Option<Vec<BigRational>> {
    // transpose system: mᵀ xᵀ = vᵀ
    let mt = transpose(m);
    let k = m.len();
    let aug: RatMatrix = mt
        .iter()
        .zip(v.iter())
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let (red, piv) = rref(&aug);
    if piv.last() == Some(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (row, &c) in piv.iter().enumerate() {
        x[c] = red[row][k].clone();
    }
    Some(x)
}

/// Integer kernel basis of `m` (right kernel, as vectors), saturated and
/// size-reduced.
pub fn integer_kernel(m: &IntMatrix, cols: usize) -> Vec<Vec<BigInt>> {
    if m.is_empty() {
        return identity(cols);
    }
    // left kernel of mᵀ: rows of the transform matching zero rows of the HNF
    let (h, t, piv) = hermite_normal_form(&transpose(m));
    let ker: IntMatrix = (piv.len()..h.len()).map(|i| t[i].clone()).collect();
    row_span_basis(&ker)
}

/// Hermite basis (rows) of the ℤ-span of integer row vectors.
pub fn row_span_basis(rows: &IntMatrix) -> IntMatrix {
    if rows.is_empty() {
        return Vec::new();
    }
    let (h, _, piv) = hermite_normal_form(rows);
    h.into_iter().take(piv.len()).collect()
}

pub fn lcm_of_denominators(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}
