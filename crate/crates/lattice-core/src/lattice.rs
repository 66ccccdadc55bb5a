//! Even integer lattices given by exact Gram matrices.
//!
//! Root lattices follow the negative definite convention; E-types use the
//! Bourbaki numbering (chain 1-3-4-5-6-7-8, node 2 attached to node 4).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, Result};
use crate::matrix::{self, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    degenerate: bool,
}

impl GramLattice {
    /// Nondegenerate even lattice.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        check_shape(&gram)?;
        let l = GramLattice { gram, label: None, degenerate: false };
        if !l.gram.is_empty() && l.determinant().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(l)
    }

    /// Even lattice whose Gram matrix may be singular (fiber lattices).
    pub fn new_degenerate_ok(gram: Vec<Vec<i64>>) -> Result<Self> {
        check_shape(&gram)?;
        let degenerate = !gram.is_empty() && matrix::determinant(&matrix::to_big(&gram)).is_zero();
        Ok(GramLattice { gram, label: None, degenerate })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_big(&self) -> IntMatrix {
        matrix::to_big(&self.gram)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0i64;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.gram[i][j] * yj;
            }
        }
        s
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        self.pair(x, x)
    }

    pub fn pair_big(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let mut s = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.gram[i][j] * yj;
            }
        }
        s
    }

    pub fn pair_rat(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut s = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * BigRational::from_integer(self.gram[i][j].into()) * yj;
            }
        }
        s
    }

    pub fn determinant(&self) -> BigInt {
        matrix::determinant(&self.gram_big())
    }

    /// Inertia (n_plus, n_minus) by symmetric elimination over ℚ.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let (p, m, z) = inertia(&self.gram);
        if z > 0 {
            return Err(LatticeError::Degenerate);
        }
        Ok((p, m))
    }

    pub fn is_negative_definite(&self) -> bool {
        matches!(self.signature(), Ok((0, _)))
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs() == BigInt::from(1)
    }

    /// Lattice spanned by integer vectors (rows) with the induced form.
    pub fn sublattice(&self, basis: &[Vec<i64>]) -> Result<GramLattice> {
        let g = basis.iter().map(|x| basis.iter().map(|y| self.pair(x, y)).collect()).collect();
        GramLattice::new(g)
    }
}

impl fmt::Display for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            writeln!(f, "{l} (rank {})", self.rank())?;
        }
        for row in &self.gram {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn check_shape(gram: &[Vec<i64>]) -> Result<()> {
    let n = gram.len();
    if gram.iter().any(|r| r.len() != n) {
        return Err(LatticeError::NotSquare);
    }
    for i in 0..n {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                return Err(LatticeError::NotSymmetric(i, j));
            }
        }
        if gram[i][i] % 2 != 0 {
            return Err(LatticeError::Odd(i));
        }
    }
    Ok(())
}

/// (positive, negative, zero) counts of a symmetric integer matrix.
pub fn inertia(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let mut a = matrix::to_rat(&matrix::to_big(gram));
    let n = a.len();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(p) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                sym_swap(&mut a, k, p);
            } else if let Some((i, j)) =
                (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
            {
                sym_swap(&mut a, k, i);
                let j = if j == k { i } else { j };
                // congruence mix: row_k += row_j, col_k += col_j
                let rj = a[j].clone();
                for (x, y) in a[k].iter_mut().zip(rj.iter()) {
                    *x += y;
                }
                for row in a.iter_mut() {
                    let y = row[j].clone();
                    row[k] += y;
                }
            } else {
                return (pos, neg, n - k);
            }
        }
        let piv = a[k][k].clone();
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            let rk = a[k].clone();
            for (x, y) in a[i].iter_mut().zip(rk.iter()) {
                *x -= &f * y;
            }
        }
        for i in k + 1..n {
            a[i][k] = BigRational::zero();
            a[k][i] = BigRational::zero();
        }
    }
    (pos, neg, 0)
}

fn sym_swap(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i != j {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// Gram matrix scaled entrywise by `n`.
pub fn scale(l: &GramLattice, n: i64) -> Result<GramLattice> {
    if n == 0 {
        return Err(LatticeError::ZeroScale);
    }
    let g = l.gram.iter().map(|r| r.iter().map(|x| x * n).collect()).collect();
    let mut out = if l.degenerate { GramLattice::new_degenerate_ok(g)? } else { GramLattice::new(g)? };
    out.label = l.label.as_ref().map(|s| format!("{s}({n})"));
    Ok(out)
}

/// Block-diagonal orthogonal sum.
pub fn direct_sum(a: &GramLattice, b: &GramLattice) -> GramLattice {
    let n = a.rank() + b.rank();
    let mut g = vec![vec![0i64; n]; n];
    for (i, row) in a.gram.iter().enumerate() {
        g[i][..a.rank()].copy_from_slice(row);
    }
    for (i, row) in b.gram.iter().enumerate() {
        g[a.rank() + i][a.rank()..].copy_from_slice(row);
    }
    let label = match (&a.label, &b.label) {
        (Some(x), Some(y)) => Some(format!("{x}+{y}")),
        (Some(x), None) if b.rank() == 0 => Some(x.clone()),
        (None, Some(y)) if a.rank() == 0 => Some(y.clone()),
        _ => None,
    };
    GramLattice { gram: g, label, degenerate: a.degenerate || b.degenerate }
}

pub fn direct_sum_all<'a>(parts: impl IntoIterator<Item = &'a GramLattice>) -> GramLattice {
    parts.into_iter().fold(GramLattice::zero(), |acc, l| direct_sum(&acc, l))
}

impl GramLattice {
    /// The rank-0 lattice.
    pub fn zero() -> Self {
        GramLattice { gram: Vec::new(), label: None, degenerate: false }
    }
}

fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        g[i][i] = -2;
        if i + 1 < n {
            g[i][i + 1] = 1;
            g[i + 1][i] = 1;
        }
    }
    g
}

fn from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(a, b) in edges {
        g[a - 1][b - 1] = 1;
        g[b - 1][a - 1] = 1;
    }
    g
}

fn cartan_d(n: usize) -> Vec<Vec<i64>> {
    // chain 1-2-...-(n-1), node n attached to node n-2
    let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 2, n));
    from_edges(n, &edges)
}

fn cartan_e(n: usize) -> Vec<Vec<i64>> {
    let mut edges = vec![(1, 3), (2, 4)];
    edges.extend((3..n).map(|i| (i, i + 1)));
    from_edges(n, &edges)
}

/// Standard lattice from a symbol: `A_n`, `D_n`, `E6`-`E8`, `U`, with an
/// optional scaling `X(m)`, a multiplicity `kX` or `X^k`, and `+` sums,
/// e.g. `U(2)+A2^2+E6+E8`.
pub fn named(symbol: &str) -> Result<GramLattice> {
    let parts: Vec<&str> = symbol.split('+').map(str::trim).collect();
    let mut out = GramLattice::zero();
    for p in parts {
        let l = named_term(p).ok_or_else(|| LatticeError::UnknownSymbol(p.to_string()))?;
        out = direct_sum(&out, &l);
    }
    out.label = Some(symbol.replace(' ', ""));
    Ok(out)
}

fn named_term(term: &str) -> Option<GramLattice> {
    let term = term.trim();
    if term.is_empty() {
        return None;
    }
    // leading multiplicity `4A2`
    let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
    if !digits.is_empty() {
        let k: usize = digits.parse().ok()?;
        let base = named_term(&term[digits.len()..])?;
        return Some(power(&base, k));
    }
    if let Some((base, k)) = term.split_once('^') {
        let k: usize = k.parse().ok()?;
        return Some(power(&named_term(base)?, k));
    }
    if let Some(stripped) = term.strip_suffix(')') {
        let (base, m) = stripped.split_once('(')?;
        let m: i64 = m.parse().ok()?;
        return scale(&named_term(base)?, m).ok();
    }
    if let Some(stripped) = term.strip_prefix('<').and_then(|s| s.strip_suffix('>')) {
        let n: i64 = stripped.parse().ok()?;
        return GramLattice::new(vec![vec![n]]).ok();
    }
    let (kind, rest) = term.split_at(1);
    let rest = rest.trim_start_matches('_');
    let g = match kind {
        "U" if rest.is_empty() => vec![vec![0, 1], vec![1, 0]],
        "A" => cartan_a(rest.parse().ok().filter(|&n: &usize| n >= 1)?),
        "D" => cartan_d(rest.parse().ok().filter(|&n: &usize| n >= 4)?),
        "E" => cartan_e(rest.parse().ok().filter(|&n: &usize| (6..=8).contains(&n))?),
        _ => return None,
    };
    Some(GramLattice { gram: g, label: Some(term.to_string()), degenerate: false })
}

fn power(base: &GramLattice, k: usize) -> GramLattice {
    let mut out = GramLattice::zero();
    for _ in 0..k {
        out = direct_sum(&out, base);
    }
    out
}

/// Highest root of E8 in simple-root coordinates (Bourbaki).
pub const E8_HIGHEST_ROOT: [i64; 8] = [2, 3, 4, 6, 5, 4, 3, 2];
/// Highest root of E6 in simple-root coordinates (Bourbaki).
pub const E6_HIGHEST_ROOT: [i64; 6] = [1, 2, 2, 3, 2, 1];
