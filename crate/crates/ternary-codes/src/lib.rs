//! Ternary linear codes over 𝔽₃.
//!
//! Codes are stored by their canonical reduced row-echelon basis. Exhaustive
//! searches enumerate subspaces by echelon form and test codewords in a
//! bit-sliced representation (one mask for coordinates equal to 1, one for
//! coordinates equal to 2).

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, CodeError>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TernaryCode {
    pub length: usize,
    /// Reduced row-echelon basis; entries in {0, 1, 2}.
    pub basis: Vec<Vec<u8>>,
}

impl TernaryCode {
    /// Code spanned by arbitrary generator rows (entries reduced mod 3).
    pub fn from_generators(length: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != length) {
            return Err(CodeError::Invalid("generator length mismatch".into()));
        }
        let m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(3) as u64).collect()).collect();
        let (red, _) = lattice_core::fp::rref_mod(&m, 3);
        Ok(TernaryCode { length, basis: red.into_iter().map(|r| r.into_iter().map(|x| x as u8).collect()).collect() })
    }

    pub fn zero(length: usize) -> Self {
        TernaryCode { length, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All 3^k codewords (including zero), in coefficient-lexicographic order.
    pub fn codewords(&self) -> Vec<Vec<u8>> {
        let k = self.dim();
        let total = 3usize.pow(k as u32);
        (0..total)
            .map(|mut idx| {
                let mut w = vec![0u8; self.length];
                for row in &self.basis {
                    let c = (idx % 3) as u8;
                    idx /= 3;
                    for (x, r) in w.iter_mut().zip(row) {
                        *x = (*x + c * r) % 3;
                    }
                }
                w
            })
            .collect()
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        let mut rows: Vec<Vec<i64>> = self.basis.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        rows.push(w.iter().map(|&x| x as i64).collect());
        TernaryCode::from_generators(self.length, &rows).map(|c| c.dim() == self.dim()).unwrap_or(false)
    }
}

pub fn weight(w: &[u8]) -> usize {
    w.iter().filter(|&&x| x % 3 != 0).count()
}

/// Null space {c : M·cᵀ = 0} of a matrix over 𝔽₃ with `n` columns.
pub fn kernel_f3(m: &[Vec<u8>], n: usize) -> TernaryCode {
    let mm: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| (x % 3) as u64).collect()).collect();
    let ker = lattice_core::fp::kernel_mod(&mm, n, 3);
    TernaryCode { length: n, basis: ker.into_iter().map(|r| r.into_iter().map(|x| x as u8).collect()).collect() }
}

/// Parse matrix rows of digits {0,1,2} (whitespace or commas allowed).
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<u8>>> {
    let rows: Vec<Vec<u8>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    '2' => Ok(2),
                    _ => Err(CodeError::Invalid(format!("unexpected character `{c}`"))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if let Some(first) = rows.first() {
        if rows.iter().any(|r| r.len() != first.len()) {
            return Err(CodeError::Invalid("ragged matrix".into()));
        }
    }
    Ok(rows)
}

pub fn format_rows(rows: &[Vec<u8>]) -> String {
    rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<String>()).collect::<Vec<_>>().join("\n")
}

/// Sorted multiset of weights of the nonzero codewords.
pub fn weight_distribution(c: &TernaryCode, max_words: usize) -> Result<Vec<usize>> {
    let total = 3usize.checked_pow(c.dim() as u32).unwrap_or(usize::MAX);
    if total > max_words {
        return Err(CodeError::BoundExceeded(format!("3^{} codewords > {max_words}", c.dim())));
    }
    let mut w: Vec<usize> = c.codewords().iter().map(|x| weight(x)).filter(|&x| x > 0).collect();
    w.sort_unstable();
    Ok(w)
}

/// Number of one-dimensional subspaces, (3^k − 1)/2.
pub fn lines_count(c: &TernaryCode) -> usize {
    (3usize.pow(c.dim() as u32) - 1) / 2
}

/// Largest k with Σ_{i<k} ⌈d/3^i⌉ ≤ n.
pub fn griesmer_max_dim(n: usize, d: usize) -> usize {
    assert!(d >= 1 && d <= n, "griesmer_max_dim needs 1 ≤ d ≤ n");
    let mut k = 0;
    let mut total = 0;
    let mut pow = 1usize;
    loop {
        let term = d.div_ceil(pow);
        if total + term > n {
            return k;
        }
        total += term;
        k += 1;
        pow = pow.saturating_mul(3);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_length: usize,
    pub max_dim: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_length: 10, max_dim: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// Every k-dimensional subspace was examined; none qualifies.
    NoneExists {
        subspaces_examined: u64,
    },
    Witness {
        code: TernaryCode,
    },
}

/// Bit-sliced vector over 𝔽₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Packed {
    ones: u32,
    twos: u32,
}

impl Packed {
    fn from_digits(w: &[u8]) -> Self {
        let mut p = Packed { ones: 0, twos: 0 };
        for (i, &x) in w.iter().enumerate() {
            match x % 3 {
                1 => p.ones |= 1 << i,
                2 => p.twos |= 1 << i,
                _ => {}
            }
        }
        p
    }

    fn add(self, y: Packed) -> Packed {
        let (xa, xb, ya, yb) = (self.ones, self.twos, y.ones, y.twos);
        Packed {
            ones: (xa & !ya & !yb) | (ya & !xa & !xb) | (xb & yb),
            twos: (xb & !ya & !yb) | (yb & !xa & !xb) | (xa & ya),
        }
    }

    fn double(self) -> Packed {
        Packed { ones: self.twos, twos: self.ones }
    }

    fn weight(self) -> u32 {
        (self.ones | self.twos).count_ones()
    }
}

/// Projective representatives of the nonzero words of span(rows): the
/// first nonzero coefficient is 1.
fn all_weights_in(rows: &[Packed], allowed: u64) -> bool {
    let k = rows.len();
    let total = 3usize.pow(k as u32);
    for idx in 1..total {
        // leading (most significant) nonzero digit must be 1
        let mut digits = [0u8; 8];
        let mut x = idx;
        for d in digits.iter_mut().take(k) {
            *d = (x % 3) as u8;
            x /= 3;
        }
        let lead = (0..k).rev().find(|&i| digits[i] != 0).map(|i| digits[i]);
        if lead != Some(1) {
            continue;
        }
        let mut w = Packed { ones: 0, twos: 0 };
        for (i, r) in rows.iter().enumerate() {
            match digits[i] {
                1 => w = w.add(*r),
                2 => w = w.add(r.double()),
                _ => {}
            }
        }
        if allowed & (1 << w.weight()) == 0 {
            return false;
        }
    }
    true
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Free positions of a reduced echelon form with the given pivots.
fn free_positions(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                out.push((i, c));
            }
        }
    }
    out
}

/// Number of k-dimensional subspaces of 𝔽₃ⁿ (Gaussian binomial).
pub fn subspace_count(n: usize, k: usize) -> u64 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= 3u128.pow((n - i) as u32) - 1;
        den *= 3u128.pow((i + 1) as u32) - 1;
    }
    (num / den) as u64
}

/// Decide whether some k-dimensional code of length n has all nonzero
/// weights inside `weights`, by enumerating every reduced echelon form.
/// A witness is the first qualifying code in canonical order.
pub fn exhaustive_no_code(n: usize, k: usize, weights: &BTreeSet<usize>, bounds: SearchBounds) -> Result<Certificate> {
    if n > bounds.max_length || k > bounds.max_dim || n > 20 || k > 8 {
        return Err(CodeError::BoundExceeded(format!(
            "(n={n}, k={k}) outside enumeration bounds (n ≤ {}, k ≤ {})",
            bounds.max_length, bounds.max_dim
        )));
    }
    if k == 0 || k > n {
        return Err(CodeError::Invalid(format!("dimension {k} must satisfy 1 ≤ k ≤ {n}")));
    }
    let allowed: u64 = weights.iter().filter(|&&w| w <= n).fold(0, |a, &w| a | (1 << w));
    let patterns = combinations(n, k);
    // split each pivot pattern by the values of its first two free slots
    let jobs: Vec<(usize, usize)> = patterns
        .iter()
        .enumerate()
        .flat_map(|(pi, piv)| {
            let f = free_positions(n, piv).len();
            let heads = 3usize.pow(f.min(2) as u32);
            (0..heads).map(move |h| (pi, h))
        })
        .collect();
    let results: Vec<(u64, Option<Vec<Vec<u8>>>)> =
        jobs.par_iter().map(|&(pi, head)| search_job(n, &patterns[pi], head, allowed)).collect();
    if let Some(code) = results.iter().find_map(|(_, w)| w.clone()) {
        let rows: Vec<Vec<i64>> = code.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        return Ok(Certificate::Witness { code: TernaryCode::from_generators(n, &rows)? });
    }
    let examined = results.iter().map(|(c, _)| c).sum();
    Ok(Certificate::NoneExists { subspaces_examined: examined })
}

fn search_job(n: usize, pivots: &[usize], head: usize, allowed: u64) -> (u64, Option<Vec<Vec<u8>>>) {
    let free = free_positions(n, pivots);
    let fixed = free.len().min(2);
    let rest = free.len() - fixed;
    let total = 3u64.pow(rest as u32);
    let k = pivots.len();
    let mut rows = vec![vec![0u8; n]; k];
    for (i, &p) in pivots.iter().enumerate() {
        rows[i][p] = 1;
    }
    let mut h = head;
    for &(i, c) in free.iter().take(fixed) {
        rows[i][c] = (h % 3) as u8;
        h /= 3;
    }
    let mut count = 0;
    for mut idx in 0..total {
        for &(i, c) in free.iter().skip(fixed) {
            rows[i][c] = (idx % 3) as u8;
            idx /= 3;
        }
        count += 1;
        let packed: Vec<Packed> = rows.iter().map(|r| Packed::from_digits(r)).collect();
        if all_weights_in(&packed, allowed) {
            return (count, Some(rows.clone()));
        }
    }
    (count, None)
}
