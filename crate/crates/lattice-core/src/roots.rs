//! Root enumeration (Fincke–Pohst over ℚ) and orthogonal A₂ searches.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{LatticeError, Result};
use crate::lattice::GramLattice;

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lattice: GramLattice,
    /// All vectors of square −2, sorted lexicographically.
    pub roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// All vectors x of a negative definite lattice with x² = −`norm`.
pub fn vectors_of_norm(l: &GramLattice, norm: i64) -> Result<Vec<Vec<i64>>> {
    if l.rank() > 0 && !l.is_negative_definite() {
        return Err(LatticeError::NotNegativeDefinite);
    }
    let n = l.rank();
    // q(x) = Σ d_i (x_i + Σ_{j>i} μ_ij x_j)² for the positive form −G
    let mut a: Vec<Vec<BigRational>> =
        l.gram().iter().map(|r| r.iter().map(|&x| BigRational::from_integer((-x).into())).collect()).collect();
    let mut d = vec![BigRational::zero(); n];
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        d[i] = a[i][i].clone();
        for j in i + 1..n {
            mu[i][j] = &a[i][j] / &d[i];
        }
        for j in i + 1..n {
            for k in i + 1..n {
                let t = &mu[i][j] * &mu[i][k] * &d[i];
                a[j][k] -= t;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    let bound = BigRational::from_integer(norm.into());
    if n > 0 {
        enumerate(n - 1, &d, &mu, &mut x, bound, &mut out);
    }
    out.sort();
    Ok(out)
}

fn enumerate(
    i: usize,
    d: &[BigRational],
    mu: &[Vec<BigRational>],
    x: &mut Vec<i64>,
    remaining: BigRational,
    out: &mut Vec<Vec<i64>>,
) {
    let n = x.len();
    let c: BigRational =
        (i + 1..n).fold(BigRational::zero(), |acc, j| acc + &mu[i][j] * BigRational::from_integer(x[j].into()));
    let centre = (-c.clone()).round().to_integer().to_i64().unwrap_or(0);
    let visit = |xi: i64, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>| -> bool {
        let t = BigRational::from_integer(xi.into()) + &c;
        let used = &d[i] * &t * &t;
        if used > remaining {
            return false;
        }
        x[i] = xi;
        let rest = &remaining - &used;
        if i == 0 {
            if rest.is_zero() {
                out.push(x.clone());
            }
        } else {
            enumerate(i - 1, d, mu, x, rest, out);
        }
        true
    };
    let mut k = centre;
    while visit(k, x, out) {
        k += 1;
    }
    let mut k = centre - 1;
    while visit(k, x, out) {
        k -= 1;
    }
    x[i] = 0;
}

/// All roots (vectors of square −2).
pub fn roots_of(l: &GramLattice) -> Result<RootSystem> {
    let roots = vectors_of_norm(l, 2)?;
    Ok(RootSystem { lattice: l.clone(), roots })
}

/// A₂ sub-root-system {±r, ±s, ±(r+s)} given by a generating pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Pair {
    pub r: Vec<i64>,
    pub s: Vec<i64>,
}

/// Search for `k` pairwise orthogonal A₂ sublattices spanned by roots;
/// returns a witness (lowest-index-first) or `None`.
pub fn admits_orthogonal_a2s(rs: &RootSystem, k: usize) -> Option<Vec<A2Pair>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let l = &rs.lattice;
    let roots = &rs.roots;
    let index: std::collections::HashMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
    // canonical A2 systems as sorted index sets
    let mut systems: Vec<(Vec<usize>, A2Pair)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, r) in roots.iter().enumerate() {
        for s in roots.iter().skip(i + 1) {
            if l.pair(r, s) != 1 {
                continue;
            }
            let sum: Vec<i64> = r.iter().zip(s).map(|(a, b)| a + b).collect();
            let mut members: Vec<usize> = [r.clone(), s.clone(), sum]
                .iter()
                .flat_map(|v| [v.clone(), v.iter().map(|x| -x).collect::<Vec<i64>>()])
                .filter_map(|v| index.get(&v).copied())
                .collect();
            members.sort_unstable();
            if members.len() == 6 && seen.insert(members.clone()) {
                systems.push((members, A2Pair { r: r.clone(), s: s.clone() }));
            }
        }
    }
    let m = systems.len();
    let orth: Vec<Vec<bool>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let (pa, pb) = (&systems[a].1, &systems[b].1);
                    a != b
                        && l.pair(&pa.r, &pb.r) == 0
                        && l.pair(&pa.r, &pb.s) == 0
                        && l.pair(&pa.s, &pb.r) == 0
                        && l.pair(&pa.s, &pb.s) == 0
                })
                .collect()
        })
        .collect();
    let mut chosen = Vec::new();
    if clique(&orth, k, 0, &mut chosen) {
        return Some(chosen.iter().map(|&c| systems[c].1.clone()).collect());
    }
    None
}

fn clique(orth: &[Vec<bool>], k: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == k {
        return true;
    }
    for c in start..orth.len() {
        if chosen.iter().all(|&p| orth[p][c]) {
            chosen.push(c);
            if clique(orth, k, c + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Classical root count of an irreducible type, for cross-checks.
pub fn classical_root_count(kind: char, n: usize) -> Option<usize> {
    match (kind, n) {
        ('A', n) if n >= 1 => Some(n * (n + 1)),
        ('D', n) if n >= 4 => Some(2 * n * (n - 1)),
        ('E', 6) => Some(72),
        ('E', 7) => Some(126),
        ('E', 8) => Some(240),
        _ => None,
    }
}
