//! Discriminant groups L∨/L and discriminant quadratic forms.
//!
//! With `U · G · V = D` (Smith form of the Gram matrix G), the dual lattice
//! L∨ = G⁻¹ℤⁿ maps onto ⊕ ℤ/d_i via x ↦ (U·G·x)_i mod d_i, and the columns
//! of G⁻¹U⁻¹ for d_i > 1 lift the standard generators.
//!
//! Form values are stored as integers over the group exponent e:
//! q-numerators modulo 2e and b-numerators modulo e.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, Result};
use crate::lattice::GramLattice;
use crate::matrix;

/// Default bound on group orders for explicit searches.
pub const DEFAULT_SEARCH_BOUND: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<u64>,
    /// Rational lifts (coordinates in the lattice basis) of the generators.
    pub generator_lifts: Vec<Vec<BigRational>>,
    /// Matrix `U·G`: coordinates of a dual vector x are (U·G·x)_i mod d_i.
    coord_map: Vec<Vec<BigInt>>,
    /// Row offset in `coord_map` of the first nontrivial factor.
    offset: usize,
}

pub type Element = Vec<u64>;

impl FiniteAbelianGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.iter().fold(1, |a, &d| a.lcm(&d))
    }

    pub fn len(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn zero(&self) -> Element {
        vec![0; self.len()]
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Element {
        x.iter().zip(y).zip(&self.invariant_factors).map(|((a, b), d)| (a + b) % d).collect()
    }

    pub fn neg(&self, x: &[u64]) -> Element {
        x.iter().zip(&self.invariant_factors).map(|(a, d)| (d - a) % d).collect()
    }

    pub fn mul(&self, n: u64, x: &[u64]) -> Element {
        x.iter().zip(&self.invariant_factors).map(|(a, d)| (a * (n % d)) % d).collect()
    }

    pub fn order_of(&self, x: &[u64]) -> u64 {
        x.iter().zip(&self.invariant_factors).map(|(&a, &d)| d / a.gcd(&d)).fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn index_of(&self, x: &[u64]) -> usize {
        let mut idx = 0usize;
        for (a, d) in x.iter().zip(&self.invariant_factors) {
            idx = idx * (*d as usize) + *a as usize;
        }
        idx
    }

    pub fn element_at(&self, mut idx: usize) -> Element {
        let mut out = vec![0; self.len()];
        for (slot, d) in out.iter_mut().zip(&self.invariant_factors).rev() {
            *slot = (idx % *d as usize) as u64;
            idx /= *d as usize;
        }
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order() as usize).map(|i| self.element_at(i))
    }

    /// Rational lift of an element.
    pub fn lift(&self, x: &[u64]) -> Vec<BigRational> {
        let n = self.generator_lifts.first().map_or(0, |v| v.len());
        let mut out = vec![BigRational::zero(); n];
        for (c, g) in x.iter().zip(&self.generator_lifts) {
            if *c == 0 {
                continue;
            }
            let c = BigRational::from_integer(BigInt::from(*c));
            for (o, gi) in out.iter_mut().zip(g) {
                *o += &c * gi;
            }
        }
        out
    }

    /// Class of a dual vector; `None` if it is not in L∨.
    pub fn class_of(&self, x: &[BigRational]) -> Option<Element> {
        let mut out = Vec::with_capacity(self.len());
        for (row, d) in self.coord_map[self.offset..].iter().zip(&self.invariant_factors) {
            let v: BigRational = row
                .iter()
                .zip(x)
                .fold(BigRational::zero(), |acc, (a, b)| acc + BigRational::from_integer(a.clone()) * b);
            if !v.is_integer() {
                return None;
            }
            let r = v.to_integer().mod_floor(&BigInt::from(*d));
            out.push(r.to_u64()?);
        }
        // rows before the offset must give integers too
        for row in &self.coord_map[..self.offset] {
            let v: BigRational = row
                .iter()
                .zip(x)
                .fold(BigRational::zero(), |acc, (a, b)| acc + BigRational::from_integer(a.clone()) * b);
            if !v.is_integer() {
                return None;
            }
        }
        Some(out)
    }

    /// Number of invariant factors divisible by `p`.
    pub fn p_length(&self, p: u64) -> usize {
        self.invariant_factors.iter().filter(|&&d| d % p == 0).count()
    }

    /// Elementary divisors grouped per prime: prime → sorted prime powers.
    pub fn primary_decomposition(&self) -> Vec<(u64, Vec<u64>)> {
        let mut primes = BTreeSet::new();
        for &d in &self.invariant_factors {
            primes.extend(prime_factors(d));
        }
        primes
            .into_iter()
            .map(|p| {
                let mut pw: Vec<u64> = self
                    .invariant_factors
                    .iter()
                    .filter_map(|&d| {
                        let mut q = 1;
                        let mut d = d;
                        while d % p == 0 {
                            d /= p;
                            q *= p;
                        }
                        (q > 1).then_some(q)
                    })
                    .collect();
                pw.sort_unstable();
                (p, pw)
            })
            .collect()
    }
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// p-length of a finite abelian group (free-standing form of the method).
pub fn p_length(g: &FiniteAbelianGroup, p: u64) -> usize {
    g.p_length(p)
}

/// Discriminant group of a nondegenerate lattice.
pub fn discriminant_group(l: &GramLattice) -> Result<FiniteAbelianGroup> {
    if l.rank() > 0 && l.determinant().is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let g = l.gram_big();
    let snf = matrix::smith_normal_form(&g);
    let n = l.rank();
    let diag = snf.diagonal();
    let offset = diag.iter().take_while(|d| d.is_one()).count();
    let invariant_factors: Vec<u64> = diag[offset..]
        .iter()
        .map(|d| d.to_u64().ok_or_else(|| LatticeError::Overflow(d.to_string())))
        .collect::<Result<_>>()?;
    let g_inv = matrix::inverse_q(&matrix::to_rat(&g)).ok_or(LatticeError::Degenerate)?;
    // U⁻¹ over ℚ
    let u_inv = matrix::inverse_q(&matrix::to_rat(&snf.u)).ok_or(LatticeError::Degenerate)?;
    let lifts_mat = matrix::rat_mul(&g_inv, &u_inv);
    let generator_lifts = (offset..n).map(|j| lifts_mat.iter().map(|r| r[j].clone()).collect()).collect();
    let coord_map = matrix::mat_mul(&snf.u, &g);
    Ok(FiniteAbelianGroup { invariant_factors, generator_lifts, coord_map, offset })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    pub group: FiniteAbelianGroup,
    /// Group exponent e; values live in (1/e)ℤ.
    pub exponent: u64,
    /// q(g_i)·e modulo 2e.
    pub q_num: Vec<u64>,
    /// b(g_i, g_j)·e modulo e.
    pub b_num: Vec<Vec<u64>>,
}

/// Canonical serialization: invariant factors plus q-values as "a/b".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub invariant_factors: Vec<u64>,
    pub q_values: Vec<String>,
    pub b_values: Vec<Vec<String>>,
}

fn rat_mod(x: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(BigInt::from(m));
    let k = (x / &m).floor();
    x - k * m
}

impl FiniteQuadraticForm {
    /// Build a form from explicit generator data (values as rationals).
    pub fn from_values(invariant_factors: Vec<u64>, q: &[BigRational], b: &[Vec<BigRational>]) -> Result<Self> {
        let exponent = invariant_factors.iter().fold(1u64, |a, &d| a.lcm(&d));
        let e = BigRational::from_integer(BigInt::from(exponent));
        let to_num = |x: &BigRational, m: i64| -> Result<u64> {
            let v = rat_mod(x, m) * &e;
            if !v.is_integer() {
                return Err(LatticeError::BadGlue(format!("value {x} not in (1/{exponent})Z")));
            }
            v.to_integer().to_u64().ok_or_else(|| LatticeError::Overflow(v.to_string()))
        };
        let q_num = q.iter().map(|x| to_num(x, 2)).collect::<Result<_>>()?;
        let b_num = b.iter().map(|r| r.iter().map(|x| to_num(x, 1)).collect::<Result<_>>()).collect::<Result<_>>()?;
        let k = invariant_factors.len();
        let group = FiniteAbelianGroup {
            invariant_factors,
            generator_lifts: vec![Vec::new(); k],
            coord_map: Vec::new(),
            offset: 0,
        };
        Ok(FiniteQuadraticForm { group, exponent, q_num, b_num })
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// q(x)·e modulo 2e.
    pub fn q_num_of(&self, x: &[u64]) -> u64 {
        let m = 2 * self.exponent as u128;
        let mut s: u128 = 0;
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            let xi = x[i] as u128;
            s = (s + xi * xi % m * self.q_num[i] as u128) % m;
            for j in i + 1..x.len() {
                if x[j] == 0 {
                    continue;
                }
                s = (s + 2 * (xi * x[j] as u128 % m) * self.b_num[i][j] as u128) % m;
            }
        }
        s as u64
    }

    /// b(x, y)·e modulo e.
    pub fn b_num_of(&self, x: &[u64], y: &[u64]) -> u64 {
        let m = self.exponent as u128;
        let mut s: u128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                s = (s + (xi as u128 * yj as u128 % m) * self.b_num[i][j] as u128) % m;
            }
        }
        s as u64
    }

    /// q(x) as a rational in [0, 2).
    pub fn q(&self, x: &[u64]) -> BigRational {
        BigRational::new(BigInt::from(self.q_num_of(x)), BigInt::from(self.exponent))
    }

    /// b(x, y) as a rational in [0, 1).
    pub fn b(&self, x: &[u64], y: &[u64]) -> BigRational {
        BigRational::new(BigInt::from(self.b_num_of(x, y)), BigInt::from(self.exponent))
    }

    /// The form −q.
    pub fn negate(&self) -> Self {
        let e = self.exponent;
        FiniteQuadraticForm {
            group: self.group.clone(),
            exponent: e,
            q_num: self.q_num.iter().map(|&v| (2 * e - v) % (2 * e)).collect(),
            b_num: self.b_num.iter().map(|r| r.iter().map(|&v| (e - v) % e).collect()).collect(),
        }
    }

    pub fn record(&self) -> FormRecord {
        let k = self.group.len();
        let unit = |i: usize| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        };
        FormRecord {
            invariant_factors: self.group.invariant_factors.clone(),
            q_values: (0..k).map(|i| self.q(&unit(i)).to_string()).collect(),
            b_values: (0..k).map(|i| (0..k).map(|j| self.b(&unit(i), &unit(j)).to_string()).collect()).collect(),
        }
    }

    /// Histogram of q-values over all elements (a cheap isometry invariant).
    pub fn value_histogram(&self) -> Vec<(u64, u64)> {
        let mut h = std::collections::BTreeMap::new();
        for x in self.group.elements() {
            *h.entry(self.q_num_of(&x)).or_insert(0u64) += 1;
        }
        h.into_iter().collect()
    }
}

/// Discriminant form of an even nondegenerate lattice.
pub fn discriminant_form(l: &GramLattice) -> Result<FiniteQuadraticForm> {
    if let Some(i) = (0..l.rank()).find(|&i| l.gram()[i][i] % 2 != 0) {
        return Err(LatticeError::Odd(i));
    }
    let group = discriminant_group(l)?;
    let exponent = group.exponent();
    let e = BigRational::from_integer(BigInt::from(exponent));
    let k = group.len();
    let mut q_num = vec![0; k];
    let mut b_num = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let v = l.pair_rat(&group.generator_lifts[i], &group.generator_lifts[j]);
            let m = if i == j { 2 } else { 1 };
            let r = rat_mod(&v, m) * &e;
            debug_assert!(r.is_integer());
            let r = r.to_integer().to_u64().unwrap_or(0);
            if i == j {
                q_num[i] = r;
                b_num[i][i] = r % exponent;
            } else {
                b_num[i][j] = r;
            }
        }
    }
    Ok(FiniteQuadraticForm { group, exponent, q_num, b_num })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isometry {
    /// Images of the generators of the first form in the second.
    Isometric {
        images: Vec<Element>,
    },
    NotIsometric(String),
    Undecided(String),
}

impl Isometry {
    pub fn is_isometric(&self) -> bool {
        matches!(self, Isometry::Isometric { .. })
    }
}

/// Decide whether two finite quadratic forms are isometric.
pub fn qforms_isometric(q1: &FiniteQuadraticForm, q2: &FiniteQuadraticForm, bound: u64) -> Isometry {
    let g1 = &q1.group;
    let g2 = &q2.group;
    if g1.primary_decomposition() != g2.primary_decomposition() {
        return Isometry::NotIsometric("underlying groups differ".into());
    }
    if g1.order() > bound {
        return Isometry::Undecided(format!("group order {} exceeds search bound {bound}", g1.order()));
    }
    if q1.value_histogram() != q2.value_histogram() {
        return Isometry::NotIsometric("q-value distributions differ".into());
    }
    if g1.is_empty() {
        return Isometry::Isometric { images: Vec::new() };
    }
    let k = g1.len();
    let unit = |i: usize| {
        let mut v = vec![0; k];
        v[i] = 1;
        v
    };
    let gens: Vec<Element> = (0..k).map(unit).collect();
    let all2: Vec<Element> = g2.elements().collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            let d = g1.invariant_factors[g.iter().position(|&x| x == 1).unwrap_or(0)];
            let qv = q1.q_num_of(g);
            (0..all2.len())
                .filter(|&t| {
                    let y = &all2[t];
                    g2.mul(d, y).iter().all(|&c| c == 0) && q2.q_num_of(y) == qv
                })
                .collect()
        })
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    if search_images(q1, q2, &gens, &all2, &candidates, &mut chosen) {
        return Isometry::Isometric { images: chosen.iter().map(|&t| all2[t].clone()).collect() };
    }
    Isometry::NotIsometric("exhaustive generator-image search found no isometry".into())
}

fn search_images(
    q1: &FiniteQuadraticForm,
    q2: &FiniteQuadraticForm,
    gens: &[Element],
    all2: &[Element],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> bool {
    let i = chosen.len();
    if i == gens.len() {
        let images: Vec<&Element> = chosen.iter().map(|&t| &all2[t]).collect();
        return is_bijective(&q1.group, &q2.group, &images);
    }
    for &t in &candidates[i] {
        let y = &all2[t];
        let ok = (0..i).all(|j| q1.b_num_of(&gens[i], &gens[j]) == q2.b_num_of(y, &all2[chosen[j]]));
        if !ok {
            continue;
        }
        chosen.push(t);
        if search_images(q1, q2, gens, all2, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn is_bijective(g1: &FiniteAbelianGroup, g2: &FiniteAbelianGroup, images: &[&Element]) -> bool {
    let mut seen = HashSet::new();
    for x in g1.elements() {
        let mut img = g2.zero();
        for (c, y) in x.iter().zip(images) {
            img = g2.add(&img, &g2.mul(*c, y));
        }
        if !seen.insert(img) {
            return false;
        }
    }
    true
}

/// Apply an isometry (given by generator images) to an element.
pub fn apply_map(g1: &FiniteAbelianGroup, g2: &FiniteAbelianGroup, images: &[Element], x: &[u64]) -> Element {
    let _ = g1;
    let mut img = g2.zero();
    for (c, y) in x.iter().zip(images) {
        img = g2.add(&img, &g2.mul(*c, y));
    }
    img
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub generators: Vec<Element>,
    /// Sorted element indices (see `FiniteAbelianGroup::index_of`).
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// All subgroups on which q and b vanish identically (including the
/// trivial one), sorted by order and then lexicographically.
pub fn isotropic_subgroups(q: &FiniteQuadraticForm, bound: u64) -> Result<Vec<Subgroup>> {
    let g = &q.group;
    if g.order() > bound {
        return Err(LatticeError::BoundExceeded(format!("group order {} > {bound}", g.order())));
    }
    let all: Vec<Element> = g.elements().collect();
    let isotropic: Vec<usize> = (0..all.len()).filter(|&i| q.q_num_of(&all[i]) == 0).collect();
    let trivial = Subgroup { generators: Vec::new(), elements: vec![0] };
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(trivial.elements.clone());
    let mut out = vec![trivial];
    let mut frontier = 0;
    while frontier < out.len() {
        let s = out[frontier].clone();
        frontier += 1;
        let members: HashSet<usize> = s.elements.iter().copied().collect();
        for &x in &isotropic {
            if members.contains(&x) {
                continue;
            }
            let xv = &all[x];
            if !s.generators.iter().all(|gen| q.b_num_of(xv, gen) == 0) {
                continue;
            }
            let elems = span_with(g, &s.elements, xv);
            if seen.insert(elems.clone()) {
                let mut gens = s.generators.clone();
                gens.push(xv.clone());
                out.push(Subgroup { generators: gens, elements: elems });
            }
        }
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(out)
}

fn span_with(g: &FiniteAbelianGroup, elems: &[usize], x: &[u64]) -> Vec<usize> {
    let ord = g.order_of(x);
    let mut set = BTreeSet::new();
    for &e in elems {
        let ev = g.element_at(e);
        let mut cur = ev;
        for _ in 0..ord {
            set.insert(g.index_of(&cur));
            cur = g.add(&cur, x);
        }
    }
    set.into_iter().collect()
}
