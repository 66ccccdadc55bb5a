//! Explicit configurations: fiber components and A₂-configurations in
//! Num(S) = U + E₈ (with H = e), curve graphs, and K3-cover lattices.
//!
//! Fiber components orthogonal to H are written as E₈ roots plus a
//! multiple of e; the component chosen as "zero" absorbs the fiber class.

use lattice_core::{divisibility_kernel, divisibility_kernel_int, named, overlattice, GramLattice, Overlattice};
use num_rational::BigRational;

use crate::class::DivisorClass;
use crate::error::Result;
use crate::fiber::{FiberDivisor, Kodaira};
use crate::graph::CurveGraph;

/// Highest root of E₈ in simple-root coordinates.
pub const THETA_E8: [i64; 8] = [2, 3, 4, 6, 5, 4, 3, 2];
/// Highest root of the E₆ spanned by α₁…α₆.
pub const THETA_E6: [i64; 8] = [1, 2, 2, 3, 2, 1, 0, 0];

/// Simple root αᵢ (1-based, Bourbaki) as a class in Num(S).
pub fn alpha(i: usize) -> DivisorClass {
    let mut r = [0i64; 8];
    r[i - 1] = 1;
    DivisorClass::enriques_parts(0, 0, r)
}

fn root(r: [i64; 8]) -> DivisorClass {
    DivisorClass::enriques_parts(0, 0, r)
}

fn neg(r: [i64; 8]) -> [i64; 8] {
    r.map(|x| -x)
}

/// The half-pencil class H = e.
pub fn half_pencil() -> DivisorClass {
    DivisorClass::enriques_parts(1, 0, [0; 8])
}

/// Pairs (F′ⱼ, F″ⱼ) of (−2)-curves meeting once, with the fibers carrying them.
#[derive(Debug, Clone)]
pub struct A2Model {
    pub name: &'static str,
    pub h: DivisorClass,
    pub pairs: Vec<(DivisorClass, DivisorClass)>,
    pub fibers: Vec<FiberDivisor>,
}

impl A2Model {
    pub fn differences(&self) -> Result<Vec<DivisorClass>> {
        self.pairs.iter().map(|(a, b)| a.sub(b)).collect()
    }

    /// λ ∈ 𝔽₃^k with Σ λⱼ(F′ⱼ − F″ⱼ) ∈ 3·Num(S) (Num(S) is unimodular, so
    /// this is divisibility of the coordinates).
    pub fn divisibility_kernel(&self) -> Result<Vec<Vec<u64>>> {
        let v: Vec<Vec<i64>> = self.differences()?.iter().map(|d| d.coords().to_vec()).collect();
        Ok(divisibility_kernel_int(&v, 3))
    }
}

/// I₃ fiber with F′, F″ given; the third component is wH − F′ − F″.
fn i3(h: &DivisorClass, a: &DivisorClass, b: &DivisorClass, half: bool) -> Result<FiberDivisor> {
    let w = if half { 1 } else { 2 };
    let third = h.scaled(w).sub(a)?.sub(b)?;
    FiberDivisor::new(Kodaira::I(3), vec![third, a.clone(), b.clone()], vec![1, 1, 1], half)
}

/// Four I₃ fibers whose non-zero components form 4A₂ ⊂ E₈; the last two
/// fibers are half-pencils.
pub fn f3333() -> Result<A2Model> {
    let h = half_pencil();
    let pairs = vec![
        (alpha(1), alpha(3)),
        (alpha(5), alpha(6)),
        (alpha(2), root(neg(THETA_E6))),
        (alpha(8), root(neg(THETA_E8))),
    ];
    let fibers = pairs.iter().enumerate().map(|(j, (a, b))| i3(&h, a, b, j >= 2)).collect::<Result<Vec<_>>>()?;
    Ok(A2Model { name: "F3333", h, pairs, fibers })
}

/// The same fibers with the fourth pair replaced by (F′₄, F₄), F₄ the
/// third component of its fiber.
pub fn f3333_small() -> Result<A2Model> {
    let mut m = f3333()?;
    let third = m.fibers[3].components[0].clone();
    m.pairs[3] = (m.pairs[3].0.clone(), third);
    m.name = "F3333-small";
    Ok(m)
}

/// IV* fiber 3F₀ + Σ(F′ⱼ + 2F″ⱼ) and an I₃ half-pencil. The E₆ of the
/// IV* minus F′₁ is α₁…α₆ with F₀ = α₄; the I₃ pair is (α₈, −θ).
pub fn f431() -> Result<A2Model> {
    let h = half_pencil();
    let f0 = alpha(4);
    let (fpp1, fpp2, fp2, fpp3, fp3) = (alpha(2), alpha(3), alpha(1), alpha(5), alpha(6));
    let fp1 = DivisorClass::sum(&[(2, &h), (-3, &f0), (-1, &fp2), (-1, &fp3), (-2, &fpp1), (-2, &fpp2), (-2, &fpp3)])?;
    let pairs = vec![
        (fp1.clone(), fpp1.clone()),
        (fp2.clone(), fpp2.clone()),
        (fp3.clone(), fpp3.clone()),
        (alpha(8), root(neg(THETA_E8))),
    ];
    let iv_star = FiberDivisor::new(
        Kodaira::IVStar,
        vec![f0, fpp1, fp1, fpp2, fp2, fpp3, fp3],
        vec![3, 2, 1, 2, 1, 2, 1],
        false,
    )?;
    let i3f = i3(&h, &pairs[3].0, &pairs[3].1, true)?;
    Ok(A2Model { name: "F431", h, pairs, fibers: vec![iv_star, i3f] })
}

/// The II* fiber e₁…e₉ with classes in Num(S): e₁ = α₂, e₂ = α₁,
/// e₃…e₈ = α₃…α₈, e₉ = 2H − θ.
pub fn ii_star_tree() -> Result<CurveGraph> {
    let names = (1..=9).map(|i| format!("e{i}")).collect();
    let edges = [(1, 2, 1), (2, 3, 1), (0, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1), (7, 8, 1)];
    let mut classes = vec![alpha(2), alpha(1)];
    classes.extend((3..=8).map(alpha));
    classes.push(DivisorClass::enriques_parts(2, 0, neg(THETA_E8)));
    CurveGraph::new(names, &edges)?.with_classes(classes)
}

/// Multiplicities of e₁…e₉ in the II* fiber.
pub const II_STAR_MULTIPLICITIES: [i64; 9] = [3, 2, 4, 6, 5, 4, 3, 2, 1];

pub fn ii_star_fiber() -> Result<FiberDivisor> {
    let g = ii_star_tree()?;
    let comps = (0..9).map(|v| g.class_of(v)).collect();
    FiberDivisor::new(Kodaira::IIStar, comps, II_STAR_MULTIPLICITIES.to_vec(), false)
}

fn graph(names: &[&str], edges: &[(&str, &str, i64)]) -> Result<CurveGraph> {
    let idx = |n: &str| names.iter().position(|m| *m == n).expect("fixture vertex");
    let e: Vec<(usize, usize, i64)> = edges.iter().map(|&(a, b, m)| (idx(a), idx(b), m)).collect();
    CurveGraph::new(names.iter().map(|s| s.to_string()).collect(), &e)
}

/// I₆, I₃, I₂ fibers and the bisection R: R meets two opposite I₆
/// components, one I₃ component with multiplicity 2, and both I₂
/// components (which meet each other twice). The I₁ is omitted.
pub fn i6_i3_i2_bisection_graph() -> Result<CurveGraph> {
    graph(
        &["h0", "h1", "h2", "h3", "h4", "h5", "c0", "c1", "c2", "d0", "d1", "R"],
        &[
            ("h0", "h1", 1),
            ("h1", "h2", 1),
            ("h2", "h3", 1),
            ("h3", "h4", 1),
            ("h4", "h5", 1),
            ("h5", "h0", 1),
            ("c0", "c1", 1),
            ("c1", "c2", 1),
            ("c2", "c0", 1),
            ("d0", "d1", 2),
            ("R", "h0", 1),
            ("R", "h3", 1),
            ("R", "c0", 2),
            ("R", "d0", 1),
            ("R", "d1", 1),
        ],
    )
}

/// Four I₃ fibers and a (−2)-bisection R: R meets the half-pencil `a`
/// once, meets `b` and `c` in a single component twice, and meets two
/// components of `d` once each.
pub fn four_i3_bisection_graph() -> Result<CurveGraph> {
    graph(
        &["R", "a0", "a1", "a2", "b0", "b1", "b2", "c0", "c1", "c2", "d0", "d1", "d2"],
        &[
            ("a0", "a1", 1),
            ("a1", "a2", 1),
            ("a2", "a0", 1),
            ("b0", "b1", 1),
            ("b1", "b2", 1),
            ("b2", "b0", 1),
            ("c0", "c1", 1),
            ("c1", "c2", 1),
            ("c2", "c0", 1),
            ("d0", "d1", 1),
            ("d1", "d2", 1),
            ("d2", "d0", 1),
            ("R", "a0", 1),
            ("R", "b0", 2),
            ("R", "c0", 2),
            ("R", "d0", 1),
            ("R", "d1", 1),
        ],
    )
}

/// A K3-cover lattice U(2) ⊕ (root blocks), glued by the pullbacks of
/// the 3-divisible words of an Enriques configuration, with the
/// difference classes of the preimage A₂-configurations.
#[derive(Debug, Clone)]
pub struct CoverModel {
    pub name: &'static str,
    pub trivial: GramLattice,
    pub ns: Overlattice,
    pub glue: Vec<Vec<BigRational>>,
    /// Differences F′ⱼ^± − F″ⱼ^±, ordered 1⁺…k⁺, 1⁻…k⁻.
    pub differences: Vec<Vec<i64>>,
}

impl CoverModel {
    pub fn divisibility_kernel(&self) -> Result<Vec<Vec<u64>>> {
        let v: Vec<Vec<BigRational>> = self.differences.iter().map(|d| to_rat(d)).collect();
        Ok(divisibility_kernel(&v, Some(&self.ns.basis), 3)?)
    }

    /// The negative-definite part: root blocks glued by the same vectors.
    pub fn root_part(&self) -> Result<Overlattice> {
        let n = self.trivial.rank();
        let gram: Vec<Vec<i64>> = self.trivial.gram()[2..].iter().map(|r| r[2..n].to_vec()).collect();
        let roots = GramLattice::new(gram)?;
        let glue: Vec<Vec<BigRational>> = self.glue.iter().map(|g| g[2..].to_vec()).collect();
        Ok(overlattice(&roots, &glue)?)
    }
}

fn to_rat(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

fn pulled_back_glue(words: &[Vec<u64>], diffs: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let k = diffs.len() / 2;
    words
        .iter()
        .map(|w| {
            let n = diffs[0].len();
            (0..n)
                .map(|i| {
                    let s: i64 = (0..k).map(|j| w[j] as i64 * (diffs[j][i] + diffs[k + j][i])).sum();
                    BigRational::new(s.into(), 3.into())
                })
                .collect()
        })
        .collect()
}

/// U(2) + A₂⁸ glued by the two pulled-back words of [`f3333`].
pub fn f3333_cover() -> Result<CoverModel> {
    let trivial = named("U(2)+A2^8")?;
    let n = trivial.rank();
    let diffs: Vec<Vec<i64>> = (0..8)
        .map(|b| {
            let mut v = vec![0i64; n];
            v[2 + 2 * b] = 1;
            v[3 + 2 * b] = -1;
            v
        })
        .collect();
    let words = f3333()?.divisibility_kernel()?;
    let glue = pulled_back_glue(&words, &diffs);
    let ns = overlattice(&trivial, &glue)?;
    Ok(CoverModel { name: "F3333-cover", trivial, ns, glue, differences: diffs })
}

/// U(2) + E₆⁺ + E₆⁻ + A₂⁺ + A₂⁻ (the two IV* and two I₃ preimages) glued by
/// the pulled-back word of [`f431`]. F′₁^± = F_Y − θ_{E₆}^± with F_Y = π*H
/// the first U(2) vector.
pub fn f431_cover() -> Result<CoverModel> {
    let trivial = named("U(2)+E6+E6+A2+A2")?;
    let n = trivial.rank();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let sub = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<i64>>();
    let mut diffs = Vec::new();
    for copy in 0..2 {
        let e6 = 2 + 6 * copy;
        let a2 = 14 + 2 * copy;
        let al = |i: usize| unit(e6 + i - 1);
        let mut fp1 = unit(0);
        for (i, &c) in THETA_E6[..6].iter().enumerate() {
            fp1[e6 + i] -= c;
        }
        diffs.push(sub(&fp1, &al(2)));
        diffs.push(sub(&al(1), &al(3)));
        diffs.push(sub(&al(6), &al(5)));
        diffs.push(sub(&unit(a2), &unit(a2 + 1)));
    }
    let words = f431()?.divisibility_kernel()?;
    let glue = pulled_back_glue(&words, &diffs);
    let ns = overlattice(&trivial, &glue)?;
    Ok(CoverModel { name: "F431-cover", trivial, ns, glue, differences: diffs })
}
