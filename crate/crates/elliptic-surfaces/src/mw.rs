//! Sections, the height pairing, Shioda–Tate bookkeeping and Néron–Severi
//! lattices assembled from fibers and sections.

use lattice_core::matrix::{self, RatMatrix};
use lattice_core::GramLattice;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibers::{FiberData, KodairaType};
use crate::poly::RatFunc;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// A section: optional coordinates plus its intersection data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionData {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<RatFunc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<RatFunc>,
    /// Simple component met on each fiber (0 = identity component).
    pub contact: Vec<usize>,
    /// Intersection number with the zero section; −χ for the zero section
    /// itself.
    pub o_intersection: i64,
    #[serde(default)]
    pub torsion: bool,
}

impl SectionData {
    pub fn new(name: &str, contact: Vec<usize>, o_intersection: i64, torsion: bool) -> Self {
        SectionData { name: name.into(), x: None, y: None, contact, o_intersection, torsion }
    }

    /// The zero section O, with O·O = −χ.
    pub fn zero(fibers: usize, chi: u32) -> Self {
        Self::new("O", vec![0; fibers], -(chi as i64), true)
    }
}

fn check_section(s: &SectionData, chi: u32, fibers: &[FiberData]) -> Result<()> {
    if s.o_intersection < 0 && s.o_intersection != -(chi as i64) {
        return Err(Error::Invalid(format!("section {} has negative intersection with O", s.name)));
    }
    check_contacts(&s.contact, fibers)
}

fn check_contacts(contact: &[usize], fibers: &[FiberData]) -> Result<()> {
    if contact.len() != fibers.len() {
        return Err(Error::Invalid(format!("{} contact entries for {} fibers", contact.len(), fibers.len())));
    }
    for (c, f) in contact.iter().zip(fibers) {
        if *c >= f.kodaira.group_order() {
            return Err(Error::Invalid(format!(
                "component {c} is not a simple component of {} at {}",
                f.kodaira, f.place
            )));
        }
    }
    Ok(())
}

/// Σ_v contr_v(P, Q) weighted by the number of geometric fibers per place.
fn correction(p: &[usize], qc: &[usize], fibers: &[FiberData]) -> Result<BigRational> {
    let mut s = BigRational::zero();
    for ((a, b), f) in p.iter().zip(qc).zip(fibers) {
        s += f.kodaira.pair_contribution(*a, *b)? * q(f.multiplicity() as i64);
    }
    Ok(s)
}

/// h(P) = 2χ + 2(P·O) − Σ_v contr_v(P).
pub fn height_pairing(s: &SectionData, chi: u32, fibers: &[FiberData]) -> Result<BigRational> {
    check_section(s, chi, fibers)?;
    Ok(q(2 * chi as i64) + q(2 * s.o_intersection) - correction(&s.contact, &s.contact, fibers)?)
}

/// ⟨P, Q⟩ = χ + P·O + Q·O − P·Q − Σ_v contr_v(P, Q).
pub fn height_pair(p: &SectionData, s: &SectionData, pq: i64, chi: u32, fibers: &[FiberData]) -> Result<BigRational> {
    check_section(p, chi, fibers)?;
    check_section(s, chi, fibers)?;
    Ok(q(chi as i64) + q(p.o_intersection) + q(s.o_intersection) - q(pq) - correction(&p.contact, &s.contact, fibers)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiodaTate {
    pub rho: usize,
    /// Π det(fiber root lattices) · (−1)^(ρ−1) / |torsion|²; the NS
    /// determinant is this times the regulator.
    pub det_factor: BigRational,
}

impl ShiodaTate {
    pub fn determinant(&self, regulator: &BigRational) -> BigRational {
        &self.det_factor * regulator
    }
}

pub fn shioda_tate(fibers: &[FiberData], mw_rank: usize, torsion_order: u64) -> Result<ShiodaTate> {
    if torsion_order == 0 {
        return Err(Error::Invalid("torsion order must be positive".into()));
    }
    let mut rho = 2 + mw_rank;
    let mut det = BigInt::one();
    for f in fibers {
        let k = f.kodaira;
        for _ in 0..f.multiplicity() {
            rho += k.component_count() as usize - 1;
            det *= k.root_lattice().determinant().abs();
        }
    }
    let sign = if (rho - 1).is_multiple_of(2) { 1 } else { -1 };
    let tors = BigInt::from(torsion_order);
    Ok(ShiodaTate { rho, det_factor: BigRational::new(det * sign, &tors * &tors) })
}

/// The class of the curve generating the hyperbolic part of the trivial
/// lattice: the zero section, or a multisection perpendicular to the
/// fiber components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Frame {
    /// Jacobian fibration: O² = −χ, O·F = 1.
    Section { chi: u32 },
    /// Genus-one fibration: D² = 0, D·F = degree.
    Multisection { degree: u32 },
}

/// Néron–Severi lattice together with its ambient coordinates
/// [Z, F, fiber nodes…, Mordell–Weil frame…] where Z is the frame curve.
#[derive(Debug, Clone)]
pub struct NeronSeveri {
    pub lattice: GramLattice,
    /// Lattice basis as rows in ambient coordinates.
    pub basis: RatMatrix,
    pub ambient_gram: RatMatrix,
    pub fibers: Vec<KodairaType>,
    pub fiber_offsets: Vec<usize>,
    pub frame: Frame,
    /// Ambient vectors of the adjoined sections / glue words, in input order.
    pub adjoined: Vec<Vec<BigRational>>,
}

impl NeronSeveri {
    pub fn dim(&self) -> usize {
        self.ambient_gram.len()
    }

    fn unit(&self, i: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim()];
        v[i] = BigRational::one();
        v
    }

    /// Zero section (or multisection) class.
    pub fn frame_curve(&self) -> Vec<BigRational> {
        self.unit(0)
    }

    pub fn fiber_class(&self) -> Vec<BigRational> {
        self.unit(1)
    }

    /// Component `node` of fiber `v`; node 0 is the identity component
    /// F − Σ m_j Θ_j.
    pub fn component(&self, v: usize, node: usize) -> Result<Vec<BigRational>> {
        let k = self.fibers.get(v).ok_or_else(|| Error::Invalid(format!("no fiber {v}")))?;
        let r = k.root_rank();
        if node > r {
            return Err(Error::Invalid(format!("{k} has no node {node}")));
        }
        if node > 0 {
            return Ok(self.unit(self.fiber_offsets[v] + node - 1));
        }
        let mut f = self.fiber_class();
        for (j, m) in k.node_multiplicities().iter().enumerate() {
            f[self.fiber_offsets[v] + j] -= q(*m);
        }
        Ok(f)
    }

    pub fn pair(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut s = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * &self.ambient_gram[i][j] * yj;
            }
        }
        s
    }

    /// Integer coordinates in the lattice basis, if `v` lies in NS.
    pub fn coords(&self, v: &[BigRational]) -> Option<Vec<i64>> {
        let x = matrix::solve_row(&self.basis, v)?;
        x.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }
}

fn fiber_inverse(k: KodairaType) -> RatMatrix {
    let g = matrix::to_rat(&k.root_lattice().gram_big());
    matrix::inverse_q(&g).expect("root lattice is nondegenerate")
}

/// Fiber part Σ_v G_v⁻¹ e_{c_v} of a section or glue word.
fn fiber_part(v: &mut [BigRational], fibers: &[KodairaType], offsets: &[usize], contact: &[usize]) -> Result<()> {
    for ((k, off), c) in fibers.iter().zip(offsets).zip(contact) {
        if *c >= k.group_order() {
            return Err(Error::Invalid(format!("component {c} is not a simple component of {k}")));
        }
        if let Some(node) = k.node_of(*c) {
            let inv = fiber_inverse(*k);
            for (j, row) in inv.iter().enumerate() {
                v[off + j] += &row[node - 1];
            }
        }
    }
    Ok(())
}

fn assemble(
    frame: Frame,
    fibers: &[KodairaType],
    adjoined: Vec<Vec<BigRational>>,
    free_frame: RatMatrix,
) -> Result<NeronSeveri> {
    let mut offsets = Vec::new();
    let mut n = 2;
    for k in fibers {
        offsets.push(n);
        n += k.root_rank();
    }
    let nfree = free_frame.len();
    let dim = n + nfree;
    let mut a = vec![vec![BigRational::zero(); dim]; dim];
    match frame {
        Frame::Section { chi } => {
            a[0][0] = q(-(chi as i64));
            a[0][1] = q(1);
            a[1][0] = q(1);
        }
        Frame::Multisection { degree } => {
            a[0][1] = q(degree as i64);
            a[1][0] = q(degree as i64);
        }
    }
    for (k, off) in fibers.iter().zip(&offsets) {
        for (i, row) in k.root_lattice().gram().iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                a[off + i][off + j] = q(*x);
            }
        }
    }
    for i in 0..nfree {
        for j in 0..nfree {
            a[n + i][n + j] = free_frame[i][j].clone();
        }
    }
    let mut gens: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut v = vec![BigRational::zero(); dim];
            v[i] = BigRational::one();
            v
        })
        .collect();
    gens.extend(adjoined.iter().cloned());
    let den = gens.iter().fold(BigInt::one(), |l, v| num_integer::Integer::lcm(&l, &matrix::lcm_of_denominators(v)));
    let denr = BigRational::from_integer(den.clone());
    let ints: Vec<Vec<BigInt>> = gens.iter().map(|v| v.iter().map(|x| (x * &denr).to_integer()).collect()).collect();
    let hb = matrix::row_span_basis(&ints);
    if hb.len() != dim {
        return Err(Error::Glue(format!("generators span rank {} in dimension {dim}", hb.len())));
    }
    let basis: RatMatrix =
        hb.iter().map(|r| r.iter().map(|x| BigRational::new(x.clone(), den.clone())).collect()).collect();
    let g = matrix::rat_mul(&matrix::rat_mul(&basis, &a), &matrix::transpose(&basis));
    let mut gram = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let x = &g[i][j];
            if !x.is_integer() {
                return Err(Error::Glue(format!("non-integral pairing {x}")));
            }
            gram[i][j] = x.to_integer().to_i64().ok_or_else(|| Error::Glue("pairing overflows i64".into()))?;
        }
    }
    let lattice = GramLattice::new(gram).map_err(|e| Error::Glue(e.to_string()))?;
    Ok(NeronSeveri {
        lattice,
        basis,
        ambient_gram: a,
        fibers: fibers.to_vec(),
        fiber_offsets: offsets,
        frame,
        adjoined,
    })
}

/// Néron–Severi lattice of a jacobian elliptic surface from its
/// geometric fibers and sections. Torsion sections act as glue; at most
/// one section of infinite order is supported (its frame is ⟨−h⟩).
pub fn build_neron_severi(fibers: &[FiberData], sections: &[SectionData], chi: u32) -> Result<NeronSeveri> {
    if let Some(f) = fibers.iter().find(|f| f.multiplicity() != 1) {
        return Err(Error::Invalid(format!("fiber at {} is not geometric; expand with geometric_fibers", f.place)));
    }
    let kinds: Vec<KodairaType> = fibers.iter().map(|f| f.kodaira).collect();
    let free: Vec<&SectionData> = sections.iter().filter(|s| !s.torsion).collect();
    if free.len() > 1 {
        return Err(Error::Invalid("at most one section of infinite order is supported".into()));
    }
    let mut free_frame = Vec::new();
    for s in &free {
        let h = height_pairing(s, chi, fibers)?;
        if !h.is_positive() {
            return Err(Error::Glue(format!("section {} of infinite order has height {h}", s.name)));
        }
        free_frame.push(vec![-h]);
    }
    let base = 2 + kinds.iter().map(|k| k.root_rank()).sum::<usize>();
    let dim = base + free_frame.len();
    let mut offsets = Vec::new();
    let mut n = 2;
    for k in &kinds {
        offsets.push(n);
        n += k.root_rank();
    }
    let mut adjoined = Vec::new();
    for s in sections {
        check_section(s, chi, fibers)?;
        if s.torsion && !height_pairing(s, chi, fibers)?.is_zero() {
            return Err(Error::Glue(format!("torsion section {} has nonzero height", s.name)));
        }
        let mut v = vec![BigRational::zero(); dim];
        v[0] = q(1);
        v[1] = q(chi as i64 + s.o_intersection);
        fiber_part(&mut v, &kinds, &offsets, &s.contact)?;
        if !s.torsion {
            v[base] = q(1);
        }
        adjoined.push(v);
    }
    assemble(Frame::Section { chi }, &kinds, adjoined, free_frame)
}

/// Lattice generated by a multisection class D (D² = 0, D·F = degree, D
/// perpendicular to the fiber components), the fiber components, and
/// fiber-supported glue words Σ_v G_v⁻¹ e_{c_v}.
pub fn build_from_multisection(fibers: &[KodairaType], degree: u32, glue: &[Vec<usize>]) -> Result<NeronSeveri> {
    let mut offsets = Vec::new();
    let mut n = 2;
    for k in fibers {
        offsets.push(n);
        n += k.root_rank();
    }
    let mut adjoined = Vec::new();
    for w in glue {
        if w.len() != fibers.len() {
            return Err(Error::Invalid("glue word length differs from the fiber count".into()));
        }
        let mut v = vec![BigRational::zero(); n];
        fiber_part(&mut v, fibers, &offsets, w)?;
        adjoined.push(v);
    }
    assemble(Frame::Multisection { degree }, fibers, adjoined, Vec::new())
}

/// A contact pattern and zero-section intersection for a section of a
/// given height.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContactPattern {
    pub contact: Vec<usize>,
    pub o_intersection: u32,
}

/// All contact patterns with P·O ≤ `max_po` whose height equals `target`.
pub fn contact_patterns(
    fibers: &[FiberData],
    chi: u32,
    target: &BigRational,
    max_po: u32,
) -> Result<Vec<ContactPattern>> {
    let orders: Vec<usize> = fibers.iter().map(|f| f.kodaira.group_order()).collect();
    let total: usize = orders.iter().product::<usize>() * (max_po as usize + 1);
    if total > 10_000_000 {
        return Err(Error::Bound(format!("{total} contact patterns")));
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; fibers.len()];
    loop {
        for po in 0..=max_po {
            let s = SectionData::new("", idx.clone(), po as i64, false);
            if height_pairing(&s, chi, fibers)? == *target {
                out.push(ContactPattern { contact: idx.clone(), o_intersection: po });
            }
        }
        let mut i = 0;
        while i < idx.len() {
            idx[i] += 1;
            if idx[i] < orders[i] {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == idx.len() {
            break;
        }
    }
    Ok(out)
}

/// Contact data of P + T for a torsion section T, with (P+T)·O fixed by
/// the invariance of the height; `None` if that intersection number is
/// not a nonnegative integer.
pub fn translate_by_torsion(
    p: &ContactPattern,
    t: &SectionData,
    chi: u32,
    fibers: &[FiberData],
) -> Result<Option<ContactPattern>> {
    check_contacts(&p.contact, fibers)?;
    check_contacts(&t.contact, fibers)?;
    let contact: Vec<usize> = p
        .contact
        .iter()
        .zip(&t.contact)
        .zip(fibers)
        .map(|((a, b), f)| f.kodaira.component_add(*a, *b))
        .collect::<Result<_>>()?;
    let h = height_pairing(&SectionData::new("", p.contact.clone(), p.o_intersection as i64, false), chi, fibers)?;
    let corr = correction(&contact, &contact, fibers)?;
    let po2 = h - q(2 * chi as i64) + corr;
    let po = po2 / q(2);
    if !po.is_integer() || po.is_negative() {
        return Ok(None);
    }
    Ok(Some(ContactPattern { contact, o_intersection: po.to_integer().to_u32().unwrap_or(u32::MAX) }))
}

/// Contact patterns of the given height grouped into classes under
/// P ↦ ±P + T for the listed torsion sections (and their sums).
/// Patterns whose translate by some torsion section would need a negative
/// or fractional P·O cannot come from a section and are dropped.
/// Classes are sorted; each class lists its members in order.
pub fn contact_classes(
    fibers: &[FiberData],
    chi: u32,
    target: &BigRational,
    max_po: u32,
    torsion: &[SectionData],
) -> Result<Vec<Vec<ContactPattern>>> {
    let patterns = contact_patterns(fibers, chi, target, max_po)?;
    let mut group = vec![SectionData::zero(fibers.len(), chi)];
    loop {
        let mut grew = false;
        for t in torsion {
            for g in group.clone() {
                let contact: Vec<usize> = g
                    .contact
                    .iter()
                    .zip(&t.contact)
                    .zip(fibers)
                    .map(|((a, b), f)| f.kodaira.component_add(*a, *b))
                    .collect::<Result<_>>()?;
                // translation only reads the contacts of the torsion section
                if !group.iter().any(|h| h.contact == contact) {
                    group.push(SectionData::new("", contact, 0, true));
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut classes = Vec::new();
    for p in &patterns {
        if seen.contains(p) {
            continue;
        }
        let neg = ContactPattern {
            contact: p.contact.iter().zip(fibers).map(|(a, f)| f.kodaira.component_neg(*a)).collect::<Result<_>>()?,
            o_intersection: p.o_intersection,
        };
        let mut class = std::collections::BTreeSet::new();
        let mut consistent = true;
        for base in [p, &neg] {
            for t in &group {
                match translate_by_torsion(base, t, chi, fibers)? {
                    Some(q) => {
                        class.insert(q);
                    }
                    None => consistent = false,
                }
            }
        }
        seen.extend(class.iter().cloned());
        seen.insert(p.clone());
        if consistent {
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
    }
    classes.sort();
    Ok(classes)
}
