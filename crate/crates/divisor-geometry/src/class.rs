//! Divisor classes in Num(S) = U + E₈, its pullback U(2) + E₈(2), and
//! local intersection lattices; Picard–Lefschetz reflections.

use std::fmt;
use std::sync::{Arc, OnceLock};

use lattice_core::{named, GramLattice};

use crate::error::{Error, Result};

/// Lattice a class lives in. `Local` carries its own Gram matrix (curve
/// graphs without a global embedding, fiber lattices, K3 models).
#[derive(Debug, Clone)]
pub enum Ambient {
    Enriques,
    Cover,
    Local(Arc<GramLattice>),
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Ambient::Enriques, Ambient::Enriques) | (Ambient::Cover, Ambient::Cover) => true,
            (Ambient::Local(a), Ambient::Local(b)) => Arc::ptr_eq(a, b) || a.gram() == b.gram(),
            _ => false,
        }
    }
}

impl Eq for Ambient {}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Enriques => write!(f, "U+E8"),
            Ambient::Cover => write!(f, "U(2)+E8(2)"),
            Ambient::Local(l) => write!(f, "local rank {}", l.rank()),
        }
    }
}

/// Num(S) = U + E₈: basis e, f (e·f = 1), then the E₈ simple roots in
/// Bourbaki order.
pub fn enriques_lattice() -> &'static GramLattice {
    static L: OnceLock<GramLattice> = OnceLock::new();
    L.get_or_init(|| named("U+E8").expect("U+E8"))
}

/// π*Num(S) = U(2) + E₈(2) in the same basis.
pub fn cover_lattice() -> &'static GramLattice {
    static L: OnceLock<GramLattice> = OnceLock::new();
    L.get_or_init(|| named("U(2)+E8(2)").expect("U(2)+E8(2)"))
}

impl Ambient {
    pub fn lattice(&self) -> &GramLattice {
        match self {
            Ambient::Enriques => enriques_lattice(),
            Ambient::Cover => cover_lattice(),
            Ambient::Local(l) => l,
        }
    }

    pub fn rank(&self) -> usize {
        self.lattice().rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    ambient: Ambient,
    coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(ambient: Ambient, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != ambient.rank() {
            return Err(Error::Precondition(format!("expected {} coordinates, got {}", ambient.rank(), coords.len())));
        }
        Ok(DivisorClass { ambient, coords })
    }

    pub fn enriques(coords: [i64; 10]) -> Self {
        DivisorClass { ambient: Ambient::Enriques, coords: coords.to_vec() }
    }

    /// Class `a·e + b·f + Σ rᵢαᵢ` in Num(S).
    pub fn enriques_parts(a: i64, b: i64, root: [i64; 8]) -> Self {
        let mut c = [0i64; 10];
        c[0] = a;
        c[1] = b;
        c[2..].copy_from_slice(&root);
        Self::enriques(c)
    }

    pub fn zero(ambient: Ambient) -> Self {
        let n = ambient.rank();
        DivisorClass { ambient, coords: vec![0; n] }
    }

    pub fn unit(ambient: Ambient, i: usize) -> Self {
        let mut d = Self::zero(ambient);
        d.coords[i] = 1;
        d
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn square(&self) -> i64 {
        self.ambient.lattice().norm(&self.coords)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient.to_string(), other.ambient.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.combine(1, other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.combine(-1, other))
    }

    pub fn scaled(&self, k: i64) -> Self {
        DivisorClass { ambient: self.ambient.clone(), coords: self.coords.iter().map(|x| k * x).collect() }
    }

    fn combine(&self, k: i64, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + k * b).collect();
        DivisorClass { ambient: self.ambient.clone(), coords }
    }

    /// Integer combination Σ kᵢ Dᵢ of classes in one ambient.
    pub fn sum(terms: &[(i64, &DivisorClass)]) -> Result<Self> {
        let first = terms.first().ok_or_else(|| Error::Precondition("empty sum".into()))?;
        let mut acc = DivisorClass::zero(first.1.ambient.clone());
        for (k, d) in terms {
            acc.check_same(d)?;
            acc = acc.combine(*k, d);
        }
        Ok(acc)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "[{}] in {}", parts.join(", "), self.ambient)
    }
}

/// Intersection number D₁·D₂.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    d1.check_same(d2)?;
    Ok(d1.ambient.lattice().pair(&d1.coords, &d2.coords))
}

/// Picard–Lefschetz reflection s_E(D) = D + (D·E)E.
pub fn reflect(d: &DivisorClass, e: &DivisorClass) -> Result<DivisorClass> {
    let ee = e.square();
    if ee != -2 {
        return Err(Error::NotRoot(ee));
    }
    let de = intersect(d, e)?;
    Ok(d.combine(de, e))
}

/// s_{E_k} ∘ … ∘ s_{E_1}; `steps[0]` acts first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReflectionWord {
    steps: Vec<DivisorClass>,
}

impl ReflectionWord {
    pub fn new(steps: Vec<DivisorClass>) -> Result<Self> {
        if let Some(bad) = steps.iter().find(|s| s.square() != -2) {
            return Err(Error::NotRoot(bad.square()));
        }
        Ok(ReflectionWord { steps })
    }

    pub fn empty() -> Self {
        ReflectionWord::default()
    }

    pub fn steps(&self) -> &[DivisorClass] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

pub fn apply_word(w: &ReflectionWord, d: &DivisorClass) -> Result<DivisorClass> {
    w.steps.iter().try_fold(d.clone(), |acc, e| reflect(&acc, e))
}

/// π*: Num(S) → U(2) + E₈(2); coordinates unchanged, pairings doubled.
pub fn pullback_to_cover(d: &DivisorClass) -> Result<DivisorClass> {
    if d.ambient != Ambient::Enriques {
        return Err(Error::AmbientMismatch(d.ambient.to_string(), Ambient::Enriques.to_string()));
    }
    Ok(DivisorClass { ambient: Ambient::Cover, coords: d.coords.clone() })
}
