//! Kodaira fiber types, places of ℙ¹ and local fiber data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use lattice_core::GramLattice;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RatPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KodairaType {
    /// I_n; n = 0 is a smooth fiber.
    I(u32),
    /// I_n^*.
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

use KodairaType::*;

impl KodairaType {
    /// Euler number of the fiber.
    pub fn euler(self) -> u32 {
        match self {
            I(n) => n,
            IStar(n) => n + 6,
            II => 2,
            III => 3,
            IV => 4,
            IVStar => 8,
            IIIStar => 9,
            IIStar => 10,
        }
    }

    /// Number of irreducible components.
    pub fn component_count(self) -> u32 {
        match self {
            I(0) => 1,
            I(n) => n,
            IStar(n) => n + 5,
            II => 1,
            III => 2,
            IV => 3,
            IVStar => 7,
            IIIStar => 8,
            IIStar => 9,
        }
    }

    pub fn is_singular(self) -> bool {
        self != I(0)
    }

    pub fn is_semistable(self) -> bool {
        matches!(self, I(_))
    }

    /// Root lattice spanned by the components missing the zero section,
    /// as a symbol for `lattice_core::named` (empty when trivial).
    pub fn root_symbol(self) -> Option<String> {
        match self {
            I(n) if n >= 2 => Some(format!("A{}", n - 1)),
            IStar(n) => Some(format!("D{}", n + 4)),
            III => Some("A1".into()),
            IV => Some("A2".into()),
            IVStar => Some("E6".into()),
            IIIStar => Some("E7".into()),
            IIStar => Some("E8".into()),
            _ => None,
        }
    }

    pub fn root_lattice(self) -> GramLattice {
        match self.root_symbol() {
            Some(s) => lattice_core::named(&s).expect("standard root lattice"),
            None => GramLattice::zero(),
        }
    }

    pub fn root_rank(self) -> usize {
        self.root_lattice().rank()
    }

    /// Multiplicities of the root-lattice nodes in the fiber class
    /// (the identity component has multiplicity 1).
    pub fn node_multiplicities(self) -> Vec<i64> {
        match self {
            I(n) if n >= 2 => vec![1; n as usize - 1],
            IStar(n) => {
                let m = n as usize + 4;
                let mut v = vec![2; m];
                v[0] = 1;
                v[m - 2] = 1;
                v[m - 1] = 1;
                v
            }
            III => vec![1],
            IV => vec![1, 1],
            IVStar => lattice_core::lattice::E6_HIGHEST_ROOT.to_vec(),
            IIIStar => vec![2, 2, 3, 4, 3, 2, 1],
            IIStar => lattice_core::lattice::E8_HIGHEST_ROOT.to_vec(),
            _ => Vec::new(),
        }
    }

    /// Nodes (1-based in the root lattice) met by the identity component.
    pub fn identity_neighbours(self) -> Vec<usize> {
        match self {
            I(2) => vec![1],
            I(n) if n >= 3 => vec![1, n as usize - 1],
            IStar(_) => vec![2],
            III => vec![1],
            IV => vec![1, 2],
            IVStar => vec![2],
            IIIStar => vec![1],
            IIStar => vec![8],
            _ => Vec::new(),
        }
    }

    /// Order of the group of simple components.
    pub fn group_order(self) -> usize {
        match self {
            I(0) => 1,
            I(n) => n as usize,
            IStar(_) => 4,
            II | IIStar => 1,
            III | IIIStar => 2,
            IV | IVStar => 3,
        }
    }

    /// Root-lattice node of a simple component label (0 is the identity
    /// component and has no node). Labels: I_n by cyclic index; I_n^* as
    /// 1 = near, 2 and 3 = far; IV, IV* as 1, 2; III, III* as 1.
    pub fn node_of(self, label: usize) -> Option<usize> {
        if label == 0 || label >= self.group_order() {
            return None;
        }
        Some(match self {
            I(_) | III | IV => label,
            IStar(n) => match label {
                1 => 1,
                2 => n as usize + 3,
                _ => n as usize + 4,
            },
            IVStar => [0, 1, 6][label],
            IIIStar => 7,
            _ => return None,
        })
    }

    /// Local height correction contr_v(P, Q) for sections meeting the
    /// simple components `a` and `b`.
    pub fn pair_contribution(self, a: usize, b: usize) -> Result<BigRational> {
        let (na, nb) = match (self.validate(a)?, self.validate(b)?) {
            (Some(x), Some(y)) => (x, y),
            _ => return Ok(BigRational::zero()),
        };
        let g = lattice_core::matrix::to_rat(&self.root_lattice().gram_big());
        let inv = lattice_core::matrix::inverse_q(&g).expect("root lattices are nondegenerate");
        Ok(-inv[na - 1][nb - 1].clone())
    }

    pub fn contribution(self, label: usize) -> Result<BigRational> {
        self.pair_contribution(label, label)
    }

    /// Contributions of every simple component.
    pub fn contribution_table(self) -> BTreeMap<usize, BigRational> {
        (0..self.group_order()).map(|i| (i, self.contribution(i).expect("valid label"))).collect()
    }

    fn validate(self, label: usize) -> Result<Option<usize>> {
        if label >= self.group_order() {
            return Err(Error::Invalid(format!("component {label} is not a simple component of {self}")));
        }
        Ok(self.node_of(label))
    }

    /// Sum of simple components in the component group.
    pub fn component_add(self, a: usize, b: usize) -> Result<usize> {
        self.validate(a)?;
        self.validate(b)?;
        let n = self.group_order();
        Ok(match self {
            IStar(k) if k % 2 == 0 => a ^ b,
            IStar(_) => {
                // ℤ/4 with the near component of order 2
                let m = [0usize, 2, 1, 3];
                m[(m[a] + m[b]) % 4]
            }
            _ => (a + b) % n,
        })
    }

    /// Inverse in the group of simple components.
    pub fn component_neg(self, a: usize) -> Result<usize> {
        self.validate(a)?;
        for b in 0..self.group_order() {
            if self.component_add(a, b)? == 0 {
                return Ok(b);
            }
        }
        unreachable!("component group is a group")
    }

    /// Type after a quadratic twist ramified at this place.
    pub fn twisted(self) -> KodairaType {
        match self {
            I(n) => IStar(n),
            IStar(n) => I(n),
            II => IVStar,
            IVStar => II,
            III => IIIStar,
            IIIStar => III,
            IV => IIStar,
            IIStar => IV,
        }
    }

    /// Type after a base change ramified to order 2 at this place.
    pub fn ramified_pullback(self) -> KodairaType {
        match self {
            I(n) | IStar(n) => I(2 * n),
            II => IV,
            III | IIIStar => IStar(0),
            IV | IIStar => IVStar,
            IVStar => IV,
        }
    }

    /// Kodaira type from the valuations of c4, c6 and Δ of a model that is
    /// minimal at the place (residue characteristic 0). `None` stands for
    /// a vanishing invariant.
    pub fn from_valuations(v4: Option<u32>, v6: Option<u32>, vd: u32) -> Result<KodairaType> {
        let inf = u32::MAX;
        let (a, b) = (v4.unwrap_or(inf), v6.unwrap_or(inf));
        if vd == 0 {
            return Ok(I(0));
        }
        if a == 0 {
            return Ok(I(vd));
        }
        if vd > 6 && a == 2 && b == 3 {
            return Ok(IStar(vd - 6));
        }
        Ok(match vd {
            2 => II,
            3 => III,
            4 => IV,
            6 => IStar(0),
            8 => IVStar,
            9 => IIIStar,
            10 => IIStar,
            _ => {
                return Err(Error::Invalid(format!("no Kodaira type for valuations (c4: {v4:?}, c6: {v6:?}, Δ: {vd})")))
            }
        })
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            I(n) => write!(f, "I{n}"),
            IStar(n) => write!(f, "I{n}*"),
            II => write!(f, "II"),
            III => write!(f, "III"),
            IV => write!(f, "IV"),
            IVStar => write!(f, "IV*"),
            IIIStar => write!(f, "III*"),
            IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        Ok(match s.as_str() {
            "II" => II,
            "III" => III,
            "IV" => IV,
            "IV*" => IVStar,
            "III*" => IIIStar,
            "II*" => IIStar,
            _ => {
                let rest = s.strip_prefix('I').ok_or_else(|| Error::Parse(format!("unknown Kodaira type `{s}`")))?;
                let (num, star) = match rest.strip_suffix('*') {
                    Some(r) => (r, true),
                    None => (rest, false),
                };
                let n: u32 = num.parse().map_err(|_| Error::Parse(format!("unknown Kodaira type `{s}`")))?;
                if star {
                    IStar(n)
                } else {
                    I(n)
                }
            }
        })
    }
}

/// A place of ℙ¹ over ℚ, or a label for an abstract geometric fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Place {
    /// Monic irreducible polynomial.
    Finite(RatPoly),
    Infinity,
    /// Named fiber without a model (geometric bookkeeping only).
    Label(String),
}

impl Place {
    /// Number of geometric points.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(1),
            _ => 1,
        }
    }

    /// The rational point t = r, when the place has degree 1.
    pub fn rational_point(&self) -> Option<BigRational> {
        match self {
            Place::Finite(p) if p.degree() == Some(1) => Some(-p.coeff(0)),
            _ => None,
        }
    }

    fn sort_key(&self) -> (u8, usize, RatPoly, String) {
        match self {
            Place::Finite(p) => (0, p.degree().unwrap_or(0), p.clone(), String::new()),
            Place::Infinity => (1, 0, RatPoly::zero(), String::new()),
            Place::Label(s) => (2, 0, RatPoly::zero(), s.clone()),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => match self.rational_point() {
                Some(r) => write!(f, "t={r}"),
                None => write!(f, "{p}=0"),
            },
            Place::Infinity => write!(f, "t=∞"),
            Place::Label(s) => write!(f, "{s}"),
        }
    }
}

/// Singular (or smooth) fiber over a place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberData {
    pub place: Place,
    pub kodaira: KodairaType,
    /// Valuation of the minimal discriminant.
    pub ord_disc: u32,
    /// Euler number of one geometric fiber.
    pub euler_contribution: u32,
    pub component_count: u32,
    pub local_contribution_table: BTreeMap<usize, BigRational>,
}

impl FiberData {
    pub fn new(place: Place, kodaira: KodairaType, ord_disc: u32) -> Self {
        FiberData {
            place,
            kodaira,
            ord_disc,
            euler_contribution: kodaira.euler(),
            component_count: kodaira.component_count(),
            local_contribution_table: kodaira.contribution_table(),
        }
    }

    /// Geometric fiber without a model, e.g. `FiberData::abstract_fiber("v1", I(3))`.
    pub fn abstract_fiber(label: &str, kodaira: KodairaType) -> Self {
        Self::new(Place::Label(label.into()), kodaira, kodaira.euler())
    }

    /// Number of geometric fibers represented.
    pub fn multiplicity(&self) -> usize {
        self.place.degree()
    }
}

/// Expand fibers over places of higher degree into geometric copies.
pub fn geometric_fibers(fibers: &[FiberData]) -> Vec<FiberData> {
    let mut out = Vec::new();
    for f in fibers {
        for k in 0..f.multiplicity() {
            let mut g = f.clone();
            if f.multiplicity() > 1 {
                g.place = Place::Label(format!("{}#{}", f.place, k + 1));
            }
            out.push(g);
        }
    }
    out
}

/// Σ of Euler numbers over geometric fibers; 12χ for a minimal model.
pub fn euler_number(fibers: &[FiberData]) -> u32 {
    fibers.iter().map(|f| f.euler_contribution * f.multiplicity() as u32).sum()
}
