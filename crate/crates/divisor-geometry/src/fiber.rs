//! Fiber divisors and the decomposition D = n·H + D̃ of classes orthogonal
//! to the half-pencil H.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::class::{intersect, DivisorClass};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kodaira {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl Kodaira {
    pub fn is_additive(self) -> bool {
        !matches!(self, Kodaira::I(n) if n >= 1)
    }

    /// Multiplicities of the components (extended Dynkin diagram labels).
    pub fn multiplicities(self) -> Vec<i64> {
        match self {
            Kodaira::I(0) => vec![1],
            Kodaira::I(n) => vec![1; n as usize],
            Kodaira::IStar(n) => {
                let mut m = vec![1; 4];
                m.extend(std::iter::repeat_n(2, n as usize + 1));
                m
            }
            Kodaira::II => vec![1],
            Kodaira::III => vec![1, 1],
            Kodaira::IV => vec![1, 1, 1],
            Kodaira::IVStar => vec![1, 1, 1, 2, 2, 2, 3],
            Kodaira::IIIStar => vec![1, 1, 2, 2, 2, 3, 3, 4],
            Kodaira::IIStar => vec![1, 2, 2, 3, 3, 4, 4, 5, 6],
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::IIStar => write!(f, "II*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IVStar => write!(f, "IV*"),
        }
    }
}

impl FromStr for Kodaira {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("unknown Kodaira type `{s}`"));
        Ok(match t {
            "II" => Kodaira::II,
            "III" => Kodaira::III,
            "IV" => Kodaira::IV,
            "II*" => Kodaira::IIStar,
            "III*" => Kodaira::IIIStar,
            "IV*" => Kodaira::IVStar,
            _ => {
                let rest = t.strip_prefix('I').ok_or_else(bad)?;
                match rest.strip_suffix('*') {
                    Some(n) => Kodaira::IStar(n.parse().map_err(|_| bad())?),
                    None => Kodaira::I(rest.parse().map_err(|_| bad())?),
                }
            }
        })
    }
}

#[derive(Debug, Clone)]
pub struct FiberDivisor {
    pub kind: Kodaira,
    pub components: Vec<DivisorClass>,
    pub multiplicities: Vec<i64>,
    pub half_pencil: bool,
}

impl FiberDivisor {
    pub fn new(
        kind: Kodaira,
        components: Vec<DivisorClass>,
        multiplicities: Vec<i64>,
        half_pencil: bool,
    ) -> Result<Self> {
        if half_pencil && kind.is_additive() {
            return Err(Error::Fiber(format!("additive fiber {kind} cannot be multiple")));
        }
        if components.len() != multiplicities.len() {
            return Err(Error::Fiber("one multiplicity per component required".into()));
        }
        let mut got = multiplicities.clone();
        got.sort_unstable();
        let mut want = kind.multiplicities();
        want.sort_unstable();
        if got != want {
            return Err(Error::Fiber(format!("multiplicities {multiplicities:?} do not match {kind}")));
        }
        Ok(FiberDivisor { kind, components, multiplicities, half_pencil })
    }

    /// The class Σ mᵢΘᵢ (2H, or H for a half-pencil).
    pub fn class(&self) -> Result<DivisorClass> {
        let terms: Vec<(i64, &DivisorClass)> = self.multiplicities.iter().copied().zip(&self.components).collect();
        DivisorClass::sum(&terms)
    }

    /// Multiple of H carried by the fiber: 1 for a half-pencil, else 2.
    pub fn h_weight(&self) -> i64 {
        if self.half_pencil {
            1
        } else {
            2
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub n: i64,
    pub fiber: usize,
    /// Coefficients of D̃ on the components of `fiber`.
    pub coefficients: Vec<i64>,
    pub d_tilde: DivisorClass,
}

/// Write D = n·H + D̃ with D̃ effective, supported on one fiber, and
/// 0 < D̃ < 2H (0 < D̃ < H on a half-pencil). The window pins down the
/// pair; a second admissible shift is reported as an error.
pub fn fiber_decompose(d: &DivisorClass, fibers: &[FiberDivisor], h: &DivisorClass) -> Result<Decomposition> {
    if intersect(d, h)? != 0 {
        return Err(Error::Precondition("D·H ≠ 0".into()));
    }
    for (fi, f) in fibers.iter().enumerate() {
        let expected = h.scaled(f.h_weight());
        if f.class()? != expected {
            return Err(Error::Fiber(format!("fiber {fi} does not sum to {}H", f.h_weight())));
        }
    }
    for (fi, f) in fibers.iter().enumerate() {
        if let Some((n, coefficients)) = solve_on_fiber(d, f, h)? {
            let terms: Vec<(i64, &DivisorClass)> = coefficients.iter().copied().zip(&f.components).collect();
            let d_tilde = DivisorClass::sum(&terms)?;
            return Ok(Decomposition { n, fiber: fi, coefficients, d_tilde });
        }
    }
    Err(Error::NotInSpan)
}

fn to_rat(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

fn solve_on_fiber(d: &DivisorClass, f: &FiberDivisor, h: &DivisorClass) -> Result<Option<(i64, Vec<i64>)>> {
    // drop one simple component: {H} ∪ the rest is then independent
    let drop =
        f.multiplicities.iter().position(|&m| m == 1).ok_or_else(|| Error::Fiber("no simple component".into()))?;
    let keep: Vec<usize> = (0..f.components.len()).filter(|&i| i != drop).collect();
    let mut rows = vec![to_rat(h.coords())];
    rows.extend(keep.iter().map(|&i| to_rat(f.components[i].coords())));
    let Some(x) = lattice_core::matrix::solve_row(&rows, &to_rat(d.coords())) else {
        return Ok(None);
    };
    // the solution must be unique (independent rows) and integral
    if lattice_core::matrix::rank_q(&rows) != rows.len() || x.iter().any(|c| !c.is_integer()) {
        return Ok(None);
    }
    let xi: Vec<i64> = x.iter().map(|c| c.to_integer().to_i64().unwrap_or(i64::MAX)).collect();
    let n0 = xi[0];
    let mut c0 = vec![0i64; f.components.len()];
    for (k, &i) in keep.iter().enumerate() {
        c0[i] = xi[k + 1];
    }
    let zero_d = x[1..].iter().all(Zero::is_zero);
    if zero_d {
        // D is a multiple of H: not fiber-supported in the window
        return Ok(None);
    }
    // shifts t: c = c0 + t·m, n = n0 − t·w
    let bound = c0.iter().map(|c| c.abs()).max().unwrap_or(0) + 2;
    let w = f.h_weight();
    let mut hits = Vec::new();
    for t in -bound..=bound {
        let c: Vec<i64> = c0.iter().zip(&f.multiplicities).map(|(a, m)| a + t * m).collect();
        let inside = c.iter().zip(&f.multiplicities).all(|(a, m)| (0..=*m).contains(a));
        let nonzero = c.iter().any(|&a| a != 0);
        let proper = c != f.multiplicities;
        if inside && nonzero && proper {
            hits.push((n0 - t * w, c));
        }
    }
    match hits.len() {
        0 => Ok(None),
        1 => Ok(hits.pop()),
        _ => Err(Error::Precondition("window admits several decompositions".into())),
    }
}
