//! Weierstrass models over ℚ(t): invariants, Tate typing, twists and base
//! changes.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibers::{FiberData, KodairaType, Place};
use crate::poly::{RatFunc, RatPoly};

/// y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6 with aᵢ ∈ ℚ[t].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassModel {
    pub a1: RatPoly,
    pub a2: RatPoly,
    pub a3: RatPoly,
    pub a4: RatPoly,
    pub a6: RatPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub b2: RatPoly,
    pub b4: RatPoly,
    pub b6: RatPoly,
    pub b8: RatPoly,
    pub c4: RatPoly,
    pub c6: RatPoly,
    pub disc: RatPoly,
    pub j: RatFunc,
}

fn c(n: i64) -> RatPoly {
    RatPoly::constant(BigRational::from_integer(n.into()))
}

impl WeierstrassModel {
    pub fn new(a1: RatPoly, a2: RatPoly, a3: RatPoly, a4: RatPoly, a6: RatPoly) -> Result<Self> {
        let w = WeierstrassModel { a1, a2, a3, a4, a6 };
        if w.discriminant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(w)
    }

    /// Model from coefficient expressions in t, e.g. `["0", "t^2/4+t-2", "0", "1-t", "0"]`.
    pub fn from_exprs(a: [&str; 5]) -> Result<Self> {
        let p: Vec<RatPoly> = a.iter().map(|s| RatPoly::parse(s)).collect::<Result<_>>()?;
        Self::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone(), p[4].clone())
    }

    pub fn coefficients(&self) -> [&RatPoly; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn discriminant(&self) -> RatPoly {
        let (b2, b4, b6, b8) = self.b_invariants();
        let t1 = &(&(&b2 * &b2) * &b8) * &c(-1);
        let t2 = &(&(&b4 * &b4) * &b4) * &c(-8);
        let t3 = &(&b6 * &b6) * &c(-27);
        let t4 = &(&(&b2 * &b4) * &b6) * &c(9);
        &(&(&t1 + &t2) + &t3) + &t4
    }

    fn b_invariants(&self) -> (RatPoly, RatPoly, RatPoly, RatPoly) {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = &(a1 * a1) + &(a2 * &c(4));
        let b4 = &(a4 * &c(2)) + &(a1 * a3);
        let b6 = &(a3 * a3) + &(a6 * &c(4));
        let b8 =
            &(&(&(&(&(a1 * a1) * a6) + &(&(a2 * a6) * &c(4))) - &(&(a1 * a3) * a4)) + &(&(a2 * a3) * a3)) - &(a4 * a4);
        (b2, b4, b6, b8)
    }

    pub fn invariants(&self) -> Result<Invariants> {
        let (b2, b4, b6, b8) = self.b_invariants();
        let c4 = &(&b2 * &b2) - &(&b4 * &c(24));
        let c6 = &(&(&(&b2 * &b2) * &b2) * &c(-1)) + &(&(&(&b2 * &b4) * &c(36)) - &(&b6 * &c(216)));
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(Error::Singular);
        }
        let j = RatFunc::new(&(&c4 * &c4) * &c4, disc.clone())?;
        Ok(Invariants { b2, b4, b6, b8, c4, c6, disc, j })
    }

    /// Equivalent model y² = x³ + (b2/4)x² + (b4/2)x + b6/4.
    pub fn complete_square(&self) -> WeierstrassModel {
        let (b2, b4, b6, _) = self.b_invariants();
        let quarter = BigRational::new(1.into(), 4.into());
        let half = BigRational::new(1.into(), 2.into());
        WeierstrassModel {
            a1: RatPoly::zero(),
            a2: b2.scale(&quarter),
            a3: RatPoly::zero(),
            a4: b4.scale(&half),
            a6: b6.scale(&quarter),
        }
    }

    /// Quadratic twist by a square-free d ∈ ℚ[t].
    pub fn quadratic_twist(&self, d: &RatPoly) -> Result<WeierstrassModel> {
        if d.is_zero() {
            return Err(Error::Invalid("twist by zero".into()));
        }
        if d.squarefree_decomposition().iter().any(|(_, m)| *m > 1) {
            return Err(Error::Invalid(format!("twist parameter {d} is not square-free")));
        }
        let s = self.complete_square();
        let d2 = d * d;
        WeierstrassModel::new(RatPoly::zero(), &s.a2 * d, RatPoly::zero(), &s.a4 * &d2, &s.a6 * &(&d2 * d))
    }

    /// Pull back along t ↦ r(t), clearing denominators with the weights
    /// (u, u², u³, u⁴, u⁶).
    pub fn base_change(&self, r: &RatFunc) -> Result<WeierstrassModel> {
        if r.is_constant() {
            return Err(Error::Invalid("base change by a constant map".into()));
        }
        let weights = [1usize, 2, 3, 4, 6];
        let k = self
            .coefficients()
            .iter()
            .zip(weights)
            .map(|(a, w)| a.degree().unwrap_or(0).div_ceil(w))
            .max()
            .unwrap_or(0);
        let pull = |a: &RatPoly, w: usize| a.homogeneous_compose(&r.num, &r.den, k * w);
        WeierstrassModel::new(
            pull(&self.a1, 1),
            pull(&self.a2, 2),
            pull(&self.a3, 3),
            pull(&self.a4, 4),
            pull(&self.a6, 6),
        )
    }

    /// Does (x, y) satisfy the equation identically?
    pub fn satisfied_by(&self, x: &RatFunc, y: &RatFunc) -> bool {
        let p = |f: &RatPoly| RatFunc::poly(f.clone());
        let lhs = y.mul(y).add(&p(&self.a1).mul(x).mul(y)).add(&p(&self.a3).mul(y));
        let rhs = x.mul(x).mul(x).add(&p(&self.a2).mul(x).mul(x)).add(&p(&self.a4).mul(x)).add(&p(&self.a6));
        lhs.sub(&rhs).num.is_zero()
    }

    /// Valuations of (c4, c6, Δ) at a place after local minimalization.
    pub fn local_valuations(&self, place: &Place) -> Result<(Option<u32>, Option<u32>, u32)> {
        let inv = self.invariants()?;
        match place {
            Place::Finite(p) => {
                if p.is_constant() {
                    return Err(Error::Invalid("place must be non-constant".into()));
                }
                let v = |f: &RatPoly| (!f.is_zero()).then(|| f.valuation(p));
                let (v4, v6, vd) = (v(&inv.c4), v(&inv.c6), inv.disc.valuation(p));
                let e = [v4.map(|x| x / 4), v6.map(|x| x / 6), Some(vd / 12)].into_iter().flatten().min().unwrap();
                Ok((v4.map(|x| x - 4 * e), v6.map(|x| x - 6 * e), vd - 12 * e))
            }
            Place::Infinity => {
                let deg = |f: &RatPoly| f.degree().map(|d| d as u32);
                let (d4, d6, dd) = (deg(&inv.c4), deg(&inv.c6), deg(&inv.disc).unwrap());
                let k = [d4.map(|d| d.div_ceil(4)), d6.map(|d| d.div_ceil(6)), Some(dd.div_ceil(12))]
                    .into_iter()
                    .flatten()
                    .max()
                    .unwrap();
                Ok((d4.map(|d| 4 * k - d), d6.map(|d| 6 * k - d), 12 * k - dd))
            }
            Place::Label(_) => Err(Error::Invalid("abstract fibers have no local model".into())),
        }
    }

    /// Kodaira type at a place via Tate's algorithm in residue
    /// characteristic 0.
    pub fn kodaira_type(&self, place: &Place) -> Result<FiberData> {
        if let Place::Finite(p) = place {
            let (_, f) = p.factor()?;
            if f.len() != 1 || f[0].1 != 1 || p.monic() != *p {
                return Err(Error::Invalid(format!("{p} is not monic irreducible")));
            }
        }
        let (v4, v6, vd) = self.local_valuations(place)?;
        let k = KodairaType::from_valuations(v4, v6, vd)?;
        Ok(FiberData::new(place.clone(), k, vd))
    }

    /// All singular fibers: finite places sorted by polynomial, then ∞.
    pub fn singular_fibers(&self) -> Result<Vec<FiberData>> {
        let inv = self.invariants()?;
        let (_, factors) = inv.disc.factor()?;
        let mut places: Vec<Place> = factors.into_iter().map(|(p, _)| Place::Finite(p)).collect();
        places.push(Place::Infinity);
        places.sort();
        let mut out = Vec::new();
        for pl in places {
            let (v4, v6, vd) = self.local_valuations(&pl)?;
            let k = KodairaType::from_valuations(v4, v6, vd)?;
            if k.is_singular() {
                out.push(FiberData::new(pl, k, vd));
            }
        }
        Ok(out)
    }

    /// χ of the surface: (Σ deg(v)·ord_v Δ_min) / 12.
    pub fn chi(&self) -> Result<u32> {
        let e = crate::fibers::euler_number(&self.singular_fibers()?);
        if !e.is_multiple_of(12) {
            return Err(Error::Invalid(format!("Euler number {e} is not divisible by 12")));
        }
        Ok(e / 12)
    }

    pub fn to_file(&self) -> ModelFile {
        let f = |p: &RatPoly| p.to_string();
        ModelFile { name: None, a1: f(&self.a1), a2: f(&self.a2), a3: f(&self.a3), a4: f(&self.a4), a6: f(&self.a6) }
    }
}

/// JSON form: each coefficient is a polynomial expression in t; missing
/// coefficients are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default = "zero_expr")]
    pub a1: String,
    #[serde(default = "zero_expr")]
    pub a2: String,
    #[serde(default = "zero_expr")]
    pub a3: String,
    #[serde(default = "zero_expr")]
    pub a4: String,
    #[serde(default = "zero_expr")]
    pub a6: String,
}

fn zero_expr() -> String {
    "0".into()
}

impl ModelFile {
    pub fn to_model(&self) -> Result<WeierstrassModel> {
        let p = |s: &str| RatPoly::parse(s);
        WeierstrassModel::new(p(&self.a1)?, p(&self.a2)?, p(&self.a3)?, p(&self.a4)?, p(&self.a6)?)
    }
}

pub fn parse_model(text: &str) -> Result<WeierstrassModel> {
    let f: ModelFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_model()
}

/// y² + xy + ty = x³.
pub fn x431() -> WeierstrassModel {
    WeierstrassModel::from_exprs(["1", "0", "t", "0", "0"]).expect("nonsingular")
}

/// y² + ty = x³.
pub fn x44() -> WeierstrassModel {
    WeierstrassModel::from_exprs(["0", "0", "t", "0", "0"]).expect("nonsingular")
}

/// y² + 3t·xy + (t³+1)·y = x³: I3 fibers over t³ = −1 and ∞.
pub fn x3333() -> WeierstrassModel {
    WeierstrassModel::from_exprs(["3t", "0", "t^3+1", "0", "0"]).expect("nonsingular")
}

/// y² = x(x² + (t²/4+t−2)x + 1−t) with the 2-torsion section at (0,0):
/// I3 at 0, I2 at 1, I1 at −8, I6 at ∞.
pub fn x6321() -> WeierstrassModel {
    WeierstrassModel::from_exprs(["0", "t^2/4+t-2", "0", "1-t", "0"]).expect("nonsingular")
}

/// Shipped models by name.
pub fn named_model(name: &str) -> Option<WeierstrassModel> {
    match name {
        "X431" | "X4,3,1" => Some(x431()),
        "X44" | "X4,4" => Some(x44()),
        "X3333" | "X3,3,3,3" => Some(x3333()),
        "X6321" | "X6,3,2,1" => Some(x6321()),
        _ => None,
    }
}

pub const MODEL_NAMES: [&str; 4] = ["X431", "X44", "X3333", "X6321"];

/// Rational t-value as a place.
pub fn place_at(r: &BigRational) -> Place {
    Place::Finite(RatPoly::linear_root(r))
}
