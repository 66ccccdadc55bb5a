//! Discriminants of pencils of plane cubics.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expr::parse_mpoly;
use crate::fibers::Place;
use crate::poly::RatPoly;

/// Ternary form in x, y, z with coefficients in ℚ[t].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TernaryForm {
    pub terms: BTreeMap<[u32; 3], RatPoly>,
}

impl TernaryForm {
    /// Parse an expression in x, y, z, t.
    pub fn parse(text: &str) -> Result<Self> {
        let m = parse_mpoly(text, &['x', 'y', 'z', 't'])?;
        let mut terms: BTreeMap<[u32; 3], Vec<BigRational>> = BTreeMap::new();
        for (e, c) in m.terms {
            let v = terms.entry([e[0], e[1], e[2]]).or_default();
            let k = e[3] as usize;
            if v.len() <= k {
                v.resize(k + 1, BigRational::zero());
            }
            v[k] = c;
        }
        Ok(TernaryForm {
            terms: terms.into_iter().map(|(k, v)| (k, RatPoly::new(v))).filter(|(_, p)| !p.is_zero()).collect(),
        })
    }

    /// Total degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            let v = r.terms.entry(*e).or_insert_with(RatPoly::zero);
            *v = &*v + c;
            if v.is_zero() {
                r.terms.remove(e);
            }
        }
        r
    }

    fn neg(&self) -> Self {
        TernaryForm { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    fn mul(&self, o: &Self) -> Self {
        let mut r = TernaryForm::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                let v = r.terms.entry(e).or_insert_with(RatPoly::zero);
                *v = &*v + &(c1 * c2);
                if v.is_zero() {
                    r.terms.remove(&e);
                }
            }
        }
        r
    }

    fn diff(&self, i: usize) -> Self {
        let mut r = TernaryForm::default();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                r.terms.insert(e2, c.scale(&BigRational::from_integer(e[i].into())));
            }
        }
        r
    }

    fn coeff(&self, e: [u32; 3]) -> RatPoly {
        self.terms.get(&e).cloned().unwrap_or_else(RatPoly::zero)
    }
}

fn det3(m: &[Vec<TernaryForm>]) -> TernaryForm {
    let minor = |a: usize, b: usize, c: usize, d: usize| m[1][a].mul(&m[2][b]).add(&m[1][c].mul(&m[2][d]).neg());
    m[0][0].mul(&minor(1, 2, 2, 1)).add(&m[0][1].mul(&minor(0, 2, 2, 0)).neg()).add(&m[0][2].mul(&minor(0, 1, 1, 0)))
}

fn det_poly(m: &[Vec<RatPoly>]) -> RatPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = RatPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<RatPoly>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &det_poly(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Discriminant of a ternary cubic (up to a nonzero constant): the
/// resultant of its partial derivatives, computed as the 6×6 determinant
/// of the coefficients of ∂f and ∂H (H the Hessian).
pub fn cubic_discriminant(f: &TernaryForm) -> Result<RatPoly> {
    if f.homogeneous_degree() != Some(3) {
        return Err(Error::Invalid("expected a homogeneous ternary cubic".into()));
    }
    let hess: Vec<Vec<TernaryForm>> = (0..3).map(|i| (0..3).map(|j| f.diff(i).diff(j)).collect()).collect();
    let h = det3(&hess);
    let mons = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [0, 1, 1], [1, 0, 1]];
    let rows: Vec<TernaryForm> = (0..3).map(|i| f.diff(i)).chain((0..3).map(|i| h.diff(i))).collect();
    let m: Vec<Vec<RatPoly>> = rows.iter().map(|r| mons.iter().map(|&e| r.coeff(e)).collect()).collect();
    Ok(det_poly(&m))
}

/// Places of the pencil member F + tG with singular fibers and the
/// multiplicity of the discriminant there (∞ gets 12 − deg).
pub fn cubic_pencil_singular_places(pencil: &TernaryForm) -> Result<(RatPoly, Vec<(Place, u32)>)> {
    let d = cubic_discriminant(pencil)?;
    if d.is_zero() {
        return Err(Error::Invalid("every member of the pencil is singular".into()));
    }
    let (_, factors) = d.factor()?;
    let mut out: Vec<(Place, u32)> = factors.into_iter().map(|(p, m)| (Place::Finite(p), m)).collect();
    let deg = d.degree().unwrap() as u32;
    if deg > 12 {
        return Err(Error::Invalid("pencil coefficients must be linear in t".into()));
    }
    if deg < 12 {
        out.push((Place::Infinity, 12 - deg));
    }
    Ok((d, out))
}
