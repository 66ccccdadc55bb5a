//! The one-parameter family of twisted models carrying a section with
//! x-coordinate c(t − a).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::model::WeierstrassModel;
use crate::poly::{rational_sqrt, square_class, RatFunc, RatPoly};

pub const EXCLUDED_B: [i64; 5] = [-8, -2, 0, 1, 10];

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub b: BigRational,
    pub a: BigRational,
    pub c: BigRational,
    /// y² = x(x² + (t−a)(t−b)(t²/4+t−2)x + (t−a)²(t−b)²(1−t)).
    pub model: WeierstrassModel,
    pub x: RatFunc,
    /// Right-hand side evaluated at x = c(t − a).
    pub rhs: RatPoly,
    /// rhs = κ · S² with S monic.
    pub kappa: BigRational,
    pub sqrt: RatPoly,
    /// Square-free integer in the class of κ; 1 iff the section is
    /// defined over ℚ.
    pub square_class: BigInt,
    /// y-coordinate when the section is rational over ℚ.
    pub y: Option<RatFunc>,
}

impl FamilyMember {
    /// rhs = κ·S² holds exactly.
    pub fn verified(&self) -> bool {
        self.rhs == (&self.sqrt * &self.sqrt).scale(&self.kappa)
    }
}

/// Square root of a polynomial, if it is a square in ℚ[t].
pub fn poly_is_square(p: &RatPoly) -> Option<RatPoly> {
    p.sqrt()
}

pub fn family_a(b: &BigRational) -> Result<BigRational> {
    let four = BigRational::from_integer(4.into());
    if *b == four {
        return Err(Error::Excluded("b = 4 makes a undefined".into()));
    }
    let two = BigRational::from_integer(2.into());
    let num = (b + &two) * (b + &two);
    Ok(-(num / (b - four)) / BigRational::from_integer(3.into()))
}

pub fn family_c(b: &BigRational) -> BigRational {
    let one = BigRational::one();
    (b + BigRational::from_integer(8.into())) * (b - &one) * (b - &one) / BigRational::from_integer(27.into())
}

pub fn twist_family_section(b: &BigRational) -> Result<FamilyMember> {
    if EXCLUDED_B.iter().any(|&e| BigRational::from_integer(e.into()) == *b) {
        return Err(Error::Excluded(format!("b = {b} lies in {{-8, -2, 0, 1, 10}}")));
    }
    let a = family_a(b)?;
    let c = family_c(b);
    let d = &RatPoly::linear_root(&a) * &RatPoly::linear_root(b);
    let base_a2 = RatPoly::parse("t^2/4+t-2")?;
    let base_a4 = RatPoly::parse("1-t")?;
    let a2 = &d * &base_a2;
    let a4 = &(&d * &d) * &base_a4;
    let model = WeierstrassModel::new(RatPoly::zero(), a2.clone(), RatPoly::zero(), a4.clone(), RatPoly::zero())?;
    let x = RatPoly::linear_root(&a).scale(&c);
    let rhs = &(&(&(&x * &x) * &x) + &(&(&a2 * &x) * &x)) + &(&a4 * &x);
    if rhs.is_zero() {
        return Err(Error::Invalid("section degenerates to the 2-torsion point".into()));
    }
    let kappa = rhs.leading();
    let sqrt = poly_is_square(&rhs.monic())
        .ok_or_else(|| Error::Invalid(format!("rhs {rhs} is not a constant times a square")))?;
    let y = rational_sqrt(&kappa).map(|r| RatFunc::poly(sqrt.scale(&r)));
    Ok(FamilyMember {
        b: b.clone(),
        a,
        c,
        model,
        x: RatFunc::poly(x),
        square_class: square_class(&kappa).ok_or_else(|| Error::Bound("square class of a large constant".into()))?,
        rhs,
        kappa,
        sqrt,
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn c_formula_vanishes_at_double_root() {
        assert!(family_c(&BigRational::one()).is_zero());
    }
}
