//! Randomized checks: the c4/c6/Δ identity, and the fiber transformation
//! rules under quadratic base change and quadratic twist on every shipped
//! model.

use elliptic_surfaces::model::MODEL_NAMES;
use elliptic_surfaces::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn poly(coeffs: &[i64]) -> RatPoly {
    RatPoly::from_ints(coeffs)
}

/// Multiset of singular geometric fiber types.
fn geometric_types(w: &WeierstrassModel) -> Vec<KodairaType> {
    let mut v: Vec<KodairaType> = geometric_fibers(&w.singular_fibers().unwrap()).iter().map(|f| f.kodaira).collect();
    v.sort();
    v
}

/// Type of the fiber of `w` over the rational point `p` (`None` = ∞).
fn type_at(w: &WeierstrassModel, p: Option<&BigRational>) -> KodairaType {
    let place = match p {
        Some(r) => model::place_at(r),
        None => Place::Infinity,
    };
    w.kodaira_type(&place).unwrap().kodaira
}

fn model_strategy() -> impl Strategy<Value = WeierstrassModel> {
    (0..MODEL_NAMES.len()).prop_map(|i| named_model(MODEL_NAMES[i]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn c4_c6_discriminant_identity(a in prop::collection::vec(prop::collection::vec(-5i64..=5, 0..4), 5)) {
        let c: Vec<RatPoly> = a.iter().map(|x| poly(x)).collect();
        let disc_zero = {
            let w = WeierstrassModel::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone(), c[4].clone());
            match w {
                Ok(w) => {
                    let inv = w.invariants().unwrap();
                    let lhs = inv.disc.scale(&q(1728));
                    let rhs = &inv.c4.pow(3) - &inv.c6.pow(2);
                    prop_assert_eq!(lhs, rhs);
                    prop_assert_eq!(&inv.j.num * &inv.disc, &inv.c4.pow(3) * &inv.j.den);
                    false
                }
                Err(Error::Singular) => true,
                Err(e) => panic!("unexpected error {e}"),
            }
        };
        if disc_zero {
            // the only failure mode is an identically vanishing discriminant
            let b2 = &(&c[0] * &c[0]) + &c[1].scale(&q(4));
            let b4 = &(&c[0] * &c[2]) + &c[3].scale(&q(2));
            let b6 = &(&c[2] * &c[2]) + &c[4].scale(&q(4));
            let c4 = &(&b2 * &b2) - &b4.scale(&q(24));
            let c6 = &(&(&b2 * &b4).scale(&q(36)) - &b2.pow(3)) - &b6.scale(&q(216));
            prop_assert!((&c4.pow(3) - &c6.pow(2)).is_zero());
        }
    }

    #[test]
    fn quadratic_base_change_rule(
        w in model_strategy(),
        m in (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3).prop_filter("invertible", |(a, b, c, d)| a * d - b * c != 0),
    ) {
        // r = μ(t²) with μ(s) = (a s + b)/(c s + d): branched over μ(0) and μ(∞)
        let (a, b, c, d) = m;
        let r = RatFunc::new(poly(&[b, 0, a]), poly(&[d, 0, c])).unwrap();
        let pulled = w.base_change(&r).unwrap();
        let branch = |num: i64, den: i64| if den == 0 { None } else { Some(BigRational::new(num.into(), den.into())) };
        let branch_points = [branch(b, d), branch(a, c)];
        let mut expected = Vec::new();
        for f in geometric_fibers(&w.singular_fibers().unwrap()) {
            let pt = match &f.place {
                Place::Infinity => Some(None),
                p => p.rational_point().map(Some),
            };
            let ramified = pt.as_ref().is_some_and(|p| branch_points.iter().any(|bp| bp.as_ref() == p.as_ref()));
            if ramified {
                expected.push(f.kodaira.ramified_pullback());
            } else {
                expected.push(f.kodaira);
                expected.push(f.kodaira);
            }
        }
        expected.retain(|k| k.is_singular());
        expected.sort();
        prop_assert_eq!(geometric_types(&pulled), expected);
        prop_assert_eq!(pulled.invariants().unwrap().j, w.invariants().unwrap().j.compose(&r).unwrap());
    }

    #[test]
    fn quadratic_twist_rule(w in model_strategy(), pn in -20i64..=20, pd in 1i64..=6) {
        // d = t − p ramifies at p and at ∞
        let p = BigRational::new(BigInt::from(pn), BigInt::from(pd));
        let d = RatPoly::new(vec![-p.clone(), q(1)]);
        let tw = w.quadratic_twist(&d).unwrap();
        prop_assert_eq!(tw.invariants().unwrap().j, w.invariants().unwrap().j);
        prop_assert_eq!(type_at(&tw, Some(&p)), type_at(&w, Some(&p)).twisted());
        prop_assert_eq!(type_at(&tw, None), type_at(&w, None).twisted());
        let mut expected = Vec::new();
        for f in geometric_fibers(&w.singular_fibers().unwrap()) {
            let at_branch = f.place == Place::Infinity || f.place.rational_point().as_ref() == Some(&p);
            if !at_branch {
                expected.push(f.kodaira);
            }
        }
        for k in [type_at(&w, Some(&p)).twisted(), type_at(&w, None).twisted()] {
            if k.is_singular() {
                expected.push(k);
            }
        }
        expected.sort();
        prop_assert_eq!(geometric_types(&tw), expected);
        // twisting twice is trivial up to isomorphism
        let back = tw.quadratic_twist(&d).unwrap();
        prop_assert_eq!(geometric_types(&back), geometric_types(&w));
    }
}
