//! Weierstrass invariants, fiber typing, pencils, base change, twists and
//! the twisted family, on the shipped models.

use elliptic_surfaces::family::{family_a, family_c, EXCLUDED_B};
use elliptic_surfaces::model::place_at;
use elliptic_surfaces::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use KodairaType::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn p(s: &str) -> RatPoly {
    RatPoly::parse(s).unwrap()
}

fn model(name: &str) -> WeierstrassModel {
    named_model(name).unwrap()
}

/// (place, type) pairs rendered as strings, in place order.
fn fiber_list(w: &WeierstrassModel) -> Vec<(String, KodairaType)> {
    w.singular_fibers().unwrap().iter().map(|f| (f.place.to_string(), f.kodaira)).collect()
}

fn geometric_types(w: &WeierstrassModel) -> Vec<KodairaType> {
    let mut v: Vec<KodairaType> = geometric_fibers(&w.singular_fibers().unwrap()).iter().map(|f| f.kodaira).collect();
    v.sort();
    v
}

#[test]
fn discriminants_of_shipped_models() {
    // hand expansions of the standard formulas
    assert_eq!(model("X44").discriminant(), p("-27t^4"));
    assert_eq!(model("X431").discriminant(), p("t^3(1-27t)"));
    assert_eq!(model("X3333").discriminant(), p("-27(t+1)^3(t^2-t+1)^3"));
    assert_eq!(model("X6321").discriminant(), p("t^3(t-1)^2(t+8)"));
    // X44 is isotrivial with j = 0
    assert_eq!(model("X44").invariants().unwrap().j, RatFunc::poly(RatPoly::zero()));
    let x431 = model("X431").invariants().unwrap();
    assert_eq!(x431.c4, p("1-24t"));
    assert_eq!(x431.j.den, p("t^4-t^3/27"));
}

#[test]
fn singular_discriminant_is_rejected() {
    let e = WeierstrassModel::from_exprs(["0", "0", "0", "0", "0"]).unwrap_err();
    assert!(matches!(e, Error::Singular));
    let e = WeierstrassModel::from_exprs(["0", "t", "0", "0", "0"]).unwrap_err();
    assert!(matches!(e, Error::Singular));
}

#[test]
fn x431_fibers() {
    let w = model("X431");
    assert_eq!(w.kodaira_type(&Place::Infinity).unwrap().kodaira, IVStar);
    assert_eq!(w.kodaira_type(&place_at(&q(0))).unwrap().kodaira, I(3));
    assert_eq!(w.kodaira_type(&place_at(&r(1, 27))).unwrap().kodaira, I(1));
    assert_eq!(fiber_list(&w), vec![("t=1/27".into(), I(1)), ("t=0".into(), I(3)), ("t=∞".into(), IVStar)]);
    assert_eq!(euler_number(&w.singular_fibers().unwrap()), 12);
    assert_eq!(w.chi().unwrap(), 1);
}

#[test]
fn x44_fibers() {
    let w = model("X44");
    assert_eq!(fiber_list(&w), vec![("t=0".into(), IV), ("t=∞".into(), IVStar)]);
    let f0 = w.kodaira_type(&place_at(&q(0))).unwrap();
    assert_eq!((f0.ord_disc, f0.euler_contribution, f0.component_count), (4, 4, 3));
}

#[test]
fn x6321_and_x3333_fibers() {
    assert_eq!(
        fiber_list(&model("X6321")),
        vec![("t=1".into(), I(2)), ("t=0".into(), I(3)), ("t=-8".into(), I(1)), ("t=∞".into(), I(6))]
    );
    let w = model("X3333");
    let f = w.singular_fibers().unwrap();
    assert_eq!(f.len(), 3);
    assert_eq!(f[1].place.degree(), 2);
    assert_eq!(geometric_types(&w), vec![I(3); 4]);
    assert_eq!(euler_number(&f), 12);
}

#[test]
fn smooth_place_and_reducible_place() {
    let w = model("X431");
    let f = w.kodaira_type(&place_at(&q(5))).unwrap();
    assert_eq!(f.kodaira, I(0));
    assert!(w.kodaira_type(&Place::Finite(p("t^2-1"))).is_err());
    assert!(w.kodaira_type(&Place::Finite(p("2t"))).is_err());
}

#[test]
fn fiber_data_tables() {
    let cases = [(I(5), 5), (IStar(2), 8), (II, 2), (III, 3), (IV, 4), (IVStar, 8), (IIIStar, 9), (IIStar, 10)];
    for (k, e) in cases {
        assert_eq!(k.euler(), e, "{k}");
    }
    let t = I(5).contribution_table();
    assert_eq!(t[&1], r(4, 5));
    assert_eq!(t[&2], r(6, 5));
    let t = IStar(3).contribution_table();
    assert_eq!(t[&1], q(1));
    assert_eq!(t[&2], r(7, 4));
    assert_eq!(III.contribution(1).unwrap(), r(1, 2));
    assert_eq!(IIIStar.contribution(1).unwrap(), r(3, 2));
    assert_eq!(IV.contribution(2).unwrap(), r(2, 3));
    assert_eq!(IVStar.contribution(1).unwrap(), r(4, 3));
    assert_eq!(II.contribution_table().into_iter().collect::<Vec<_>>(), vec![(0, q(0))]);
    assert_eq!(IIStar.group_order(), 1);
    assert_eq!("I3*".parse::<KodairaType>().unwrap(), IStar(3));
    assert_eq!("IV*".parse::<KodairaType>().unwrap(), IVStar);
    assert_eq!(IStar(0).to_string(), "I0*");
}

fn pencil_places(text: &str) -> (RatPoly, Vec<(String, u32)>) {
    let (d, places) = cubic_pencil_singular_places(&TernaryForm::parse(text).unwrap()).unwrap();
    (d, places.into_iter().map(|(pl, m)| (pl.to_string(), m)).collect())
}

#[test]
fn x6321_pencil_discriminant() {
    let (d, places) = pencil_places("(x+y)(y+z)(z+x)+t xyz");
    assert_eq!(d, p("-13824 t^3(t-1)^2(t+8)"));
    assert_eq!(places, vec![("t=1".into(), 2), ("t=0".into(), 3), ("t=-8".into(), 1), ("t=∞".into(), 6)]);
}

#[test]
fn hesse_pencil_discriminant() {
    let (d, places) = pencil_places("x^3+y^3+z^3+3t xyz");
    assert_eq!(d, p("272097792(t^3+1)^3"));
    assert_eq!(places, vec![("t=-1".into(), 3), ("t^2 - t + 1=0".into(), 3), ("t=∞".into(), 3)]);
    // the smooth Fermat member
    assert_ne!(d.eval(&q(0)), q(0));
}

#[test]
fn base_change_by_identity() {
    for name in model::MODEL_NAMES {
        let w = model(name);
        let same = w.base_change(&RatFunc::parse("t").unwrap()).unwrap();
        assert_eq!(same.invariants().unwrap().j, w.invariants().unwrap().j);
        assert_eq!(fiber_list(&same), fiber_list(&w));
    }
    assert!(model("X44").base_change(&RatFunc::parse("3").unwrap()).is_err());
}

#[test]
fn x3333_quadratic_base_change() {
    // t ↦ (t²+1)/t branches over ±2, both smooth places
    let y = model("X3333").base_change(&RatFunc::parse("(t^2+1)/t").unwrap()).unwrap();
    assert_eq!(geometric_types(&y), vec![I(3); 8]);
    assert_eq!(euler_number(&y.singular_fibers().unwrap()), 24);
    assert_eq!(y.chi().unwrap(), 2);
}

#[test]
fn x6321_base_change_doubles_fibers() {
    let y = model("X6321").base_change(&RatFunc::parse("1-2(t-1)(t-3)/t").unwrap()).unwrap();
    assert_eq!(geometric_types(&y), vec![I(1), I(1), I(2), I(2), I(3), I(3), I(6), I(6)]);
    assert_eq!(euler_number(&y.singular_fibers().unwrap()), 24);
}

#[test]
fn x3333_twist() {
    let w = model("X3333");
    let tw = w.quadratic_twist(&p("t-1")).unwrap();
    assert_eq!(geometric_types(&tw), vec![I(3), I(3), I(3), IStar(0), IStar(3)]);
    assert_eq!(tw.kodaira_type(&Place::Infinity).unwrap().kodaira, IStar(3));
    assert_eq!(tw.kodaira_type(&place_at(&q(1))).unwrap().kodaira, IStar(0));
    assert_eq!(euler_number(&tw.singular_fibers().unwrap()), 9 + 3 * 3 + 6);
    assert_eq!(tw.chi().unwrap(), 2);
    assert_eq!(tw.invariants().unwrap().j, w.invariants().unwrap().j);
    let back = tw.quadratic_twist(&p("t-1")).unwrap();
    assert_eq!(back.invariants().unwrap().j, w.invariants().unwrap().j);
    assert_eq!(geometric_types(&back), geometric_types(&w));
}

#[test]
fn twist_requires_squarefree() {
    assert!(matches!(model("X3333").quadratic_twist(&p("(t-1)^2")), Err(Error::Invalid(_))));
    assert!(model("X3333").quadratic_twist(&p("0")).is_err());
}

#[test]
fn x6321_twist_has_two_i0_star() {
    let tw = model("X6321").quadratic_twist(&p("(t-2)(t-3)")).unwrap();
    assert_eq!(geometric_types(&tw), vec![I(1), I(2), I(3), I(6), IStar(0), IStar(0)]);
    assert_eq!(tw.chi().unwrap(), 2);
}

#[test]
fn torsion_points_lie_on_models() {
    let zero = RatFunc::poly(RatPoly::zero());
    assert!(model("X431").satisfied_by(&zero, &zero));
    assert!(model("X44").satisfied_by(&zero, &zero));
    assert!(model("X6321").satisfied_by(&zero, &zero));
    let one = RatFunc::poly(RatPoly::one());
    assert!(!model("X6321").satisfied_by(&one, &zero));
}

#[test]
fn model_file_round_trip() {
    let text = r#"{"name": "X431", "a1": "1", "a3": "t"}"#;
    let w = parse_model(text).unwrap();
    assert_eq!(w, model("X431"));
    let json = serde_json::to_string(&w.to_file()).unwrap();
    assert_eq!(parse_model(&json).unwrap(), w);
    assert!(matches!(parse_model("{\"a1\": 3}"), Err(Error::Parse(_))));
}

#[test]
fn family_member_b2() {
    let m = twist_family_section(&q(2)).unwrap();
    assert_eq!(m.a, r(8, 3));
    assert_eq!(m.c, r(10, 27));
    assert!(m.verified());
    // independent expansion: rhs = −5·(3t−8)⁴(21t−32)²/3¹²
    assert_eq!(m.rhs, p("-5(3t-8)^4(21t-32)^2/531441"));
    assert_eq!(m.square_class, BigInt::from(-5));
    assert_eq!(m.y, None);
    let s = poly_is_square(&m.rhs.scale(&r(-1, 5))).unwrap();
    assert_eq!(&s * &s, m.rhs.scale(&r(-1, 5)));
    assert_eq!(poly_is_square(&m.rhs), None);
}

#[test]
fn family_member_with_rational_section() {
    let m = twist_family_section(&q(8)).unwrap();
    assert_eq!(m.a, r(-25, 3));
    assert_eq!(m.c, r(784, 27));
    assert!(m.verified());
    assert_eq!(m.square_class, BigInt::from(1));
    let y = m.y.clone().unwrap();
    assert!(m.model.satisfied_by(&m.x, &y));
}

#[test]
fn family_excluded_values() {
    for b in EXCLUDED_B {
        assert!(matches!(twist_family_section(&q(b)), Err(Error::Excluded(_))), "b = {b}");
    }
    assert_eq!(family_a(&q(-2)).unwrap(), q(0));
    assert!(family_a(&q(4)).is_err());
    assert_eq!(family_c(&q(1)), q(0));
}

#[test]
fn family_fibers() {
    let m = twist_family_section(&q(8)).unwrap();
    assert_eq!(geometric_types(&m.model), vec![I(1), I(2), I(3), I(6), IStar(0), IStar(0)]);
}

#[test]
fn polynomial_square_roots() {
    assert_eq!(poly_is_square(&p("t^2+2t+1")), Some(p("t+1")));
    assert_eq!(poly_is_square(&p("4t^4/9")), Some(p("2t^2/3")));
    assert_eq!(poly_is_square(&p("t^2+1")), None);
    assert_eq!(poly_is_square(&p("2t^2")), None);
    assert_eq!(poly_is_square(&p("t^3")), None);
    assert_eq!(poly_is_square(&RatPoly::zero()), Some(RatPoly::zero()));
}

#[test]
fn factoring_over_q() {
    let (lead, f) = p("-27(t+1)^3(t^2-t+1)^3").factor().unwrap();
    assert_eq!(lead, q(-27));
    assert_eq!(f, vec![(p("t+1"), 3), (p("t^2-t+1"), 3)]);
    let (_, f) = p("(t^2+1)(t^2+2)(t^4+t+1)").factor().unwrap();
    assert_eq!(f.len(), 3);
    let (_, f) = p("t^4+4").factor().unwrap();
    assert_eq!(f, vec![(p("t^2-2t+2"), 1), (p("t^2+2t+2"), 1)]);
    assert_eq!(p("6t^2-5t+1").rational_roots().unwrap(), vec![r(1, 3), r(1, 2)]);
}

#[test]
fn expression_parsing() {
    assert_eq!(p("3t^2 - (t+1)(t-1)"), p("2t^2+1"));
    assert!(RatPoly::parse("t^").is_err());
    assert!(RatPoly::parse("x+1").is_err());
    assert_eq!(RatFunc::parse("(t^2-1)/(t-1)").unwrap(), RatFunc::poly(p("t+1")));
}
