//! Heights, Shioda–Tate bookkeeping and Néron–Severi lattices.

use elliptic_surfaces::*;
use lattice_core::{discriminant_form, named, orthogonal_complement, qforms_isometric, GramLattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use KodairaType::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn abstract_fibers(kinds: &[KodairaType]) -> Vec<FiberData> {
    kinds.iter().enumerate().map(|(i, k)| FiberData::abstract_fiber(&format!("v{i}"), *k)).collect()
}

fn section(contact: Vec<usize>, po: i64) -> SectionData {
    SectionData::new("Q", contact, po, false)
}

fn torsion(contact: Vec<usize>) -> SectionData {
    SectionData::new("T", contact, 0, true)
}

fn isometric_forms(a: &GramLattice, b: &GramLattice) -> bool {
    qforms_isometric(&discriminant_form(a).unwrap(), &discriminant_form(b).unwrap(), 1_000_000).is_isometric()
}

#[test]
fn shioda_tate_examples() {
    let jac = shioda_tate(&abstract_fibers(&[I(3); 8]), 0, 9).unwrap();
    assert_eq!((jac.rho, jac.det_factor.clone()), (18, q(-81)));
    let y = shioda_tate(&abstract_fibers(&[I(6), I(3), I(2), I(1), I(6), I(3), I(2), I(1)]), 0, 6).unwrap();
    assert_eq!((y.rho, y.det_factor.clone()), (18, q(-36)));
    // places of higher degree count once per geometric fiber
    let x = model::named_model("X3333").unwrap();
    let st = shioda_tate(&x.singular_fibers().unwrap(), 0, 9).unwrap();
    assert_eq!((st.rho, st.det_factor), (10, q(-1)));
    // with a free section the determinant scales by its height
    assert_eq!(y.determinant(&q(3)), q(-108));
}

#[test]
fn extremal_rational_surfaces_have_rank_ten() {
    for (kinds, tors) in [
        (vec![I(3); 4], 9u64),
        (vec![IVStar, I(3), I(1)], 3),
        (vec![IVStar, IV], 3),
        (vec![IIStar, I(1), I(1)], 1),
        (vec![IIStar, II], 1),
        (vec![I(6), I(3), I(2), I(1)], 6),
    ] {
        let st = shioda_tate(&abstract_fibers(&kinds), 0, tors).unwrap();
        assert_eq!(st.rho, 10, "{kinds:?}");
        assert_eq!(st.det_factor, q(-1), "{kinds:?}");
    }
}

#[test]
fn zero_and_torsion_sections_have_height_zero() {
    let f = abstract_fibers(&[I(6), I(3)]);
    let o = SectionData::zero(2, 1);
    assert!(height_pairing(&o, 1, &f).unwrap().is_zero());
    let p = section(vec![2, 1], 1);
    assert!(height_pair(&p, &o, 1, 1, &f).unwrap().is_zero());
    assert_eq!(height_pair(&p, &p, -1, 1, &f).unwrap(), height_pairing(&p, 1, &f).unwrap());
    assert!(height_pairing(&section(vec![0, 0], -2), 1, &f).is_err());
    // (0,0) on X431: IV* and I3 nontrivially
    let x431 = model::named_model("X431").unwrap().singular_fibers().unwrap();
    assert_eq!(x431.iter().map(|f| f.kodaira).collect::<Vec<_>>(), vec![I(1), I(3), IVStar]);
    assert!(height_pairing(&torsion(vec![0, 1, 1]), 1, &x431).unwrap().is_zero());
    // (0,0) on X6321: I6 at the opposite component, I2 nontrivially
    let x6321 = model::named_model("X6321").unwrap().singular_fibers().unwrap();
    assert_eq!(x6321.iter().map(|f| f.kodaira).collect::<Vec<_>>(), vec![I(2), I(3), I(1), I(6)]);
    assert!(height_pairing(&torsion(vec![1, 0, 0, 3]), 1, &x6321).unwrap().is_zero());
    // the 6-torsion generator on X6321
    assert!(height_pairing(&torsion(vec![1, 2, 0, 5]), 1, &x6321).unwrap().is_zero());
    assert!(height_pairing(&section(vec![0, 3], 0), 1, &f).is_err());
}

#[test]
fn twisted_x3333_section_height() {
    let tw = model::named_model("X3333").unwrap().quadratic_twist(&RatPoly::parse("t-1").unwrap()).unwrap();
    let f = tw.singular_fibers().unwrap();
    let kinds: Vec<KodairaType> = f.iter().map(|f| f.kodaira).collect();
    assert_eq!(kinds, vec![IStar(0), I(3), I(3), IStar(3)]);
    assert_eq!(f[2].multiplicity(), 2);
    // I0* nontrivial, the rational I3 nontrivial, I3* at a far component
    let qp = section(vec![1, 1, 0, 2], 0);
    let h = height_pairing(&qp, 2, &f).unwrap();
    assert_eq!(h, q(4) - r(7, 4) - r(2, 3) - q(1));
    assert_eq!(h, r(7, 12));
}

#[test]
fn pulled_back_section_height() {
    // the double cover branched at the I0* and I3* places
    let y = model::named_model("X3333").unwrap().base_change(&RatFunc::parse("1+1/t^2").unwrap()).unwrap();
    let mut kinds: Vec<KodairaType> =
        geometric_fibers(&y.singular_fibers().unwrap()).iter().map(|f| f.kodaira).collect();
    kinds.sort();
    assert_eq!(kinds, vec![I(3), I(3), I(3), I(3), I(3), I(3), I(6)]);
    let f = abstract_fibers(&[I(6), I(3), I(3), I(3), I(3), I(3), I(3)]);
    let h = height_pairing(&section(vec![3, 1, 2, 0, 0, 0, 0], 0), 2, &f).unwrap();
    assert_eq!(h, r(7, 6));
    assert_eq!(h, r(7, 12) * q(2));
}

/// Twist of X6321 by (t−2)(t−3): I0*, I0*, I2, I3, I1, I6.
fn x6321_twist() -> Vec<FiberData> {
    let tw = model::named_model("X6321").unwrap().quadratic_twist(&RatPoly::parse("(t-2)(t-3)").unwrap()).unwrap();
    let f = tw.singular_fibers().unwrap();
    assert_eq!(f.iter().map(|f| f.kodaira).collect::<Vec<_>>(), vec![IStar(0), IStar(0), I(2), I(3), I(1), I(6)]);
    f
}

fn twist_torsion() -> SectionData {
    torsion(vec![1, 1, 1, 0, 0, 3])
}

#[test]
fn x6321_twist_section_heights() {
    let f = x6321_twist();
    assert!(height_pairing(&twist_torsion(), 2, &f).unwrap().is_zero());
    // one I0* away from the torsion component, I6 at the torsion component
    assert_eq!(height_pairing(&section(vec![2, 0, 0, 0, 0, 3], 0), 2, &f).unwrap(), r(3, 2));
    // one I0* away from the torsion component, I6 next to zero, and I3
    assert_eq!(height_pairing(&section(vec![2, 0, 0, 1, 0, 1], 0), 2, &f).unwrap(), r(3, 2));
}

#[test]
fn height_three_sections_on_the_cover() {
    let f = abstract_fibers(&[I(6), I(3), I(2), I(1), I(6), I(3), I(2), I(1)]);
    // an anti-invariant section meets the two copies of a fiber at c and −c
    assert_eq!(height_pairing(&section(vec![3, 0, 0, 0, 3, 0, 0, 0], 1), 2, &f).unwrap(), q(3));
    assert_eq!(height_pairing(&section(vec![1, 1, 0, 0, 5, 2, 0, 0], 1), 2, &f).unwrap(), q(3));
}

#[test]
fn only_two_contact_shapes_of_height_three_halves() {
    let f = x6321_twist();
    let t = twist_torsion();
    let classes = contact_classes(&f, 2, &r(3, 2), 3, std::slice::from_ref(&t)).unwrap();
    assert!(!classes.is_empty());
    let i0 = [0usize, 1];
    let shape = |p: &ContactPattern| -> Option<u8> {
        let hit: Vec<usize> = i0.iter().copied().filter(|&v| p.contact[v] != 0).collect();
        if p.o_intersection != 0 || hit.len() != 1 || p.contact[hit[0]] == t.contact[hit[0]] {
            return None;
        }
        match (p.contact[2], p.contact[3], p.contact[4], p.contact[5]) {
            (0, 0, 0, 3) => Some(1),
            (0, 1 | 2, 0, 1 | 5) => Some(2),
            _ => Some(0),
        }
    };
    let mut seen = std::collections::BTreeSet::new();
    for class in &classes {
        let shapes: Vec<u8> = class.iter().filter_map(shape).collect();
        // every admissible class has a representative meeting exactly one
        // I0* fiber away from the torsion component, of one of two shapes
        assert!(!shapes.is_empty(), "{class:?}");
        assert!(shapes.iter().all(|&s| s == shapes[0] && s != 0), "{class:?}");
        seen.insert(shapes[0]);
    }
    assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![1, 2]);
}

#[test]
fn translation_by_torsion_preserves_height() {
    let f = x6321_twist();
    let p = ContactPattern { contact: vec![2, 0, 0, 0, 0, 3], o_intersection: 0 };
    let moved = translate_by_torsion(&p, &twist_torsion(), 2, &f).unwrap().unwrap();
    assert_eq!(moved.contact, vec![3, 1, 1, 0, 0, 0]);
    assert_eq!(moved.o_intersection, 0);
    let s = section(moved.contact, moved.o_intersection as i64);
    assert_eq!(height_pairing(&s, 2, &f).unwrap(), r(3, 2));
}

fn y6321() -> (Vec<FiberData>, SectionData) {
    let f = abstract_fibers(&[I(6), I(3), I(2), I(1), I(6), I(3), I(2), I(1)]);
    (f, torsion(vec![5, 2, 1, 0, 5, 2, 1, 0]))
}

#[test]
fn y6321_neron_severi() {
    let (f, p) = y6321();
    let ns = build_neron_severi(&f, &[p], 2).unwrap();
    assert_eq!(ns.lattice.rank(), 18);
    assert_eq!(ns.lattice.determinant(), BigInt::from(-36));
    assert_eq!(ns.lattice.signature().unwrap(), (1, 17));
    assert!(ns.lattice.gram().iter().enumerate().all(|(i, row)| row[i] % 2 == 0));
    assert!(isometric_forms(&ns.lattice, &named("U(6)+E8^2").unwrap()));
    // 2^(20−ρ) divides the determinant
    assert_eq!(BigInt::from(-36) % BigInt::from(4), BigInt::zero());
}

/// Sixteen curves spanning E8² in NS(Y6321): the zero section with the
/// identity-side components, and the torsion section with its own.
fn e8_squared(ns: &NeronSeveri) -> Vec<Vec<i64>> {
    let mut v =
        vec![ns.frame_curve(), ns.component(2, 0).unwrap(), ns.component(1, 0).unwrap(), ns.component(1, 1).unwrap()];
    for n in 0..4 {
        v.push(ns.component(0, n).unwrap());
    }
    v.push(ns.adjoined[0].clone());
    v.push(ns.component(6, 1).unwrap());
    v.push(ns.component(5, 2).unwrap());
    v.push(ns.component(5, 1).unwrap());
    for n in [5, 4, 3, 2] {
        v.push(ns.component(4, n).unwrap());
    }
    v.iter().map(|x| ns.coords(x).unwrap()).collect()
}

#[test]
fn y6321_splits_off_e8_squared() {
    let (f, p) = y6321();
    let ns = build_neron_severi(&f, &[p], 2).unwrap();
    let basis = e8_squared(&ns);
    let e = ns.lattice.sublattice(&basis).unwrap();
    assert_eq!(e.determinant(), BigInt::from(1));
    assert_eq!(e.signature().unwrap(), (0, 16));
    let m = orthogonal_complement(&ns.lattice, &basis).unwrap().lattice;
    assert_eq!(m.determinant(), BigInt::from(-36));
    assert!(isometric_forms(&m, &named("U(6)").unwrap()));
}

fn transcendental_form(q_contact: Vec<usize>) -> lattice_core::FiniteQuadraticForm {
    let (f, p) = y6321();
    let ns = build_neron_severi(&f, &[p, section(q_contact, 1)], 2).unwrap();
    assert_eq!(ns.lattice.rank(), 19);
    assert_eq!(ns.lattice.determinant(), BigInt::from(108));
    let m = orthogonal_complement(&ns.lattice, &e8_squared(&ns)).unwrap().lattice;
    assert_eq!(m.rank(), 3);
    discriminant_form(&m).unwrap().negate()
}

#[test]
fn rank_nineteen_transcendental_lattices() {
    let form = |s: &str| discriminant_form(&named(s).unwrap()).unwrap();
    let first = transcendental_form(vec![3, 0, 0, 0, 3, 0, 0, 0]);
    assert!(qforms_isometric(&first, &form("U(3)+<12>"), 1_000_000).is_isometric());
    assert!(!qforms_isometric(&first, &form("U+<108>"), 1_000_000).is_isometric());
    let second = transcendental_form(vec![1, 1, 0, 0, 5, 2, 0, 0]);
    assert!(qforms_isometric(&second, &form("U+<108>"), 1_000_000).is_isometric());
    assert!(!qforms_isometric(&second, &form("U(3)+<12>"), 1_000_000).is_isometric());
}

#[test]
fn inconsistent_glue_is_rejected() {
    let (f, _) = y6321();
    // contacts of height 3 that pair non-integrally with the torsion
    let (_, p) = y6321();
    let e = build_neron_severi(&f, &[p, section(vec![1, 1, 0, 0, 5, 1, 0, 0], 1)], 2).unwrap_err();
    assert!(matches!(e, Error::Glue(_)));
    // a "torsion" section of nonzero height
    let e = build_neron_severi(&f, &[torsion(vec![1, 0, 0, 0, 0, 0, 0, 0])], 2).unwrap_err();
    assert!(matches!(e, Error::Glue(_)));
}

#[test]
fn jacobian_of_the_cover() {
    let f = abstract_fibers(&[I(3); 8]);
    let t1 = torsion(vec![1, 1, 1, 0, 1, 1, 1, 0]);
    let t2 = torsion(vec![0, 1, 2, 1, 0, 1, 2, 1]);
    let ns = build_neron_severi(&f, &[t1, t2], 2).unwrap();
    assert_eq!(ns.lattice.determinant(), BigInt::from(-81));
    assert_eq!(ns.lattice.rank(), 18);
}

#[test]
fn cover_with_bisection() {
    // genus-one fibration with a bisection and the two 3-divisible words
    let ns =
        build_from_multisection(&[I(3); 8], 2, &[vec![1, 1, 1, 1, 1, 1, 0, 0], vec![0, 0, 1, 1, 2, 2, 1, 1]]).unwrap();
    let d = ns.lattice.determinant();
    assert_eq!(d, BigInt::from(-324));
    assert_eq!(ns.lattice.rank(), 18);
    assert_eq!(&d % BigInt::from(4), BigInt::zero());
    assert!(matches!(build_from_multisection(&[I(3); 8], 2, &[vec![1, 0, 0, 0, 0, 0, 0, 0]]), Err(Error::Glue(_))));
}

#[test]
fn projected_multisection_spans_u6_with_the_new_fiber() {
    let (f, p) = y6321();
    let ns = build_neron_severi(&f, &[p], 2).unwrap();
    let basis = e8_squared(&ns);
    let proj = |v: Vec<BigRational>| lattice_core::project_away(&ns.lattice, &basis, &ns.coords(&v).unwrap()).unwrap();
    // the ninth component of the II* around the zero section is the new fiber
    let fiber = proj(ns.component(0, 4).unwrap());
    let d = proj(ns.component(0, 5).unwrap());
    assert!(ns.lattice.pair_rat(&fiber, &fiber).is_zero());
    assert_eq!(ns.lattice.pair_rat(&d, &fiber), q(6));
    assert_eq!(ns.lattice.pair_rat(&d, &d), q(48));
    // the representative D' − 9F of the same coset has square −60
    let shifted: Vec<BigRational> = d.iter().zip(&fiber).map(|(a, b)| a - q(9) * b).collect();
    assert_eq!(ns.lattice.pair_rat(&shifted, &shifted), q(-60));
    // ⟨D', F⟩ is U(6): D' − 4F is isotropic and pairs to 6 with F
    let iso: Vec<BigRational> = d.iter().zip(&fiber).map(|(a, b)| a - q(4) * b).collect();
    assert!(ns.lattice.pair_rat(&iso, &iso).is_zero());
}
