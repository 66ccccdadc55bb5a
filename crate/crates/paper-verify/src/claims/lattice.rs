//! Lattice claims: 4A₂ and its overlattices, root embeddings, and the
//! discriminant-form identifications of Néron–Severi and transcendental
//! lattices.

use std::collections::BTreeSet;

use divisor_geometry::models::{f3333_cover, f431_cover};
use elliptic_surfaces::{build_neron_severi, SectionData};
use lattice_core::{
    admits_orthogonal_a2s, discriminant_group, glue_vectors, isotropic_subgroups, named, orthogonal_complement,
    overlattice, project_away, roots_of, scale, GramLattice, DEFAULT_SEARCH_BOUND,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{checked_isometry, e8_squared, err, form_of, is_even, y6321_fibers, y6321_ns, Check};
use crate::evidence::{big, flag, int, ints, rat, text, uint, uints};
use crate::Evidence;

fn lat(s: &str) -> Result<GramLattice, String> {
    named(s).map_err(err)
}

pub(super) fn four_a2_discriminant() -> Check {
    let l = lat("4A2")?;
    let det = l.determinant();
    let g = discriminant_group(&l).map_err(err)?;
    let mut ev = Evidence::new();
    ev.value("determinant", big(&det))
        .value("invariant_factors", uints(&g.invariant_factors))
        .check("det = 81", det == BigInt::from(81))
        .check("group (Z/3)^4", g.invariant_factors == [3, 3, 3, 3])
        .computed(format!("det {det}, invariant factors {:?}", g.invariant_factors));
    Ok(ev)
}

pub(super) fn four_a2_overlattice_index() -> Check {
    let l = lat("4A2")?;
    let q = form_of(&l)?;
    let subs = isotropic_subgroups(&q, DEFAULT_SEARCH_BOUND).map_err(err)?;
    let indices: BTreeSet<u64> = subs.iter().map(|s| s.order() as u64).filter(|&o| o > 1).collect();
    // oracle: isotropic order-3 subgroups are exactly ± pairs of nonzero
    // isotropic elements, counted by brute force over the 81 elements
    let isotropic = q.group.elements().filter(|x| x.iter().any(|&c| c != 0) && q.q_num_of(x) == 0).count();
    let order3 = subs.iter().filter(|s| s.order() == 3).count();
    let order9 = subs.iter().filter(|s| s.order() == 9).count();
    let indices_v: Vec<u64> = indices.iter().copied().collect();
    let mut ev = Evidence::new();
    ev.value("indices", uints(&indices_v))
        .value("isotropic_elements", uint(isotropic as u64))
        .value("subgroups_of_order_3", uint(order3 as u64))
        .value("subgroups_of_order_9", uint(order9 as u64))
        .check("index set {3, 9}", indices_v == [3, 9])
        .check("order-3 subgroups = isotropic elements / 2", 2 * order3 == isotropic)
        .check("no isotropic subgroup beyond √81", subs.iter().all(|s| s.order() * s.order() <= 81))
        .computed(format!("indices {indices_v:?} ({order3} of index 3, {order9} of index 9)"));
    Ok(ev)
}

pub(super) fn four_a2_index_nine() -> Check {
    let l = lat("4A2")?;
    let q = form_of(&l)?;
    let subs = isotropic_subgroups(&q, DEFAULT_SEARCH_BOUND).map_err(err)?;
    let mut ev = Evidence::new();
    let mut roots = Vec::new();
    for h in subs.iter().filter(|s| s.order() == 9) {
        let o = overlattice(&l, &glue_vectors(&q.group, h)).map_err(err)?;
        let m = &o.lattice;
        let r = roots_of(m).map_err(err)?.len();
        ev.check("index 9", o.index == BigInt::from(9))
            .check("even", is_even(m))
            .check("unimodular", m.determinant() == BigInt::from(1))
            .check("negative definite of rank 8", m.signature().map_err(err)? == (0, 8))
            .check("240 roots", r == 240);
        roots.push(r as u64);
    }
    ev.check("some index-9 overlattice exists", !roots.is_empty())
        .value("overlattices", uint(roots.len() as u64))
        .value("root_counts", uints(&roots))
        .computed(format!("{} index-9 overlattices, root counts {roots:?}", roots.len()));
    Ok(ev)
}

pub(super) fn four_a2_root_embeddings() -> Check {
    let mut ev = Evidence::new();
    for (name, want) in [("D8", false), ("E7+A1", false), ("E8", true)] {
        let rs = roots_of(&lat(name)?).map_err(err)?;
        let w = admits_orthogonal_a2s(&rs, 4);
        ev.value(&format!("{name}_roots"), uint(rs.len() as u64))
            .value(&format!("{name}_admits_4A2"), flag(w.is_some()));
        ev.check(&format!("{name}: 4A2 {}", if want { "embeds" } else { "does not embed" }), w.is_some() == want);
        if let Some(w) = w {
            // the witness really spans 4A₂: Gram of the eight roots
            let vs: Vec<Vec<i64>> = w.iter().flat_map(|p| [p.r.clone(), p.s.clone()]).collect();
            let l = &rs.lattice;
            let gram: Vec<Vec<i64>> = vs.iter().map(|a| vs.iter().map(|b| l.pair(a, b)).collect()).collect();
            ev.check("witness Gram is 4A2", gram == lat("4A2")?.gram());
            ev.value("E8_witness", crate::evidence::list(vs.iter().map(|v| ints(v)).collect()));
        }
    }
    ev.computed("D8: none, E7+A1: none, E8: witness");
    Ok(ev)
}

pub(super) fn tt_scaling() -> Check {
    let t = GramLattice::new(vec![vec![2, 1], vec![1, 4]]).map_err(err)?;
    let s = scale(&t, 3).map_err(err)?;
    let want = vec![vec![6, 3], vec![3, 12]];
    let mut ev = Evidence::new();
    ev.value("scaled", crate::evidence::list(s.gram().iter().map(|r| ints(r)).collect()))
        .value("determinant", big(&s.determinant()))
        .check("gram [[6,3],[3,12]]", s.gram() == want.as_slice())
        .check("det scales by 9", s.determinant() == t.determinant() * 9)
        .computed(format!("{:?}", s.gram()));
    Ok(ev)
}

pub(super) fn u6e8e8_form_isometry() -> Check {
    let a = lat("U(6)+E8^2")?;
    let b = lat("U(2)+A2+E6+E8")?;
    let iso = checked_isometry(&form_of(&a)?, &form_of(&b)?);
    // the glued lattice of the F₄,₃,₁ cover and NS(Y₆,₃,₂,₁) from sections
    let cover = f431_cover().map_err(err)?;
    let to_cover = checked_isometry(&form_of(&cover.ns.lattice)?, &form_of(&b)?);
    let ns = y6321_ns()?;
    let to_ns = checked_isometry(&form_of(&ns.lattice)?, &form_of(&a)?);
    let mut ev = Evidence::new();
    ev.value("det_U6E8E8", big(&a.determinant()))
        .value("det_U2A2E6E8", big(&b.determinant()))
        .value("det_NS_Y6321", big(&ns.lattice.determinant()))
        .value("det_F431_cover", big(&cover.ns.lattice.determinant()))
        .value("isometry_images", iso.images.clone())
        .check("determinants −36", a.determinant() == BigInt::from(-36) && b.determinant() == BigInt::from(-36))
        .check("q(U(6)+E8^2) ≅ q(U(2)+A2+E6+E8)", iso.found && iso.verified)
        .check("F431 cover lattice ≅ q(U(2)+A2+E6+E8)", to_cover.found && to_cover.verified)
        .check("NS(Y6321) from sections ≅ q(U(6)+E8^2)", to_ns.found && to_ns.verified)
        .check(
            "NS(Y6321) rank 18, signature (1,17)",
            ns.lattice.rank() == 18 && ns.lattice.signature().map_err(err)? == (1, 17),
        )
        .computed("explicit isometry of discriminant forms of order 36, verified on all elements");
    Ok(ev)
}

pub(super) fn m_form_a2e6() -> Check {
    let m = f431_cover().map_err(err)?.root_part().map_err(err)?;
    let target = lat("A2+E6")?;
    let iso = checked_isometry(&form_of(&m.lattice)?, &form_of(&target)?);
    let mut ev = Evidence::new();
    ev.value("index", big(&m.index))
        .value("det_M", big(&m.lattice.determinant()))
        .value("isometry_images", iso.images.clone())
        .check("index-3 overlattice of A2^2+E6^2", m.index == BigInt::from(3))
        .check("det M = 9", m.lattice.determinant() == BigInt::from(9))
        .check("M even", is_even(&m.lattice))
        .check("q_M ≅ q(A2+E6)", iso.found && iso.verified)
        .computed("M of det 9 with q_M ≅ q(A2+E6)");
    Ok(ev)
}

pub(super) fn t_y6321() -> Check {
    let ns = y6321_ns()?;
    let t = lat("U+U(6)")?;
    let iso = checked_isometry(&form_of(&ns.lattice)?.negate(), &form_of(&t)?);
    let sig = t.signature().map_err(err)?;
    let mut ev = Evidence::new();
    ev.value("det_NS", big(&ns.lattice.determinant()))
        .value("det_T", big(&t.determinant()))
        .value("isometry_images", iso.images.clone())
        .check("rank T = 22 − 18", t.rank() == 22 - ns.lattice.rank())
        .check("signature (2, 2)", sig == (2, 2))
        .check("|det T| = |det NS|", t.determinant() == -ns.lattice.determinant())
        .check("−q_NS ≅ q(U+U(6))", iso.found && iso.verified)
        .computed("T(Y6321) ≅ U+U(6) by discriminant forms");
    Ok(ev)
}

pub(super) fn t_y3333() -> Check {
    let ns = f3333_cover().map_err(err)?.ns.lattice;
    let g = discriminant_group(&ns).map_err(err)?;
    let len3 = g.p_length(3);
    let t = lat("U(3)+U(6)")?;
    let iso = checked_isometry(&form_of(&ns)?.negate(), &form_of(&t)?);
    let m = lat("U+U(2)")?;
    let m3 = scale(&m, 3).map_err(err)?;
    let qm = form_of(&m)?;
    let qu2 = form_of(&lat("U(2)")?)?;
    let qm_iso = checked_isometry(&qm, &qu2);
    let u2_self = checked_isometry(&qu2.negate(), &qu2);
    let mut ev = Evidence::new();
    ev.value("det_NS", big(&ns.determinant()))
        .value("three_length", uint(len3 as u64))
        .value("det_M", big(&m.determinant()))
        .value("invariant_factors_NS", uints(&g.invariant_factors))
        .value("isometry_images", iso.images.clone())
        .check("det NS = −324", ns.determinant() == BigInt::from(-324))
        .check("3-length 4 = rank T", len3 == 4 && t.rank() == 22 - ns.rank())
        .check("det M = 4 = 324 / 3^4", m.determinant() * 81 == -ns.determinant())
        .check("M(3) = U(3)+U(6)", m3.gram() == t.gram())
        .check("q_M ≅ q(U(2)) ≅ −q(U(2))", qm_iso.found && qm_iso.verified && u2_self.found && u2_self.verified)
        .check("−q_NS ≅ q(U(3)+U(6))", iso.found && iso.verified)
        .computed("3-length 4, T = (U+U(2))(3) = U(3)+U(6), isometry of order 324");
    Ok(ev)
}

pub(super) fn u6_multisection_projection() -> Check {
    let ns = y6321_ns()?;
    let basis = e8_squared(&ns)?;
    let e = ns.lattice.sublattice(&basis).map_err(err)?;
    let proj = |v: Vec<BigRational>| -> Result<Vec<BigRational>, String> {
        let c = ns.coords(&v).ok_or("component outside the lattice")?;
        project_away(&ns.lattice, &basis, &c).map_err(err)
    };
    let f = proj(ns.component(0, 4).map_err(err)?)?;
    let d = proj(ns.component(0, 5).map_err(err)?)?;
    let pair = |x: &[BigRational], y: &[BigRational]| ns.lattice.pair_rat(x, y);
    let shift = |k: i64| -> Vec<BigRational> {
        d.iter().zip(&f).map(|(a, b)| a - BigRational::from_integer(k.into()) * b).collect()
    };
    let (ff, df, dd) = (pair(&f, &f), pair(&d, &f), pair(&d, &d));
    let d9 = shift(9);
    let d4 = shift(4);
    let m = orthogonal_complement(&ns.lattice, &basis).map_err(err)?.lattice;
    let u6 = checked_isometry(&form_of(&m)?, &form_of(&lat("U(6)")?)?);
    let mut ev = Evidence::new();
    ev.value("F.F", rat(&ff))
        .value("D'.F", rat(&df))
        .value("D'.D'", rat(&dd))
        .value("(D'-9F)^2", rat(&pair(&d9, &d9)))
        .value("(D'-4F)^2", rat(&pair(&d4, &d4)))
        .value("det_complement", big(&m.determinant()))
        .check(
            "E8^2 unimodular negative definite",
            e.determinant() == BigInt::from(1) && e.signature().map_err(err)? == (0, 16),
        )
        .check("F isotropic", ff.is_zero())
        .check("D'.F = 6", df == BigRational::from_integer(6.into()))
        .check("square −60 attained in D' + ZF", pair(&d9, &d9) == BigRational::from_integer((-60).into()))
        .check("D' − 4F isotropic, so <D', F> = U(6)", pair(&d4, &d4).is_zero())
        .check("complement of E8^2 has q ≅ q(U(6))", u6.found && u6.verified)
        .value("note", text("D'^2 = 48 for this representative; −60 is the square of D' − 9F in the same coset mod F"))
        .computed(format!("F^2 = {ff}, D'.F = {df}, D'^2 = {dd}, (D'−9F)^2 = {}", pair(&d9, &d9)));
    Ok(ev)
}

pub(super) fn rank19_transcendental() -> Check {
    let (f, p) = y6321_fibers();
    let mut ev = Evidence::new();
    let forms = [("U(3)+<12>", lat("U(3)+<12>")?), ("U+<108>", lat("U+<108>")?)];
    for (label, contact, want) in
        [("first", vec![3usize, 0, 0, 0, 3, 0, 0, 0], "U(3)+<12>"), ("second", vec![1, 1, 0, 0, 5, 2, 0, 0], "U+<108>")]
    {
        let q = SectionData::new("Q", contact.clone(), 1, false);
        let ns = build_neron_severi(&f, &[p.clone(), q], 2).map_err(err)?;
        let m = orthogonal_complement(&ns.lattice, &e8_squared(&ns)?).map_err(err)?.lattice;
        let qt = form_of(&m)?.negate();
        let mut matched = Vec::new();
        for (name, l) in &forms {
            let c = super::checked_isometry(&qt, &form_of(l)?);
            if c.found && c.verified {
                matched.push(*name);
            }
        }
        ev.value(&format!("{label}_contact"), uints(&contact.iter().map(|&x| x as u64).collect::<Vec<_>>()))
            .value(&format!("{label}_det_NS"), big(&ns.lattice.determinant()))
            .value(&format!("{label}_T"), text(matched.join(",")))
            .check(
                &format!("{label}: rank 19, det 108"),
                ns.lattice.rank() == 19 && ns.lattice.determinant() == BigInt::from(108),
            )
            .check(&format!("{label}: T ≅ {want} only"), matched == [want]);
    }
    ev.check("U(3)+<12> has det 108 up to sign", forms[0].1.determinant() == BigInt::from(-108))
        .value("det_U3_12", int(-108))
        .computed("height-3 sections give det 108; T = U(3)+<12> and U+<108> for the two contact shapes");
    Ok(ev)
}
