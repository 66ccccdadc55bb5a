//! The claim registry and helpers shared by the checks.

mod codes;
mod divisor;
mod ellsurf;
mod lattice;
mod moduli;

use elliptic_surfaces::{build_neron_severi, FiberData, KodairaType, NeronSeveri, SectionData};
use lattice_core::disc::apply_map;
use lattice_core::{discriminant_form, qforms_isometric, FiniteQuadraticForm, GramLattice, Isometry};
use serde_json::Value;

use crate::evidence::{list, uints};
use crate::{Claim, Tag};

type Check = std::result::Result<crate::Evidence, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Search bound for explicit form isometries (group orders up to 324 here).
const ISO_BOUND: u64 = 1_000_000;

/// An isometry q1 → q2 found by search, re-checked generator by generator:
/// q and b values agree, images respect the invariant factors, and the
/// induced map on all elements is a bijection.
struct CheckedIsometry {
    found: bool,
    verified: bool,
    images: Value,
}

fn checked_isometry(q1: &FiniteQuadraticForm, q2: &FiniteQuadraticForm) -> CheckedIsometry {
    let images = match qforms_isometric(q1, q2, ISO_BOUND) {
        Isometry::Isometric { images } => images,
        _ => return CheckedIsometry { found: false, verified: false, images: Value::Null },
    };
    let g1 = &q1.group;
    let g2 = &q2.group;
    let k = g1.len();
    let unit = |i: usize| {
        let mut v = vec![0u64; k];
        v[i] = 1;
        v
    };
    let mut ok = images.len() == k && g1.order() == g2.order();
    for i in 0..k.min(images.len()) {
        ok &= g1.invariant_factors[i].is_multiple_of(g2.order_of(&images[i]));
        ok &= q2.q(&images[i]) == q1.q(&unit(i));
        for j in 0..i {
            ok &= q2.b(&images[i], &images[j]) == q1.b(&unit(i), &unit(j));
        }
    }
    if ok {
        let mut seen = std::collections::HashSet::new();
        for x in g1.elements() {
            seen.insert(apply_map(g1, g2, &images, &x));
        }
        ok = seen.len() as u64 == g1.order();
    }
    CheckedIsometry { found: true, verified: ok, images: list(images.iter().map(|v| uints(v)).collect()) }
}

fn form_of(l: &GramLattice) -> std::result::Result<FiniteQuadraticForm, String> {
    discriminant_form(l).map_err(err)
}

fn abstract_fibers(kinds: &[KodairaType]) -> Vec<FiberData> {
    kinds.iter().enumerate().map(|(i, k)| FiberData::abstract_fiber(&format!("v{i}"), *k)).collect()
}

/// NS of the K3 cover Y₆,₃,₂,₁: fibers I₆ I₃ I₂ I₁ twice, the 6-torsion
/// section meeting them at (5,2,1,0) each, χ = 2.
fn y6321_fibers() -> (Vec<FiberData>, SectionData) {
    use KodairaType::I;
    let f = abstract_fibers(&[I(6), I(3), I(2), I(1), I(6), I(3), I(2), I(1)]);
    (f, SectionData::new("P", vec![5, 2, 1, 0, 5, 2, 1, 0], 0, true))
}

fn y6321_ns() -> std::result::Result<NeronSeveri, String> {
    let (f, p) = y6321_fibers();
    build_neron_severi(&f, &[p], 2).map_err(err)
}

/// Sixteen curves spanning E₈² in NS(Y₆,₃,₂,₁): zero section with the
/// identity-side components, torsion section with its own.
fn e8_squared(ns: &NeronSeveri) -> std::result::Result<Vec<Vec<i64>>, String> {
    let c = |v: usize, n: usize| ns.component(v, n).map_err(err);
    let mut v = vec![ns.frame_curve(), c(2, 0)?, c(1, 0)?, c(1, 1)?];
    for n in 0..4 {
        v.push(c(0, n)?);
    }
    v.push(ns.adjoined[0].clone());
    v.push(c(6, 1)?);
    v.push(c(5, 2)?);
    v.push(c(5, 1)?);
    for n in [5, 4, 3, 2] {
        v.push(c(4, n)?);
    }
    v.iter().map(|x| ns.coords(x).ok_or_else(|| "curve outside the lattice".to_string())).collect()
}

fn is_even(l: &GramLattice) -> bool {
    l.gram().iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
}

pub(crate) static REGISTRY: &[Claim] = &[
    // ---- lattice ----
    Claim {
        id: "4a2-discriminant",
        tag: Tag::Lattice,
        location: "A₂-configurations: the lattice 4A₂ and its discriminant",
        expected: "det(4A2) = 81 = 3^4, discriminant group (Z/3)^4",
        check: Some(lattice::four_a2_discriminant),
    },
    Claim {
        id: "4a2-overlattice-index",
        tag: Tag::Lattice,
        location: "primitive closure of 4A₂ in Num(S)",
        expected: "admissible overlattice indices {3, 9}",
        check: Some(lattice::four_a2_overlattice_index),
    },
    Claim {
        id: "4a2-index9-is-e8",
        tag: Tag::Lattice,
        location: "primitive closure of 4A₂ in the E₈ part of Num(S)",
        expected: "index-9 overlattice even unimodular negative definite of rank 8 with 240 roots",
        check: Some(lattice::four_a2_index_nine),
    },
    Claim {
        id: "4a2-root-embeddings",
        tag: Tag::Lattice,
        location: "II* fiber with one component omitted: D₈, E₇+A₁, E₈",
        expected: "no 4A2 in D8 or E7+A1; 4A2 embeds in E8",
        check: Some(lattice::four_a2_root_embeddings),
    },
    Claim {
        id: "tt-scaling",
        tag: Tag::Lattice,
        location: "rank-19 enhancements: scaled binary form",
        expected: "[[2,1],[1,4]] scaled by 3 is [[6,3],[3,12]]",
        check: Some(lattice::tt_scaling),
    },
    Claim {
        id: "u6e8e8-form-isometry",
        tag: Tag::Lattice,
        location: "NS of the K3 cover Y₆,₃,₂,₁ versus the F₄,₃,₁ cover lattice",
        expected: "q(U(6)+E8^2) ≅ q(U(2)+A2+E6+E8), explicit isometry",
        check: Some(lattice::u6e8e8_form_isometry),
    },
    Claim {
        id: "m-form-a2e6",
        tag: Tag::Lattice,
        location: "index-3 overlattice M of A₂²+E₆² on the F₄,₃,₁ cover",
        expected: "q_M ≅ q(A2+E6)",
        check: Some(lattice::m_form_a2e6),
    },
    Claim {
        id: "t-y6321-u-u6",
        tag: Tag::Lattice,
        location: "transcendental lattice of a very general Y₆,₃,₂,₁",
        expected: "T ≅ U+U(6): −q_NS ≅ q(U+U(6))",
        check: Some(lattice::t_y6321),
    },
    Claim {
        id: "t-y3333-u3-u6",
        tag: Tag::Lattice,
        location: "transcendental lattice of a very general F₃,₃,₃,₃ cover",
        expected: "3-length 4, T = M(3) with q_M = q(U(2)), T ≅ U(3)+U(6)",
        check: Some(lattice::t_y3333),
    },
    Claim {
        id: "u6-multisection-projection",
        tag: Tag::Lattice,
        location: "II* fibration on Y₆,₃,₂,₁: multisection and new fiber",
        expected: "projected multisection D′ (stated square −60) and fiber F span U(6)",
        check: Some(lattice::u6_multisection_projection),
    },
    Claim {
        id: "rank19-transcendental",
        tag: Tag::Lattice,
        location: "explicit component of F₃,₃,₃,₃ ∩ F₄,₃,₁",
        expected: "height-3 section: det NS 108, T ≅ U(3)+<12>",
        check: Some(lattice::rank19_transcendental),
    },
    // ---- codes ----
    Claim {
        id: "griesmer-8-6",
        tag: Tag::Codes,
        location: "3-divisible sets on the K3 cover: Griesmer bound",
        expected: "a ternary [8,k] code with all weights 6 has k ≤ 2",
        check: Some(codes::griesmer_8_6),
    },
    Claim {
        id: "no-code-8-3-weight6",
        tag: Tag::Codes,
        location: "3-divisible sets on the K3 cover: exhaustive check of the bound",
        expected: "no 3-dimensional ternary code of length 8 with all weights 6",
        check: Some(codes::no_code_8_3),
    },
    Claim {
        id: "f3333-four-divisible-sets",
        tag: Tag::Codes,
        location: "F₃,₃,₃,₃: the big code",
        expected: "dim 2 code, 4 divisible sets of weight 3",
        check: Some(codes::f3333_big),
    },
    Claim {
        id: "f3333-one-divisible-set",
        tag: Tag::Codes,
        location: "F₃,₃,₃,₃: the small code",
        expected: "exactly one divisible set when one pair uses the third fiber component",
        check: Some(codes::f3333_small),
    },
    Claim {
        id: "f431-one-divisible-set",
        tag: Tag::Codes,
        location: "F₄,₃,₁: divisible sets on the Enriques surface",
        expected: "exactly one 3-divisible set",
        check: Some(codes::f431),
    },
    Claim {
        id: "f431-cover-four-divisible-sets",
        tag: Tag::Codes,
        location: "F₄,₃,₁: divisible sets on the K3 cover",
        expected: "four 3-divisible sets among the 8 pulled-back configurations",
        check: Some(codes::f431_cover),
    },
    Claim {
        id: "f3333-cover-divisible-sets",
        tag: Tag::Codes,
        location: "F₃,₃,₃,₃: divisible sets on the K3 cover",
        expected: "four 3-divisible sets of weight 6",
        check: Some(codes::f3333_cover),
    },
    Claim {
        id: "pi1-table",
        tag: Tag::Codes,
        location: "fundamental group of the open Enriques surface",
        expected:
            "(1,1) → Z/6, (1,4) → S3 x Z/3, (4,·) → (Z/3)^2 x Z/2; F₄,₃,₁ gives S3 x Z/3, F₃,₃,₃,₃ gives (Z/3)^2 x Z/2",
        check: Some(codes::pi1_table),
    },
    // ---- divisor ----
    Claim {
        id: "f3-system-no-solution",
        tag: Tag::Divisor,
        location: "H-multiples of pulled-back differences for four divisible sets",
        expected: "the 4×4 system over F3 has no solution",
        check: Some(divisor::f3_system),
    },
    Claim {
        id: "bisection-iv-star-a2",
        tag: Tag::Divisor,
        location: "curves on the F₃,₃,₃,₃ example: IV* divisor with orthogonal A₂",
        expected: "a IV* divisor and a disjoint A2 among the modeled curves",
        check: Some(divisor::iv_star_a2),
    },
    Claim {
        id: "gorenstein-a3-3a2",
        tag: Tag::Divisor,
        location: "Gorenstein Q-homology projective plane from four I₃ fibers and a bisection",
        expected: "an A3+3A2 configuration of nine (−2)-curves",
        check: Some(divisor::a3_3a2),
    },
    Claim {
        id: "ii-star-omitted-component",
        tag: Tag::Divisor,
        location: "4A₂ pushed onto a II* fiber by Picard–Lefschetz reflections",
        expected: "omitting e2, e8, e9 leaves D8, E7+A1, E8",
        check: Some(divisor::ii_star),
    },
    // ---- ellsurf ----
    Claim {
        id: "x431-fibers",
        tag: Tag::Ellsurf,
        location: "rational elliptic surface X₄,₃,₁",
        expected: "IV* at ∞, I3 at 0, I1 at 1/27",
        check: Some(ellsurf::x431),
    },
    Claim {
        id: "x44-fibers",
        tag: Tag::Ellsurf,
        location: "rational elliptic surface X₄,₄",
        expected: "IV at 0, IV* at ∞, Δ = −27t^4",
        check: Some(ellsurf::x44),
    },
    Claim {
        id: "x6321-pencil-fibers",
        tag: Tag::Ellsurf,
        location: "cubic pencil (x+y)(y+z)(z+x) + t·xyz",
        expected: "I3 at t = 0, I2 at t = 1, I1 at t = −8",
        check: Some(ellsurf::x6321_pencil),
    },
    Claim {
        id: "height-7-12",
        tag: Tag::Ellsurf,
        location: "quadratic twist of X₃,₃,₃,₃: section height",
        expected: "height 7/12",
        check: Some(ellsurf::height_7_12),
    },
    Claim {
        id: "height-7-6",
        tag: Tag::Ellsurf,
        location: "pull-back of the twisted section to the K3 cover",
        expected: "height 7/6",
        check: Some(ellsurf::height_7_6),
    },
    Claim {
        id: "height-3-2",
        tag: Tag::Ellsurf,
        location: "quadratic twist X′ of X₆,₃,₂,₁: section Q′",
        expected: "height 3/2",
        check: Some(ellsurf::height_3_2),
    },
    Claim {
        id: "height-3",
        tag: Tag::Ellsurf,
        location: "K3 cover Y₆,₃,₂,₁: section Q",
        expected: "height 3",
        check: Some(ellsurf::height_3),
    },
    Claim {
        id: "torsion-height-zero",
        tag: Tag::Ellsurf,
        location: "torsion sections on the shipped models",
        expected: "height 0",
        check: Some(ellsurf::torsion_zero),
    },
    Claim {
        id: "jacobian-det-81",
        tag: Tag::Ellsurf,
        location: "Jacobian of the F₃,₃,₃,₃ cover",
        expected: "d(NS(Jac(Y))) = −81",
        check: Some(ellsurf::jacobian_81),
    },
    Claim {
        id: "cover-det-324",
        tag: Tag::Ellsurf,
        location: "K3 cover of F₃,₃,₃,₃",
        expected: "d(NS(Y)) = −324",
        check: Some(ellsurf::cover_324),
    },
    Claim {
        id: "cover-det-36",
        tag: Tag::Ellsurf,
        location: "K3 cover of F₄,₃,₁",
        expected: "d(NS(Y′)) = −36",
        check: Some(ellsurf::cover_36),
    },
    Claim {
        id: "two-adic-divisibility",
        tag: Tag::Ellsurf,
        location: "K3 covers of Enriques surfaces: 2-adic constraint",
        expected: "2^(20−ρ) divides d(NS(Y)) for both explicit NS lattices",
        check: Some(ellsurf::two_adic),
    },
    Claim {
        id: "twist-family-b2",
        tag: Tag::Ellsurf,
        location: "one-parameter family of twists with a section",
        expected: "b = 2: a = 8/3, c = 10/27, membership verified; b ∈ {−8,−2,0,1,10} excluded",
        check: Some(ellsurf::family_b2),
    },
    // ---- moduli ----
    Claim {
        id: "f3333-family-irreducible",
        tag: Tag::Moduli,
        location: "moduli of F₃,₃,₃,₃",
        expected: "irreducible two-dimensional family",
        check: moduli::NOT_CHECKABLE,
    },
    Claim {
        id: "f431-family-irreducible",
        tag: Tag::Moduli,
        location: "moduli of F₄,₃,₁",
        expected: "irreducible two-dimensional family",
        check: moduli::NOT_CHECKABLE,
    },
    Claim {
        id: "x44-boundary",
        tag: Tag::Moduli,
        location: "Enriques surfaces from X₄,₄ by logarithmic transformation",
        expected: "they lie in the boundary of the F₄,₃,₁ family",
        check: moduli::NOT_CHECKABLE,
    },
    Claim {
        id: "families-overlap-in-curves",
        tag: Tag::Moduli,
        location: "overlap of F₄,₃,₁ and F₃,₃,₃,₃",
        expected: "the families meet only in one-dimensional subfamilies",
        check: moduli::NOT_CHECKABLE,
    },
];
