//! Divisor claims: the 𝔽₃ multiplicity system, configurations in curve
//! graphs, and the II* fiber carrying 4A₂ after reflections.

use divisor_geometry::{
    apply_word, find_ade_config, h_multiplicity_system, intersect, models, tree_reduce, CurveGraph, Placement,
    Relation, Shape,
};
use lattice_core::{named, roots_of, GramLattice};
use num_bigint::BigInt;

use super::{err, Check};
use crate::evidence::{flag, int, list, text, uint, uints};
use crate::Evidence;

pub(super) fn f3_system() -> Check {
    let rows: [([i64; 4], i64); 4] = [([1, 1, 1, 0], 1), ([1, -1, 0, 1], 0), ([0, 1, -1, 1], 1), ([-1, 0, 1, 1], -1)];
    let rels: Vec<Relation> = rows.iter().map(|(c, r)| Relation::new(c.to_vec(), *r)).collect();
    let s = h_multiplicity_system(&rels, 4).map_err(err)?;
    // oracle: all 81 tuples checked directly over the integers mod 3
    let mut direct = 0u64;
    for code in 0..81i64 {
        let m = [code % 3, code / 3 % 3, code / 9 % 3, code / 27];
        if rows.iter().all(|(c, r)| (c.iter().zip(&m).map(|(a, b)| a * b).sum::<i64>() - r).rem_euclid(3) == 0) {
            direct += 1;
        }
    }
    let mut ev = Evidence::new();
    ev.value("rank", uint(s.rank as u64))
        .value("consistent", flag(s.consistent))
        .value("solutions", uint(s.solutions.len() as u64))
        .value("tuples_enumerated", uint(81))
        .value("direct_solutions", uint(direct))
        .check("inconsistent by rank", !s.consistent)
        .check("no solution among 81 tuples", s.solutions.is_empty() && direct == 0)
        .computed(format!("rank {} < augmented rank, 0 of 81 tuples solve it", s.rank));
    Ok(ev)
}

/// Independent validation of a placement: fiber shapes are isotropic and
/// orthogonal to each of their curves, Dynkin shapes span a negative
/// definite lattice of the right determinant, distinct shapes are disjoint.
fn placement_ok(g: &CurveGraph, shapes: &[Shape], placed: &[Placement]) -> Result<bool, String> {
    let lat = g.local_lattice();
    let unit = |v: usize| {
        let mut x = vec![0i64; g.len()];
        x[v] = 1;
        x
    };
    let mut ok = shapes.len() == placed.len();
    for (s, p) in shapes.iter().zip(placed) {
        let verts: Vec<usize> = p.iter().map(|&(v, _)| v).collect();
        if let Shape::Fiber(_) = s {
            let mut f = vec![0i64; g.len()];
            for &(v, m) in p {
                f[v] += m;
            }
            ok &= lat.norm(&f) == 0 && verts.iter().all(|&v| lat.pair(&f, &unit(v)) == 0);
        } else {
            let block: Vec<Vec<i64>> =
                verts.iter().map(|&a| verts.iter().map(|&b| lat.pair(&unit(a), &unit(b))).collect()).collect();
            let l = GramLattice::new(block).map_err(err)?;
            ok &= l.is_negative_definite() && l.determinant() == named(&s.to_string()).map_err(err)?.determinant();
        }
    }
    for i in 0..placed.len() {
        for j in 0..i {
            for &(a, _) in &placed[i] {
                for &(b, _) in &placed[j] {
                    ok &= a != b && g.mult(a, b) == 0;
                }
            }
        }
    }
    Ok(ok)
}

fn named_placement(g: &CurveGraph, p: &[Placement]) -> serde_json::Value {
    list(
        p.iter()
            .map(|pl| {
                list(
                    pl.iter()
                        .map(|&(v, m)| text(if m == 1 { g.name(v).to_string() } else { format!("{m}{}", g.name(v)) }))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn parse_shapes(s: &[&str]) -> Result<Vec<Shape>, String> {
    s.iter().map(|x| x.parse::<Shape>().map_err(err)).collect()
}

pub(super) fn iv_star_a2() -> Check {
    let g = models::i6_i3_i2_bisection_graph().map_err(err)?;
    let shapes = parse_shapes(&["IV*", "A2"])?;
    let p = find_ade_config(&g, &shapes).map_err(err)?;
    let mut ev = Evidence::new();
    ev.value("curves", uint(g.len() as u64)).check("IV* + A2 found", p.is_some());
    if let Some(p) = p {
        ev.value("placement", named_placement(&g, &p))
            .check("placement validated independently", placement_ok(&g, &shapes, &p)?);
        // the IV* reaches through a component outside the three left A₂'s
        ev.computed(format!("IV* on {} curves with a disjoint A2", p[0].len()));
    }
    Ok(ev)
}

pub(super) fn a3_3a2() -> Check {
    let g = models::four_i3_bisection_graph().map_err(err)?;
    let shapes = parse_shapes(&["A3", "A2", "A2", "A2"])?;
    let p = find_ade_config(&g, &shapes).map_err(err)?;
    let mut ev = Evidence::new();
    ev.value("curves", uint(g.len() as u64)).check("A3+3A2 found", p.is_some());
    if let Some(p) = p {
        // the nine curves together: negative definite of rank 9, so det = −4·3³
        let verts: Vec<usize> = p.iter().flatten().map(|&(v, _)| v).collect();
        let unit = |v: usize| {
            let mut x = vec![0i64; g.len()];
            x[v] = 1;
            x
        };
        let lat = g.local_lattice();
        let gram: Vec<Vec<i64>> =
            verts.iter().map(|&a| verts.iter().map(|&b| lat.pair(&unit(a), &unit(b))).collect()).collect();
        let nine = GramLattice::new(gram).map_err(err)?;
        ev.value("placement", named_placement(&g, &p))
            .value("det", crate::evidence::big(&nine.determinant()))
            .check("placement validated independently", placement_ok(&g, &shapes, &p)?)
            .check("nine curves", verts.len() == 9)
            .check("negative definite", nine.is_negative_definite())
            .check("det −108", nine.determinant() == BigInt::from(-108))
            .computed("A3+3A2 on nine (−2)-curves");
    }
    Ok(ev)
}

pub(super) fn ii_star() -> Check {
    let g = models::ii_star_tree().map_err(err)?;
    let mut ev = Evidence::new();
    // e2, e8, e9 (0-based 1, 7, 8) omitted
    for (omit, name) in [(1usize, "D8"), (7, "E7+A1"), (8, "E8")] {
        let rest: Vec<usize> = (0..9).filter(|&v| v != omit).collect();
        let mut gram = Vec::new();
        for &a in &rest {
            let mut row = Vec::new();
            for &b in &rest {
                row.push(intersect(&g.class_of(a), &g.class_of(b)).map_err(err)?);
            }
            gram.push(row);
        }
        let l = GramLattice::new(gram).map_err(err)?;
        let want = named(name).map_err(err)?;
        let (r, rw) = (roots_of(&l).map_err(err)?.len(), roots_of(&want).map_err(err)?.len());
        ev.value(&format!("without_e{}_det", omit + 1), crate::evidence::big(&l.determinant()))
            .value(&format!("without_e{}_roots", omit + 1), uint(r as u64))
            .check(
                &format!("without e{}: det and root count of {name}", omit + 1),
                l.determinant() == want.determinant() && r == rw && l.is_negative_definite(),
            );
    }
    // the fiber class 3e1 + 2e2 + 4e3 + … + e9 is 2H in Num(S)
    let fiber = models::ii_star_fiber().map_err(err)?.class().map_err(err)?;
    let two_h = models::half_pencil().scaled(2);
    ev.check("II* fiber class is 2H", fiber == two_h);
    // a word of reflections in the fiber components carries e2 to e9
    let mut d = vec![0i64; 9];
    d[1] = 1;
    let r = tree_reduce(&g, &d, 8, None).map_err(err)?;
    let image = apply_word(&r.word, &g.class_of(1)).map_err(err)?;
    ev.value("word_e2_to_e9", uints(&r.vertices.iter().map(|&v| v as u64 + 1).collect::<Vec<_>>()))
        .value("word_length", int(r.word.len() as i64))
        .check("reflections carry e2 to e9", image == g.class_of(8))
        .computed("D8, E7+A1, E8 on the II* minus e2, e8, e9");
    Ok(ev)
}
