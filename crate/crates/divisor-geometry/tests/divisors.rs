use divisor_geometry::models::{self, alpha, half_pencil};
use divisor_geometry::*;
use lattice_core::{discriminant_form, named, qforms_isometric, DEFAULT_SEARCH_BOUND};

fn lines(kernel: &[Vec<u64>]) -> usize {
    (3usize.pow(kernel.len() as u32) - 1) / 2
}

fn span_words(basis: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = basis.first().map_or(0, |b| b.len());
    let mut out = Vec::new();
    for code in 0..3u64.pow(basis.len() as u32) {
        let mut c = code;
        let mut w = vec![0u64; n];
        for b in basis {
            let k = c % 3;
            c /= 3;
            for (x, y) in w.iter_mut().zip(b) {
                *x = (*x + k * y) % 3;
            }
        }
        out.push(w);
    }
    out
}

fn weight(w: &[u64]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

// ---- intersect / reflect / words ----

#[test]
fn a2_difference_has_square_minus_six() {
    let m = models::f3333().unwrap();
    for (a, b) in &m.pairs {
        assert_eq!(a.sub(b).unwrap().square(), -6);
    }
}

#[test]
fn half_pencil_is_isotropic() {
    assert_eq!(half_pencil().square(), 0);
}

#[test]
fn pullback_doubles_pairings() {
    let m = models::f3333().unwrap();
    let d = m.pairs[0].0.sub(&m.pairs[0].1).unwrap();
    let pd = pullback_to_cover(&d).unwrap();
    assert_eq!(pd.square(), -12);
    assert_eq!(pullback_to_cover(&half_pencil()).unwrap().square(), 0);
    let h = pullback_to_cover(&half_pencil()).unwrap();
    assert_eq!(intersect(&pd, &h).unwrap(), 0);
    assert!(pullback_to_cover(&pd).is_err());
}

#[test]
fn mixed_ambients_rejected() {
    let d = alpha(1);
    let p = pullback_to_cover(&d).unwrap();
    assert!(matches!(intersect(&d, &p), Err(Error::AmbientMismatch(..))));
    assert!(d.add(&p).is_err());
}

#[test]
fn reflection_basics() {
    let e = alpha(4);
    assert_eq!(reflect(&e, &e).unwrap(), e.scaled(-1));
    let d = alpha(8);
    assert_eq!(reflect(&d, &e).unwrap(), d);
    assert!(matches!(reflect(&d, &half_pencil()), Err(Error::NotRoot(0))));
}

#[test]
fn reflecting_i3_pair_in_third_component() {
    let m = models::f3333().unwrap();
    let f = &m.fibers[0];
    let (t0, t1, t2) = (&f.components[0], &f.components[1], &f.components[2]);
    assert_eq!(reflect(t1, t0).unwrap(), t0.add(t1).unwrap());
    assert_eq!(reflect(t2, t0).unwrap(), t0.add(t2).unwrap());
}

#[test]
fn words_act_first_step_first() {
    assert_eq!(apply_word(&ReflectionWord::empty(), &alpha(3)).unwrap(), alpha(3));
    let w = ReflectionWord::new(vec![alpha(1), alpha(3)]).unwrap();
    // s_{α1} first: α3 → α1+α3 → α1
    assert_eq!(apply_word(&w, &alpha(3)).unwrap(), alpha(1));
    let ee = ReflectionWord::new(vec![alpha(5), alpha(5)]).unwrap();
    assert_eq!(apply_word(&ee, &alpha(4)).unwrap(), alpha(4));
    assert!(ReflectionWord::new(vec![half_pencil()]).is_err());
}

// ---- tree_reduce ----

fn chain(n: usize) -> CurveGraph {
    let names = (0..n).map(|i| format!("t{i}")).collect();
    let edges: Vec<(usize, usize, i64)> = (1..n).map(|i| (i - 1, i, 1)).collect();
    CurveGraph::new(names, &edges).unwrap()
}

#[test]
fn tree_reduce_trivial_and_a2() {
    let g = chain(2);
    let r = tree_reduce(&g, &[1, 0], 0, None).unwrap();
    assert!(r.word.is_empty());
    let r = tree_reduce(&g, &[1, 1], 1, None).unwrap();
    assert_eq!(r.vertices, vec![0]);
}

#[test]
fn tree_reduce_ii_star_e2_to_e9() {
    let g = models::ii_star_tree().unwrap();
    let mut d = vec![0; 9];
    d[1] = 1;
    let r = tree_reduce(&g, &d, 8, None).unwrap();
    assert_eq!(apply_word(&r.word, &g.class_of(1)).unwrap(), g.class_of(8));
    assert!(r.word.steps().iter().all(|s| s.ambient() == &Ambient::Enriques));
}

fn connected_subsets(g: &CurveGraph) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut seen = vec![set[0]];
        let mut stack = vec![set[0]];
        while let Some(v) = stack.pop() {
            for &u in &set {
                if g.mult(u, v) > 0 && !seen.contains(&u) {
                    seen.push(u);
                    stack.push(u);
                }
            }
        }
        if seen.len() == set.len() {
            out.push((0..n).map(|v| (mask >> v & 1) as i64).collect());
        }
    }
    out
}

#[test]
fn tree_reduce_every_subtree_and_target() {
    let mut graphs = vec![models::ii_star_tree().unwrap()];
    graphs.extend((1..=9).map(chain));
    for g in &graphs {
        for d in connected_subsets(g) {
            for t in 0..g.len() {
                let r = tree_reduce(g, &d, t, None).unwrap();
                let start = g.class_of_divisor(&d).unwrap();
                assert_eq!(apply_word(&r.word, &start).unwrap(), g.class_of(t));
            }
        }
    }
}

#[test]
fn tree_reduce_complement_step() {
    let g = models::ii_star_tree().unwrap();
    let fiber = models::II_STAR_MULTIPLICITIES;
    // D = fiber − e8 − e9 is not reduced; its complement e8 + e9 is
    let mut d = fiber.to_vec();
    d[7] -= 1;
    d[8] -= 1;
    assert!(matches!(tree_reduce(&g, &d, 0, None), Err(Error::NonReduced)));
    let r = tree_reduce(&g, &d, 0, Some(&fiber)).unwrap();
    assert!(r.fiber_shift);
    let two_h = half_pencil().scaled(2);
    let image = apply_word(&r.word, &g.class_of_divisor(&d).unwrap()).unwrap();
    assert_eq!(image, g.class_of(0).add(&two_h).unwrap());
}

#[test]
fn tree_reduce_rejects_cycles_and_double_edges() {
    let g = models::four_i3_bisection_graph().unwrap();
    let tri: Vec<i64> = (0..g.len()).map(|v| i64::from(g.name(v).starts_with('a'))).collect();
    assert!(matches!(tree_reduce(&g, &tri, 1, None), Err(Error::NotTree(_))));
    let mut rb = vec![0; g.len()];
    rb[0] = 1;
    rb[g.index_of("b0").unwrap()] = 1;
    assert!(matches!(tree_reduce(&g, &rb, 0, None), Err(Error::NotTree(_))));
}

// ---- fibers ----

#[test]
fn fiber_validation() {
    let m = models::f431().unwrap();
    let iv = &m.fibers[0];
    assert!(FiberDivisor::new(Kodaira::IVStar, iv.components.clone(), iv.multiplicities.clone(), true).is_err());
    assert!(FiberDivisor::new(Kodaira::IVStar, iv.components.clone(), vec![1; 7], false).is_err());
    for model in [models::f3333().unwrap(), m] {
        for f in &model.fibers {
            assert_eq!(f.class().unwrap(), model.h.scaled(f.h_weight()));
        }
    }
    let f = models::ii_star_fiber().unwrap();
    assert_eq!(f.class().unwrap(), half_pencil().scaled(2));
}

/// Every (n, c) with D = nH + Σ cᵢΘᵢ in the window, by brute force.
fn all_window_solutions(d: &DivisorClass, f: &FiberDivisor, h: &DivisorClass) -> Vec<(i64, Vec<i64>)> {
    let k = f.components.len();
    let mut out = Vec::new();
    let mut c = vec![0i64; k];
    loop {
        let nonzero = c.iter().any(|&x| x != 0);
        if nonzero && c != f.multiplicities {
            let terms: Vec<(i64, &DivisorClass)> = c.iter().copied().zip(&f.components).collect();
            let rest = d.sub(&DivisorClass::sum(&terms).unwrap()).unwrap();
            for n in -12..=12 {
                if rest == h.scaled(n) {
                    out.push((n, c.clone()));
                }
            }
        }
        let mut i = 0;
        while i < k {
            c[i] += 1;
            if c[i] <= f.multiplicities[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out
}

#[test]
fn fiber_decompose_examples() {
    let m = models::f3333().unwrap();
    let h = &m.h;
    // ordinary I3: components [Θ0, Θ1, Θ2]
    let f = &m.fibers[0];
    let single = fiber_decompose(&f.components[1], &m.fibers, h).unwrap();
    assert_eq!((single.n, single.fiber, single.coefficients.clone()), (0, 0, vec![0, 1, 0]));
    let d = h.scaled(2).sub(&f.components[1]).unwrap();
    let r = fiber_decompose(&d, &m.fibers, h).unwrap();
    assert_eq!((r.n, r.coefficients.clone()), (0, vec![1, 0, 1]));
    let d = f.components[0].add(&f.components[1]).unwrap();
    let r = fiber_decompose(&d, &m.fibers, h).unwrap();
    assert_eq!((r.n, r.coefficients.clone()), (0, vec![1, 1, 0]));
    // half-pencil I3 (fiber 2): window below H
    let f = &m.fibers[2];
    let d = h.scaled(2).sub(&f.components[1]).unwrap();
    let r = fiber_decompose(&d, &m.fibers, h).unwrap();
    assert_eq!((r.n, r.fiber, r.coefficients.clone()), (1, 2, vec![1, 0, 1]));
}

#[test]
fn fiber_decompose_is_unique_in_window() {
    let m = models::f3333().unwrap();
    let h = &m.h;
    for (fi, f) in m.fibers.iter().enumerate() {
        for (ci, c) in f.components.iter().enumerate() {
            for n in -3..=3 {
                for sign in [1, -1] {
                    let d = h.scaled(n).add(&c.scaled(sign)).unwrap();
                    let r = fiber_decompose(&d, &m.fibers, h).unwrap();
                    assert_eq!(r.fiber, fi, "component {ci}");
                    assert_eq!(d, h.scaled(r.n).add(&r.d_tilde).unwrap());
                    assert_eq!(all_window_solutions(&d, f, h), vec![(r.n, r.coefficients.clone())]);
                }
            }
        }
    }
    let f = models::ii_star_fiber().unwrap();
    let fibers = vec![f.clone()];
    let d = half_pencil().scaled(3).add(&f.components[8]).unwrap();
    let r = fiber_decompose(&d, &fibers, &half_pencil()).unwrap();
    assert_eq!(r.n, 3);
    assert_eq!(all_window_solutions(&d, &f, &half_pencil()), vec![(r.n, r.coefficients)]);
}

#[test]
fn fiber_decompose_errors() {
    let m = models::f3333().unwrap();
    // α7 lies in the rational span of all fibers but on none alone
    assert!(matches!(fiber_decompose(&alpha(7), &m.fibers, &m.h), Err(Error::NotInSpan)));
    let f = DivisorClass::enriques_parts(0, 1, [0; 8]);
    assert!(matches!(fiber_decompose(&f, &m.fibers, &m.h), Err(Error::Precondition(_))));
}

// ---- ADE searches ----

fn check_placement(g: &CurveGraph, shapes: &[Shape], placed: &[Placement]) {
    let lat = g.local_lattice();
    let unit = |v: usize| {
        let mut x = vec![0i64; g.len()];
        x[v] = 1;
        x
    };
    let mut all = Vec::new();
    for (s, p) in shapes.iter().zip(placed) {
        let pat = s.pattern().unwrap();
        assert_eq!(p.len(), pat.mult.len());
        let verts: Vec<usize> = p.iter().map(|&(v, _)| v).collect();
        let block: Vec<Vec<i64>> =
            verts.iter().map(|&a| verts.iter().map(|&b| lat.pair(&unit(a), &unit(b))).collect()).collect();
        if let Shape::Fiber(_) = s {
            // a Kodaira divisor is isotropic and orthogonal to its components
            let mut f = vec![0i64; g.len()];
            for &(v, m) in p {
                f[v] += m;
            }
            assert_eq!(lat.norm(&f), 0);
            for &v in &verts {
                assert_eq!(lat.pair(&f, &unit(v)), 0);
            }
        } else {
            let l = lattice_core::GramLattice::new(block).unwrap();
            assert!(l.is_negative_definite());
            assert_eq!(l.determinant(), named(&s.to_string()).unwrap().determinant());
        }
        all.push(verts);
    }
    for i in 0..all.len() {
        for j in 0..i {
            for &a in &all[i] {
                for &b in &all[j] {
                    assert_ne!(a, b);
                    assert_eq!(g.mult(a, b), 0);
                }
            }
        }
    }
}

#[test]
fn empty_spec_is_trivially_found() {
    let g = models::i6_i3_i2_bisection_graph().unwrap();
    assert_eq!(find_ade_config(&g, &[]).unwrap(), Some(vec![]));
}

#[test]
fn bisection_graph_has_iv_star_and_residual_a2() {
    let g = models::i6_i3_i2_bisection_graph().unwrap();
    let shapes: Vec<Shape> = ["IV*", "A2"].iter().map(|s| s.parse().unwrap()).collect();
    let p = find_ade_config(&g, &shapes).unwrap().expect("IV* + A2");
    check_placement(&g, &shapes, &p);
    let four: Vec<Shape> = vec![Shape::A(2); 4];
    let p = find_ade_config(&g, &four).unwrap().expect("4A2");
    check_placement(&g, &four, &p);
}

#[test]
fn four_i3_bisection_graph_has_a3_plus_3a2() {
    let g = models::four_i3_bisection_graph().unwrap();
    let shapes = vec![Shape::A(3), Shape::A(2), Shape::A(2), Shape::A(2)];
    let p = find_ade_config(&g, &shapes).unwrap().expect("A3+3A2");
    check_placement(&g, &shapes, &p);
}

#[test]
fn impossible_configuration_is_none() {
    let g = CurveGraph::new(vec!["x".into(), "y".into(), "z".into()], &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
    assert_eq!(find_ade_config(&g, &[Shape::A(3)]).unwrap(), None);
    let p = find_ade_config(&g, &[Shape::Fiber(Kodaira::I(3))]).unwrap().unwrap();
    check_placement(&g, &[Shape::Fiber(Kodaira::I(3))], &p);
}

#[test]
fn shape_patterns_have_kodaira_multiplicities() {
    for s in ["I3", "I5", "I0*", "I2*", "IV*", "III*", "II*", "I2"] {
        let shape: Shape = s.parse().unwrap();
        let k: Kodaira = s.parse().unwrap();
        let p = shape.pattern().unwrap();
        let mut a = p.mult.clone();
        a.sort_unstable();
        let mut b = k.multiplicities();
        b.sort_unstable();
        assert_eq!(a, b, "{s}");
        // isotropic with the pattern Gram
        let n = p.mult.len();
        let mut gram = vec![vec![0i64; n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = -2;
        }
        for &(x, y, w) in &p.edges {
            gram[x][y] = w;
            gram[y][x] = w;
        }
        let l = lattice_core::GramLattice::new_degenerate_ok(gram).unwrap();
        assert_eq!(l.norm(&p.mult), 0, "{s}");
    }
    for s in ["A3", "D5", "E7"] {
        let shape: Shape = s.parse().unwrap();
        assert_eq!(shape.pattern().unwrap().mult.len(), named(s).unwrap().rank());
    }
    assert!(Shape::Fiber(Kodaira::IV).pattern().is_err());
}

// ---- F3 systems ----

#[test]
fn four_set_multiplicity_system_has_no_solution() {
    let rels = vec![
        Relation::new(vec![1, 1, 1, 0], 1),
        Relation::new(vec![1, -1, 0, 1], 0),
        Relation::new(vec![0, 1, -1, 1], 1),
        Relation::new(vec![-1, 0, 1, 1], -1),
    ];
    let s = h_multiplicity_system(&rels, 4).unwrap();
    assert!(!s.consistent);
    assert!(s.solutions.is_empty());
    // first row ≡ second − third, while the right-hand sides give 1 ≠ 0 − 1
    assert_eq!(s.rank, 2);
}

#[test]
fn small_f3_systems() {
    let rels: Vec<Relation> =
        (0..3).map(|i| Relation::new((0..3).map(|j| i64::from(i == j) + i64::from(j == 2)).collect(), 0)).collect();
    let s = h_multiplicity_system(&rels, 3).unwrap();
    assert_eq!(s.solutions, vec![vec![0, 0, 0]]);
    let s = h_multiplicity_system(&[Relation::new(vec![1, 0], 1)], 2).unwrap();
    assert_eq!(s.solutions, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    assert!(h_multiplicity_system(&[Relation::new(vec![1], 1)], 2).is_err());
}

// ---- modeled configurations ----

#[test]
fn model_pairs_are_disjoint_a2s() {
    for m in [models::f3333().unwrap(), models::f431().unwrap()] {
        for (j, (a, b)) in m.pairs.iter().enumerate() {
            assert_eq!((a.square(), b.square(), intersect(a, b).unwrap()), (-2, -2, 1), "{} pair {j}", m.name);
            assert_eq!(intersect(a, &m.h).unwrap(), 0);
            for (c, d) in &m.pairs[..j] {
                for x in [a, b] {
                    for y in [c, d] {
                        assert_eq!(intersect(x, y).unwrap(), 0, "{} pairs {j}", m.name);
                    }
                }
            }
        }
    }
}

#[test]
fn f3333_code_has_four_lines_of_weight_three() {
    let k = models::f3333().unwrap().divisibility_kernel().unwrap();
    assert_eq!(k.len(), 2);
    assert_eq!(lines(&k), 4);
    for w in span_words(&k).iter().filter(|w| weight(w) > 0) {
        assert_eq!(weight(w), 3);
    }
}

#[test]
fn f3333_small_variant_has_one_line_avoiding_f4() {
    let k = models::f3333_small().unwrap().divisibility_kernel().unwrap();
    assert_eq!(k.len(), 1);
    assert_eq!(k[0][3], 0);
    assert_eq!(weight(&k[0]), 3);
}

#[test]
fn f431_has_exactly_one_divisible_set() {
    let k = models::f431().unwrap().divisibility_kernel().unwrap();
    assert_eq!(k.len(), 1);
    assert_eq!(k[0][0], 0);
    assert_eq!(weight(&k[0]), 3);
}

#[test]
fn f3333_cover_lattice() {
    let c = models::f3333_cover().unwrap();
    assert_eq!(c.ns.lattice.determinant(), (-324).into());
    assert_eq!(c.ns.lattice.signature().unwrap(), (1, 17));
    let k = c.divisibility_kernel().unwrap();
    assert_eq!(k.len(), 2);
    for w in span_words(&k).iter().filter(|w| weight(w) > 0) {
        assert_eq!(weight(w), 6);
        assert_eq!(w[..4], w[4..]);
    }
    let q = discriminant_form(&c.ns.lattice).unwrap();
    let r = discriminant_form(&named("U(2)+A2^2+E6^2").unwrap()).unwrap();
    assert!(qforms_isometric(&q, &r, DEFAULT_SEARCH_BOUND).is_isometric());
}

#[test]
fn f431_cover_lattice() {
    let c = models::f431_cover().unwrap();
    assert_eq!(c.ns.lattice.determinant(), (-36).into());
    let k = c.divisibility_kernel().unwrap();
    assert_eq!(lines(&k), 4);
    let words = span_words(&k);
    assert!(words.contains(&vec![1, 1, 1, 0, 2, 2, 2, 0]));
    let q = discriminant_form(&c.ns.lattice).unwrap();
    let r = discriminant_form(&named("U(2)+A2+E6+E8").unwrap()).unwrap();
    assert!(qforms_isometric(&q, &r, DEFAULT_SEARCH_BOUND).is_isometric());
    let m = c.root_part().unwrap();
    assert_eq!(m.lattice.determinant(), 9.into());
    let qm = discriminant_form(&m.lattice).unwrap();
    let qa = discriminant_form(&named("A2+E6").unwrap()).unwrap();
    assert!(qforms_isometric(&qm, &qa, DEFAULT_SEARCH_BOUND).is_isometric());
}

// ---- graph files ----

#[test]
fn graph_json_round_trip() {
    for g in [models::ii_star_tree().unwrap(), models::i6_i3_i2_bisection_graph().unwrap()] {
        let text = graph_to_json(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.names(), g.names());
        for a in 0..g.len() {
            for b in 0..g.len() {
                assert_eq!(back.mult(a, b), g.mult(a, b));
            }
            assert_eq!(back.class_of(a).coords(), g.class_of(a).coords());
        }
    }
}

#[test]
fn graph_validation() {
    assert!(CurveGraph::new(vec!["a".into()], &[(0, 0, 1)]).is_err());
    assert!(CurveGraph::new(vec!["a".into(), "b".into()], &[(0, 1, 0)]).is_err());
    assert!(parse_graph(r#"{"vertices":["a"],"edges":[["a","b",1]]}"#).is_err());
    // classes must realise the edges
    let g = CurveGraph::new(vec!["a".into(), "b".into()], &[(0, 1, 1)]).unwrap();
    assert!(g.clone().with_classes(vec![alpha(1), alpha(2)]).is_err());
    assert!(g.with_classes(vec![alpha(1), alpha(3)]).is_ok());
}
