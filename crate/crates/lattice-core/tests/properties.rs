use lattice_core::matrix::{determinant, mat_mul, to_big, IntMatrix};
use lattice_core::*;
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

const PIECES: &[&str] = &["A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "U", "U(2)", "U(3)", "A2(2)", "<4>", "<-6>"];

fn lattice_strategy() -> impl Strategy<Value = GramLattice> {
    prop::collection::vec(0..PIECES.len(), 1..4).prop_map(|idx| {
        let sym: Vec<&str> = idx.iter().map(|&i| PIECES[i]).collect();
        named(&sym.join("+")).unwrap()
    })
}

/// Random unimodular matrix as a product of elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(a, b, c) in ops {
        let (a, b) = (a % n, b % n);
        if a == b {
            m.swap(a, (a + 1) % n);
            continue;
        }
        let src = m[b].clone();
        for (x, s) in m[a].iter_mut().zip(src) {
            *x += c * s;
        }
    }
    m
}

fn change_basis(l: &GramLattice, p: &[Vec<i64>]) -> GramLattice {
    let g: Vec<Vec<i64>> = p.iter().map(|x| p.iter().map(|y| l.pair(x, y)).collect()).collect();
    GramLattice::new(g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn snf_is_a_unimodular_diagonalization(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-9i64..10, 16)) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
        let mb = to_big(&m);
        let snf = smith_normal_form(&mb);
        let prod = mat_mul(&mat_mul(&snf.u, &mb), &snf.v);
        prop_assert_eq!(&prod, &snf.d);
        prop_assert_eq!(determinant(&snf.u).abs(), BigInt::from(1));
        prop_assert_eq!(determinant(&snf.v).abs(), BigInt::from(1));
        let vv: IntMatrix = mat_mul(&snf.v, &snf.v_inv);
        prop_assert_eq!(vv, matrix::identity(cols));
        let diag = snf.diagonal();
        for i in 0..diag.len() {
            for j in 0..diag.len() {
                if i != j { prop_assert!(snf.d[i][j] == BigInt::from(0)); }
            }
            if i + 1 < diag.len() && diag[i] != BigInt::from(0) {
                prop_assert!((&diag[i + 1] % &diag[i]) == BigInt::from(0));
            }
        }
    }

    #[test]
    fn invariant_factors_multiply_to_determinant(l in lattice_strategy()) {
        let g = discriminant_group(&l).unwrap();
        prop_assert_eq!(BigInt::from(g.order()), l.determinant().abs());
        let (p, m) = l.signature().unwrap();
        prop_assert_eq!(p + m, l.rank());
    }

    #[test]
    fn discriminant_form_is_basis_independent(l in lattice_strategy(), ops in prop::collection::vec((0usize..12, 0usize..12, -2i64..3), 0..12)) {
        prop_assume!(l.rank() <= 12);
        let p = unimodular(l.rank(), &ops);
        let l2 = change_basis(&l, &p);
        let q1 = discriminant_form(&l).unwrap();
        let q2 = discriminant_form(&l2).unwrap();
        prop_assume!(q1.order() <= 2000);
        prop_assert!(qforms_isometric(&q1, &q2, DEFAULT_SEARCH_BOUND).is_isometric());
    }

    #[test]
    fn form_axioms_hold(l in lattice_strategy(), a in 0usize..1000, b in 0usize..1000, n in 0u64..7) {
        let q = discriminant_form(&l).unwrap();
        let ord = q.order() as usize;
        let x = q.group.element_at(a % ord);
        let y = q.group.element_at(b % ord);
        let e = q.exponent;
        let s = q.group.add(&x, &y);
        let lhs = (q.q_num_of(&s) + 4 * e - q.q_num_of(&x) - q.q_num_of(&y)) % (2 * e);
        prop_assert_eq!(lhs, 2 * q.b_num_of(&x, &y) % (2 * e));
        let nx = q.group.mul(n, &x);
        prop_assert_eq!(q.q_num_of(&nx), (n * n % (2 * e)) * q.q_num_of(&x) % (2 * e));
    }

    #[test]
    fn complement_is_orthogonal_with_complementary_rank(l in lattice_strategy(), pick in prop::collection::vec(-2i64..3, 1..30)) {
        let n = l.rank();
        let k = 1 + pick.len() % n.max(1);
        let sub: Vec<Vec<i64>> = (0..k.min(n)).map(|i| (0..n).map(|j| if i == j { 1 } else if j > i { pick[(i * n + j) % pick.len()] } else { 0 }).collect()).collect();
        let restricted: Vec<Vec<i64>> = sub.iter().map(|x| sub.iter().map(|y| l.pair(x, y)).collect()).collect();
        prop_assume!(determinant(&to_big(&restricted)) != BigInt::from(0));
        let c = orthogonal_complement(&l, &sub).unwrap();
        prop_assert_eq!(c.basis.len(), n - sub.len());
        for v in &c.basis {
            for s in &sub {
                prop_assert_eq!(l.pair(v, s), 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn overlattice_determinant_law(l in lattice_strategy()) {
        let q = discriminant_form(&l).unwrap();
        prop_assume!(q.order() <= 300);
        for h in isotropic_subgroups(&q, DEFAULT_SEARCH_BOUND).unwrap() {
            let o = overlattice(&l, &glue_vectors(&q.group, &h)).unwrap();
            let idx = BigInt::from(h.order());
            prop_assert_eq!(&o.index, &idx);
            prop_assert_eq!(o.lattice.determinant() * &idx * &idx, l.determinant());
        }
    }
}
