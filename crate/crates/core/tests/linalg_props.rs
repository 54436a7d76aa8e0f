use cupcap::linalg::{
    kernel_basis, smith_normal_form, subquotient_group, subquotient_group_mod, HermiteBasis, Int, IntMatrix, Lattice,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| Int::from(v[i * c + j])))
    })
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Int>> {
    proptest::collection::vec(-4i64..=4, n).prop_map(|v| v.into_iter().map(Int::from).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_decomposition_is_valid(m in matrix(6, 6, 9)) {
        let d = smith_normal_form(&m);
        prop_assert_eq!(d.u.mul(&m).unwrap().mul(&d.v).unwrap(), d.s.clone());
        prop_assert_eq!(d.u.mul(&d.u_inv).unwrap(), IntMatrix::identity(m.rows()));
        prop_assert_eq!(d.v.mul(&d.v_inv).unwrap(), IntMatrix::identity(m.cols()));
        let diag = d.diagonal();
        for (i, x) in diag.iter().enumerate() {
            prop_assert!(!x.is_negative());
            if i + 1 < diag.len() && !diag[i + 1].is_zero() {
                prop_assert!((&diag[i + 1] % x).is_zero(), "{} does not divide {}", x, diag[i + 1]);
            }
        }
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    prop_assert!(d.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn smith_is_deterministic_and_transpose_invariant(m in matrix(5, 5, 9)) {
        let d = smith_normal_form(&m);
        prop_assert_eq!(&d.s, &smith_normal_form(&m).s);
        prop_assert_eq!(d.diagonal(), smith_normal_form(&m.transpose()).diagonal());
    }

    #[test]
    fn determinant_matches_smith(m in (1..=5usize).prop_flat_map(|n| proptest::collection::vec(-6i64..=6, n * n).prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| Int::from(v[i * n + j]))))) {
        let det = m.determinant().unwrap();
        let d = smith_normal_form(&m);
        let prod: Int = if d.rank() < m.rows() { Int::zero() } else { d.diagonal().iter().product() };
        prop_assert_eq!(det.abs(), prod);
    }

    #[test]
    fn kernel_basis_spans_kernel(m in matrix(5, 6, 5)) {
        let k = kernel_basis(&m);
        prop_assert!(m.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.cols(), m.cols() - smith_normal_form(&m).rank());
        // saturated: the kernel lattice contains every integer kernel vector it meets
        let l = Lattice::kernel(&m);
        for z in k.columns() {
            prop_assert!(l.contains(&z));
        }
    }

    #[test]
    fn hermite_membership((m, coeffs) in matrix(5, 5, 6).prop_flat_map(|m| { let c = m.cols(); (Just(m), vector(c)) })) {
        let h = HermiteBasis::of_columns(&m);
        prop_assert_eq!(h.rank(), smith_normal_form(&m).rank());
        let combo = m.mul_vec(&coeffs).unwrap();
        prop_assert!(h.contains(&combo));
        prop_assert_eq!(HermiteBasis::of_columns(&h.to_matrix()), h);
    }

    #[test]
    fn class_map_is_additive_and_kills_relations((a, x, y) in matrix(4, 4, 4).prop_flat_map(|a| { let n = a.rows(); (Just(a), vector(n), vector(n)) })) {
        // Coker(a) on Z^rows
        let g = subquotient_group(&IntMatrix::zeros(0, a.rows()), &a).unwrap();
        for r in a.columns() {
            prop_assert!(g.is_zero(&g.class_of(&r).unwrap()));
        }
        let sum: Vec<Int> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        let lhs = g.class_of(&sum).unwrap();
        let rhs = g.add(&g.class_of(&x).unwrap(), &g.class_of(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
        let rep = g.representative(&g.class_of(&x).unwrap()).unwrap();
        prop_assert_eq!(g.class_of(&rep).unwrap(), g.class_of(&x).unwrap());
        let torsion_order: Int = g.torsion().iter().product();
        let snf_torsion: Int = smith_normal_form(&a).diagonal().iter().filter(|d| !d.is_zero()).product();
        prop_assert_eq!(torsion_order, snf_torsion);
    }

    #[test]
    fn mod_k_groups_are_killed_by_k(a in matrix(4, 4, 4), k in 2u64..=6) {
        let g = subquotient_group_mod(&IntMatrix::zeros(0, a.rows()), &a, &Int::from(k)).unwrap();
        prop_assert_eq!(g.free_rank(), 0);
        for o in g.torsion() {
            prop_assert!((Int::from(k) % o).is_zero());
        }
    }
}

#[test]
fn spec_examples() {
    let d = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
    assert_eq!(d.diagonal(), vec![Int::from(1), Int::from(6)]);
    let k = kernel_basis(&IntMatrix::from_rows(&[vec![1, 1]]));
    assert_eq!(k.cols(), 1);
    assert!(k.column(0) == vec![Int::from(1), Int::from(-1)] || k.column(0) == vec![Int::from(-1), Int::from(1)]);
    let g = subquotient_group(&IntMatrix::zeros(0, 2), &IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])).unwrap();
    assert_eq!(g.to_string(), "Z/6");
}

#[test]
fn large_entries_fall_back_to_big_integers() {
    let big = i64::MAX / 3;
    let m = IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 2, big]]);
    let d = smith_normal_form(&m);
    assert_eq!(d.u.mul(&m).unwrap().mul(&d.v).unwrap(), d.s);
    assert_eq!(d.diagonal().iter().product::<Int>(), m.determinant().unwrap().abs());
}
