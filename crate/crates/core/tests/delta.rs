use cupcap::delta::{self, DeltaComplex};
use cupcap::linalg::{HermiteBasis, Int, IntMatrix};
use num_traits::Zero;
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Declared-basis coordinates for Penrose: `A0..A4, B0, E0, F0`.
fn penrose_expected(i: usize, j: usize) -> Option<Vec<i64>> {
    let a = |m: usize| {
        let mut v = vec![0; 8];
        v[m % 5] = 1;
        v
    };
    let add = |x: Vec<i64>, y: Vec<i64>, s: i64| x.iter().zip(&y).map(|(p, q)| p + s * q).collect::<Vec<_>>();
    let (b0, e0, f0) = (unit(8, 5), unit(8, 6), unit(8, 7));
    if j == 5 && i < 5 {
        return Some(add(a(i + 2), a(i), -1));
    }
    if i >= 5 || j >= 5 {
        return None;
    }
    match (j + 5 - i) % 5 {
        1 => {
            let mut v = add(add(a(0), a(1), 1), add(a(2), a(3), 1), -1);
            v = add(add(v, e0, 1), f0, 1);
            Some(v)
        }
        2 => Some(add(a(3), b0, 1)),
        3 => Some(add(add(vec![0; 8], a(3), -1), b0, -1)),
        _ => None,
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[test]
fn penrose_cup_table_matches_theorem() {
    let k = delta::penrose();
    let basis = k.declared_basis().unwrap();
    let table = k.cup_table_of(&basis, k.declared_cocycles()).unwrap();
    let mut checked = 0;
    for i in 0..6 {
        for j in 0..6 {
            if let Some(want) = penrose_expected(i, j) {
                assert_eq!(table.get(i, j), &ints(&want)[..], "{} ⌣ {}", table.rows[i], table.rows[j]);
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 20);
}

#[test]
fn penrose_image_lattice_matches_families() {
    let k = delta::penrose();
    let mut gens = Vec::new();
    let families: [&[(&str, usize, i64)]; 8] = [
        &[("A", 0, 1), ("D", 2, -1)],
        &[("B", 0, 1), ("C", 3, -1)],
        &[("E", 0, 1), ("H", 2, -1)],
        &[("F", 0, 1), ("G", 3, -1)],
        &[("A", 0, 1), ("D", 4, -1), ("E", 3, -1), ("H", 1, 1)],
        &[("A", 0, 1), ("D", 0, -1), ("F", 4, 1), ("G", 1, -1)],
        &[("B", 0, 1), ("C", 0, -1), ("F", 3, -1), ("G", 2, 1)],
        &[("B", 0, 1), ("C", 1, -1), ("E", 0, 1), ("H", 1, -1)],
    ];
    for fam in families {
        for n in 0..5 {
            let terms: Vec<(String, i64)> = fam.iter().map(|&(l, k, c)| (format!("{l}{}", (n + k) % 5), c)).collect();
            gens.push(k.face_cochain(&terms).unwrap());
        }
    }
    let families = HermiteBasis::of_columns(&IntMatrix::from_columns(40, &gens));
    assert_eq!(families, k.image_of_delta2());
}

#[test]
fn ammann_image_lattice() {
    let k = delta::ammann();
    let gens = vec![
        k.face_cochain(&[("A", 1), ("B", -1), ("C", -1), ("D", 1)]).unwrap(),
        k.face_cochain(&[("E", 1), ("F", -1), ("G", -1), ("H", 1)]).unwrap(),
    ];
    assert_eq!(HermiteBasis::of_columns(&IntMatrix::from_columns(8, &gens)), k.image_of_delta2());
}

/// Any product evaluated face by face from the restrictions of both factors
/// to the face boundary vanishes on `ξ_1 ⌣ ξ_2`: no cell meets both
/// supports. The stated value `2([A]+[D]+[E]+[H])` is nonzero, so no
/// Δ-structure on these cells reproduces it.
#[test]
fn ammann_product_is_not_realizable_by_a_local_cup() {
    let k = delta::ammann();
    let (_, d2) = k.coboundaries();
    let c = k.declared_cocycles();
    let (x1, x2) = (&c[0].1, &c[1].1);
    for f in 0..d2.rows() {
        let touches = |x: &Vec<Int>| (0..d2.cols()).any(|e| !d2[(f, e)].is_zero() && !x[e].is_zero());
        assert!(!(touches(x1) && touches(x2)), "cell {} meets both supports", k.faces()[f].id);
    }
    let basis = k.declared_basis().unwrap();
    let stated = k.face_cochain(&[("A", 2), ("D", 2), ("E", 2), ("H", 2)]).unwrap();
    assert_eq!(basis.h2_coords(&stated).unwrap(), ints(&[2, 0, 2, 2, 0, 2]));
}

#[test]
fn cup_is_representative_independent_on_penrose() {
    let k = delta::penrose();
    let basis = k.declared_basis().unwrap();
    let (d1, _) = k.coboundaries();
    let c = k.declared_cocycles();
    let shift = d1.mul_vec(&ints(&[3, -1, 0, 2])).unwrap();
    let moved: Vec<Int> = c[0].1.iter().zip(&shift).map(|(x, y)| x + y).collect();
    for (_, y) in c {
        let before = basis.h2_coords(&k.aw_cup(&c[0].1, y).unwrap()).unwrap();
        let after = basis.h2_coords(&k.aw_cup(&moved, y).unwrap()).unwrap();
        assert_eq!(before, after);
    }
}

fn add(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn cochain(k: &DeltaComplex, degree: usize) -> impl Strategy<Value = Vec<Int>> {
    proptest::collection::vec(-3i64..=3, k.cells(degree)).prop_map(|v| ints(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leibniz_on_penrose(
        (f, g, eta) in {
            let k = delta::penrose();
            (cochain(&k, 0), cochain(&k, 0), cochain(&k, 1))
        }
    ) {
        let k = delta::penrose();
        // degrees (0, 0)
        let lhs = k.coboundary(0, &k.cup(0, &f, 0, &g).unwrap()).unwrap();
        let rhs = add(&k.cup(1, &k.coboundary(0, &f).unwrap(), 0, &g).unwrap(), &k.cup(0, &f, 1, &k.coboundary(0, &g).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
        // degrees (0, 1)
        let lhs = k.coboundary(1, &k.cup(0, &f, 1, &eta).unwrap()).unwrap();
        let rhs = add(&k.cup(1, &k.coboundary(0, &f).unwrap(), 1, &eta).unwrap(), &k.cup(0, &f, 2, &k.coboundary(1, &eta).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
        // degrees (1, 0)
        let lhs = k.coboundary(1, &k.cup(1, &eta, 0, &f).unwrap()).unwrap();
        let neg: Vec<Int> = k.cup(1, &eta, 1, &k.coboundary(0, &f).unwrap()).unwrap().iter().map(|x| -x).collect();
        let rhs = add(&k.cup(2, &k.coboundary(1, &eta).unwrap(), 0, &f).unwrap(), &neg);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn aw_cup_is_bilinear(
        (x, y, z) in {
            let k = delta::penrose();
            (cochain(&k, 1), cochain(&k, 1), cochain(&k, 1))
        }
    ) {
        let k = delta::penrose();
        let lhs = k.aw_cup(&add(&x, &y), &z).unwrap();
        prop_assert_eq!(lhs, add(&k.aw_cup(&x, &z).unwrap(), &k.aw_cup(&y, &z).unwrap()));
        let lhs = k.aw_cup(&z, &add(&x, &y)).unwrap();
        prop_assert_eq!(lhs, add(&k.aw_cup(&z, &x).unwrap(), &k.aw_cup(&z, &y).unwrap()));
    }
}

#[test]
fn coboundaries_compose_to_zero() {
    for k in [delta::penrose(), delta::ammann(), delta::torus()] {
        let (d1, d2) = k.coboundaries();
        assert!(d2.mul(d1).unwrap().is_zero());
    }
}
