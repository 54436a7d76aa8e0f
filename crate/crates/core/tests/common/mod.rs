//! Shared generators and chain-level identity checks, used by the property
//! tests and the acceptance suite.
#![allow(dead_code)]

use std::sync::OnceLock;

use cupcap::groupoid::{catalog, pushforward, Chain, Cochain, FiniteGroupoid, GroupoidHom, Ring};
use cupcap::linalg::{FgAbGroup, Int};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Check = fn(&FiniteGroupoid, &mut ChaCha8Rng) -> Result<(), String>;

/// ℤ/2, ℤ/3, ℤ/4, pair groupoids on 2..4 points and ℤ/2 ⋉ {0, 1}.
pub fn groupoids() -> &'static [(&'static str, FiniteGroupoid)] {
    static CELL: OnceLock<Vec<(&'static str, FiniteGroupoid)>> = OnceLock::new();
    CELL.get_or_init(|| {
        vec![
            ("Z/2", catalog::cyclic(2)),
            ("Z/3", catalog::cyclic(3)),
            ("Z/4", catalog::cyclic(4)),
            ("Pair(2)", catalog::pair(2)),
            ("Pair(3)", catalog::pair(3)),
            ("Pair(4)", catalog::pair(4)),
            ("Z/2 ⋉ {0,1}", catalog::z2_swap_action()),
        ]
    })
}

/// Homomorphisms `(name, domain, codomain, image of each domain name)`.
pub struct HomCase {
    pub name: &'static str,
    pub domain: FiniteGroupoid,
    pub codomain: FiniteGroupoid,
    pub image: fn(&str) -> String,
}

impl HomCase {
    pub fn hom(&self) -> GroupoidHom<'_> {
        let pairs: Vec<(String, String)> =
            self.domain.morphism_names().iter().map(|g| (g.clone(), (self.image)(g))).collect();
        GroupoidHom::from_names(&self.domain, &self.codomain, &pairs).expect("test homomorphism")
    }
}

pub fn hom_cases() -> &'static [HomCase] {
    static CELL: OnceLock<Vec<HomCase>> = OnceLock::new();
    CELL.get_or_init(|| {
        vec![
            HomCase {
                name: "Z/2 ⋉ {0,1} -> Z/2",
                domain: catalog::z2_swap_action(),
                codomain: catalog::z2(),
                image: |g| if g.starts_with('e') { "e".into() } else { "t".into() },
            },
            HomCase {
                name: "Z/4 -> Z/2",
                domain: catalog::cyclic(4),
                codomain: catalog::cyclic(2),
                image: |g| format!("g{}", g[1..].parse::<usize>().unwrap() % 2),
            },
            HomCase {
                name: "Z/2 -> Z/4",
                domain: catalog::cyclic(2),
                codomain: catalog::cyclic(4),
                image: |g| format!("g{}", 2 * g[1..].parse::<usize>().unwrap()),
            },
            HomCase {
                name: "Pair(2) -> point",
                domain: catalog::pair(2),
                codomain: catalog::trivial(1),
                image: |_| "x0".into(),
            },
            HomCase {
                name: "S3 -> Z/2",
                domain: catalog::symmetric3(),
                codomain: catalog::z2(),
                image: |g| {
                    let p: Vec<usize> = g[1..].chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
                    let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]);
                    if inversions.count() % 2 == 0 {
                        "e".into()
                    } else {
                        "t".into()
                    }
                },
            },
            HomCase {
                name: "Z/2 × Pair(2) -> Z/2",
                domain: catalog::transitive(2, 2),
                codomain: catalog::cyclic(2),
                image: |g| g[3..].to_string(),
            },
        ]
    })
}

pub fn random_ring(rng: &mut ChaCha8Rng) -> Ring {
    [Ring::Z, Ring::Mod(2), Ring::Mod(3), Ring::Mod(4)][rng.gen_range(0..4)]
}

fn random_values(len: usize, rng: &mut ChaCha8Rng) -> Vec<Int> {
    (0..len).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect()
}

pub fn random_cochain(g: &FiniteGroupoid, n: usize, ring: Ring, rng: &mut ChaCha8Rng) -> Cochain {
    Cochain::new(n, ring, random_values(g.nerve(n).unwrap().len(), rng))
}

pub fn random_chain(g: &FiniteGroupoid, n: usize, ring: Ring, rng: &mut ChaCha8Rng) -> Chain {
    Chain::new(n, ring, random_values(g.nerve(n).unwrap().len(), rng))
}

/// Random coordinates for a class: free coordinates in `-3..=3`, torsion
/// coordinates in range.
pub fn random_class(h: &FgAbGroup, rng: &mut ChaCha8Rng) -> Vec<Int> {
    h.orders()
        .iter()
        .map(|o| {
            if o == &Int::from(0) {
                Int::from(rng.gen_range(-3i64..=3))
            } else {
                Int::from(rng.gen_range(0..i64::try_from(o).unwrap()))
            }
        })
        .collect()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, lhs: T, rhs: T) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn boundary_squares_to_zero(g: &FiniteGroupoid, _: &mut ChaCha8Rng) -> Result<(), String> {
    for n in 0..=3 {
        let d = g.boundary_matrix(n).map_err(err)?.mul(&g.boundary_matrix(n + 1).map_err(err)?).map_err(err)?;
        expect_eq(&format!("∂_{n}∂_{}", n + 1), d.is_zero(), true)?;
        let c = g.coboundary_matrix(n + 1).map_err(err)?.mul(&g.coboundary_matrix(n).map_err(err)?).map_err(err)?;
        expect_eq(&format!("δ^{}δ^{n}", n + 1), c.is_zero(), true)?;
    }
    Ok(())
}

/// `d_i ∘ d_j = d_{j-1} ∘ d_i` for `i < j`, every string, `n ≤ 4`.
pub fn face_identity(g: &FiniteGroupoid, _: &mut ChaCha8Rng) -> Result<(), String> {
    for n in 2..=4 {
        let nerve = g.nerve(n).map_err(err)?;
        for j in 0..=n {
            for i in 0..j {
                for s in nerve.iter() {
                    let lhs = g.face(&g.face(s, j), i);
                    let rhs = g.face(&g.face(s, i), j - 1);
                    expect_eq(&format!("n={n} i={i} j={j} at {s:?}"), lhs, rhs)?;
                }
            }
        }
    }
    Ok(())
}

/// `π_*(f)·ξ = π_*(f·(ξ∘π))` for a random face map `π`.
pub fn pushforward_projection(g: &FiniteGroupoid, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=3);
    let i = rng.gen_range(0..=n);
    let ring = random_ring(rng);
    let map = g.face_map(n, i).map_err(err)?;
    let len = g.nerve(n - 1).map_err(err)?.len();
    let f = random_chain(g, n, ring, rng);
    let xi = random_cochain(g, n - 1, ring, rng);
    let pushed = Chain::new(n - 1, ring, pushforward(&map, len, f.values()));
    let lhs = FiniteGroupoid::pointwise(&pushed, &xi);
    let pulled = FiniteGroupoid::pull_back(&xi, &map, n);
    let rhs = Chain::new(n - 1, ring, pushforward(&map, len, FiniteGroupoid::pointwise(&f, &pulled).values()));
    expect_eq("projection formula", lhs, rhs)
}

/// `(d_i ∘ d_j)_* = d_i* ∘ d_j*`.
pub fn pushforward_functorial(g: &FiniteGroupoid, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(2..=3);
    let j = rng.gen_range(0..=n);
    let i = rng.gen_range(0..n);
    let (a, b) = (g.face_map(n, j).map_err(err)?, g.face_map(n - 1, i).map_err(err)?);
    let composite: Vec<usize> = a.iter().map(|&x| b[x]).collect();
    let f = random_chain(g, n, Ring::Z, rng);
    let (mid, low) = (g.nerve(n - 1).map_err(err)?.len(), g.nerve(n - 2).map_err(err)?.len());
    let lhs = pushforward(&composite, low, f.values());
    let rhs = pushforward(&b, low, &pushforward(&a, mid, f.values()));
    expect_eq("functoriality", lhs, rhs)
}

fn sign(k: usize) -> Int {
    Int::from(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `δ(ξ⌣η) = δξ⌣η + (-1)^n ξ⌣δη`.
pub fn cup_leibniz(g: &FiniteGroupoid, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(0..=2);
    let m = rng.gen_range(0..=2 - n);
    let ring = random_ring(rng);
    let xi = random_cochain(g, n, Ring::Z, rng);
    let eta = random_cochain(g, m, ring, rng);
    let lhs = g.coboundary(&g.cup(&xi, &eta).map_err(err)?).map_err(err)?;
    let a = g.cup(&g.coboundary(&xi).map_err(err)?, &eta).map_err(err)?;
    let b = g.cup(&xi, &g.coboundary(&eta).map_err(err)?).map_err(err)?;
    expect_eq(&format!("Leibniz n={n} m={m} over {ring}"), lhs, &a + &b.scale(&sign(n)))
}

/// `∂(f⌢ξ) = (-1)^m (∂f⌢ξ - f⌢δξ)` for `m < n`.
pub fn cap_leibniz(g: &FiniteGroupoid, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(0..n);
    let ring = random_ring(rng);
    let f = random_chain(g, n, Ring::Z, rng);
    let xi = random_cochain(g, m, ring, rng);
    let lhs = g.boundary(&g.cap(&f, &xi).map_err(err)?).map_err(err)?;
    let a = g.cap(&g.boundary(&f).map_err(err)?, &xi).map_err(err)?;
    let b = g.cap(&f, &g.coboundary(&xi).map_err(err)?).map_err(err)?;
    expect_eq(&format!("cap Leibniz n={n} m={m} over {ring}"), lhs, (&a - &b).scale(&sign(m)))
}

/// `(ξ⌣η)⌣ζ = ξ⌣(η⌣ζ)`.
pub fn cup_associative(g: &FiniteGroupoid, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(0..=3);
    let m = rng.gen_range(0..=3 - n);
    let l = rng.gen_range(0..=3 - n - m);
    let ring = random_ring(rng);
    let xi = random_cochain(g, n, Ring::Z, rng);
    let eta = random_cochain(g, m, Ring::Z, rng);
    let zeta = random_cochain(g, l, ring, rng);
    let lhs = g.cup(&g.cup(&xi, &eta).map_err(err)?, &zeta).map_err(err)?;
    let rhs = g.cup(&xi, &g.cup(&eta, &zeta).map_err(err)?).map_err(err)?;
    expect_eq(&format!("associativity ({n},{m},{l})"), lhs, rhs)
}

/// `f⌢(ξ⌣η) = (f⌢ξ)⌢η` for `m + l ≤ n`.
pub fn cap_cup_compatible(g: &FiniteGroupoid, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(0..=3);
    let m = rng.gen_range(0..=n);
    let l = rng.gen_range(0..=n - m);
    let ring = random_ring(rng);
    let f = random_chain(g, n, Ring::Z, rng);
    let xi = random_cochain(g, m, Ring::Z, rng);
    let eta = random_cochain(g, l, ring, rng);
    let lhs = g.cap(&f, &g.cup(&xi, &eta).map_err(err)?).map_err(err)?;
    let rhs = g.cap(&g.cap(&f, &xi).map_err(err)?, &eta).map_err(err)?;
    expect_eq(&format!("compatibility ({n},{m},{l}) over {ring}"), lhs, rhs)
}

/// Perturbing representatives by coboundaries and boundaries leaves the
/// class-level products unchanged.
pub fn representative_independence(g: &FiniteGroupoid, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ring = random_ring(rng);
    let n = rng.gen_range(0..=2);
    let m = rng.gen_range(0..=2 - n);
    let a = random_class(&*g.cohomology(n, Ring::Z).map_err(err)?, rng);
    let b = random_class(&*g.cohomology(m, ring).map_err(err)?, rng);
    let xi = g.cocycle_representative(n, Ring::Z, &a).map_err(err)?;
    let eta = g.cocycle_representative(m, ring, &b).map_err(err)?;
    let base = g.cup_of_cocycles(&xi, &eta).map_err(err)?;
    let moved_xi =
        if n == 0 { xi.clone() } else { &xi + &g.coboundary(&random_cochain(g, n - 1, Ring::Z, rng)).map_err(err)? };
    let moved_eta =
        if m == 0 { eta.clone() } else { &eta + &g.coboundary(&random_cochain(g, m - 1, ring, rng)).map_err(err)? };
    expect_eq("cup class", base, g.cup_of_cocycles(&moved_xi, &moved_eta).map_err(err)?)?;

    let n = rng.gen_range(0..=3);
    let m = rng.gen_range(0..=n);
    let c = random_class(&*g.homology(n, Ring::Z).map_err(err)?, rng);
    let a = random_class(&*g.cohomology(m, ring).map_err(err)?, rng);
    let f = g.cycle_representative(n, Ring::Z, &c).map_err(err)?;
    let xi = g.cocycle_representative(m, ring, &a).map_err(err)?;
    let base = g.cap_of_cycles(&f, &xi).map_err(err)?;
    let moved_f = &f + &g.boundary(&random_chain(g, n + 1, Ring::Z, rng)).map_err(err)?;
    let moved_xi =
        if m == 0 { xi.clone() } else { &xi + &g.coboundary(&random_cochain(g, m - 1, ring, rng)).map_err(err)? };
    expect_eq("cap class", base, g.cap_of_cycles(&moved_f, &moved_xi).map_err(err)?)
}

/// `H^n(π)a ⌣ H^m(π)b = H^{n+m}(π)(a⌣b)`.
pub fn cup_functorial(case: &HomCase, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let pi = case.hom();
    let (g, h) = (&case.domain, &case.codomain);
    let ring = random_ring(rng);
    let n = rng.gen_range(0..=2);
    let m = rng.gen_range(0..=2 - n);
    let a = random_class(&*h.cohomology(n, Ring::Z).map_err(err)?, rng);
    let b = random_class(&*h.cohomology(m, ring).map_err(err)?, rng);
    let pa = pi.induced_on_cohomology(n, Ring::Z).map_err(err)?.apply(&a).map_err(err)?;
    let pb = pi.induced_on_cohomology(m, ring).map_err(err)?.apply(&b).map_err(err)?;
    let lhs = g.cup_class(n, &pa, m, &pb, ring).map_err(err)?;
    let ab = h.cup_class(n, &a, m, &b, ring).map_err(err)?;
    let rhs = pi.induced_on_cohomology(n + m, ring).map_err(err)?.apply(&ab).map_err(err)?;
    expect_eq(&format!("{}: cup ({n},{m}) over {ring}", case.name), lhs, rhs)
}

/// `H_n(π)[f] ⌢ [ξ] = H_{n-m}(π)([f] ⌢ H^m(π)[ξ])`.
pub fn cap_functorial(case: &HomCase, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let pi = case.hom();
    let (g, h) = (&case.domain, &case.codomain);
    let ring = random_ring(rng);
    let n = rng.gen_range(0..=3);
    let m = rng.gen_range(0..=n);
    let c = random_class(&*g.homology(n, Ring::Z).map_err(err)?, rng);
    let a = random_class(&*h.cohomology(m, ring).map_err(err)?, rng);
    let pc = pi.induced_on_homology(n, Ring::Z).map_err(err)?.apply(&c).map_err(err)?;
    let lhs = h.cap_class(n, &pc, m, &a, ring).map_err(err)?;
    let pa = pi.induced_on_cohomology(m, ring).map_err(err)?.apply(&a).map_err(err)?;
    let inner = g.cap_class(n, &c, m, &pa, ring).map_err(err)?;
    let rhs = pi.induced_on_homology(n - m, ring).map_err(err)?.apply(&inner).map_err(err)?;
    expect_eq(&format!("{}: cap ({n},{m}) over {ring}", case.name), lhs, rhs)
}

/// Commuting permutations of at most `max_points` points: each block is a
/// finite abelian group `Z/m1 × Z/m2` on which generator `i` adds a random
/// element. Points are shuffled afterwards.
pub fn random_action(rank: usize, max_points: usize, rng: &mut ChaCha8Rng) -> cupcap::zn::ZnAction {
    use rand::seq::SliceRandom;
    let total = rng.gen_range(1..=max_points);
    let mut gens: Vec<Vec<usize>> = vec![Vec::new(); rank];
    let mut used = 0;
    while used < total {
        let left = total - used;
        let m1 = rng.gen_range(1..=left);
        let m2 = rng.gen_range(1..=left / m1);
        for g in gens.iter_mut() {
            let (a, b) = (rng.gen_range(0..m1), rng.gen_range(0..m2));
            for x in 0..m1 * m2 {
                let (p, q) = (x / m2, x % m2);
                g.push(used + ((p + a) % m1) * m2 + (q + b) % m2);
            }
        }
        used += m1 * m2;
    }
    let mut relabel: Vec<usize> = (0..total).collect();
    relabel.shuffle(rng);
    let mut shuffled = vec![vec![0; total]; rank];
    for (g, out) in gens.iter().zip(shuffled.iter_mut()) {
        for x in 0..total {
            out[relabel[x]] = relabel[g[x]];
        }
    }
    let points = (0..total).map(|i| format!("x{i}")).collect();
    cupcap::zn::ZnAction::new(points, shuffled).expect("translations commute")
}

/// Constant cocycles perturbed by random coboundaries.
pub fn random_cocycles(action: &cupcap::zn::ZnAction, rng: &mut ChaCha8Rng) -> Vec<cupcap::zn::ZnCocycle> {
    (0..action.rank())
        .map(|_| {
            let c: Vec<i64> = (0..action.rank()).map(|_| rng.gen_range(-3..=3)).collect();
            let h: Vec<i64> = (0..action.num_points()).map(|_| rng.gen_range(-5..=5)).collect();
            cupcap::zn::ZnCocycle::constant(action, &c).unwrap().perturb(action, &h).unwrap()
        })
        .collect()
}

/// A valid adjacency matrix of size at most `max_n`, by rejection.
pub fn random_adjacency(max_n: usize, rng: &mut ChaCha8Rng) -> cupcap::sft::AdjacencyMatrix {
    use cupcap::linalg::IntMatrix;
    loop {
        let n = rng.gen_range(1..=max_n);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..=2)).collect()).collect();
        if let Ok(a) = cupcap::sft::validate_adjacency(&IntMatrix::from_rows(&rows)) {
            return a;
        }
    }
}
