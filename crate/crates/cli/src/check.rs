//! The chain-level identity suite run by `cupcap check` on a user groupoid.

use std::fmt::Write as _;

use cupcap::groupoid::{Chain, Cochain, FiniteGroupoid, GroupoidError, Ring};
use cupcap::linalg::{FgAbGroup, Int};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{CliError, Report};

type Outcome = Result<(), String>;

struct Sampler<'a> {
    g: &'a FiniteGroupoid,
    ring: Ring,
    rng: ChaCha8Rng,
}

impl Sampler<'_> {
    fn values(&mut self, n: usize) -> Result<Vec<Int>, GroupoidError> {
        let len = self.g.nerve(n)?.len();
        Ok((0..len).map(|_| Int::from(self.rng.gen_range(-3i64..=3))).collect())
    }

    fn cochain(&mut self, n: usize, ring: Ring) -> Result<Cochain, GroupoidError> {
        Ok(Cochain::new(n, ring, self.values(n)?))
    }

    fn chain(&mut self, n: usize) -> Result<Chain, GroupoidError> {
        Ok(Chain::new(n, Ring::Z, self.values(n)?))
    }

    fn class(&mut self, h: &FgAbGroup) -> Vec<Int> {
        h.orders()
            .iter()
            .map(|o| match i64::try_from(o) {
                Ok(k) if k > 0 => Int::from(self.rng.gen_range(0..k)),
                _ => Int::from(self.rng.gen_range(-3i64..=3)),
            })
            .collect()
    }
}

fn sign(k: usize) -> Int {
    Int::from(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn same<T: PartialEq>(what: String, lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(what)
    }
}

fn boundaries(s: &mut Sampler) -> Result<Outcome, GroupoidError> {
    for n in 0..=2 {
        let d = s.g.boundary_matrix(n)?.mul(&s.g.boundary_matrix(n + 1)?)?;
        let c = s.g.coboundary_matrix(n + 1)?.mul(&s.g.coboundary_matrix(n)?)?;
        if !d.is_zero() || !c.is_zero() {
            return Ok(Err(format!("degree {n}")));
        }
    }
    Ok(Ok(()))
}

fn cup_leibniz(s: &mut Sampler) -> Result<Outcome, GroupoidError> {
    let n = s.rng.gen_range(0..=2);
    let m = s.rng.gen_range(0..=2 - n);
    let (xi, eta) = (s.cochain(n, Ring::Z)?, s.cochain(m, s.ring)?);
    let g = s.g;
    let lhs = g.coboundary(&g.cup(&xi, &eta)?)?;
    let rhs = &g.cup(&g.coboundary(&xi)?, &eta)? + &g.cup(&xi, &g.coboundary(&eta)?)?.scale(&sign(n));
    Ok(same(format!("degrees ({n}, {m})"), lhs, rhs))
}

fn cap_leibniz(s: &mut Sampler) -> Result<Outcome, GroupoidError> {
    let n = s.rng.gen_range(1..=3);
    let m = s.rng.gen_range(0..n);
    let (f, xi) = (s.chain(n)?, s.cochain(m, s.ring)?);
    let g = s.g;
    let lhs = g.boundary(&g.cap(&f, &xi)?)?;
    let rhs = (&g.cap(&g.boundary(&f)?, &xi)? - &g.cap(&f, &g.coboundary(&xi)?)?).scale(&sign(m));
    Ok(same(format!("degrees ({n}, {m})"), lhs, rhs))
}

fn associativity(s: &mut Sampler) -> Result<Outcome, GroupoidError> {
    let n = s.rng.gen_range(0..=3);
    let m = s.rng.gen_range(0..=3 - n);
    let l = s.rng.gen_range(0..=3 - n - m);
    let (xi, eta, zeta) = (s.cochain(n, Ring::Z)?, s.cochain(m, Ring::Z)?, s.cochain(l, s.ring)?);
    let g = s.g;
    let lhs = g.cup(&g.cup(&xi, &eta)?, &zeta)?;
    let rhs = g.cup(&xi, &g.cup(&eta, &zeta)?)?;
    Ok(same(format!("degrees ({n}, {m}, {l})"), lhs, rhs))
}

fn compatibility(s: &mut Sampler) -> Result<Outcome, GroupoidError> {
    let n = s.rng.gen_range(0..=3);
    let m = s.rng.gen_range(0..=n);
    let l = s.rng.gen_range(0..=n - m);
    let (f, xi, eta) = (s.chain(n)?, s.cochain(m, Ring::Z)?, s.cochain(l, s.ring)?);
    let g = s.g;
    let lhs = g.cap(&f, &g.cup(&xi, &eta)?)?;
    let rhs = g.cap(&g.cap(&f, &xi)?, &eta)?;
    Ok(same(format!("degrees ({n}, {m}, {l})"), lhs, rhs))
}

fn independence(s: &mut Sampler) -> Result<Outcome, GroupoidError> {
    let g = s.g;
    let n = s.rng.gen_range(0..=2);
    let m = s.rng.gen_range(0..=2 - n);
    let a = s.class(&*g.cohomology(n, Ring::Z)?);
    let b = s.class(&*g.cohomology(m, s.ring)?);
    let xi = g.cocycle_representative(n, Ring::Z, &a)?;
    let eta = g.cocycle_representative(m, s.ring, &b)?;
    let base = g.cup_of_cocycles(&xi, &eta)?;
    let moved = if n == 0 { xi } else { &xi + &g.coboundary(&s.cochain(n - 1, Ring::Z)?)? };
    if base != g.cup_of_cocycles(&moved, &eta)? {
        return Ok(Err(format!("cup in degrees ({n}, {m})")));
    }
    let n = s.rng.gen_range(0..=2);
    let m = s.rng.gen_range(0..=n);
    let c = s.class(&*g.homology(n, Ring::Z)?);
    let a = s.class(&*g.cohomology(m, s.ring)?);
    let f = g.cycle_representative(n, Ring::Z, &c)?;
    let xi = g.cocycle_representative(m, s.ring, &a)?;
    let base = g.cap_of_cycles(&f, &xi)?;
    let moved = &f + &g.boundary(&s.chain(n + 1)?)?;
    Ok(same(format!("cap in degrees ({n}, {m})"), base, g.cap_of_cycles(&moved, &xi)?))
}

type Identity = fn(&mut Sampler) -> Result<Outcome, GroupoidError>;

pub fn run(g: &FiniteGroupoid, ring: Ring, seed: u64, trials: usize) -> Result<Report, CliError> {
    let identities: [(&str, Identity, bool); 6] = [
        ("∂∂ = 0 and δδ = 0", boundaries, false),
        ("cup Leibniz rule", cup_leibniz, true),
        ("cap Leibniz rule", cap_leibniz, true),
        ("cup associativity", associativity, true),
        ("cap/cup compatibility", compatibility, true),
        ("representative independence", independence, true),
    ];
    let mut s = Sampler { g, ring, rng: ChaCha8Rng::seed_from_u64(seed) };
    let (mut text, mut rows, mut passed) = (String::new(), Vec::new(), true);
    for (name, identity, sampled) in identities {
        let runs = if sampled { trials } else { 1 };
        let mut verdict = Ok(());
        for _ in 0..runs {
            verdict = identity(&mut s).map_err(|e| CliError(e.to_string()))?;
            if verdict.is_err() {
                break;
            }
        }
        let scope = if sampled { format!("{runs} samples") } else { "degrees 0 to 2".into() };
        match &verdict {
            Ok(()) => writeln!(text, "PASS {name} ({scope})").unwrap(),
            Err(at) => writeln!(text, "FAIL {name}: {at}").unwrap(),
        }
        passed &= verdict.is_ok();
        rows.push(json!({ "identity": name, "samples": runs, "pass": verdict.is_ok(), "detail": verdict.err() }));
    }
    writeln!(text, "{}", if passed { "PASS" } else { "FAIL" }).unwrap();
    let json = json!({ "seed": seed, "ring": ring.to_string(), "checks": rows, "pass": passed });
    Ok(Report { text, json, passed })
}
