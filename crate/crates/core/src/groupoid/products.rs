use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Chain, Cochain, FiniteGroupoid, GroupoidError, Ring, Variance};
use crate::linalg::{subquotient_group, subquotient_group_mod, FgAbGroup, Int, IntMatrix};

/// Cap products of basis classes: entry `(i, j)` holds the coordinates in
/// `H_{n-m}` of `rep_i ⌢ corep_j`.
#[derive(Clone, Debug)]
pub struct PairingTable {
    pub homology: Arc<FgAbGroup>,
    pub cohomology: Arc<FgAbGroup>,
    pub target: Arc<FgAbGroup>,
    pub entries: Vec<Vec<Vec<Int>>>,
}

impl PairingTable {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|c| self.target.is_zero(c))
    }
}

fn group(kernel_of: &IntMatrix, image_of: &IntMatrix, ring: Ring) -> Result<FgAbGroup, GroupoidError> {
    Ok(match ring.modulus() {
        None => subquotient_group(kernel_of, image_of)?,
        Some(k) => subquotient_group_mod(kernel_of, image_of, &k)?,
    })
}

impl FiniteGroupoid {
    /// `H_n(G; R) = Ker ∂_n / Im ∂_{n+1}`.
    pub fn homology(&self, n: usize, ring: Ring) -> Result<Arc<FgAbGroup>, GroupoidError> {
        self.check_degree(n)?;
        self.cached_group((Variance::Homology, n, ring), || {
            group(&self.boundary_matrix(n)?, &self.boundary_matrix(n + 1)?, ring)
        })
    }

    /// `H^n(G; R) = Ker δ^n / Im δ^{n-1}`.
    pub fn cohomology(&self, n: usize, ring: Ring) -> Result<Arc<FgAbGroup>, GroupoidError> {
        self.check_degree(n)?;
        self.cached_group((Variance::Cohomology, n, ring), || {
            let image = if n == 0 { IntMatrix::zeros(self.nerve(0)?.len(), 0) } else { self.coboundary_matrix(n - 1)? };
            group(&self.coboundary_matrix(n)?, &image, ring)
        })
    }

    /// `(ξ⌣η)(g_1..g_{n+m}) = ξ(g_1..g_n)·η(g_{n+1}..g_{n+m})`, reading a
    /// degree-0 factor at `r(g_1)` or `s(g_n)` as appropriate.
    pub fn cup(&self, xi: &Cochain, eta: &Cochain) -> Result<Cochain, GroupoidError> {
        if xi.ring() != Ring::Z {
            return Err(GroupoidError::RingMismatch(xi.ring()));
        }
        xi.check(self)?;
        eta.check(self)?;
        let (n, m) = (xi.degree(), eta.degree());
        let (front, back, total) = (self.nerve(n)?, self.nerve(m)?, self.nerve(n + m)?);
        let values = total
            .iter()
            .map(|s| {
                let a = match n {
                    0 => vec![self.range(s[0])],
                    _ => s[..n].to_vec(),
                };
                let b = match (n, m) {
                    (0, _) => s.to_vec(),
                    (_, 0) => vec![self.source(s[n - 1])],
                    _ => s[n..].to_vec(),
                };
                let x = xi.value(front.index_of(&a).expect("front face"));
                if x.is_zero() {
                    return Int::zero();
                }
                x * eta.value(back.index_of(&b).expect("back face"))
            })
            .collect();
        Ok(Cochain::new(n + m, eta.ring(), values))
    }

    /// `(f⌢ξ)(h_1..h_{n-m}) = Σ f(g_1..g_m, h_1..h_{n-m})·ξ(g_1..g_m)`.
    ///
    /// For `m = n` the result sits at the unit `s(g_m)`; for `m = 0` it is
    /// `f·ξ(r(g_1))`.
    pub fn cap(&self, f: &Chain, xi: &Cochain) -> Result<Chain, GroupoidError> {
        if f.ring() != Ring::Z {
            return Err(GroupoidError::RingMismatch(f.ring()));
        }
        let (n, m) = (f.degree(), xi.degree());
        if m > n {
            return Err(GroupoidError::DegreeError { chain: n, cochain: m });
        }
        f.check(self)?;
        xi.check(self)?;
        let (top, front, rest) = (self.nerve(n)?, self.nerve(m)?, self.nerve(n - m)?);
        let mut out = vec![Int::zero(); rest.len()];
        for (i, c) in f.values().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = top.get(i);
            let (a, b) = match (n, m) {
                (0, 0) => (s.to_vec(), s.to_vec()),
                (_, 0) => (vec![self.range(s[0])], s.to_vec()),
                _ if m == n => (s.to_vec(), vec![self.source(s[m - 1])]),
                _ => (s[..m].to_vec(), s[m..].to_vec()),
            };
            let x = xi.value(front.index_of(&a).expect("front face"));
            if !x.is_zero() {
                out[rest.index_of(&b).expect("back face")] += c * x;
            }
        }
        Ok(Chain::new(n - m, xi.ring(), out))
    }

    /// Class of a cocycle in `H^n(G; R)`.
    pub fn cohomology_class(&self, xi: &Cochain) -> Result<Vec<Int>, GroupoidError> {
        let h = self.cohomology(xi.degree(), xi.ring())?;
        xi.check(self)?;
        if !h.is_cycle(xi.values()) {
            return Err(GroupoidError::NotACocycle);
        }
        Ok(h.class_of(xi.values())?)
    }

    /// Class of a cycle in `H_n(G; R)`.
    pub fn homology_class(&self, f: &Chain) -> Result<Vec<Int>, GroupoidError> {
        let h = self.homology(f.degree(), f.ring())?;
        f.check(self)?;
        if !h.is_cycle(f.values()) {
            return Err(GroupoidError::NotACycle);
        }
        Ok(h.class_of(f.values())?)
    }

    /// The stored cocycle representing the class with the given coordinates.
    pub fn cocycle_representative(&self, n: usize, ring: Ring, class: &[Int]) -> Result<Cochain, GroupoidError> {
        let h = self.cohomology(n, ring)?;
        Ok(Cochain::new(n, ring, h.representative(class)?))
    }

    /// The stored cycle representing the class with the given coordinates.
    pub fn cycle_representative(&self, n: usize, ring: Ring, class: &[Int]) -> Result<Chain, GroupoidError> {
        let h = self.homology(n, ring)?;
        Ok(Chain::new(n, ring, h.representative(class)?))
    }

    /// `[ξ]⌣[η]` from cocycle representatives, as coordinates in
    /// `H^{n+m}(G; R)`.
    pub fn cup_of_cocycles(&self, xi: &Cochain, eta: &Cochain) -> Result<Vec<Int>, GroupoidError> {
        self.check_degree(xi.degree() + eta.degree())?;
        self.cohomology_class(xi)?;
        self.cohomology_class(eta)?;
        self.cohomology_class(&self.cup(xi, eta)?)
    }

    /// `[f]⌢[ξ]` from representatives, as coordinates in `H_{n-m}(G; R)`.
    pub fn cap_of_cycles(&self, f: &Chain, xi: &Cochain) -> Result<Vec<Int>, GroupoidError> {
        self.homology_class(f)?;
        self.cohomology_class(xi)?;
        self.homology_class(&self.cap(f, xi)?)
    }

    /// Cup product on class coordinates: `a ∈ H^n(G; Z)`, `b ∈ H^m(G; R)`.
    pub fn cup_class(&self, n: usize, a: &[Int], m: usize, b: &[Int], ring: Ring) -> Result<Vec<Int>, GroupoidError> {
        let xi = self.cocycle_representative(n, Ring::Z, a)?;
        let eta = self.cocycle_representative(m, ring, b)?;
        self.cup_of_cocycles(&xi, &eta)
    }

    /// Cap product on class coordinates: `c ∈ H_n(G; Z)`, `a ∈ H^m(G; R)`.
    pub fn cap_class(&self, n: usize, c: &[Int], m: usize, a: &[Int], ring: Ring) -> Result<Vec<Int>, GroupoidError> {
        let f = self.cycle_representative(n, Ring::Z, c)?;
        let xi = self.cocycle_representative(m, ring, a)?;
        self.cap_of_cycles(&f, &xi)
    }

    /// Cap products of all pairs of basis classes of `H_n(G; Z)` and
    /// `H^m(G; R)`.
    pub fn cap_pairing_table(&self, n: usize, m: usize, ring: Ring) -> Result<PairingTable, GroupoidError> {
        if m > n {
            return Err(GroupoidError::DegreeError { chain: n, cochain: m });
        }
        let homology = self.homology(n, Ring::Z)?;
        let cohomology = self.cohomology(m, ring)?;
        let target = self.homology(n - m, ring)?;
        let unit = |k: usize, len: usize| -> Vec<Int> {
            (0..len).map(|i| if i == k { Int::one() } else { Int::zero() }).collect()
        };
        let mut entries = Vec::with_capacity(homology.num_generators());
        for i in 0..homology.num_generators() {
            let f = self.cycle_representative(n, Ring::Z, &unit(i, homology.num_generators()))?;
            let mut row = Vec::with_capacity(cohomology.num_generators());
            for j in 0..cohomology.num_generators() {
                let xi = self.cocycle_representative(m, ring, &unit(j, cohomology.num_generators()))?;
                row.push(target.class_of(self.cap(&f, &xi)?.values())?);
            }
            entries.push(row);
        }
        Ok(PairingTable { homology, cohomology, target, entries })
    }
}
