use num_traits::One;

use super::chain::pushforward;
use super::{Chain, Cochain, FiniteGroupoid, GroupoidError, Ring};
use crate::linalg::{induced_hom, GroupHom, IntMatrix};

/// A homomorphism of finite groupoids, given on morphism indices.
#[derive(Clone, Debug)]
pub struct GroupoidHom<'a> {
    pub domain: &'a FiniteGroupoid,
    pub codomain: &'a FiniteGroupoid,
    map: Vec<u32>,
}

impl<'a> GroupoidHom<'a> {
    /// Checks that `map` preserves units, source, range and composition.
    pub fn new(domain: &'a FiniteGroupoid, codomain: &'a FiniteGroupoid, map: Vec<u32>) -> Result<Self, GroupoidError> {
        let bad = |msg: String| Err(GroupoidError::NotAHomomorphism(msg));
        if map.len() != domain.num_morphisms() {
            return bad(format!("{} images for {} morphisms", map.len(), domain.num_morphisms()));
        }
        if let Some(&y) = map.iter().find(|&&y| y as usize >= codomain.num_morphisms()) {
            return bad(format!("image index {y} out of range"));
        }
        let name = |g: u32| domain.name(g).to_string();
        for g in 0..map.len() as u32 {
            let y = map[g as usize];
            if domain.is_unit(g) && !codomain.is_unit(y) {
                return bad(format!("unit `{}` not sent to a unit", name(g)));
            }
            if map[domain.source(g) as usize] != codomain.source(y)
                || map[domain.range(g) as usize] != codomain.range(y)
            {
                return bad(format!("source or range of `{}` not preserved", name(g)));
            }
        }
        for g in 0..map.len() as u32 {
            for h in 0..map.len() as u32 {
                if let Some(gh) = domain.compose(g, h) {
                    if codomain.compose(map[g as usize], map[h as usize]) != Some(map[gh as usize]) {
                        return bad(format!("product of `{}` and `{}` not preserved", name(g), name(h)));
                    }
                }
            }
        }
        Ok(GroupoidHom { domain, codomain, map })
    }

    /// Builds from `(domain name, codomain name)` pairs covering every morphism.
    pub fn from_names(
        domain: &'a FiniteGroupoid,
        codomain: &'a FiniteGroupoid,
        pairs: &[(impl AsRef<str>, impl AsRef<str>)],
    ) -> Result<Self, GroupoidError> {
        let mut map = vec![u32::MAX; domain.num_morphisms()];
        for (a, b) in pairs {
            map[domain.morphism(a.as_ref())? as usize] = codomain.morphism(b.as_ref())?;
        }
        if let Some(g) = map.iter().position(|&y| y == u32::MAX) {
            return Err(GroupoidError::NotAHomomorphism(format!("no image for `{}`", domain.name(g as u32))));
        }
        Self::new(domain, codomain, map)
    }

    pub fn identity(g: &'a FiniteGroupoid) -> Self {
        GroupoidHom { domain: g, codomain: g, map: (0..g.num_morphisms() as u32).collect() }
    }

    pub fn apply(&self, g: u32) -> u32 {
        self.map[g as usize]
    }

    /// `other ∘ self`.
    pub fn then<'b>(&self, other: &GroupoidHom<'b>) -> GroupoidHom<'b>
    where
        'a: 'b,
    {
        assert!(std::ptr::eq(self.codomain, other.domain), "homomorphisms are not composable");
        GroupoidHom {
            domain: self.domain,
            codomain: other.codomain,
            map: self.map.iter().map(|&g| other.apply(g)).collect(),
        }
    }

    /// `π^(n)` as an index map between degree-`n` nerves.
    pub fn nerve_map(&self, n: usize) -> Result<Vec<usize>, GroupoidError> {
        let (src, dst) = (self.domain.nerve(n)?, self.codomain.nerve(n)?);
        Ok(src
            .iter()
            .map(|s| {
                let t: Vec<u32> = s.iter().map(|&g| self.apply(g)).collect();
                dst.index_of(&t).expect("homomorphisms preserve composability")
            })
            .collect())
    }

    /// `π_*` on chains.
    pub fn push(&self, f: &Chain) -> Result<Chain, GroupoidError> {
        f.check(self.domain)?;
        let map = self.nerve_map(f.degree())?;
        let len = self.codomain.nerve(f.degree())?.len();
        Ok(Chain::new(f.degree(), f.ring(), pushforward(&map, len, f.values())))
    }

    /// `ξ∘π` on cochains.
    pub fn pull(&self, xi: &Cochain) -> Result<Cochain, GroupoidError> {
        xi.check(self.codomain)?;
        Ok(FiniteGroupoid::pull_back(xi, &self.nerve_map(xi.degree())?, xi.degree()))
    }

    fn pushforward_matrix(&self, n: usize) -> Result<IntMatrix, GroupoidError> {
        let map = self.nerve_map(n)?;
        let mut m = IntMatrix::zeros(self.codomain.nerve(n)?.len(), map.len());
        for (j, &i) in map.iter().enumerate() {
            m[(i, j)] += num_bigint::BigInt::one();
        }
        Ok(m)
    }

    /// `H_n(π): H_n(G; R) -> H_n(H; R)`.
    pub fn induced_on_homology(&self, n: usize, ring: Ring) -> Result<GroupHom, GroupoidError> {
        let dom = self.domain.homology(n, ring)?;
        let cod = self.codomain.homology(n, ring)?;
        Ok(induced_hom(&self.pushforward_matrix(n)?, &dom, &cod)?)
    }

    /// `H^n(π): H^n(H; R) -> H^n(G; R)`.
    pub fn induced_on_cohomology(&self, n: usize, ring: Ring) -> Result<GroupHom, GroupoidError> {
        let dom = self.codomain.cohomology(n, ring)?;
        let cod = self.domain.cohomology(n, ring)?;
        Ok(induced_hom(&self.pushforward_matrix(n)?.transpose(), &dom, &cod)?)
    }
}
