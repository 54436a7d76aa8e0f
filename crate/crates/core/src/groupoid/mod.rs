//! Finite discrete groupoids, their nerves, and (co)homology with constant
//! coefficients in `Z` or `Z/k`, together with cup and cap products.
//!
//! A finite discrete groupoid is ample with every subset a compact open
//! bisection, so the chain complex is the nerve complex with integer
//! coefficients and the face maps below.

pub mod catalog;
mod chain;
mod hom;
mod nerve;
mod products;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::linalg::{FgAbGroup, LinalgError};

pub use chain::{pushforward, Chain, Cochain, Ring, TableFile};
pub use hom::GroupoidHom;
pub use nerve::Nerve;
pub use products::PairingTable;

/// The axiom a groupoid table failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Associativity,
    Unit,
    Inverse,
    SourceRange,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Inverse => "inverse",
            Axiom::SourceRange => "source-range",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupoidError {
    #[error("axiom violation ({axiom}) at {morphisms:?}")]
    AxiomViolation { axiom: Axiom, morphisms: Vec<String> },
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("malformed groupoid table: {0}")]
    Malformed(String),
    #[error("({0}) is not a composable string")]
    NotComposable(String),
    #[error("first factor must be Z-valued, found {0}")]
    RingMismatch(Ring),
    #[error("cochain degree {cochain} exceeds chain degree {chain}")]
    DegreeError { chain: usize, cochain: usize },
    #[error("degree {degree} exceeds the configured limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("nerve in degree {degree} has {count} strings, over the budget of {budget}")]
    BudgetExceeded { degree: usize, count: u128, budget: usize },
    #[error("chain or cochain does not fit the nerve: {0}")]
    Shape(String),
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("not a groupoid homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Resource limits for nerve-based computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest degree accepted by homology, cohomology and the products.
    pub max_degree: usize,
    /// Largest number of composable strings enumerated in a single degree.
    pub max_strings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 4, max_strings: 1_000_000 }
    }
}

/// Groupoid tables as they appear in input files. `inverse` is derived when
/// absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidTables {
    pub morphisms: Vec<String>,
    pub units: Vec<String>,
    pub source: BTreeMap<String, String>,
    pub range: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<BTreeMap<String, String>>,
}

const UNDEFINED: u32 = u32::MAX;

/// A validated finite groupoid. Morphisms are indexed in the sorted order of
/// their identifiers.
pub struct FiniteGroupoid {
    names: Vec<String>,
    index: HashMap<String, u32>,
    units: Vec<u32>,
    source: Vec<u32>,
    range: Vec<u32>,
    inverse: Vec<u32>,
    compose: Vec<u32>,
    limits: Limits,
    nerves: RwLock<HashMap<usize, Arc<Nerve>>>,
    groups: RwLock<HashMap<(Variance, usize, Ring), Arc<FgAbGroup>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Variance {
    Homology,
    Cohomology,
}

impl Clone for FiniteGroupoid {
    fn clone(&self) -> Self {
        FiniteGroupoid {
            names: self.names.clone(),
            index: self.index.clone(),
            units: self.units.clone(),
            source: self.source.clone(),
            range: self.range.clone(),
            inverse: self.inverse.clone(),
            compose: self.compose.clone(),
            limits: self.limits,
            nerves: RwLock::default(),
            groups: RwLock::default(),
        }
    }
}

impl fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroupoid")
            .field("morphisms", &self.names)
            .field("units", &self.units.iter().map(|&u| &self.names[u as usize]).collect::<Vec<_>>())
            .finish()
    }
}

fn violation(axiom: Axiom, names: &[&str]) -> GroupoidError {
    GroupoidError::AxiomViolation { axiom, morphisms: names.iter().map(|s| s.to_string()).collect() }
}

/// Validates raw tables, returning the groupoid or the first axiom violation.
///
/// Checks run in the order: source/range consistency, units, associativity,
/// inverses.
pub fn validate_groupoid(t: &GroupoidTables) -> Result<FiniteGroupoid, GroupoidError> {
    let mut names = t.morphisms.clone();
    names.sort();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(GroupoidError::Malformed(format!("morphism `{}` listed twice", w[0])));
    }
    let m = names.len();
    if m >= UNDEFINED as usize {
        return Err(GroupoidError::Malformed("too many morphisms".into()));
    }
    let index: HashMap<String, u32> = names.iter().enumerate().map(|(i, n)| (n.clone(), i as u32)).collect();
    let look = |s: &str| index.get(s).copied().ok_or_else(|| GroupoidError::UnknownMorphism(s.to_string()));

    let mut is_unit = vec![false; m];
    for u in &t.units {
        let i = look(u)? as usize;
        if is_unit[i] {
            return Err(GroupoidError::Malformed(format!("unit `{u}` listed twice")));
        }
        is_unit[i] = true;
    }

    let side_table = |table: &BTreeMap<String, String>| -> Result<Vec<u32>, GroupoidError> {
        for k in table.keys() {
            look(k)?;
        }
        names
            .iter()
            .map(|g| {
                let v = table.get(g).ok_or_else(|| violation(Axiom::SourceRange, &[g]))?;
                let v = look(v)?;
                if !is_unit[v as usize] {
                    return Err(violation(Axiom::SourceRange, &[g, &names[v as usize]]));
                }
                Ok(v)
            })
            .collect()
    };
    let source = side_table(&t.source)?;
    let range = side_table(&t.range)?;

    let mut compose = vec![UNDEFINED; m * m];
    for [g, h, gh] in &t.compose {
        let (gi, hi, ghi) = (look(g)?, look(h)?, look(gh)?);
        if source[gi as usize] != range[hi as usize] {
            return Err(violation(Axiom::SourceRange, &[g, h]));
        }
        if source[ghi as usize] != source[hi as usize] || range[ghi as usize] != range[gi as usize] {
            return Err(violation(Axiom::SourceRange, &[g, h, gh]));
        }
        let slot = &mut compose[gi as usize * m + hi as usize];
        if *slot != UNDEFINED && *slot != ghi {
            return Err(GroupoidError::Malformed(format!("product of `{g}` and `{h}` given twice")));
        }
        *slot = ghi;
    }
    for g in 0..m {
        for h in 0..m {
            if source[g] == range[h] && compose[g * m + h] == UNDEFINED {
                return Err(violation(Axiom::SourceRange, &[&names[g], &names[h]]));
            }
        }
    }

    for u in (0..m).filter(|&u| is_unit[u]) {
        if source[u] != u as u32 || range[u] != u as u32 {
            return Err(violation(Axiom::Unit, &[&names[u]]));
        }
    }
    for g in 0..m {
        let (s, r) = (source[g] as usize, range[g] as usize);
        if compose[r * m + g] != g as u32 {
            return Err(violation(Axiom::Unit, &[&names[r], &names[g]]));
        }
        if compose[g * m + s] != g as u32 {
            return Err(violation(Axiom::Unit, &[&names[g], &names[s]]));
        }
    }

    let mut by_range: Vec<Vec<u32>> = vec![Vec::new(); m];
    for g in 0..m {
        by_range[range[g] as usize].push(g as u32);
    }
    for g in 0..m {
        for &h in &by_range[source[g] as usize] {
            let gh = compose[g * m + h as usize] as usize;
            for &k in &by_range[source[h as usize] as usize] {
                let hk = compose[h as usize * m + k as usize] as usize;
                if compose[gh * m + k as usize] != compose[g * m + hk] {
                    return Err(violation(Axiom::Associativity, &[&names[g], &names[h as usize], &names[k as usize]]));
                }
            }
        }
    }

    let inverse: Vec<u32> = match &t.inverse {
        Some(table) => {
            for k in table.keys() {
                look(k)?;
            }
            let mut inv = Vec::with_capacity(m);
            for name in &names[..m] {
                let h = table.get(name).ok_or_else(|| violation(Axiom::Inverse, &[name]))?;
                inv.push(look(h)?);
            }
            inv
        }
        None => (0..m)
            .map(|g| {
                by_range[source[g] as usize]
                    .iter()
                    .copied()
                    .find(|&h| source[h as usize] == range[g] && compose[g * m + h as usize] == range[g])
                    .unwrap_or(UNDEFINED)
            })
            .collect(),
    };
    for g in 0..m {
        let h = inverse[g];
        let ok = h != UNDEFINED
            && source[h as usize] == range[g]
            && range[h as usize] == source[g]
            && compose[h as usize * m + g] == source[g]
            && compose[g * m + h as usize] == range[g];
        if !ok {
            return Err(violation(Axiom::Inverse, &[&names[g]]));
        }
    }

    let units = (0..m as u32).filter(|&u| is_unit[u as usize]).collect();
    Ok(FiniteGroupoid {
        names,
        index,
        units,
        source,
        range,
        inverse,
        compose,
        limits: Limits::default(),
        nerves: RwLock::default(),
        groups: RwLock::default(),
    })
}

impl FiniteGroupoid {
    pub fn from_tables(t: &GroupoidTables) -> Result<Self, GroupoidError> {
        validate_groupoid(t)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self.nerves = RwLock::default();
        self.groups = RwLock::default();
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn num_morphisms(&self) -> usize {
        self.names.len()
    }

    pub fn morphism_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: u32) -> &str {
        &self.names[g as usize]
    }

    pub fn morphism(&self, name: &str) -> Result<u32, GroupoidError> {
        self.index.get(name).copied().ok_or_else(|| GroupoidError::UnknownMorphism(name.to_string()))
    }

    pub fn units(&self) -> &[u32] {
        &self.units
    }

    pub fn is_unit(&self, g: u32) -> bool {
        self.source[g as usize] == g && self.range[g as usize] == g
    }

    pub fn source(&self, g: u32) -> u32 {
        self.source[g as usize]
    }

    pub fn range(&self, g: u32) -> u32 {
        self.range[g as usize]
    }

    pub fn inverse(&self, g: u32) -> u32 {
        self.inverse[g as usize]
    }

    /// `g·h`, defined when `s(g) = r(h)`.
    pub fn compose(&self, g: u32, h: u32) -> Option<u32> {
        let v = self.compose[g as usize * self.names.len() + h as usize];
        (v != UNDEFINED).then_some(v)
    }

    /// Tables that reproduce this groupoid under [`validate_groupoid`].
    pub fn to_tables(&self) -> GroupoidTables {
        let m = self.names.len() as u32;
        let name = |g: u32| self.names[g as usize].clone();
        GroupoidTables {
            morphisms: self.names.clone(),
            units: self.units.iter().map(|&u| name(u)).collect(),
            source: (0..m).map(|g| (name(g), name(self.source(g)))).collect(),
            range: (0..m).map(|g| (name(g), name(self.range(g)))).collect(),
            compose: (0..m)
                .flat_map(|g| (0..m).filter_map(move |h| self.compose(g, h).map(|gh| [name(g), name(h), name(gh)])))
                .collect(),
            inverse: Some((0..m).map(|g| (name(g), name(self.inverse(g)))).collect()),
        }
    }

    pub(crate) fn check_degree(&self, degree: usize) -> Result<(), GroupoidError> {
        if degree > self.limits.max_degree {
            Err(GroupoidError::DegreeLimit { degree, limit: self.limits.max_degree })
        } else {
            Ok(())
        }
    }

    /// Parses a string of morphism identifiers into indices, checking
    /// composability. Degree-0 strings are a single unit.
    pub fn string(&self, names: &[impl AsRef<str>]) -> Result<Vec<u32>, GroupoidError> {
        let ids = names.iter().map(|n| self.morphism(n.as_ref())).collect::<Result<Vec<_>, _>>()?;
        let render = || names.iter().map(|n| n.as_ref()).collect::<Vec<_>>().join(", ");
        if ids.windows(2).any(|w| self.source(w[0]) != self.range(w[1])) {
            return Err(GroupoidError::NotComposable(render()));
        }
        Ok(ids)
    }

    pub(crate) fn strings_by_range(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.names.len()];
        for g in 0..self.names.len() as u32 {
            out[self.range(g) as usize].push(g);
        }
        out
    }

    pub(crate) fn cached_group(
        &self,
        key: (Variance, usize, Ring),
        build: impl FnOnce() -> Result<FgAbGroup, GroupoidError>,
    ) -> Result<Arc<FgAbGroup>, GroupoidError> {
        if let Some(g) = self.groups.read().unwrap().get(&key) {
            return Ok(g.clone());
        }
        let g = Arc::new(build()?);
        self.groups.write().unwrap().entry(key).or_insert(g.clone());
        Ok(g)
    }

    /// Connected components, each as a sorted list of units.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &u in &self.units {
            if !seen.insert(u) {
                continue;
            }
            let mut orbit: Vec<u32> =
                (0..self.names.len() as u32).filter(|&g| self.source(g) == u).map(|g| self.range(g)).collect();
            orbit.sort();
            orbit.dedup();
            seen.extend(orbit.iter().copied());
            out.push(orbit);
        }
        out
    }
}
