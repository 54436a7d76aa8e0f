//! Transformation groupoids `Z^N × X` for commuting permutations of a finite
//! set `X`, handled sparsely.
//!
//! An arrow is a pair `(a, x)` with `a ∈ Z^N`, source `x` and range
//! `φ_a(x)`. A composable string `(g_1, ..., g_n)` is keyed by its group
//! labels and the source of its last arrow: `(a_1, ..., a_n; x)` stands for
//! `g_n = (a_n, x)`, `g_{n-1} = (a_{n-1}, φ_{a_n} x)`, and so on.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::Int;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ZnError {
    #[error("malformed action data: {0}")]
    Malformed(String),
    #[error("generators {i} and {j} do not commute at point {x}")]
    NonCommuting { i: usize, j: usize, x: String },
    #[error("cocycle condition fails for generators {i} and {j} at point {x}")]
    CocycleViolation { i: usize, j: usize, x: String },
    #[error("expected {expected} cocycles, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("closed form and direct evaluation differ at {x}: {lhs} vs {rhs}")]
    Mismatch { x: String, lhs: Int, rhs: Int },
}

/// Commuting permutations `φ_{e_1}, ..., φ_{e_N}` of a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZnAction {
    points: Vec<String>,
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
}

impl ZnAction {
    /// `generators[i][x]` is `φ_{e_i}(x)`.
    pub fn new(points: Vec<String>, generators: Vec<Vec<usize>>) -> Result<Self, ZnError> {
        let n = points.len();
        if generators.is_empty() {
            return Err(ZnError::Malformed("at least one generator is required".into()));
        }
        let mut backward = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.len() != n {
                return Err(ZnError::Malformed(format!("generator {} has {} entries for {n} points", i + 1, g.len())));
            }
            let mut inv = vec![usize::MAX; n];
            for (x, &y) in g.iter().enumerate() {
                if y >= n || inv[y] != usize::MAX {
                    return Err(ZnError::Malformed(format!("generator {} is not a permutation", i + 1)));
                }
                inv[y] = x;
            }
            backward.push(inv);
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if let Some(x) = (0..n).find(|&x| generators[i][generators[j][x]] != generators[j][generators[i][x]]) {
                    return Err(ZnError::NonCommuting { i: i + 1, j: j + 1, x: points[x].clone() });
                }
            }
        }
        Ok(ZnAction { points, forward: generators, backward })
    }

    /// Rank `N` of the acting group.
    pub fn rank(&self) -> usize {
        self.forward.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    /// `φ_{±e_i}(x)` for a single generator step.
    pub fn step(&self, i: usize, forward: bool, x: usize) -> usize {
        if forward {
            self.forward[i][x]
        } else {
            self.backward[i][x]
        }
    }

    /// `φ_a(x)`.
    pub fn act(&self, a: &[i64], mut x: usize) -> usize {
        debug_assert_eq!(a.len(), self.rank());
        for (i, &ai) in a.iter().enumerate() {
            for _ in 0..ai.unsigned_abs() {
                x = self.step(i, ai > 0, x);
            }
        }
        x
    }

    /// `e_i` as a vector, zero-based `i`.
    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }
}

/// A `Z`-valued 1-cocycle on `Z^N × X`, given by `ξ_i(x) = ξ(e_i, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZnCocycle {
    tables: Vec<Vec<i64>>,
}

impl ZnCocycle {
    /// Checks `ξ_i + ξ_j∘φ_{e_i} = ξ_j + ξ_i∘φ_{e_j}` pointwise.
    pub fn new(action: &ZnAction, tables: Vec<Vec<i64>>) -> Result<Self, ZnError> {
        if tables.len() != action.rank() {
            return Err(ZnError::Malformed(format!("{} value tables for rank {}", tables.len(), action.rank())));
        }
        if let Some(i) = tables.iter().position(|t| t.len() != action.num_points()) {
            return Err(ZnError::Malformed(format!("value table {} has the wrong length", i + 1)));
        }
        for i in 0..tables.len() {
            for j in i + 1..tables.len() {
                for x in 0..action.num_points() {
                    let lhs = tables[i][x] as i128 + tables[j][action.step(i, true, x)] as i128;
                    let rhs = tables[j][x] as i128 + tables[i][action.step(j, true, x)] as i128;
                    if lhs != rhs {
                        return Err(ZnError::CocycleViolation { i: i + 1, j: j + 1, x: action.points[x].clone() });
                    }
                }
            }
        }
        Ok(ZnCocycle { tables })
    }

    /// The cocycle of a homomorphism `Z^N → Z`, constant in `x`.
    pub fn constant(action: &ZnAction, c: &[i64]) -> Result<Self, ZnError> {
        Self::new(action, c.iter().map(|&ci| vec![ci; action.num_points()]).collect())
    }

    /// `ξ + δh`, i.e. `ξ_i + h∘φ_{e_i} − h`.
    pub fn perturb(&self, action: &ZnAction, h: &[i64]) -> Result<Self, ZnError> {
        let tables = self
            .tables
            .iter()
            .enumerate()
            .map(|(i, t)| (0..t.len()).map(|x| t[x] + h[action.step(i, true, x)] - h[x]).collect())
            .collect();
        Self::new(action, tables)
    }

    pub fn table(&self, i: usize) -> &[i64] {
        &self.tables[i]
    }

    /// `ξ(a, x)`, summed along the staircase path that applies the
    /// generators in the order `1..N` starting from `x`.
    pub fn value(&self, action: &ZnAction, a: &[i64], x: usize) -> Int {
        let order: Vec<usize> = (0..a.len()).collect();
        self.value_along(action, a, x, &order)
    }

    /// `ξ(a, x)` along the staircase path with the given generator order.
    /// Every order gives the same value for a cocycle.
    pub fn value_along(&self, action: &ZnAction, a: &[i64], mut x: usize, order: &[usize]) -> Int {
        let mut total: i128 = 0;
        for &i in order {
            let ai = a[i];
            for _ in 0..ai.unsigned_abs() {
                if ai > 0 {
                    total += self.tables[i][x] as i128;
                    x = action.step(i, true, x);
                } else {
                    x = action.step(i, false, x);
                    total -= self.tables[i][x] as i128;
                }
            }
        }
        Int::from(total)
    }
}

/// A finitely supported chain on `Z^N × X`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseChain {
    rank: usize,
    degree: usize,
    terms: BTreeMap<(Vec<i64>, usize), Int>,
}

impl SparseChain {
    pub fn new(rank: usize, degree: usize) -> Self {
        SparseChain { rank, degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `c` at the string `(a_1, ..., a_n; x)`, with the labels
    /// concatenated in `labels`.
    pub fn add_term(&mut self, labels: Vec<i64>, x: usize, c: Int) {
        assert_eq!(labels.len(), self.rank * self.degree, "label length does not match degree");
        if c.is_zero() {
            return;
        }
        match self.terms.entry((labels, x)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, labels: &[i64], x: usize) -> Int {
        self.terms.get(&(labels.to_vec(), x)).cloned().unwrap_or_default()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], usize, &Int)> {
        self.terms.iter().map(|((l, x), c)| (l.as_slice(), *x, c))
    }

    pub fn scale(&self, c: &Int) -> SparseChain {
        let mut out = SparseChain::new(self.rank, self.degree);
        for (l, x, v) in self.terms() {
            out.add_term(l.to_vec(), x, v * c);
        }
        out
    }

    pub fn add(&self, other: &SparseChain) -> SparseChain {
        assert_eq!((self.rank, self.degree), (other.rank, other.degree));
        let mut out = self.clone();
        for (l, x, v) in other.terms() {
            out.add_term(l.to_vec(), x, v.clone());
        }
        out
    }

    /// Value at the unit `x` of a degree-0 chain.
    pub fn at_point(&self, x: usize) -> Int {
        assert_eq!(self.degree, 0);
        self.get(&[], x)
    }
}

fn add_vec(a: &mut [i64], b: &[i64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// Sum of the labels `a_from, ..., a_to-1` of a flattened string.
fn label_sum(labels: &[i64], rank: usize, from: usize, to: usize) -> Vec<i64> {
    let mut s = vec![0; rank];
    for k in from..to {
        add_vec(&mut s, &labels[k * rank..(k + 1) * rank]);
    }
    s
}

/// Face `d_i` of the string `(labels; x)` of degree `n ≥ 1`.
pub fn face(action: &ZnAction, labels: &[i64], x: usize, i: usize) -> (Vec<i64>, usize) {
    let r = action.rank();
    let n = labels.len() / r;
    assert!(n >= 1 && i <= n);
    if n == 1 {
        return (Vec::new(), if i == 0 { x } else { action.act(labels, x) });
    }
    if i == 0 {
        return (labels[r..].to_vec(), x);
    }
    if i == n {
        return (labels[..(n - 1) * r].to_vec(), action.act(&labels[(n - 1) * r..], x));
    }
    let mut out = Vec::with_capacity((n - 1) * r);
    out.extend_from_slice(&labels[..(i - 1) * r]);
    let mut merged = labels[(i - 1) * r..i * r].to_vec();
    add_vec(&mut merged, &labels[i * r..(i + 1) * r]);
    out.extend_from_slice(&merged);
    out.extend_from_slice(&labels[(i + 1) * r..]);
    (out, x)
}

/// `∂f = Σ (-1)^i d_i* f`.
pub fn sparse_boundary(action: &ZnAction, f: &SparseChain) -> SparseChain {
    if f.degree == 0 {
        return SparseChain::new(f.rank, 0);
    }
    let mut out = SparseChain::new(f.rank, f.degree - 1);
    for (l, x, c) in f.terms() {
        for i in 0..=f.degree {
            let (fl, fx) = face(action, l, x, i);
            out.add_term(fl, fx, if i % 2 == 0 { c.clone() } else { -c });
        }
    }
    out
}

type Evaluator<'a> = Box<dyn Fn(&[i64], usize) -> Int + 'a>;

/// A cochain on `Z^N × X` evaluated on demand.
pub struct SparseCochain<'a> {
    degree: usize,
    eval: Evaluator<'a>,
}

impl<'a> SparseCochain<'a> {
    pub fn new(degree: usize, eval: impl Fn(&[i64], usize) -> Int + 'a) -> Self {
        SparseCochain { degree, eval: Box::new(eval) }
    }

    /// The degree-1 cochain `(a, x) ↦ ξ(a, x)`.
    pub fn from_cocycle(action: &'a ZnAction, xi: &'a ZnCocycle) -> Self {
        Self::new(1, move |l, x| xi.value(action, l, x))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, labels: &[i64], x: usize) -> Int {
        (self.eval)(labels, x)
    }

    /// `(ξ⌣η)(a_1..a_{n+m}; x) = ξ(a_1..a_n; φ_{a_{n+1}+...}x) · η(a_{n+1}..; x)`.
    pub fn cup(self, other: SparseCochain<'a>, action: &'a ZnAction) -> SparseCochain<'a> {
        let (n, m) = (self.degree, other.degree);
        let r = action.rank();
        SparseCochain::new(n + m, move |l, x| {
            let tail = label_sum(l, r, n, n + m);
            let y = action.act(&tail, x);
            let front = if n == 0 { action.act(&label_sum(l, r, 0, n + m), x) } else { y };
            let a = self.eval(&l[..n * r], front);
            if a.is_zero() {
                return a;
            }
            let back = if m == 0 { y } else { x };
            a * other.eval(&l[n * r..], back)
        })
    }

    /// `δζ(s) = Σ (-1)^i ζ(d_i s)`.
    pub fn coboundary(self, action: &'a ZnAction) -> SparseCochain<'a> {
        let n = self.degree;
        SparseCochain::new(n + 1, move |l, x| {
            (0..=n + 1)
                .map(|i| {
                    let (fl, fx) = face(action, l, x, i);
                    let v = self.eval(&fl, fx);
                    if i % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .sum()
        })
    }
}

/// `f⌢ζ`: each string `(g_1..g_n)` of `f` contributes
/// `f(g)·ζ(g_1..g_m)` at `(g_{m+1}..g_n)`, or at the unit `s(g_m)` when
/// `m = n`.
pub fn sparse_cap(action: &ZnAction, f: &SparseChain, zeta: &SparseCochain<'_>) -> SparseChain {
    let (n, m, r) = (f.degree, zeta.degree, action.rank());
    assert!(m <= n, "cochain degree exceeds chain degree");
    let mut out = SparseChain::new(r, n - m);
    for (l, x, c) in f.terms() {
        let y = action.act(&label_sum(l, r, m, n), x);
        let v = if m == 0 { zeta.eval(&[], action.act(&label_sum(l, r, 0, n), x)) } else { zeta.eval(&l[..m * r], y) };
        if !v.is_zero() {
            out.add_term(l[m * r..].to_vec(), x, c * v);
        }
    }
    out
}

/// A permutation `σ ∈ S_N` with its sign and suffix sums
/// `e(σ, i) = e_{σ(i+1)} + ... + e_{σ(N)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutationTerm {
    pub sigma: Vec<usize>,
    pub sign: i64,
    pub suffix: Vec<Vec<i64>>,
}

/// All of `S_N` in lexicographic order (zero-based images).
pub fn signed_permutations(n: usize) -> Vec<SignedPermutationTerm> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inversions =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut suffix = vec![vec![0i64; n]; n];
        for i in (0..n.saturating_sub(1)).rev() {
            suffix[i] = suffix[i + 1].clone();
            suffix[i][perm[i + 1]] += 1;
        }
        out.push(SignedPermutationTerm { sigma: perm.clone(), sign: if inversions % 2 == 0 { 1 } else { -1 }, suffix });
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

/// `f = Σ_σ sgn(σ) 1_{E_σ}` where `E_σ` holds the strings with labels
/// `(e_{σ(1)}, ..., e_{σ(N)})`.
pub fn fundamental_chain(action: &ZnAction) -> SparseChain {
    let r = action.rank();
    let mut f = SparseChain::new(r, r);
    for p in signed_permutations(r) {
        let labels: Vec<i64> = p.sigma.iter().flat_map(|&s| action.basis_vector(s)).collect();
        for x in 0..action.num_points() {
            f.add_term(labels.clone(), x, Int::from(p.sign));
        }
    }
    f
}

fn check_arity(action: &ZnAction, cocycles: &[ZnCocycle]) -> Result<(), ZnError> {
    if cocycles.len() != action.rank() {
        return Err(ZnError::Arity { expected: action.rank(), found: cocycles.len() });
    }
    Ok(())
}

/// `Σ_σ sgn(σ) Π_i ξ^{(i)}_{σ(i)}(φ_{e(σ,i)} x)` at every point.
pub fn theorem_formula(action: &ZnAction, cocycles: &[ZnCocycle]) -> Result<Vec<Int>, ZnError> {
    check_arity(action, cocycles)?;
    let perms = signed_permutations(action.rank());
    Ok((0..action.num_points())
        .map(|x| {
            perms
                .iter()
                .map(|p| {
                    let prod: Int = (0..action.rank())
                        .map(|i| Int::from(cocycles[i].table(p.sigma[i])[action.act(&p.suffix[i], x)]))
                        .product();
                    prod * p.sign
                })
                .sum()
        })
        .collect())
}

/// `f ⌢ ξ^{(1)} ⌣ ... ⌣ ξ^{(N)}` evaluated directly, at every point.
pub fn direct_evaluation(action: &ZnAction, cocycles: &[ZnCocycle]) -> Result<Vec<Int>, ZnError> {
    check_arity(action, cocycles)?;
    let mut it = cocycles.iter().map(|c| SparseCochain::from_cocycle(action, c));
    let first = it.next().expect("rank is at least one");
    let product = it.fold(first, |acc, c| acc.cup(c, action));
    let capped = sparse_cap(action, &fundamental_chain(action), &product);
    Ok((0..action.num_points()).map(|x| capped.at_point(x)).collect())
}

/// Both sides of the closed form, point by point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremRow {
    pub point: String,
    pub lhs: Int,
    pub rhs: Int,
}

impl TheoremReport {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.lhs == r.rhs)
    }
}

/// Computes both sides without judging them.
pub fn compare_theorem(action: &ZnAction, cocycles: &[ZnCocycle]) -> Result<TheoremReport, ZnError> {
    let lhs = direct_evaluation(action, cocycles)?;
    let rhs = theorem_formula(action, cocycles)?;
    let rows = lhs
        .into_iter()
        .zip(rhs)
        .enumerate()
        .map(|(x, (lhs, rhs))| TheoremRow { point: action.points[x].clone(), lhs, rhs })
        .collect();
    Ok(TheoremReport { rows })
}

/// Like [`compare_theorem`], failing with `Mismatch` at the first point where
/// the sides differ.
pub fn verify_theorem(action: &ZnAction, cocycles: &[ZnCocycle]) -> Result<TheoremReport, ZnError> {
    let report = compare_theorem(action, cocycles)?;
    if let Some(r) = report.rows.iter().find(|r| r.lhs != r.rhs) {
        return Err(ZnError::Mismatch { x: r.point.clone(), lhs: r.lhs.clone(), rhs: r.rhs.clone() });
    }
    Ok(report)
}

/// A point given by name or by zero-based index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleFile {
    pub xi: Vec<Vec<i64>>,
}

/// Action input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    #[serde(rename = "N")]
    pub n: usize,
    pub points: Vec<String>,
    pub generators: Vec<Vec<PointRef>>,
    #[serde(default)]
    pub cocycles: Vec<CocycleFile>,
}

impl ActionFile {
    pub fn load(&self) -> Result<(ZnAction, Vec<ZnCocycle>), ZnError> {
        if self.generators.len() != self.n {
            return Err(ZnError::Malformed(format!("N = {} but {} generators given", self.n, self.generators.len())));
        }
        let resolve = |p: &PointRef| -> Result<usize, ZnError> {
            match p {
                PointRef::Index(i) if *i < self.points.len() => Ok(*i),
                PointRef::Index(i) => Err(ZnError::Malformed(format!("point index {i} out of range"))),
                PointRef::Name(s) => self
                    .points
                    .iter()
                    .position(|q| q == s)
                    .ok_or_else(|| ZnError::Malformed(format!("unknown point `{s}`"))),
            }
        };
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(resolve).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let action = ZnAction::new(self.points.clone(), gens)?;
        let cocycles =
            self.cocycles.iter().map(|c| ZnCocycle::new(&action, c.xi.clone())).collect::<Result<Vec<_>, _>>()?;
        Ok((action, cocycles))
    }
}

impl ZnAction {
    /// The trivial action of `Z^N` on `points` points.
    pub fn trivial(rank: usize, points: usize) -> Self {
        let names = (0..points).map(|i| i.to_string()).collect();
        ZnAction::new(names, vec![(0..points).collect(); rank]).expect("identity permutations commute")
    }
}

impl SparseChain {
    /// The degree-0 chain `1` at every point.
    pub fn units(action: &ZnAction) -> SparseChain {
        let mut c = SparseChain::new(action.rank(), 0);
        for x in 0..action.num_points() {
            c.add_term(Vec::new(), x, Int::one());
        }
        c
    }
}
