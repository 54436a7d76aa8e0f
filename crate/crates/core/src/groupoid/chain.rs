use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{FiniteGroupoid, GroupoidError};
use crate::linalg::{Int, IntMatrix};

/// Constant coefficients: the integers or the integers mod `k` (`k ≥ 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Ring {
    Z,
    Mod(u64),
}

impl Ring {
    pub fn modulus(self) -> Option<Int> {
        match self {
            Ring::Z => None,
            Ring::Mod(k) => Some(Int::from(k)),
        }
    }

    /// Canonical representative: unchanged over `Z`, a residue in `[0, k)`
    /// over `Z/k`.
    pub fn reduce(self, x: Int) -> Int {
        match self {
            Ring::Z => x,
            Ring::Mod(k) => x.mod_floor(&Int::from(k)),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z => write!(f, "Z"),
            Ring::Mod(k) => write!(f, "Z/{k}"),
        }
    }
}

impl FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("z") {
            return Ok(Ring::Z);
        }
        let k = t
            .strip_prefix("Z/")
            .or_else(|| t.strip_prefix("z/"))
            .ok_or_else(|| format!("expected `Z` or `Z/k`, found `{s}`"))?;
        let k: u64 = k.parse().map_err(|_| format!("bad modulus in `{s}`"))?;
        if k < 2 {
            return Err(format!("modulus must be at least 2, found {k}"));
        }
        Ok(Ring::Mod(k))
    }
}

impl TryFrom<String> for Ring {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<Ring> for String {
    fn from(r: Ring) -> String {
        r.to_string()
    }
}

macro_rules! dense_table {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            degree: usize,
            ring: Ring,
            values: Vec<Int>,
        }

        impl $name {
            /// Builds from values indexed like the degree-`degree` nerve.
            /// Values are reduced into the ring.
            pub fn new(degree: usize, ring: Ring, values: Vec<Int>) -> Self {
                let values = values.into_iter().map(|v| ring.reduce(v)).collect();
                $name { degree, ring, values }
            }

            pub fn zero(g: &FiniteGroupoid, degree: usize, ring: Ring) -> Result<Self, GroupoidError> {
                Ok($name { degree, ring, values: vec![Int::zero(); g.nerve(degree)?.len()] })
            }

            /// Builds from `(string, value)` pairs with strings given by
            /// morphism identifiers; unlisted strings take `default`.
            pub fn from_pairs<S: AsRef<str>>(
                g: &FiniteGroupoid,
                degree: usize,
                ring: Ring,
                default: Int,
                pairs: &[(Vec<S>, Int)],
            ) -> Result<Self, GroupoidError> {
                let nv = g.nerve(degree)?;
                let mut values = vec![default; nv.len()];
                for (s, v) in pairs {
                    if s.len() != degree.max(1) {
                        return Err(GroupoidError::Shape(format!("string of length {} in degree {degree}", s.len())));
                    }
                    let ids = g.string(s)?;
                    if degree == 0 && !g.is_unit(ids[0]) {
                        return Err(GroupoidError::Shape(format!("`{}` is not a unit", s[0].as_ref())));
                    }
                    values[nv.index_of(&ids).expect("validated string")] = v.clone();
                }
                Ok(Self::new(degree, ring, values))
            }

            pub fn degree(&self) -> usize {
                self.degree
            }

            pub fn ring(&self) -> Ring {
                self.ring
            }

            pub fn values(&self) -> &[Int] {
                &self.values
            }

            pub fn value(&self, i: usize) -> &Int {
                &self.values[i]
            }

            pub fn is_zero(&self) -> bool {
                self.values.iter().all(Zero::is_zero)
            }

            pub fn scale(&self, c: &Int) -> Self {
                Self::new(self.degree, self.ring, self.values.iter().map(|v| v * c).collect())
            }

            /// Reinterprets integer values in `Z/k`.
            pub fn reduce_to(&self, ring: Ring) -> Self {
                Self::new(self.degree, ring, self.values.clone())
            }

            /// Nonzero entries as `(string, value)` pairs in nerve order.
            pub fn support(&self, g: &FiniteGroupoid) -> Result<Vec<(Vec<String>, Int)>, GroupoidError> {
                let nv = g.nerve(self.degree)?;
                Ok(self
                    .values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (nv.get(i).iter().map(|&x| g.name(x).to_string()).collect(), v.clone()))
                    .collect())
            }

            pub(crate) fn check(&self, g: &FiniteGroupoid) -> Result<(), GroupoidError> {
                let n = g.nerve(self.degree)?.len();
                if self.values.len() != n {
                    return Err(GroupoidError::Shape(format!(
                        "{} values for a degree-{} nerve of size {n}",
                        self.values.len(),
                        self.degree
                    )));
                }
                Ok(())
            }

            fn zip_with(&self, other: &Self, f: impl Fn(&Int, &Int) -> Int) -> Self {
                assert_eq!(self.degree, other.degree, "degree mismatch");
                assert_eq!(self.ring, other.ring, "ring mismatch");
                assert_eq!(self.values.len(), other.values.len(), "size mismatch");
                Self::new(self.degree, self.ring, self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect())
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, o: &$name) -> $name {
                self.zip_with(o, |a, b| a + b)
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, o: &$name) -> $name {
                self.zip_with(o, |a, b| a - b)
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name::new(self.degree, self.ring, self.values.iter().map(|v| -v).collect())
            }
        }
    };
}

dense_table!(Chain, "A chain: coefficients on the strings of one nerve degree.");
dense_table!(Cochain, "A cochain: a value on every string of one nerve degree.");

/// Serialized chain or cochain: `(string, coefficient)` pairs, with
/// unlisted strings taking `default` (zero when absent).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub degree: usize,
    pub ring: Ring,
    pub values: Vec<(Vec<String>, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default: Option<i64>,
}

impl TableFile {
    fn pairs(&self) -> (Int, Vec<(Vec<String>, Int)>) {
        let default = Int::from(self.default.unwrap_or(0));
        (default, self.values.iter().map(|(s, v)| (s.clone(), Int::from(*v))).collect())
    }

    /// Chains have finite support, so a nonzero `default` is rejected.
    pub fn to_chain(&self, g: &FiniteGroupoid) -> Result<Chain, GroupoidError> {
        if self.default.is_some_and(|d| d != 0) {
            return Err(GroupoidError::Shape("chains do not take a default value".into()));
        }
        let (default, pairs) = self.pairs();
        Chain::from_pairs(g, self.degree, self.ring, default, &pairs)
    }

    pub fn to_cochain(&self, g: &FiniteGroupoid) -> Result<Cochain, GroupoidError> {
        let (default, pairs) = self.pairs();
        Cochain::from_pairs(g, self.degree, self.ring, default, &pairs)
    }

    fn from_support(degree: usize, ring: Ring, support: Vec<(Vec<String>, Int)>) -> Option<Self> {
        let values = support.into_iter().map(|(s, v)| Some((s, i64::try_from(&v).ok()?))).collect::<Option<_>>()?;
        Some(TableFile { degree, ring, values, default: None })
    }

    /// `None` when a coefficient does not fit in `i64`.
    pub fn from_chain(g: &FiniteGroupoid, f: &Chain) -> Result<Option<Self>, GroupoidError> {
        Ok(Self::from_support(f.degree(), f.ring(), f.support(g)?))
    }

    /// `None` when a value does not fit in `i64`.
    pub fn from_cochain(g: &FiniteGroupoid, xi: &Cochain) -> Result<Option<Self>, GroupoidError> {
        Ok(Self::from_support(xi.degree(), xi.ring(), xi.support(g)?))
    }
}

/// `π_*`: sums coefficients over the fibers of an index map.
pub fn pushforward(map: &[usize], target_len: usize, values: &[Int]) -> Vec<Int> {
    assert_eq!(map.len(), values.len(), "index map does not match chain");
    let mut out = vec![Int::zero(); target_len];
    for (&y, v) in map.iter().zip(values) {
        if !v.is_zero() {
            out[y] += v;
        }
    }
    out
}

fn sign(i: usize) -> Int {
    if i.is_multiple_of(2) {
        Int::from(1)
    } else {
        Int::from(-1)
    }
}

impl FiniteGroupoid {
    /// `∂_n` as a matrix from the degree-`n` nerve to the degree-`(n-1)`
    /// nerve. `∂_0` is the zero map to the trivial group.
    pub fn boundary_matrix(&self, n: usize) -> Result<IntMatrix, GroupoidError> {
        let cols = self.nerve(n)?.len();
        if n == 0 {
            return Ok(IntMatrix::zeros(0, cols));
        }
        let rows = self.nerve(n - 1)?.len();
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..=n {
            let s = sign(i);
            for (j, row) in self.face_map(n, i)?.into_iter().enumerate() {
                m[(row, j)] += &s;
            }
        }
        Ok(m)
    }

    /// `δ^n` as a matrix, the transpose of `∂_{n+1}`.
    pub fn coboundary_matrix(&self, n: usize) -> Result<IntMatrix, GroupoidError> {
        Ok(self.boundary_matrix(n + 1)?.transpose())
    }

    /// Pushes a chain forward along the face map `d_i`.
    pub fn face_pushforward(&self, f: &Chain, i: usize) -> Result<Chain, GroupoidError> {
        f.check(self)?;
        let n = f.degree();
        let map = self.face_map(n, i)?;
        let target = self.nerve(n - 1)?.len();
        Ok(Chain::new(n - 1, f.ring(), pushforward(&map, target, f.values())))
    }

    /// `∂f = Σ (-1)^i d_i* f`; the boundary of a 0-chain is zero (and has
    /// no coefficients).
    pub fn boundary(&self, f: &Chain) -> Result<Chain, GroupoidError> {
        f.check(self)?;
        let n = f.degree();
        if n == 0 {
            return Ok(Chain::new(0, f.ring(), Vec::new()));
        }
        let mut out = vec![Int::zero(); self.nerve(n - 1)?.len()];
        for i in 0..=n {
            let s = sign(i);
            for (v, y) in f.values().iter().zip(self.face_map(n, i)?) {
                if !v.is_zero() {
                    out[y] += v * &s;
                }
            }
        }
        Ok(Chain::new(n - 1, f.ring(), out))
    }

    /// `δξ = Σ_{i=0}^{n+1} (-1)^i ξ∘d_i`.
    pub fn coboundary(&self, xi: &Cochain) -> Result<Cochain, GroupoidError> {
        xi.check(self)?;
        let n = xi.degree();
        let mut out = vec![Int::zero(); self.nerve(n + 1)?.len()];
        for i in 0..=n + 1 {
            let s = sign(i);
            for (o, x) in out.iter_mut().zip(self.face_map(n + 1, i)?) {
                let v = xi.value(x);
                if !v.is_zero() {
                    *o += v * &s;
                }
            }
        }
        Ok(Cochain::new(n + 1, xi.ring(), out))
    }

    /// `ξ∘π` for an index map `π` into the nerve on which `ξ` lives.
    pub fn pull_back(xi: &Cochain, map: &[usize], degree: usize) -> Cochain {
        Cochain::new(degree, xi.ring(), map.iter().map(|&y| xi.value(y).clone()).collect())
    }

    /// Pointwise product `f·ξ` of a chain and a cochain of the same degree.
    pub fn pointwise(f: &Chain, xi: &Cochain) -> Chain {
        assert_eq!(f.degree(), xi.degree(), "degree mismatch");
        Chain::new(f.degree(), xi.ring(), f.values().iter().zip(xi.values()).map(|(a, b)| a * b).collect())
    }
}
