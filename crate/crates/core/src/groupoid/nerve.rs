use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteGroupoid, GroupoidError};

/// The composable strings of one degree, in lexicographic order of morphism
/// identifiers. Degree-0 strings are the units, each stored as a one-element
/// string.
#[derive(Debug)]
pub struct Nerve {
    degree: usize,
    width: usize,
    flat: Vec<u32>,
    index: HashMap<Box<[u32]>, usize>,
}

impl Nerve {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.flat[i * self.width..(i + 1) * self.width]
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.flat.chunks(self.width)
    }
}

impl FiniteGroupoid {
    /// Number of composable strings of degree `n`, computed without
    /// enumerating them.
    pub fn nerve_size(&self, n: usize) -> u128 {
        if n == 0 {
            return self.units.len() as u128;
        }
        let m = self.num_morphisms();
        // ending[u] = number of strings of the current length whose last entry has source u
        let mut ending = vec![0u128; m];
        for g in 0..m as u32 {
            ending[self.source(g) as usize] += 1;
        }
        for _ in 1..n {
            let mut next = vec![0u128; m];
            for g in 0..m as u32 {
                let here = ending[self.range(g) as usize];
                next[self.source(g) as usize] = next[self.source(g) as usize].saturating_add(here);
            }
            ending = next;
        }
        ending.iter().fold(0u128, |a, b| a.saturating_add(*b))
    }

    /// The degree-`n` nerve, enumerated once and then cached.
    pub fn nerve(&self, n: usize) -> Result<Arc<Nerve>, GroupoidError> {
        if let Some(nv) = self.nerves.read().unwrap().get(&n) {
            return Ok(nv.clone());
        }
        let count = self.nerve_size(n);
        if count > self.limits.max_strings as u128 {
            return Err(GroupoidError::BudgetExceeded { degree: n, count, budget: self.limits.max_strings });
        }
        let nv = Arc::new(self.enumerate(n, count as usize));
        self.nerves.write().unwrap().entry(n).or_insert(nv.clone());
        Ok(nv)
    }

    fn enumerate(&self, n: usize, count: usize) -> Nerve {
        let width = n.max(1);
        let mut flat = Vec::with_capacity(count * width);
        if n == 0 {
            flat.extend_from_slice(&self.units);
        } else {
            let by_range = self.strings_by_range();
            let mut stack: Vec<u32> = Vec::with_capacity(n);
            self.extend_strings(n, &by_range, &mut stack, &mut flat);
        }
        let index = flat.chunks(width).enumerate().map(|(i, s)| (s.into(), i)).collect();
        Nerve { degree: n, width, flat, index }
    }

    fn extend_strings(&self, n: usize, by_range: &[Vec<u32>], stack: &mut Vec<u32>, out: &mut Vec<u32>) {
        if stack.len() == n {
            out.extend_from_slice(stack);
            return;
        }
        let candidates: &[u32] = match stack.last() {
            None => &(0..self.num_morphisms() as u32).collect::<Vec<_>>(),
            Some(&g) => &by_range[self.source(g) as usize],
        };
        for &h in candidates {
            stack.push(h);
            self.extend_strings(n, by_range, stack, out);
            stack.pop();
        }
    }

    /// Applies the face map `d_i` to a single string of degree `n ≥ 1`.
    ///
    /// For `n = 1` the faces are the source (`i = 0`) and range (`i = 1`).
    /// Otherwise `d_0` drops the first entry, `d_n` drops the last, and
    /// `d_i` composes entries `i` and `i + 1`.
    pub fn face(&self, s: &[u32], i: usize) -> Vec<u32> {
        let n = s.len();
        assert!(n >= 1 && i <= n, "face index {i} out of range for degree {n}");
        if n == 1 {
            return vec![if i == 0 { self.source(s[0]) } else { self.range(s[0]) }];
        }
        if i == 0 {
            return s[1..].to_vec();
        }
        if i == n {
            return s[..n - 1].to_vec();
        }
        let mut out = Vec::with_capacity(n - 1);
        out.extend_from_slice(&s[..i - 1]);
        out.push(self.compose(s[i - 1], s[i]).expect("composable string"));
        out.extend_from_slice(&s[i + 1..]);
        out
    }

    /// The face map `d_i` as an index map from the degree-`n` nerve to the
    /// degree-`(n - 1)` nerve.
    pub fn face_map(&self, n: usize, i: usize) -> Result<Vec<usize>, GroupoidError> {
        assert!(n >= 1 && i <= n, "face index {i} out of range for degree {n}");
        let (top, bottom) = (self.nerve(n)?, self.nerve(n - 1)?);
        Ok(top.iter().map(|s| bottom.index_of(&self.face(s, i)).expect("faces are composable")).collect())
    }
}
