//! Hermite normal form of a column lattice, used for membership tests that
//! do not depend on the Smith machinery.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Int, IntMatrix};

/// Echelon basis of the lattice spanned by some integer vectors.
///
/// Basis vectors are sorted by pivot position, pivots are positive, and the
/// entries at each pivot position of the other basis vectors are reduced into
/// `[0, pivot)`. Two generating sets span the same lattice exactly when their
/// Hermite bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteBasis {
    dim: usize,
    rows: Vec<(usize, Vec<Int>)>,
}

impl HermiteBasis {
    pub fn of_columns(m: &IntMatrix) -> Self {
        let mut h = HermiteBasis { dim: m.rows(), rows: Vec::new() };
        for c in m.columns() {
            h.insert(c);
        }
        h.canonicalize();
        h
    }

    fn insert(&mut self, mut v: Vec<Int>) {
        loop {
            let Some(lead) = v.iter().position(|x| !x.is_zero()) else { return };
            let slot = self.rows.binary_search_by_key(&lead, |r| r.0);
            let idx = match slot {
                Ok(i) => i,
                Err(i) => {
                    self.rows.insert(i, (lead, v));
                    return;
                }
            };
            let b = &self.rows[idx].1;
            let (bp, vp) = (b[lead].clone(), v[lead].clone());
            let eg = bp.extended_gcd(&vp);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (bq, vq) = (&bp / &g, &vp / &g);
            let new_b: Vec<Int> = b.iter().zip(&v).map(|(bi, vi)| &x * bi + &y * vi).collect();
            let new_v: Vec<Int> = b.iter().zip(&v).map(|(bi, vi)| &bq * vi - &vq * bi).collect();
            self.rows[idx].1 = new_b;
            v = new_v;
        }
    }

    fn canonicalize(&mut self) {
        for r in &mut self.rows {
            if r.1[r.0].is_negative() {
                r.1.iter_mut().for_each(|x| *x = -&*x);
            }
        }
        for i in 0..self.rows.len() {
            let (p, pivot_row) = (self.rows[i].0, self.rows[i].1.clone());
            for j in 0..i {
                let q = self.rows[j].1[p].div_floor(&pivot_row[p]);
                if !q.is_zero() {
                    for (a, b) in self.rows[j].1.iter_mut().zip(&pivot_row) {
                        *a -= &q * b;
                    }
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        assert_eq!(x.len(), self.dim, "vector length does not match lattice");
        let mut x = x.to_vec();
        for (p, b) in &self.rows {
            if x[..*p].iter().any(|v| !v.is_zero()) {
                return false;
            }
            let (q, r) = x[*p].div_rem(&b[*p]);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for (a, bi) in x.iter_mut().zip(b) {
                    *a -= &q * bi;
                }
            }
        }
        x.iter().all(Zero::is_zero)
    }

    /// Basis vectors as columns.
    pub fn to_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<Int>> = self.rows.iter().map(|r| r.1.clone()).collect();
        IntMatrix::from_columns(self.dim, &cols)
    }
}
