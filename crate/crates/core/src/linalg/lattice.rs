//! Sublattices of `Z^n` in adapted-basis form.
//!
//! A lattice is stored as a unimodular change of basis `W` together with one
//! constraint per new coordinate: `x` belongs to the lattice exactly when
//! `(W x)_i` is zero where `m_i = 0` and divisible by `m_i` otherwise. Kernels,
//! kernels modulo `k`, and images all take this shape after one Smith
//! decomposition.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::smith::{smith_with, Track};
use super::{Int, IntMatrix, LinalgError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    w: IntMatrix,
    w_inv: IntMatrix,
    moduli: Vec<Int>,
}

impl Lattice {
    /// All of `Z^n`.
    pub fn full(n: usize) -> Self {
        Lattice { w: IntMatrix::identity(n), w_inv: IntMatrix::identity(n), moduli: vec![Int::one(); n] }
    }

    /// `{x : M x = 0}`.
    pub fn kernel(m: &IntMatrix) -> Self {
        let p = smith_with(m, Track::RIGHT);
        let rank = p.rank();
        let moduli = (0..m.cols()).map(|i| if i < rank { Int::zero() } else { Int::one() }).collect();
        Lattice { w: p.v_inv.unwrap(), w_inv: p.v.unwrap(), moduli }
    }

    /// `{x : M x ≡ 0 (mod k)}`.
    pub fn kernel_mod(m: &IntMatrix, k: &Int) -> Self {
        let p = smith_with(m, Track::RIGHT);
        let moduli = (0..m.cols())
            .map(|i| match p.diagonal.get(i) {
                Some(d) => k / k.gcd(d),
                None => Int::one(),
            })
            .collect();
        Lattice { w: p.v_inv.unwrap(), w_inv: p.v.unwrap(), moduli }
    }

    /// The span of the columns of `M`.
    pub fn image(m: &IntMatrix) -> Self {
        let p = smith_with(m, Track::LEFT);
        let moduli = (0..m.rows()).map(|i| p.diagonal.get(i).cloned().unwrap_or_else(Int::zero)).collect();
        Lattice { w: p.u.unwrap(), w_inv: p.u_inv.unwrap(), moduli }
    }

    pub fn ambient_dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn rank(&self) -> usize {
        self.moduli.iter().filter(|m| !m.is_zero()).count()
    }

    /// Basis vectors as columns, in the order used by [`Lattice::coords`].
    pub fn basis(&self) -> IntMatrix {
        let cols: Vec<Vec<Int>> = self
            .moduli
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| self.w_inv.column(i).iter().map(|x| x * m).collect())
            .collect();
        IntMatrix::from_columns(self.ambient_dim(), &cols)
    }

    /// Coordinates of `x` in [`Lattice::basis`], or `None` if `x` is not in
    /// the lattice.
    pub fn coords(&self, x: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(x.len(), self.ambient_dim(), "vector length does not match lattice");
        let y = self.w.mul_vec(x).expect("square transform");
        let mut out = Vec::with_capacity(self.rank());
        for (yi, m) in y.into_iter().zip(&self.moduli) {
            if m.is_zero() {
                if !yi.is_zero() {
                    return None;
                }
            } else {
                let (q, r) = yi.div_rem(m);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
        }
        Some(out)
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.coords(x).is_some()
    }

    /// Coordinates of every column of `m`, as columns of the result.
    pub fn coords_of_columns(&self, m: &IntMatrix) -> Result<IntMatrix, usize> {
        let cols = m.columns().enumerate().map(|(j, c)| self.coords(&c).ok_or(j)).collect::<Result<Vec<_>, _>>()?;
        Ok(IntMatrix::from_columns(self.rank(), &cols))
    }
}

/// Basis of the integer kernel of `m`, as columns.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    Lattice::kernel(m).basis()
}

pub(crate) fn check_len(x: &[Int], n: usize) -> Result<(), LinalgError> {
    if x.len() == n {
        Ok(())
    } else {
        Err(LinalgError::Shape(format!("vector of length {} where {n} was expected", x.len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::int_vec;

    #[test]
    fn kernel_of_row_sum() {
        let b = kernel_basis(&IntMatrix::from_rows(&[vec![1, 1]]));
        assert_eq!(b.cols(), 1);
        let c = b.column(0);
        assert!(c == int_vec(&[1, -1]) || c == int_vec(&[-1, 1]));
    }

    #[test]
    fn kernel_of_invertible_is_empty() {
        let b = kernel_basis(&IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]));
        assert_eq!(b.shape(), (2, 0));
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let l = Lattice::kernel(&IntMatrix::zeros(2, 3));
        assert_eq!(l.rank(), 3);
        assert_eq!(l.basis().determinant().unwrap().magnitude(), Int::one().magnitude());
    }

    #[test]
    fn mod_kernel_contains_scaled_vectors() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let l = Lattice::kernel_mod(&m, &Int::from(6));
        assert!(l.contains(&int_vec(&[3, 0])));
        assert!(l.contains(&int_vec(&[0, 2])));
        assert!(!l.contains(&int_vec(&[1, 0])));
        assert!(!l.contains(&int_vec(&[0, 1])));
    }

    #[test]
    fn image_membership() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![0, 6]]);
        let l = Lattice::image(&m);
        assert!(l.contains(&int_vec(&[2, 0])));
        assert!(l.contains(&int_vec(&[4, 6])));
        assert!(!l.contains(&int_vec(&[0, 2])));
        let c = l.coords(&int_vec(&[6, 6])).unwrap();
        assert_eq!(l.basis().mul_vec(&c).unwrap(), int_vec(&[6, 6]));
    }
}
