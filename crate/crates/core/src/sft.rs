//! Homology of the groupoid of a one-sided shift of finite type, computed
//! from the adjacency matrix of its graph: `H_0 = Coker(I − Aᵗ)`,
//! `H_1 = Ker(I − Aᵗ)` and zero above. Capping with the winding cocycle
//! `(x, n, y) ↦ n` sends `a ∈ Ker(I − Aᵗ)` to `a + Im(I − Aᵗ)`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{induced_hom, subquotient_group, FgAbGroup, GroupHom, Int, IntMatrix, LinalgError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SftError {
    #[error("adjacency matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("adjacency matrix must be nonempty")]
    Empty,
    #[error("negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("graph is not irreducible: no path from vertex {from} to vertex {to}")]
    NotIrreducible { from: usize, to: usize },
    #[error("adjacency matrix is a permutation matrix")]
    IsPermutation,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A validated adjacency matrix: square, nonnegative, irreducible and not a
/// permutation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    matrix: IntMatrix,
}

/// Checks the hypotheses on `A`. When several fail, reports the first of:
/// shape, negative entry, irreducibility, permutation.
pub fn validate_adjacency(a: &IntMatrix) -> Result<AdjacencyMatrix, SftError> {
    let (r, c) = a.shape();
    if r != c {
        return Err(SftError::NotSquare(r, c));
    }
    if r == 0 {
        return Err(SftError::Empty);
    }
    for i in 0..r {
        for j in 0..r {
            if a[(i, j)].is_negative() {
                return Err(SftError::NegativeEntry(i, j));
            }
        }
    }
    for from in 0..r {
        let mut seen = vec![false; r];
        let mut stack = vec![from];
        // vertices reachable by paths of length at least one
        while let Some(v) = stack.pop() {
            for w in 0..r {
                if !a[(v, w)].is_zero() && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(to) = seen.iter().position(|s| !s) {
            return Err(SftError::NotIrreducible { from, to });
        }
    }
    if is_permutation(a) {
        return Err(SftError::IsPermutation);
    }
    Ok(AdjacencyMatrix { matrix: a.clone() })
}

fn is_permutation(a: &IntMatrix) -> bool {
    let n = a.rows();
    let one = Int::from(1);
    let zero_one = a.entries().iter().all(|x| x.is_zero() || *x == one);
    let row_sums = (0..n).all(|i| a.row(i).iter().sum::<Int>() == one);
    let col_sums = (0..n).all(|j| a.column(j).iter().sum::<Int>() == one);
    zero_one && row_sums && col_sums
}

impl AdjacencyMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn num_vertices(&self) -> usize {
        self.matrix.rows()
    }

    /// `I − Aᵗ`.
    pub fn i_minus_at(&self) -> IntMatrix {
        let n = self.num_vertices();
        let at = self.matrix.transpose();
        IntMatrix::from_fn(n, n, |i, j| if i == j { Int::from(1) - &at[(i, j)] } else { -&at[(i, j)] })
    }
}

/// The nonzero homology of the SFT groupoid.
#[derive(Clone, Debug)]
pub struct SftHomology {
    pub h0: FgAbGroup,
    pub h1: FgAbGroup,
}

impl SftHomology {
    /// Kernel basis vectors of `I − Aᵗ` generating `H_1`, as columns.
    pub fn kernel_basis(&self) -> &IntMatrix {
        self.h1.generators()
    }
}

pub fn sft_homology(a: &AdjacencyMatrix) -> Result<SftHomology, SftError> {
    let m = a.i_minus_at();
    let n = a.num_vertices();
    let h0 = subquotient_group(&IntMatrix::zeros(0, n), &m)?;
    let h1 = subquotient_group(&m, &IntMatrix::zeros(n, 0))?;
    Ok(SftHomology { h0, h1 })
}

/// `· ⌢ [ξ]: H_1 → H_0` as the map `a ↦ a + Im(I − Aᵗ)`, built column by
/// column from the kernel generators.
pub fn cap_with_winding(a: &AdjacencyMatrix) -> Result<GroupHom, SftError> {
    let h = sft_homology(a)?;
    let images = h.h1.generators().columns().map(|z| h.h0.class_of(&z)).collect::<Result<Vec<_>, _>>()?;
    Ok(GroupHom::from_images(&h.h1, &h.h0, &images)?)
}

/// The same map obtained by inducing the identity of `Z^V` on the
/// subquotients, with the chain-map checks that entails.
pub fn cap_with_winding_induced(a: &AdjacencyMatrix) -> Result<GroupHom, SftError> {
    let h = sft_homology(a)?;
    Ok(induced_hom(&IntMatrix::identity(a.num_vertices()), &h.h1, &h.h0)?)
}

/// Adjacency input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyFile {
    #[serde(default)]
    pub vertices: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

impl AdjacencyFile {
    pub fn load(&self) -> Result<AdjacencyMatrix, SftError> {
        let m = IntMatrix::try_from_rows(&self.matrix)?;
        if !self.vertices.is_empty() && self.vertices.len() != m.rows() {
            return Err(SftError::Linalg(LinalgError::Shape(format!(
                "{} vertex names for a {}x{} matrix",
                self.vertices.len(),
                m.rows(),
                m.cols()
            ))));
        }
        validate_adjacency(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(rows: &[Vec<i64>]) -> Result<AdjacencyMatrix, SftError> {
        validate_adjacency(&IntMatrix::from_rows(rows))
    }

    #[test]
    fn validation() {
        assert!(adj(&[vec![2]]).is_ok());
        assert_eq!(adj(&[vec![0, 1], vec![1, 0]]).unwrap_err(), SftError::IsPermutation);
        assert!(matches!(adj(&[vec![1, 0], vec![0, 1]]).unwrap_err(), SftError::NotIrreducible { .. }));
        assert!(matches!(adj(&[vec![1, -1], vec![1, 1]]).unwrap_err(), SftError::NegativeEntry(0, 1)));
        assert!(matches!(adj(&[vec![1, 1]]).unwrap_err(), SftError::NotSquare(1, 2)));
    }

    #[test]
    fn full_shifts_are_acyclic() {
        for rows in [vec![vec![2]], vec![vec![1, 1], vec![1, 1]]] {
            let h = sft_homology(&adj(&rows).unwrap()).unwrap();
            assert!(h.h0.is_trivial());
            assert!(h.h1.is_trivial());
            let cap = cap_with_winding(&adj(&rows).unwrap()).unwrap();
            assert_eq!(cap.matrix().shape(), (0, 0));
        }
    }

    #[test]
    fn two_one_one_two() {
        let a = adj(&[vec![2, 1], vec![1, 2]]).unwrap();
        let h = sft_homology(&a).unwrap();
        assert_eq!(h.h0.to_string(), "Z");
        assert_eq!(h.h1.to_string(), "Z");
        let k = h.kernel_basis().column(0);
        assert_eq!(&k[0], &-&k[1]);
        assert_eq!(k[0].abs(), Int::from(1));
        let cap = cap_with_winding(&a).unwrap();
        assert_eq!(cap.matrix()[(0, 0)].abs(), Int::from(2));
    }
}
