//! Exact integer linear algebra: Smith and Hermite normal forms, lattices,
//! and finitely generated abelian groups presented as subquotients.

mod group;
mod hermite;
mod lattice;
pub(crate) mod matrix;
mod smith;

#[allow(unused_imports)]
pub(crate) use group::format_group;
pub use group::{induced_hom, subquotient_group, subquotient_group_mod, FgAbGroup, GroupHom};
pub use hermite::HermiteBasis;
pub use lattice::{kernel_basis, Lattice};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithDecomposition};

/// Arbitrary-precision integer used for every matrix entry and coefficient.
pub type Int = num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("image column {column} does not lie in the kernel (the composite map is nonzero)")]
    IncompatibleComplex { column: usize },
    #[error("vector is not in the cycle lattice")]
    NotInLattice,
    #[error("ambient map does not induce a homomorphism: {0}")]
    NotChainMap(String),
}
