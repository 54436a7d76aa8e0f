//! Homology, cohomology, and cup and cap products of finite discrete
//! groupoids, with applications to shifts of finite type, free `Z^N`
//! actions and tiling complexes.
//!
//! - [`linalg`]: exact integer matrices, Smith and Hermite normal forms,
//!   finitely generated abelian groups and induced maps.
//! - [`groupoid`]: finite groupoids, nerves, (co)homology over `Z` and `Z/k`,
//!   cup and cap products, homomorphisms.
//! - [`sft`]: `Ker`/`Coker(I − Aᵗ)` and the cap with the winding cocycle.
//! - [`zn`]: sparse chains on `Z^N × X` and the antisymmetrized closed form for
//!   `[X] ⌢ (ξ_1 ⌣ ... ⌣ ξ_N)`.
//! - [`delta`]: two-dimensional Δ-complexes and the shipped tiling datasets.
//!
//! ```
//! use cupcap::groupoid::{catalog, Ring};
//!
//! let g = catalog::cyclic(4);
//! assert_eq!(g.homology(1, Ring::Z).unwrap().to_string(), "Z/4");
//! assert_eq!(g.cohomology(1, Ring::Mod(2)).unwrap().to_string(), "Z/2");
//! ```

pub mod delta;
pub mod groupoid;
pub mod linalg;
pub mod sft;
pub mod zn;

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/groupoids.md")]
    mod groupoids {}
    #[doc = include_str!("../../../book/src/products.md")]
    mod products {}
    #[doc = include_str!("../../../book/src/sft.md")]
    mod sft {}
    #[doc = include_str!("../../../book/src/zn.md")]
    mod zn {}
    #[doc = include_str!("../../../book/src/tilings.md")]
    mod tilings {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
