//! Chain-level Steenrod diagonals over the integers and their companions.
//!
//! The crate computes the equivariant diagonal `ξ: RS₂ ⊗ C(X) → C(X) ⊗ C(X)` on the
//! chains of simplicial sets by an explicit contracting-homotopy recursion, derives cup-i
//! products and Steenrod squares from it, and implements the normalized-chains side of the
//! Dold-Kan correspondence together with the Hurewicz comparison for free simplicial
//! abelian groups.

pub mod bar;
pub mod chain;
pub mod complex;
pub mod corpus;
pub mod dold_kan;
pub mod error;
pub mod exec;
pub mod format;
pub mod graded_map;
pub mod homology;
pub mod linalg;
pub mod ring;
pub mod simplex;
pub mod simplicial;
pub mod steenrod;
pub mod suite;
pub mod vandermonde;

pub use error::{Error, Result};
