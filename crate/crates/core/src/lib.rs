//! Exact computations on numerical semigroups and weighted Cayley digraphs
//! on cyclic groups: Apéry sets, Frobenius and pseudo-Frobenius numbers,
//! factorizations and minimal presentations, distances and diameters, and
//! exhaustive enumeration of minimum distance diagrams (L-shapes).
//!
//! The [`family`] module builds the embedding dimension four semigroups
//! `⟨n, 3n−2, 3n−1, F(⟨n, 3n−2, 3n−1⟩)⟩` (odd `n ≥ 5`), which have
//! `(n+3)/2` L-shapes, together with the Sabariego–Santos digraphs `G_t`.

pub mod diagram;
pub mod digraph;
pub mod error;
pub mod factorization;
pub mod family;
pub mod lattice;
mod paths;
pub mod semigroup;

pub use diagram::{
    enumerate_mdds, is_lshape, is_mdd, lshapes_apery, lshapes_closed, Cell, Diagram, DiagramSource,
    RenderFormat,
};
pub use digraph::{MinWeightTable, WeightedCayleyDigraph};
pub use error::{Error, Result};
pub use factorization::{factorization_graph, factorizations, minimal_presentation, PresentationPair};
pub use family::{FamilyInstance, NormalForm};
pub use lattice::LatticePoint;
pub use semigroup::{AperySet, ClosedSet, NumericalSemigroup};
