//! Exact-arithmetic toolkit for adjacency spectra of small graphs.
//!
//! The crate computes characteristic polynomials by three independent
//! algorithms, generates the double-star family and its known cospectral
//! constructions, and exhaustively searches isomorphism classes of graphs
//! at fixed order and size to decide which targets are determined by their
//! spectrum.
//!
//! Everything that feeds a mathematical decision is exact: big-integer
//! polynomial arithmetic, Sturm-sequence root counting, and canonical-form
//! isomorphism tests. Floating point appears only in display paths.

pub mod charpoly;
pub mod graph;
pub mod iso;
pub mod poly;
pub mod search;
pub mod vset;

pub use graph::{Graph, GraphError};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use poly::IntPoly;
pub use vset::VertexSet;
