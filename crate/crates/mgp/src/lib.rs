//! Exact combinatorics of the polytope family that interpolates between the
//! graphical zonotope of a simple graph and its graph-associahedron.
//!
//! For a graph on `[n]` and a level `m`, the polytope of interest is the
//! Minkowski sum of the coordinate simplices spanned by the connected vertex
//! subsets of size at most `m + 1`. This crate computes, without ever
//! touching coordinates beyond per-vertex integer vectors:
//!
//! * the weighted quasisymmetric enumerator of the polytope, through two
//!   independent pipelines (edge-weighted graph splitting in [`decorated`],
//!   and hypergraph splitting in [`hyper`]), compared against each other in
//!   the test suites;
//! * f-polynomials by principal specialization ([`qsym`]);
//! * the vertex posets of the polytope, their enumeration, lifting between
//!   levels and P-partition enumerators ([`hposet`]);
//! * collision searches for the derived graph invariants ([`invsearch`]).
//!
//! Vertices are 0-based `usize` indices everywhere in this crate; the
//! 1-based convention of the file formats is handled by the CLI layer.

pub mod decorated;
mod error;
pub mod graph;
pub mod hposet;
pub mod hyper;
pub mod invsearch;
pub mod qsym;
mod vset;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, GraphFamily, SimpleGraph};
pub use vset::VertexSet;
