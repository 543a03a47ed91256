//! Combinatorial embeddings of small graphs on orientable surfaces.
//!
//! A rotation system assigns to every vertex a cyclic order of its incident
//! edges; tracing faces through the rotations recovers the regions of a
//! 2-cell embedding, and Euler's formula gives its genus. On top of that
//! model this crate provides:
//!
//! - [`graph`]: simple graphs up to 64 vertices with the counting machinery
//!   used by the decomposition filters (triangles, degree sequences,
//!   separating triangles and 4-cycles).
//! - [`embedding`]: rotation systems, face tracing, genus, reflection, and
//!   a canonical code that identifies embeddings up to relabeling and flip.
//! - [`genus`]: a complete backtracking decision procedure for "does G embed
//!   with genus at most g", plus enumeration and edge-removal variants.
//! - [`triangulate`]: exhaustive generation of all sphere triangulations of
//!   a given order by vertex splitting from K4.
//! - [`pt12`]: the necessary conditions a maximal planar graph of order 12
//!   must satisfy for its complement to be a toroidal triangulation.
//! - [`io`]: parsers and writers for the surftri ascii format, the
//!   planar_code binary format, and a plain text embedding format.
//! - [`oracle`]: independent brute-force reference implementations used to
//!   validate the fast paths.

pub mod embedding;
pub mod genus;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pt12;
pub mod triangulate;

pub use embedding::{CanonicalCode, Dart, Embedding, EmbeddingError, FaceSet};
pub use genus::{EmbedOptions, EmbedOutcome, RemovalWitness, SearchError};
pub use graph::{DegreeSequence, Graph, GraphError, SeparatorKind, SeparatorWitness};

#[cfg(test)]
pub(crate) mod testutil;
