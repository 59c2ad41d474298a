//! Dijoins, strengthening sets and integral bases of faces of the dijoin
//! polyhedron, computed exactly on small digraphs.

pub mod apps;
pub mod basis;
pub mod digraft;
pub mod digraph;
pub mod faces;
pub mod generate;
pub mod mconvex;
pub mod sets;

pub use digraft::{validate, Digraft, DigraftError};
pub use digraph::{Arc, Dicut, Digraph, GraphError};
pub use faces::{FaceAnalysis, FaceKind, FacePoints, Family};
pub use sets::{ArcSet, VertexSet};
