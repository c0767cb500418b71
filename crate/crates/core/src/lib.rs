//! Exact t-perfection decisions for small graphs.
//!
//! A graph is t-perfect when its stable set polytope is cut out by
//! non-negativity, edge and odd-cycle inequalities. [`decision::is_t_perfect`]
//! decides this by enumerating the vertices of that relaxation in exact
//! rational arithmetic.

pub mod decision;
pub mod generators;
pub mod graph;
pub mod pattern;
pub mod polytope;

pub use graph::{Graph, GraphError, VertexSet};
