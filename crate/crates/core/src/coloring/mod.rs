//! Vertex and edge colorings.
//!
//! Vertex side: weak (no monochromatic edge), strong (all members of an edge
//! distinct) and k-chromatic (every edge sees at least `k` colors), with
//! exact backtracking solvers and the constructive 2-coloring of minimally
//! connected hypergraphs. Edge side: rainbow connection, Gallai colorings of
//! complete hypergraphs and spanning color classes.
//!
//! Exhaustive searches refuse instances above [`SearchLimits`] with
//! [`crate::Error::ResourceLimit`] rather than approximating.

mod edge;
mod vertex;

pub use edge::*;
pub use vertex::*;

/// Caps for the exhaustive coloring searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest vertex count a vertex-coloring search accepts.
    pub max_vertices: usize,
    /// Largest edge count an edge-coloring search accepts.
    pub max_edges: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 16,
            max_edges: 12,
        }
    }
}
