//! Minimally connected r-uniform hypergraphs.
//!
//! The crate covers connectivity analysis over Berge paths, extraction of
//! spanning minimally connected subhypergraphs, the tightness invariant of
//! constructive processes, tree and star classification, generators for the
//! standard families, and vertex and edge coloring results. Exhaustive
//! oracles are provided next to the fast routines so every claim can be
//! checked on small instances.
//!
//! ```
//! use minconn::{connectivity, minimal_span, structure, Hypergraph};
//!
//! let h = Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])?;
//! assert!(connectivity::is_connected(&h));
//! let m = minimal_span::spanning_minimally_connected(&h)?;
//! assert!(connectivity::is_minimally_connected(&m));
//! assert_eq!(structure::size_bounds(4, 3)?, (2, 2));
//! # Ok::<(), minconn::Error>(())
//! ```

pub mod cli;
pub mod coloring;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod hypergraph;
pub mod io;
pub mod minimal_span;
pub mod rational;
pub mod structure;

pub use error::{Error, Result};
pub use hypergraph::{complement, Hyperedge, Hypergraph, VertexId, WeightedHypergraph};
