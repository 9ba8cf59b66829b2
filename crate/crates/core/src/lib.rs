//! Coloring 2K₂-free graphs with `max(ω, Δ − 1)` colors.
//!
//! The crate bundles the pieces needed to build and check such colorings at
//! small scale:
//!
//! - [`Graph`] and the [`codec`] module (graph6, DIMACS);
//! - exact oracles in [`invariants`] (induced 2K₂, ω, χ, special shapes);
//! - the [`coloring`] engine: Brooks-style coloring, Kempe chains and the
//!   incremental extension with bounded Kempe/recolor repair;
//! - [`enumeration`]: canonical forms, isomorph-free generation of connected
//!   graphs, corpus verification and the search for exceptional graphs.

pub mod codec;
pub mod coloring;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod invariants;
mod vertex_set;

pub use coloring::Coloring;
pub use error::{ColoringError, EnumError, GraphError, ParseError};
pub use graph::Graph;
pub use vertex_set::VertexSet;
