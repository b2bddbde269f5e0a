//! Exact combinatorics for functionality and symmetric difference of box
//! intersection graphs.
//!
//! - [`graph`]: bit-row graphs, vertex sets, induced subgraphs.
//! - [`parameters`]: exact `fun`/`sd`, witnesses, structural recognizers.
//! - [`interval`]: interval models, grid-point form, low-functionality witnesses.
//! - [`constructions`]: half graphs, ABC graphs, `G_k`, point-box incidence graphs, hypercubes.
//! - [`geometry`]: exact box systems and self-validating realizations.
//! - [`random`]: seeded splitmix64 generators.
//! - [`campaign`]: named verification campaigns and their reports.

pub mod campaign;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod interval;
pub mod par;
pub mod parameters;
pub mod random;

pub use error::{Error, Result};
pub use graph::{equal_labeled, Graph, InducedSubgraph, VertexSet};
pub use par::Exec;
