//! Strong edge-colouring of sparse planar graphs: exact search, the
//! girth-6 reduction algorithm, a discharging audit and the
//! matching-decomposition pipeline.

pub mod discharge;
pub mod exact;
pub mod generators;
pub mod girth6;
pub mod graph;
pub mod pipeline;
mod search;
pub mod strong;

pub use graph::{parse_graph, Edge, Girth, Graph, GraphError};
pub use search::Budget;
pub use strong::{is_strong, verify_strong, Palette, PartialColouring};
