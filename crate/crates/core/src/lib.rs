//! Construction and verification of linklessly embeddable Tutte-4-connected
//! graphs.

pub mod family;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod minor;
pub mod transform;
pub mod verify;

pub use graph::{Graph, GraphError, VertexLabel};
