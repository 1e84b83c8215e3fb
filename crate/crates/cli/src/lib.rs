//! Serialization formats, the command-line surface and the on-disk catalog.

pub mod app;
pub mod catalog;
pub mod export;

pub use app::run_cli;
pub use export::{dot_export, json_export, read_graph};
pub use linkforge::graph6::{graph6_decode, graph6_encode, FormatError, GRAPH6_MAX_ORDER};
