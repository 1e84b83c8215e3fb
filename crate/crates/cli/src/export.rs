use std::fmt::Write as _;
use std::path::Path;

use linkforge::graph6::{graph6_decode, parse_edge_list};
use linkforge::{Graph, VertexLabel};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{}: {source}", path.display())]
    Io { path: std::path::PathBuf, source: std::io::Error },
    #[error("{}: {message}", path.display())]
    Parse { path: std::path::PathBuf, message: String },
}

fn dot_id(label: &VertexLabel) -> String {
    let s = label.as_str();
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Undirected DOT block; vertices then edges, both in label order.
pub fn dot_export(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.labels() {
        writeln!(out, "  {};", dot_id(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", dot_id(&u), dot_id(&v)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `{"vertices":[...],"edges":[[u,v],...]}` in label order.
pub fn json_export(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

/// Reads a graph by extension: `.g6` (first line), `.json` (the export
/// schema), anything else as `u v` lines.
pub fn read_graph(path: &Path) -> Result<Graph, ReadError> {
    let text = std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let parse = |message: String| ReadError::Parse {
        path: path.to_path_buf(),
        message,
    };
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            graph6_decode(line).map_err(|e| parse(e.to_string()))
        }
        Some("json") => serde_json::from_str(&text).map_err(|e| parse(e.to_string())),
        _ => parse_edge_list(&text).map_err(|e| parse(e.to_string())),
    }
}
