//! Finite simple undirected graphs over ordered vertex labels.
//!
//! A [`Graph`] is immutable: every operator returns a new value. Vertices are
//! stored in label order, so the dense index of a vertex (its position in
//! [`Graph::labels`]) is stable for a given vertex set and is what the search
//! engines in the rest of the crate work with.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An opaque vertex name such as `"7"`, `"12"` or `"a"`.
///
/// Ordering is numeric-aware: maximal digit runs compare by value, so
/// `"9" < "10"`, and digit runs sort before any non-digit text.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(token: impl Into<String>) -> Self {
        VertexLabel(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The label with a prime mark appended (`"5"` becomes `"5'"`).
    pub fn primed(&self) -> Self {
        VertexLabel(format!("{}'", self.0))
    }

    /// Numeric value when the whole token is a decimal numeral.
    pub fn as_number(&self) -> Option<u64> {
        if self.0.is_empty() || !self.0.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        self.0.parse().ok()
    }
}

impl From<&str> for VertexLabel {
    fn from(s: &str) -> Self {
        VertexLabel(s.to_owned())
    }
}

impl From<String> for VertexLabel {
    fn from(s: String) -> Self {
        VertexLabel(s)
    }
}

impl From<u64> for VertexLabel {
    fn from(n: u64) -> Self {
        VertexLabel(n.to_string())
    }
}

impl From<usize> for VertexLabel {
    fn from(n: usize) -> Self {
        VertexLabel(n.to_string())
    }
}

impl From<i32> for VertexLabel {
    fn from(n: i32) -> Self {
        VertexLabel(n.to_string())
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

enum Chunk<'a> {
    Digits(&'a str),
    Text(&'a str),
}

fn chunks(s: &str) -> impl Iterator<Item = Chunk<'_>> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    std::iter::from_fn(move || {
        if pos >= bytes.len() {
            return None;
        }
        let start = pos;
        let digit = bytes[pos].is_ascii_digit();
        while pos < bytes.len() && bytes[pos].is_ascii_digit() == digit {
            pos += 1;
        }
        let piece = &s[start..pos];
        Some(if digit { Chunk::Digits(piece) } else { Chunk::Text(piece) })
    })
}

fn cmp_digits(a: &str, b: &str) -> Ordering {
    let ta = a.trim_start_matches('0');
    let tb = b.trim_start_matches('0');
    ta.len()
        .cmp(&tb.len())
        .then_with(|| ta.cmp(tb))
        .then_with(|| a.len().cmp(&b.len()))
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut left = chunks(&self.0);
        let mut right = chunks(&other.0);
        loop {
            match (left.next(), right.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(a), Some(b)) => {
                    let ord = match (a, b) {
                        (Chunk::Digits(x), Chunk::Digits(y)) => cmp_digits(x, y),
                        (Chunk::Digits(_), Chunk::Text(_)) => Ordering::Less,
                        (Chunk::Text(_), Chunk::Digits(_)) => Ordering::Greater,
                        (Chunk::Text(x), Chunk::Text(y)) => x.cmp(y),
                    };
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexLabel),
    #[error("vertex {0} appears twice")]
    DuplicateVertex(VertexLabel),
    #[error("loop edge at {0}")]
    LoopEdge(VertexLabel),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(VertexLabel, VertexLabel),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexLabel, VertexLabel),
    #[error("graph of order {order} exceeds the limit of {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphData", try_from = "GraphData")]
pub struct Graph {
    labels: Vec<VertexLabel>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty() -> Self {
        Graph {
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    /// Builds a graph from a vertex list and an edge list.
    ///
    /// Unlike [`Graph::add_edge`], repeated edges here are rejected as well,
    /// so a literal edge list must be exact.
    pub fn from_edges<L, V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        L: Into<VertexLabel>,
        V: IntoIterator<Item = L>,
        E: IntoIterator<Item = (L, L)>,
    {
        let mut labels: Vec<VertexLabel> = vertices.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let mut graph = Graph {
            adj: vec![Vec::new(); labels.len()],
            labels,
        };
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            let (u, v) = (u.into(), v.into());
            let i = graph.require(&u)?;
            let j = graph.require(&v)?;
            if i == j {
                return Err(GraphError::LoopEdge(u));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            graph.adj[i].push(j);
            graph.adj[j].push(i);
        }
        for list in &mut graph.adj {
            list.sort_unstable();
        }
        Ok(graph)
    }

    /// Builds a graph on labels `"1"..="n"` from zero-based index pairs.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Graph::from_edges(
            (1..=n).map(VertexLabel::from),
            edges
                .iter()
                .map(|&(u, v)| (VertexLabel::from(u + 1), VertexLabel::from(v + 1))),
        )
    }

    /// Builds a graph directly from dense adjacency lists indexed like `labels`.
    pub(crate) fn from_parts(labels: Vec<VertexLabel>, mut adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { labels, adj }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex labels in ascending order.
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &VertexLabel {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn contains(&self, label: &VertexLabel) -> bool {
        self.index_of(label).is_some()
    }

    pub(crate) fn require(&self, label: &VertexLabel) -> Result<usize, GraphError> {
        self.index_of(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.clone()))
    }

    /// Sorted neighbor indices of the vertex at `index`.
    pub fn neighbor_indices(&self, index: usize) -> &[usize] {
        &self.adj[index]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn neighbors(&self, label: &VertexLabel) -> Result<Vec<VertexLabel>, GraphError> {
        let i = self.require(label)?;
        Ok(self.adj[i].iter().map(|&j| self.labels[j].clone()).collect())
    }

    pub fn degree(&self, label: &VertexLabel) -> Result<usize, GraphError> {
        Ok(self.adj[self.require(label)?].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: &VertexLabel, v: &VertexLabel) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.has_edge_idx(i, j),
            _ => false,
        }
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    /// Edges as label pairs with the smaller label first, sorted.
    pub fn edges(&self) -> Vec<(VertexLabel, VertexLabel)> {
        self.edge_indices()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    pub fn add_edge(&self, u: &VertexLabel, v: &VertexLabel) -> Result<Graph, GraphError> {
        let i = self.require(u)?;
        let j = self.require(v)?;
        if i == j {
            return Err(GraphError::LoopEdge(u.clone()));
        }
        if self.has_edge_idx(i, j) {
            return Err(GraphError::DuplicateEdge(u.clone(), v.clone()));
        }
        let mut adj = self.adj.clone();
        adj[i].push(j);
        adj[j].push(i);
        Ok(Graph::from_parts(self.labels.clone(), adj))
    }

    pub fn add_vertex(&self, label: &VertexLabel) -> Result<Graph, GraphError> {
        if self.contains(label) {
            return Err(GraphError::DuplicateVertex(label.clone()));
        }
        let mut labels = self.labels.clone();
        labels.push(label.clone());
        let edges = self.edges();
        Graph::from_edges(labels, edges)
    }

    pub fn delete_vertex(&self, v: &VertexLabel) -> Result<Graph, GraphError> {
        let idx = self.require(v)?;
        Ok(self.without_indices(&[idx]))
    }

    /// Removes the vertices at the given indices (duplicates ignored).
    pub fn without_indices(&self, removed: &[usize]) -> Graph {
        let mut keep = vec![true; self.order()];
        for &r in removed {
            keep[r] = false;
        }
        let kept: Vec<usize> = (0..self.order()).filter(|&i| keep[i]).collect();
        self.induced_by_indices(&kept)
    }

    /// Induced subgraph on sorted, distinct vertex indices.
    pub(crate) fn induced_by_indices(&self, kept: &[usize]) -> Graph {
        let mut remap = vec![usize::MAX; self.order()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let adj = kept
            .iter()
            .map(|&i| {
                self.adj[i]
                    .iter()
                    .filter_map(|&j| (remap[j] != usize::MAX).then_some(remap[j]))
                    .collect()
            })
            .collect();
        Graph::from_parts(labels, adj)
    }

    /// Merges the endpoints of edge `uv` into the order-smaller label.
    pub fn contract_edge(&self, u: &VertexLabel, v: &VertexLabel) -> Result<Graph, GraphError> {
        let (i, j) = match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) if self.has_edge_idx(i, j) => (i.min(j), i.max(j)),
            _ => return Err(GraphError::NotAnEdge(u.clone(), v.clone())),
        };
        let mut edges = BTreeSet::new();
        for (a, b) in self.edge_indices() {
            let a = if a == j { i } else { a };
            let b = if b == j { i } else { b };
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let labels: Vec<VertexLabel> = self.labels.clone();
        let vertices: Vec<VertexLabel> = labels
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, l)| l.clone())
            .collect();
        Graph::from_edges(
            vertices,
            edges
                .into_iter()
                .map(|(a, b)| (labels[a].clone(), labels[b].clone())),
        )
    }

    pub fn induced_subgraph<'a, I>(&self, vertices: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a VertexLabel>,
    {
        let mut kept = Vec::new();
        for label in vertices {
            kept.push(self.require(label)?);
        }
        kept.sort_unstable();
        kept.dedup();
        Ok(self.induced_by_indices(&kept))
    }

    /// True iff both graphs share a vertex set and every edge of `self` is
    /// an edge of `other`.
    pub fn is_spanning_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.labels == other.labels
            && self
                .adj
                .iter()
                .zip(&other.adj)
                .all(|(mine, theirs)| mine.iter().all(|j| theirs.binary_search(j).is_ok()))
    }

    /// Renames vertices through `map`; unmapped vertices keep their label.
    pub fn relabel(&self, map: &BTreeMap<VertexLabel, VertexLabel>) -> Result<Graph, GraphError> {
        let rename = |l: &VertexLabel| map.get(l).cloned().unwrap_or_else(|| l.clone());
        Graph::from_edges(
            self.labels.iter().map(rename),
            self.edges().iter().map(|(u, v)| (rename(u), rename(v))),
        )
    }

    /// Connected components as sorted index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    pub fn complete<L: Into<VertexLabel> + Clone>(vertices: &[L]) -> Graph {
        let labels: Vec<VertexLabel> = vertices.iter().cloned().map(Into::into).collect();
        let mut edges = Vec::new();
        for a in 0..labels.len() {
            for b in a + 1..labels.len() {
                edges.push((labels[a].clone(), labels[b].clone()));
            }
        }
        Graph::from_edges(labels, edges).expect("distinct labels")
    }
}

/// Serialized shape of a graph: sorted vertices and sorted edge pairs.
#[derive(Serialize, Deserialize)]
struct GraphData {
    vertices: Vec<VertexLabel>,
    edges: Vec<(VertexLabel, VertexLabel)>,
}

impl From<Graph> for GraphData {
    fn from(g: Graph) -> Self {
        GraphData {
            edges: g.edges(),
            vertices: g.labels,
        }
    }
}

impl TryFrom<GraphData> for Graph {
    type Error = GraphError;

    fn try_from(d: GraphData) -> Result<Self, GraphError> {
        Graph::from_edges(d.vertices, d.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices: ", self.order())?;
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        write!(f, "[{}])", edges.join(" "))
    }
}

/// Small named graphs used throughout the tests and the catalog.
pub mod named {
    use super::Graph;

    /// `K_n` on labels `1..=n`.
    pub fn complete(n: usize) -> Graph {
        let labels: Vec<usize> = (1..=n).collect();
        Graph::complete(&labels)
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges(n, &edges).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_index_edges(n, &edges).expect("path")
    }

    /// `K_{a,b}` with the first part on labels `1..=a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        Graph::from_index_edges(a + b, &edges).expect("bipartite")
    }

    pub fn cube() -> Graph {
        let mut edges = Vec::new();
        for i in 0..8usize {
            for bit in [1, 2, 4] {
                let j = i ^ bit;
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_index_edges(8, &edges).expect("cube")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_index_edges(10, &edges).expect("petersen")
    }
}
