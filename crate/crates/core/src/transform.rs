//! Construction operators: n-vertex splitting, clique sums, and the
//! triangle/claw exchanges that generate the Petersen family from `K6`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{named, Graph, GraphError, VertexLabel};
use crate::iso::{canonical_form, CanonicalForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} has degree {degree}, splitting needs at least {required}")]
    DegreeTooLow {
        vertex: VertexLabel,
        degree: usize,
        required: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("label {0} is already in use")]
    LabelCollision(VertexLabel),
    #[error("glue lists have lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("glue vertices do not induce a clique in the {0} summand")]
    GlueNotClique(Side),
    #[error("{0:?} do not form a triangle")]
    NotATriangle([VertexLabel; 3]),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    DegreeNotThree { vertex: VertexLabel, degree: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

fn default_connectivity() -> usize {
    4
}

/// One n-vertex splitting: `target` keeps its edges to `part_a`, the fresh
/// vertex `new_label` takes the edges to `part_b`, and the two are joined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitSpec {
    pub target: VertexLabel,
    pub new_label: VertexLabel,
    pub part_a: BTreeSet<VertexLabel>,
    pub part_b: BTreeSet<VertexLabel>,
    #[serde(default = "default_connectivity")]
    pub n: usize,
}

impl SplitSpec {
    pub fn new<L: Into<VertexLabel>>(
        target: impl Into<VertexLabel>,
        new_label: impl Into<VertexLabel>,
        part_a: impl IntoIterator<Item = L>,
        part_b: impl IntoIterator<Item = L>,
    ) -> Self {
        SplitSpec {
            target: target.into(),
            new_label: new_label.into(),
            part_a: part_a.into_iter().map(Into::into).collect(),
            part_b: part_b.into_iter().map(Into::into).collect(),
            n: 4,
        }
    }

    /// Checks every precondition of the split against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), TransformError> {
        let degree = g.degree(&self.target)?;
        let required = (2 * self.n).saturating_sub(2);
        if degree < required {
            return Err(TransformError::DegreeTooLow {
                vertex: self.target.clone(),
                degree,
                required,
            });
        }
        if g.contains(&self.new_label) {
            return Err(TransformError::LabelCollision(self.new_label.clone()));
        }
        let neighbors: BTreeSet<VertexLabel> = g.neighbors(&self.target)?.into_iter().collect();
        if let Some(shared) = self.part_a.intersection(&self.part_b).next() {
            return Err(TransformError::InvalidPartition(format!(
                "{shared} is on both sides"
            )));
        }
        let union: BTreeSet<VertexLabel> = self.part_a.union(&self.part_b).cloned().collect();
        if union != neighbors {
            return Err(TransformError::InvalidPartition(format!(
                "sides do not cover the neighborhood of {} exactly",
                self.target
            )));
        }
        let min_side = self.n.saturating_sub(1);
        if self.part_a.len() < min_side || self.part_b.len() < min_side {
            return Err(TransformError::InvalidPartition(format!(
                "sides of size {} and {}, each needs at least {min_side}",
                self.part_a.len(),
                self.part_b.len()
            )));
        }
        Ok(())
    }
}

/// Slater n-vertex splitting.
pub fn vertex_split(g: &Graph, spec: &SplitSpec) -> Result<Graph, TransformError> {
    spec.validate(g)?;
    let mut vertices: Vec<VertexLabel> = g.labels().to_vec();
    vertices.push(spec.new_label.clone());
    let mut edges: Vec<(VertexLabel, VertexLabel)> = g
        .edges()
        .into_iter()
        .filter(|(u, v)| {
            !((u == &spec.target && spec.part_b.contains(v))
                || (v == &spec.target && spec.part_b.contains(u)))
        })
        .collect();
    edges.extend(
        spec.part_b
            .iter()
            .map(|w| (spec.new_label.clone(), w.clone())),
    );
    edges.push((spec.target.clone(), spec.new_label.clone()));
    Ok(Graph::from_edges(vertices, edges)?)
}

/// Glue lists for a clique sum; `left[i]` is identified with `right[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSumSpec {
    pub glue_left: Vec<VertexLabel>,
    pub glue_right: Vec<VertexLabel>,
}

impl CliqueSumSpec {
    pub fn new<L: Into<VertexLabel>>(
        left: impl IntoIterator<Item = L>,
        right: impl IntoIterator<Item = L>,
    ) -> Self {
        CliqueSumSpec {
            glue_left: left.into_iter().map(Into::into).collect(),
            glue_right: right.into_iter().map(Into::into).collect(),
        }
    }

    /// The same glue list on both sides.
    pub fn shared<L: Into<VertexLabel> + Clone>(glue: &[L]) -> Self {
        CliqueSumSpec::new(glue.to_vec(), glue.to_vec())
    }
}

/// Result of a clique sum, with the renaming applied to the right summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSum {
    pub graph: Graph,
    /// Right-summand label to composite label, for every right vertex.
    pub right_map: BTreeMap<VertexLabel, VertexLabel>,
}

fn is_clique(g: &Graph, glue: &[VertexLabel]) -> Result<bool, GraphError> {
    for (k, u) in glue.iter().enumerate() {
        g.require(u)?;
        for v in &glue[k + 1..] {
            if u == v || !g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Clique sum over `K_p`: identify the glue lists pairwise and take the union
/// of vertices and edges. Right-only vertices whose label clashes with a left
/// vertex get prime marks until fresh.
pub fn clique_sum(g1: &Graph, g2: &Graph, spec: &CliqueSumSpec) -> Result<CliqueSum, TransformError> {
    let (left, right) = (&spec.glue_left, &spec.glue_right);
    if left.len() != right.len() || left.is_empty() {
        return Err(TransformError::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    if !is_clique(g1, left)? {
        return Err(TransformError::GlueNotClique(Side::Left));
    }
    if !is_clique(g2, right)? {
        return Err(TransformError::GlueNotClique(Side::Right));
    }
    let mut right_map: BTreeMap<VertexLabel, VertexLabel> = right
        .iter()
        .cloned()
        .zip(left.iter().cloned())
        .collect();
    let mut taken: BTreeSet<VertexLabel> = g1.labels().iter().cloned().collect();
    for v in g2.labels() {
        if right_map.contains_key(v) {
            continue;
        }
        let mut name = v.clone();
        while taken.contains(&name) {
            name = name.primed();
        }
        taken.insert(name.clone());
        right_map.insert(v.clone(), name);
    }
    let mut edges: BTreeSet<(VertexLabel, VertexLabel)> = g1.edges().into_iter().collect();
    for (u, v) in g2.edges() {
        let (a, b) = (right_map[&u].clone(), right_map[&v].clone());
        edges.insert(if a < b { (a, b) } else { (b, a) });
    }
    let graph = Graph::from_edges(taken, edges)?;
    Ok(CliqueSum { graph, right_map })
}

/// Delta-to-wye: replace the triangle's edges by a new degree-3 vertex.
pub fn triangle_to_y(
    g: &Graph,
    triangle: [&VertexLabel; 3],
    new_label: &VertexLabel,
) -> Result<Graph, TransformError> {
    let [x, y, z] = triangle;
    for v in triangle {
        g.require(v)?;
    }
    let distinct = x != y && y != z && x != z;
    if !distinct || !g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z) {
        return Err(TransformError::NotATriangle([x.clone(), y.clone(), z.clone()]));
    }
    if g.contains(new_label) {
        return Err(TransformError::LabelCollision(new_label.clone()));
    }
    let corners: BTreeSet<&VertexLabel> = triangle.into_iter().collect();
    let mut vertices = g.labels().to_vec();
    vertices.push(new_label.clone());
    let mut edges: Vec<(VertexLabel, VertexLabel)> = g
        .edges()
        .into_iter()
        .filter(|(u, v)| !(corners.contains(u) && corners.contains(v)))
        .collect();
    edges.extend(triangle.iter().map(|&c| (new_label.clone(), c.clone())));
    Ok(Graph::from_edges(vertices, edges)?)
}

/// Wye-to-delta: delete a degree-3 vertex and complete its neighborhood.
/// Edges already present among the neighbors are left as they are.
pub fn y_to_triangle(g: &Graph, w: &VertexLabel) -> Result<Graph, TransformError> {
    let nb = g.neighbors(w)?;
    if nb.len() != 3 {
        return Err(TransformError::DegreeNotThree {
            vertex: w.clone(),
            degree: nb.len(),
        });
    }
    let mut h = g.delete_vertex(w)?;
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        if !h.has_edge(&nb[a], &nb[b]) {
            h = h.add_edge(&nb[a], &nb[b])?;
        }
    }
    Ok(h)
}

/// Smallest label of the form `"w"`, `"w1"`, `"w2"`, ... not used in `g`.
fn fresh_label(g: &Graph) -> VertexLabel {
    let mut k = 0usize;
    loop {
        let cand = VertexLabel::new(if k == 0 { "w".to_string() } else { format!("w{k}") });
        if !g.contains(&cand) {
            return cand;
        }
        k += 1;
    }
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edge_indices() {
        for &c in g.neighbor_indices(b) {
            if c > b && g.has_edge_idx(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Every graph reachable from `g` by one triangle/claw exchange.
pub fn single_moves(g: &Graph) -> Result<Vec<Graph>, TransformError> {
    let mut out = Vec::new();
    let w = fresh_label(g);
    for [a, b, c] in triangles(g) {
        out.push(triangle_to_y(g, [g.label(a), g.label(b), g.label(c)], &w)?);
    }
    for v in 0..g.order() {
        if g.neighbor_indices(v).len() == 3 {
            out.push(y_to_triangle(g, g.label(v))?);
        }
    }
    Ok(out)
}

/// A Petersen-family member with its canonical form.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    /// Position in canonical order; id 0 is `K6`.
    pub id: usize,
    pub canonical: CanonicalForm,
    /// The member relabeled to `1..=n` in canonical vertex order.
    pub graph: Graph,
}

impl FamilyMember {
    pub fn name(&self) -> String {
        format!("P{}#{}", self.graph.order(), self.id)
    }
}

/// Closure of `{K6}` under both exchanges, one representative per
/// isomorphism class, ordered by (order, canonical code).
pub fn petersen_closure() -> Vec<FamilyMember> {
    let start = named::complete(6);
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(canonical_form(&start).expect("small"));
    queue.push_back(start);
    while let Some(g) = queue.pop_front() {
        for next in single_moves(&g).expect("moves on valid members") {
            let cf = canonical_form(&next).expect("small");
            if seen.insert(cf) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter()
        .enumerate()
        .map(|(id, canonical)| FamilyMember {
            id,
            graph: canonical.graph(),
            canonical,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::iso::are_isomorphic;

    fn l(s: &str) -> VertexLabel {
        VertexLabel::from(s)
    }

    #[test]
    fn split_of_k7() {
        let g = complete(7);
        let spec = SplitSpec::new("7", "8", ["1", "2", "3"], ["4", "5", "6"]);
        let h = vertex_split(&g, &spec).unwrap();
        assert_eq!((h.order(), h.size()), (8, 22));
        assert_eq!(h.degree(&l("7")).unwrap(), 4);
        assert_eq!(h.degree(&l("8")).unwrap(), 4);
    }

    #[test]
    fn split_errors() {
        let g = complete(7);
        let low = vertex_split(&complete(5), &SplitSpec::new("1", "9", ["2", "3"], ["4", "5"]));
        assert!(matches!(low, Err(TransformError::DegreeTooLow { degree: 4, .. })));
        let lopsided = SplitSpec::new("7", "8", ["1", "2"], ["3", "4", "5", "6"]);
        assert!(matches!(
            vertex_split(&g, &lopsided),
            Err(TransformError::InvalidPartition(_))
        ));
        let overlap = SplitSpec::new("7", "8", ["1", "2", "3"], ["3", "4", "5", "6"]);
        assert!(matches!(
            vertex_split(&g, &overlap),
            Err(TransformError::InvalidPartition(_))
        ));
        let missing = SplitSpec::new("7", "8", ["1", "2", "3"], ["4", "5"]);
        assert!(matches!(
            vertex_split(&g, &missing),
            Err(TransformError::InvalidPartition(_))
        ));
        let clash = SplitSpec::new("7", "6", ["1", "2", "3"], ["4", "5", "6"]);
        assert!(matches!(
            vertex_split(&g, &clash),
            Err(TransformError::LabelCollision(_))
        ));
    }

    #[test]
    fn clique_sum_of_two_k5() {
        let k5 = complete(5);
        let s = clique_sum(&k5, &k5, &CliqueSumSpec::shared(&["1", "2", "3", "4"])).unwrap();
        assert_eq!((s.graph.order(), s.graph.size()), (6, 14));
        assert_eq!(s.right_map[&l("5")], l("5'"));
    }

    #[test]
    fn clique_sum_rejects_non_clique_glue() {
        let p3 = path(3);
        let err = clique_sum(&complete(3), &p3, &CliqueSumSpec::new(["1", "2"], ["1", "3"]));
        assert_eq!(err.unwrap_err(), TransformError::GlueNotClique(Side::Right));
        let err = clique_sum(&complete(3), &p3, &CliqueSumSpec::new(["1", "2"], ["1"]));
        assert!(matches!(err, Err(TransformError::LengthMismatch { .. })));
    }

    #[test]
    fn delta_wye_on_k4() {
        let g = complete(4);
        let w = l("w");
        let h = triangle_to_y(&g, [&l("1"), &l("2"), &l("3")], &w).unwrap();
        assert!(are_isomorphic(&h, &complete_bipartite(2, 3)).unwrap());
        assert_eq!(h.neighbors(&w).unwrap(), vec![l("1"), l("2"), l("3")]);
        assert_eq!(h.size(), 6);
        assert_eq!(y_to_triangle(&h, &w).unwrap(), g);
    }

    #[test]
    fn delta_wye_errors() {
        let c4 = cycle(4);
        assert!(matches!(
            triangle_to_y(&c4, [&l("1"), &l("2"), &l("3")], &l("w")),
            Err(TransformError::NotATriangle(_))
        ));
        assert!(matches!(
            y_to_triangle(&path(2), &l("1")),
            Err(TransformError::DegreeNotThree { degree: 1, .. })
        ));
    }

    #[test]
    fn wye_delta_keeps_existing_edges() {
        let k3 = y_to_triangle(&complete(4), &l("4")).unwrap();
        assert_eq!(k3, complete(3));
        let claw = complete_bipartite(1, 3);
        assert!(are_isomorphic(&y_to_triangle(&claw, &l("1")).unwrap(), &complete(3)).unwrap());
    }

    #[test]
    fn delta_wye_on_k6_gives_a_15_edge_graph() {
        let h = triangle_to_y(&complete(6), [&l("1"), &l("2"), &l("3")], &l("w")).unwrap();
        assert_eq!((h.order(), h.size()), (7, 15));
    }
}
