//! Isomorphism testing and canonical forms by colour refinement plus
//! individualisation and backtracking.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError, VertexLabel};

/// Largest order accepted by [`are_isomorphic`] and [`canonical_form`].
pub const ISO_ORDER_LIMIT: usize = 64;

/// A vertex bijection from one graph onto another, by label.
pub type Bijection = BTreeMap<VertexLabel, VertexLabel>;

/// Refines `colors` to the coarsest equitable partition finer than it.
///
/// Colours are renumbered by rank of their signature, so two graphs refined
/// together (as a disjoint union) receive directly comparable colours.
fn refine(adj: &[Vec<usize>], colors: &mut [usize]) {
    let n = colors.len();
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(r, s)| (*s, r)).collect();
        let fresh: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let new_classes = distinct.len();
        colors.copy_from_slice(&fresh);
        sigs.clear();
        if new_classes == classes {
            break;
        }
        classes = new_classes;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    colors
        .iter()
        .enumerate()
        .map(|(x, &c)| if x == v { 2 * c } else { 2 * c + 1 })
        .collect()
}

/// Smallest non-singleton colour class, restricted to `members` vertices.
fn target_cell(colors: &[usize], members: std::ops::Range<usize>) -> Option<Vec<usize>> {
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in members {
        cells.entry(colors[v]).or_default().push(v);
    }
    cells
        .into_values()
        .filter(|c| c.len() > 1)
        .min_by_key(|c| c.len())
}

fn check_limit(g: &Graph) -> Result<(), GraphError> {
    if g.order() > ISO_ORDER_LIMIT {
        Err(GraphError::SizeLimitExceeded {
            order: g.order(),
            limit: ISO_ORDER_LIMIT,
        })
    } else {
        Ok(())
    }
}

struct UnionSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    adj: Vec<Vec<usize>>,
    n: usize,
    /// Stop after this many isomorphisms (`usize::MAX` for all).
    want: usize,
    found: Vec<Vec<usize>>,
}

impl<'a> UnionSearch<'a> {
    fn new(g: &'a Graph, h: &'a Graph, want: usize) -> Self {
        let n = g.order();
        let mut adj: Vec<Vec<usize>> = g.adjacency().to_vec();
        adj.extend(
            h.adjacency()
                .iter()
                .map(|l| l.iter().map(|&u| u + n).collect::<Vec<_>>()),
        );
        UnionSearch {
            g,
            h,
            adj,
            n,
            want,
            found: Vec::new(),
        }
    }

    fn run(&mut self) {
        let colors = vec![0; 2 * self.n];
        self.search(colors);
    }

    fn search(&mut self, mut colors: Vec<usize>) {
        if self.found.len() >= self.want {
            return;
        }
        refine(&self.adj, &mut colors);
        let n = self.n;
        let mut counts: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            let e = counts.entry(c).or_default();
            if v < n {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        if counts.values().any(|&(a, b)| a != b) {
            return;
        }
        match target_cell(&colors, 0..n) {
            None => {
                let mut image = vec![0; n];
                let by_color: BTreeMap<usize, usize> =
                    (n..2 * n).map(|w| (colors[w], w - n)).collect();
                for v in 0..n {
                    image[v] = by_color[&colors[v]];
                }
                if self.preserves_edges(&image) {
                    self.found.push(image);
                }
            }
            Some(cell) => {
                let v = cell[0];
                let candidates: Vec<usize> = (n..2 * n).filter(|&w| colors[w] == colors[v]).collect();
                for w in candidates {
                    let next: Vec<usize> = colors
                        .iter()
                        .enumerate()
                        .map(|(x, &c)| if x == v || x == w { 2 * c } else { 2 * c + 1 })
                        .collect();
                    self.search(next);
                    if self.found.len() >= self.want {
                        return;
                    }
                }
            }
        }
    }

    fn preserves_edges(&self, image: &[usize]) -> bool {
        self.g.size() == self.h.size()
            && self
                .g
                .edge_indices()
                .iter()
                .all(|&(a, b)| self.h.has_edge_idx(image[a], image[b]))
    }
}

fn quick_invariants_match(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh
}

/// An isomorphism from `g` onto `h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Bijection>, GraphError> {
    check_limit(g)?;
    check_limit(h)?;
    if !quick_invariants_match(g, h) {
        return Ok(None);
    }
    let mut search = UnionSearch::new(g, h, 1);
    search.run();
    Ok(search.found.pop().map(|image| to_bijection(g, h, &image)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// Every isomorphism from `g` onto `h` as index images; `automorphisms(g)`
/// is `all_isomorphisms(g, g)`. Intended for small graphs.
pub fn all_isomorphisms(g: &Graph, h: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    check_limit(g)?;
    check_limit(h)?;
    if !quick_invariants_match(g, h) {
        return Ok(Vec::new());
    }
    let mut search = UnionSearch::new(g, h, usize::MAX);
    search.run();
    Ok(search.found)
}

pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    all_isomorphisms(g, g)
}

fn to_bijection(g: &Graph, h: &Graph, image: &[usize]) -> Bijection {
    image
        .iter()
        .enumerate()
        .map(|(v, &w)| (g.label(v).clone(), h.label(w).clone()))
        .collect()
}

/// Checks that `map` is an edge-preserving bijection from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &Bijection) -> bool {
    if g.order() != h.order() || g.size() != h.size() || map.len() != g.order() {
        return false;
    }
    let mut images: Vec<&VertexLabel> = Vec::with_capacity(map.len());
    for v in g.labels() {
        match map.get(v) {
            Some(w) if h.contains(w) => images.push(w),
            _ => return false,
        }
    }
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != images.len() {
        return false;
    }
    g.edges().iter().all(|(u, v)| h.has_edge(&map[u], &map[v]))
}

/// A canonical code: equal for two graphs exactly when they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    /// Upper-triangle adjacency bits under the canonical ordering, packed
    /// row-major into 64-bit words.
    pub code: Vec<u64>,
    /// `ordering[k]` is the index (in the source graph) of canonical vertex `k`.
    pub ordering: Vec<usize>,
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.code.cmp(&other.code))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl CanonicalForm {
    /// The graph rebuilt on labels `1..=n` in canonical order.
    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0usize;
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.code[bit / 64] >> (63 - bit % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_index_edges(self.order, &edges).expect("canonical code")
    }
}

fn leaf_code(g: &Graph, ordering: &[usize]) -> Vec<u64> {
    let n = ordering.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64).max(1)];
    let mut bit = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge_idx(ordering[i], ordering[j]) {
                code[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    code
}

/// Canonical form by exhaustive individualisation-refinement.
///
/// Explores every leaf of the search tree, so it is meant for the small
/// graphs that need stable ids (the Petersen family, test corpora).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    check_limit(g)?;
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    canon_search(g, vec![0; g.order()], &mut best);
    let (code, ordering) = best.unwrap_or_else(|| (vec![0], Vec::new()));
    Ok(CanonicalForm {
        order: g.order(),
        code,
        ordering,
    })
}

fn canon_search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g.adjacency(), &mut colors);
    match target_cell(&colors, 0..g.order()) {
        None => {
            let mut ordering: Vec<usize> = (0..g.order()).collect();
            ordering.sort_by_key(|&v| colors[v]);
            let code = leaf_code(g, &ordering);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, ordering));
            }
        }
        Some(cell) => {
            for &v in &cell {
                canon_search(g, individualize(&colors, v), best);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn permuted_k33_is_isomorphic() {
        let g = complete_bipartite(3, 3);
        let h = Graph::from_index_edges(
            6,
            &[(0, 1), (0, 3), (0, 5), (2, 1), (2, 3), (2, 5), (4, 1), (4, 3), (4, 5)],
        )
        .unwrap();
        let map = find_isomorphism(&g, &h).unwrap().unwrap();
        assert!(is_isomorphism(&g, &h, &map));
    }

    #[test]
    fn hexagon_is_not_two_triangles() {
        let two_triangles =
            Graph::from_index_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_triangles).unwrap());
    }

    #[test]
    fn canonical_forms_agree_on_relabeling() {
        let g = petersen();
        let map: Bijection = g
            .labels()
            .iter()
            .map(|l| (l.clone(), VertexLabel::new(format!("p{l}"))))
            .collect();
        let h = g.relabel(&map).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert!(are_isomorphic(&canonical_form(&g).unwrap().graph(), &g).unwrap());
    }

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(automorphisms(&petersen()).unwrap().len(), 120);
        assert_eq!(automorphisms(&complete(5)).unwrap().len(), 120);
        assert_eq!(automorphisms(&cube()).unwrap().len(), 48);
    }

    #[test]
    fn order_limit_is_enforced() {
        let big = path(65);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(GraphError::SizeLimitExceeded { .. })
        ));
    }
}
