//! Property checkers: triangles, girth, vertex connectivity, planarity and
//! apex vertices. Every negative answer that has a natural witness returns it.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("connectivity {k} needs at least {needed} vertices, graph has {order}")]
    TooFewVertices { k: usize, needed: usize, order: usize },
    #[error("connectivity parameter must be at least 1")]
    ZeroConnectivity,
}

/// Returns a triangle of `g` (sorted labels), or `None` when triangle-free.
pub fn find_triangle(g: &Graph) -> Option<[VertexLabel; 3]> {
    for (a, b) in g.edge_indices() {
        for &c in g.neighbor_indices(b) {
            if c > b && g.has_edge_idx(a, c) {
                return Some([g.label(a).clone(), g.label(b).clone(), g.label(c).clone()]);
            }
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbor_indices(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Evidence that a graph is not k-connected: removing `separator`
/// disconnects the two vertices of `separated_pair`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub separator: BTreeSet<VertexLabel>,
    pub separated_pair: (VertexLabel, VertexLabel),
}

impl CutWitness {
    /// Re-checks the witness by reachability in `g` minus the separator.
    pub fn verify(&self, g: &Graph) -> bool {
        let (s, t) = &self.separated_pair;
        if self.separator.contains(s) || self.separator.contains(t) {
            return false;
        }
        if self.separator.iter().any(|v| !g.contains(v)) {
            return false;
        }
        let (Some(si), Some(ti)) = (g.index_of(s), g.index_of(t)) else {
            return false;
        };
        let blocked: Vec<bool> = g
            .labels()
            .iter()
            .map(|l| self.separator.contains(l))
            .collect();
        !reachable(g, si, &blocked)[ti]
    }
}

fn reachable(g: &Graph, start: usize, blocked: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbor_indices(x) {
            if !seen[y] && !blocked[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Outcome of a connectivity query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectivity {
    AtLeast,
    Cut(CutWitness),
}

impl Connectivity {
    pub fn holds(&self) -> bool {
        matches!(self, Connectivity::AtLeast)
    }
}

fn check_connectivity_args(g: &Graph, k: usize) -> Result<(), VerifyError> {
    if k == 0 {
        return Err(VerifyError::ZeroConnectivity);
    }
    if g.order() < k + 1 {
        return Err(VerifyError::TooFewVertices {
            k,
            needed: k + 1,
            order: g.order(),
        });
    }
    Ok(())
}

fn disconnected_witness(g: &Graph) -> Option<CutWitness> {
    let comps = g.components();
    (comps.len() > 1).then(|| CutWitness {
        separator: BTreeSet::new(),
        separated_pair: (g.label(comps[0][0]).clone(), g.label(comps[1][0]).clone()),
    })
}

/// Unit vertex-capacity flow network for local connectivity queries.
struct SplitNetwork {
    /// Arc heads; arc `e ^ 1` is the reverse of arc `e`.
    head: Vec<usize>,
    cap: Vec<i32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let nodes = 2 * g.order();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        };
        let big = g.order() as i32 + 1;
        for v in 0..g.order() {
            let c = if v == s || v == t { big } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for (u, v) in g.edge_indices() {
            net.arc(2 * u + 1, 2 * v, big);
            net.arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Residual reachability from `source`; with `sink`, also augments one
    /// unit along a shortest path when one exists.
    fn bfs(&mut self, source: usize, sink: Option<usize>) -> (bool, Vec<bool>) {
        let n = self.out.len();
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.out[x] {
                let y = self.head[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        let Some(t) = sink else {
            return (false, seen);
        };
        if !seen[t] {
            return (false, seen);
        }
        let mut y = t;
        while y != source {
            let e = via[y];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            y = self.head[e ^ 1];
        }
        (true, seen)
    }
}

/// Local vertex connectivity between non-adjacent `s` and `t`, capped at `k`.
/// When it is below `k`, also returns a minimum separator (as indices).
fn local_connectivity(g: &Graph, s: usize, t: usize, k: usize) -> Result<(), Vec<usize>> {
    let mut net = SplitNetwork::new(g, s, t);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < k {
        let (augmented, _) = net.bfs(source, Some(sink));
        if !augmented {
            break;
        }
        flow += 1;
    }
    if flow >= k {
        return Ok(());
    }
    let (_, seen) = net.bfs(source, None);
    let separator = (0..g.order())
        .filter(|&v| v != s && v != t && seen[2 * v] && !seen[2 * v + 1])
        .collect();
    Err(separator)
}

/// Exact test that `g` is k-connected, via Menger's theorem. With `v` of
/// minimum degree, a smallest separator either misses `v`, and then splits
/// `v` from some non-neighbor, or contains it, and then splits two of its
/// neighbors; so only those pairs need a flow computation.
/// Disconnected graphs fail with an empty separator.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> Result<Connectivity, VerifyError> {
    check_connectivity_args(g, k)?;
    if let Some(w) = disconnected_witness(g) {
        return Ok(Connectivity::Cut(w));
    }
    let n = g.order();
    let v = (0..n).min_by_key(|&x| g.neighbor_indices(x).len()).expect("nonempty");
    let nb = g.neighbor_indices(v);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&w| w != v && !g.has_edge_idx(v, w))
        .map(|w| (v.min(w), v.max(w)))
        .collect();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge_idx(x, y) {
                pairs.push((x, y));
            }
        }
    }
    for (s, t) in pairs {
        if let Err(sep) = local_connectivity(g, s, t, k) {
            return Ok(Connectivity::Cut(CutWitness {
                separator: sep.into_iter().map(|v| g.label(v).clone()).collect(),
                separated_pair: (g.label(s).clone(), g.label(t).clone()),
            }));
        }
    }
    Ok(Connectivity::AtLeast)
}

/// Independent route: tries every vertex set of size below `k` as a cut.
/// Exponential in `k`; used to cross-check the flow route.
pub fn vertex_connectivity_by_enumeration(
    g: &Graph,
    k: usize,
) -> Result<Connectivity, VerifyError> {
    check_connectivity_args(g, k)?;
    let mut chosen = Vec::new();
    fn rec(
        g: &Graph,
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> Option<(Vec<usize>, usize, usize)> {
        let mut blocked = vec![false; g.order()];
        for &c in chosen.iter() {
            blocked[c] = true;
        }
        if let Some(first) = (0..g.order()).find(|&v| !blocked[v]) {
            let seen = reachable(g, first, &blocked);
            if let Some(other) = (0..g.order()).find(|&v| !blocked[v] && !seen[v]) {
                return Some((chosen.clone(), first, other));
            }
        }
        if left == 0 {
            return None;
        }
        for v in start..g.order() {
            chosen.push(v);
            let hit = rec(g, v + 1, left - 1, chosen);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
    Ok(match rec(g, 0, k - 1, &mut chosen) {
        None => Connectivity::AtLeast,
        Some((sep, s, t)) => Connectivity::Cut(CutWitness {
            separator: sep.into_iter().map(|v| g.label(v).clone()).collect(),
            separated_pair: (g.label(s).clone(), g.label(t).clone()),
        }),
    })
}

/// Edge sets of the biconnected blocks, as index pairs.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            let nb = g.neighbor_indices(v);
            if top.2 < nb.len() {
                let w = nb[top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Exact planarity test.
///
/// Splits into biconnected blocks and embeds each block incrementally with
/// the Demoucron-Malgrange-Pertuiset face/fragment procedure.
pub fn is_planar(g: &Graph) -> bool {
    let (n, m) = (g.order(), g.size());
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|block| block_is_planar(&block))
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    if edges.len() < 9 {
        // K5 and K3,3 have 10 and 9 edges; every smaller block is planar.
        return true;
    }
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let local = |x: usize| verts.binary_search(&x).unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    Dmp::new(adj).run()
}

struct Dmp {
    adj: Vec<Vec<usize>>,
    n: usize,
    edge_total: usize,
    in_h: Vec<bool>,
    h_edge: Vec<Vec<bool>>,
    h_edges: usize,
    faces: Vec<Vec<usize>>,
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices (empty for a chord).
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

impl Dmp {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let edge_total = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Dmp {
            adj,
            n,
            edge_total,
            in_h: vec![false; n],
            h_edge: vec![vec![false; n]; n],
            h_edges: 0,
            faces: Vec::new(),
        }
    }

    fn mark_edge(&mut self, a: usize, b: usize) {
        if !self.h_edge[a][b] {
            self.h_edge[a][b] = true;
            self.h_edge[b][a] = true;
            self.h_edges += 1;
        }
    }

    fn initial_cycle(&self) -> Vec<usize> {
        // Iterative DFS from 0 until a back edge closes a cycle.
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        depth[0] = 0;
        let mut stack = vec![(0usize, 0usize)];
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < self.adj[v].len() {
                let w = self.adj[v][top.1];
                top.1 += 1;
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    stack.push((w, 0));
                } else if w != parent[v] && depth[w] < depth[v] {
                    let mut cycle = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        cycle.push(x);
                    }
                    return cycle;
                }
            } else {
                stack.pop();
            }
        }
        unreachable!("biconnected block with at least 9 edges has a cycle")
    }

    fn fragments(&self) -> Vec<Fragment> {
        let mut out = Vec::new();
        for a in 0..self.n {
            if !self.in_h[a] {
                continue;
            }
            for &b in &self.adj[a] {
                if b > a && self.in_h[b] && !self.h_edge[a][b] {
                    out.push(Fragment {
                        attachments: vec![a, b],
                        interior: Vec::new(),
                        chord: Some((a, b)),
                    });
                }
            }
        }
        let mut seen = vec![false; self.n];
        for start in 0..self.n {
            if self.in_h[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut interior = Vec::new();
            let mut attachments = BTreeSet::new();
            while let Some(x) = stack.pop() {
                interior.push(x);
                for &y in &self.adj[x] {
                    if self.in_h[y] {
                        attachments.insert(y);
                    } else if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(Fragment {
                attachments: attachments.into_iter().collect(),
                interior,
                chord: None,
            });
        }
        out
    }

    /// A path through the fragment joining two distinct attachments.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if let Some((a, b)) = frag.chord {
            return vec![a, b];
        }
        let mut is_interior = vec![false; self.n];
        for &x in &frag.interior {
            is_interior[x] = true;
        }
        let start = frag.attachments[0];
        let mut via = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for &y in &self.adj[start] {
            if is_interior[y] && via[y] == usize::MAX {
                via[y] = start;
                queue.push_back(y);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if is_interior[y] && via[y] == usize::MAX {
                    via[y] = x;
                    queue.push_back(y);
                } else if self.in_h[y] && y != start {
                    let mut path = vec![y, x];
                    let mut z = x;
                    while via[z] != start {
                        z = via[z];
                        path.push(z);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
            }
        }
        unreachable!("fragments of a biconnected block have two attachments")
    }

    fn run(mut self) -> bool {
        let cycle = self.initial_cycle();
        for k in 0..cycle.len() {
            let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            self.in_h[a] = true;
            self.mark_edge(a, b);
        }
        self.faces = vec![cycle.clone(), cycle];
        while self.h_edges < self.edge_total {
            let frags = self.fragments();
            let mut face_sets: Vec<Vec<bool>> = Vec::with_capacity(self.faces.len());
            for f in &self.faces {
                let mut s = vec![false; self.n];
                for &v in f {
                    s[v] = true;
                }
                face_sets.push(s);
            }
            let mut choice: Option<(usize, usize)> = None;
            for (fi, frag) in frags.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&k| frag.attachments.iter().all(|&a| face_sets[k][a]))
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face_idx) = choice.expect("at least one fragment remains");
            let path = self.fragment_path(&frags[fi]);
            self.embed(face_idx, &path);
        }
        true
    }

    fn embed(&mut self, face_idx: usize, path: &[usize]) {
        let face = self.faces[face_idx].clone();
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&v| v == a).unwrap();
        let ib = face.iter().position(|&v| v == b).unwrap();
        let len = face.len();
        let walk = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut k = from;
            loop {
                out.push(face[k]);
                if k == to {
                    break;
                }
                k = (k + 1) % len;
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        let mut first = walk(ia, ib);
        first.extend(inner.iter().rev());
        let mut second = walk(ib, ia);
        second.extend(inner.iter());
        self.faces[face_idx] = first;
        self.faces.push(second);
        for w in path.windows(2) {
            self.mark_edge(w[0], w[1]);
        }
        for &v in path {
            self.in_h[v] = true;
        }
    }
}

/// Vertices whose deletion leaves a planar graph.
pub fn apex_vertices(g: &Graph) -> BTreeSet<VertexLabel> {
    (0..g.order())
        .into_par_iter()
        .filter(|&v| is_planar(&g.without_indices(&[v])))
        .map(|v| g.label(v).clone())
        .collect()
}

/// Planar, or planar after deleting one vertex.
pub fn is_apex(g: &Graph) -> bool {
    is_planar(g) || (0..g.order()).any(|v| is_planar(&g.without_indices(&[v])))
}
