#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use linkforge::graph::named;
use linkforge::iso::{canonical_form, CanonicalForm};
use linkforge::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) on labels 1..n.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, &edges).unwrap()
}

/// One representative per isomorphism class of graphs on `1..=max_n`
/// vertices, isolated vertices allowed.
pub fn all_small_graphs(max_n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
            let g = Graph::from_index_edges(n, &edges).unwrap();
            if seen.insert(canonical_form(&g).unwrap()) {
                out.push(g);
            }
        }
    }
    out
}

/// Host corpus: named small graphs plus seeded random graphs of order 3..=7.
pub fn minor_hosts() -> Vec<Graph> {
    let mut hosts = vec![
        named::complete(5),
        named::complete(6),
        named::complete(7),
        named::complete_bipartite(3, 3),
        named::complete_bipartite(3, 4),
        named::cycle(7),
        named::path(6),
        named::cube().delete_vertex(&"1".into()).unwrap(),
    ];
    let mut r = rng(7);
    for k in 0..72 {
        let n = 3 + k % 5;
        let p = [0.3, 0.45, 0.6, 0.75][k % 4];
        hosts.push(random_graph(&mut r, n, p));
    }
    hosts
}

/// Every minor of `g` up to isomorphism, by exhaustive deletion and
/// contraction.
pub fn all_minors(g: &Graph) -> BTreeSet<CanonicalForm> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([g.clone()]);
    seen.insert(canonical_form(g).unwrap());
    while let Some(h) = queue.pop_front() {
        let mut next = Vec::new();
        for (u, v) in h.edges() {
            let kept: Vec<(String, String)> = h
                .edges()
                .into_iter()
                .filter(|e| e != &(u.clone(), v.clone()))
                .map(|(a, b)| (a.as_str().to_string(), b.as_str().to_string()))
                .collect();
            let labels: Vec<String> = h.labels().iter().map(|l| l.as_str().to_string()).collect();
            next.push(Graph::from_edges(labels, kept).unwrap());
            next.push(h.contract_edge(&u, &v).unwrap());
        }
        for v in h.labels() {
            if h.order() > 1 {
                next.push(h.delete_vertex(v).unwrap());
            }
        }
        for m in next {
            if seen.insert(canonical_form(&m).unwrap()) {
                queue.push_back(m);
            }
        }
    }
    seen
}

/// Wagner: planar iff neither K5 nor K3,3 is a minor.
pub fn planar_by_minors(g: &Graph) -> bool {
    let minors = all_minors(g);
    !minors.contains(&canonical_form(&named::complete(5)).unwrap())
        && !minors.contains(&canonical_form(&named::complete_bipartite(3, 3)).unwrap())
}
