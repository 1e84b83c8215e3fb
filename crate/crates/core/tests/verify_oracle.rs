mod common;

use linkforge::graph::named;
use linkforge::verify::{
    girth, is_planar, is_triangle_free, vertex_connectivity_at_least, vertex_connectivity_by_enumeration,
    Connectivity,
};

use common::{all_small_graphs, planar_by_minors, random_graph, rng};

#[test]
fn planarity_agrees_with_kuratowski_minors() {
    let mut corpus = all_small_graphs(6);
    let mut r = rng(11);
    for k in 0..80 {
        corpus.push(random_graph(&mut r, 7, [0.4, 0.55, 0.7][k % 3]));
    }
    corpus.push(named::complete(5));
    corpus.push(named::complete_bipartite(3, 3));
    corpus.push(named::petersen().delete_vertex(&"1".into()).unwrap());
    let mut nonplanar = 0;
    for g in &corpus {
        let expected = planar_by_minors(g);
        assert_eq!(is_planar(g), expected, "{g:?}");
        nonplanar += usize::from(!expected);
    }
    assert!(nonplanar >= 20, "corpus has only {nonplanar} nonplanar graphs");
}

#[test]
fn larger_planarity_cases() {
    assert!(is_planar(&named::cube()));
    assert!(!is_planar(&named::petersen()));
    assert!(is_planar(&named::cycle(40)));
    assert!(!is_planar(&named::complete_bipartite(3, 5)));
}

#[test]
fn connectivity_agrees_with_enumeration() {
    let mut r = rng(23);
    let mut corpus = vec![
        named::complete(6),
        named::cube(),
        named::petersen(),
        named::complete_bipartite(4, 4),
        named::complete_bipartite(3, 6),
    ];
    for k in 0..150 {
        let n = 5 + k % 8;
        corpus.push(random_graph(&mut r, n, [0.4, 0.6, 0.8][k % 3]));
    }
    let mut seen_cut = 0;
    let mut seen_ok = 0;
    for g in &corpus {
        for k in 1..=4 {
            if g.order() < k + 1 {
                continue;
            }
            let flow = vertex_connectivity_at_least(g, k).unwrap();
            let brute = vertex_connectivity_by_enumeration(g, k).unwrap();
            assert_eq!(flow.holds(), brute.holds(), "k={k} {g:?}");
            match flow {
                Connectivity::Cut(w) => {
                    assert!(w.separator.len() < k);
                    assert!(w.verify(g));
                    seen_cut += 1;
                }
                Connectivity::AtLeast => seen_ok += 1,
            }
        }
    }
    assert!(seen_cut > 50 && seen_ok > 50, "{seen_cut} cuts, {seen_ok} passes");
}

#[test]
fn girth_by_brute_cycles() {
    let mut r = rng(5);
    for _ in 0..200 {
        let g = random_graph(&mut r, 8, 0.3);
        let has_triangle = g
            .edge_indices()
            .iter()
            .any(|&(a, b)| (0..g.order()).any(|c| g.has_edge_idx(a, c) && g.has_edge_idx(b, c)));
        assert_eq!(is_triangle_free(&g), !has_triangle);
        assert_eq!(girth(&g) == Some(3), has_triangle);
    }
    assert_eq!(girth(&named::petersen()), Some(5));
    assert_eq!(girth(&named::cube()), Some(4));
    assert_eq!(girth(&named::path(5)), None);
}
