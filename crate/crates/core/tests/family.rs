use std::io::Write;
use std::path::Path;

use linkforge::family::{
    certify_nil, generate_s, generate_t, load_q13, recipe_for, verify_order, FamilyError, Gate, Property, Status,
    VerifyOptions,
};
use linkforge::graph6::graph6_encode;
use linkforge::verify::{is_triangle_free, vertex_connectivity_at_least};
use linkforge::Graph;

fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for &d in offsets {
            let j = (i + d) % n;
            edges.push((i.min(j), i.max(j)));
        }
    }
    edges.sort();
    edges.dedup();
    Graph::from_index_edges(n, &edges).unwrap()
}

fn write_temp(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

fn edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

#[test]
fn q13_loader_accepts_a_graph_passing_every_gate() {
    let dir = tempfile::tempdir().unwrap();
    let g = circulant(13, &[1, 3]);
    let g6 = write_temp(dir.path(), "q13.g6", &format!("{}\n", graph6_encode(&g).unwrap()));
    assert_eq!(load_q13(&g6).unwrap(), g);
    let txt = write_temp(dir.path(), "q13.txt", &edge_list(&g));
    assert_eq!(load_q13(&txt).unwrap(), g);
    let report = verify_order(13, VerifyOptions::default(), Some(&g6)).unwrap();
    assert!(report.passed());
    assert_eq!(report.status(Property::PetersenExcluded), Some(Status::Pass));
}

#[test]
fn q13_loader_rejects_family_minor() {
    let dir = tempfile::tempdir().unwrap();
    let g = circulant(13, &[1, 5]);
    assert!(is_triangle_free(&g));
    assert!(vertex_connectivity_at_least(&g, 4).unwrap().holds());
    let path = write_temp(dir.path(), "bad.g6", &graph6_encode(&g).unwrap());
    assert_eq!(load_q13(&path), Err(FamilyError::ValidationFailed(Gate::PetersenExcluded)));
}

#[test]
fn q13_loader_gate_order() {
    let dir = tempfile::tempdir().unwrap();
    let with_triangle = circulant(13, &[1, 2, 4]);
    let path = write_temp(dir.path(), "tri.txt", &edge_list(&with_triangle));
    assert_eq!(load_q13(&path), Err(FamilyError::ValidationFailed(Gate::TriangleFree)));
    let thin = circulant(13, &[1]);
    let path = write_temp(dir.path(), "thin.txt", &edge_list(&thin));
    assert_eq!(load_q13(&path), Err(FamilyError::ValidationFailed(Gate::FourConnected)));
    let small = circulant(12, &[1, 3]);
    let path = write_temp(dir.path(), "small.txt", &edge_list(&small));
    assert_eq!(load_q13(&path), Err(FamilyError::ValidationFailed(Gate::Order)));
    let missing = dir.path().join("absent.g6");
    assert_eq!(load_q13(&missing), Err(FamilyError::FileMissing(missing.clone())));
    let garbage = write_temp(dir.path(), "junk.g6", "L?");
    assert!(matches!(load_q13(&garbage), Err(FamilyError::Format(_))));
}

#[test]
fn order_13_without_data_is_skipped() {
    let report = verify_order(13, VerifyOptions::default(), None).unwrap();
    assert!(report.checks.iter().all(|c| c.status == Status::Skipped));
    assert!(report.passed());
}

#[test]
fn generated_orders_have_expected_shape() {
    for n in 14..=30 {
        let g = generate_t(n).unwrap();
        assert_eq!(g.order(), n);
        assert!(is_triangle_free(&g), "T{n}");
        assert!(vertex_connectivity_at_least(&g, 4).unwrap().holds(), "T{n}");
        assert_eq!(recipe_for(n).unwrap().replay().unwrap(), g);
    }
    for (n, e) in [(14, 32), (18, 36), (22, 44), (26, 52)] {
        assert_eq!(generate_t(n).unwrap().size(), e);
    }
    for (n, e) in [(14, 38), (18, 48), (22, 58), (26, 68)] {
        let s = generate_s(n).unwrap();
        assert_eq!(s.size(), e);
        assert!(generate_t(n).unwrap().is_spanning_edge_subgraph_of(&s));
    }
}

#[test]
fn certificates_validate_and_survive_serialization() {
    for n in 14..=30 {
        let cert = certify_nil(n).unwrap();
        cert.validate().unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: linkforge::family::NilCertificate = serde_json::from_str(&json).unwrap();
        back.validate().unwrap();
        assert_eq!(back.order, n);
    }
}

#[test]
fn recipe_json_round_trip() {
    let r = recipe_for(26).unwrap();
    let back: linkforge::family::BuildRecipe = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back.replay().unwrap(), r.replay().unwrap());
}

#[test]
fn unavailable_orders() {
    for n in [0, 5, 11, 12, 13] {
        assert!(matches!(generate_t(n), Err(FamilyError::NotAvailable(_))), "{n}");
    }
    assert_eq!(generate_t(10).unwrap().size(), 20);
}
