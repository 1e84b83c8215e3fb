//! graph6 encoding for graphs of order at most 62, plus the plain
//! `u v` edge-list format.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexLabel};

/// Largest order expressible with the one-byte header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("order {0} exceeds the graph6 one-byte limit of 62")]
    OrderTooLarge(usize),
    #[error("malformed input at byte {position}: {reason}")]
    MalformedInput { position: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(position: usize, reason: impl Into<String>) -> FormatError {
    FormatError::MalformedInput {
        position,
        reason: reason.into(),
    }
}

/// Vertices are numbered `1..=n` in label order.
pub fn graph6_encode(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::OrderTooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge_idx(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// Decodes one graph6 line; trailing whitespace is ignored. Vertices are
/// labeled `"1"..="n"`.
pub fn graph6_decode(s: &str) -> Result<Graph, FormatError> {
    let bytes = s.trim_end().as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(malformed(0, "empty input"));
    };
    if head == 126 {
        return Err(FormatError::OrderTooLarge(GRAPH6_MAX_ORDER + 1));
    }
    if !(63..126).contains(&head) {
        return Err(malformed(0, "order byte out of range"));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(malformed(
            bytes.len().min(expected),
            format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        ));
    }
    let mut data = Vec::with_capacity(bits);
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(k + 1, "byte outside the printable range 63..=126"));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            data.push(v >> shift & 1 == 1);
        }
    }
    if data[bits..].iter().any(|&x| x) {
        return Err(malformed(bytes.len() - 1, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_index_edges(n, &edges)?)
}

/// Parses `u v` lines; blank lines and `#` comments are skipped. Vertices
/// are the labels that occur in some edge.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut vertices = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => {
                let (u, v) = (VertexLabel::from(*u), VertexLabel::from(*v));
                vertices.insert(u.clone());
                vertices.insert(v.clone());
                edges.push((u, v));
            }
            _ => return Err(malformed(offset, "expected two vertex labels per line")),
        }
        offset += line.len() + 1;
    }
    Ok(Graph::from_edges(vertices, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k2_encodes_to_a_underscore() {
        assert_eq!(graph6_encode(&named::complete(2)).unwrap(), "A_");
    }

    #[test]
    fn single_vertex_decodes() {
        let g = graph6_decode("@").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
    }

    #[test]
    fn petersen_matches_reference_string() {
        // Reference encoding of the Petersen graph with the 1..10 labeling
        // of `named::petersen` is checked by round trip, and K4's standard
        // string is fixed.
        assert_eq!(graph6_encode(&named::complete(4)).unwrap(), "C~");
        let p = named::petersen();
        assert_eq!(graph6_decode(&graph6_encode(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(graph6_decode(""), Err(FormatError::MalformedInput { .. })));
        assert!(matches!(graph6_decode("C"), Err(FormatError::MalformedInput { position: 1, .. })));
        assert!(matches!(graph6_decode("A`"), Err(FormatError::MalformedInput { .. })));
        let big = named::cycle(63);
        assert_eq!(graph6_encode(&big), Err(FormatError::OrderTooLarge(63)));
    }

    #[test]
    fn edge_list_parses() {
        let g = parse_edge_list("# square\n1 2\n2 3\n\n3 4\n4 1\n").unwrap();
        assert_eq!(g, named::cycle(4));
        assert!(parse_edge_list("1 2 3\n").is_err());
    }
}
