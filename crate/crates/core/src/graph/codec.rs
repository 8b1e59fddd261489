//! graph6 and edge-list codecs.
//!
//! graph6 follows the published format for orders below 63: one byte
//! `order + 63`, then the upper triangle in column-major bit order packed
//! big-endian into 6-bit chunks, each chunk offset by 63. The optional
//! `>>graph6<<` header is tolerated and stripped on decode.
//!
//! Edge lists are one `u v` pair per line, 0-indexed and whitespace
//! separated; `#` starts a comment. The decoded order is the largest
//! mentioned vertex plus one.

use super::{Graph, GraphError, MAX_ORDER};

const GRAPH6_HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;

/// Encodes a graph as a graph6 string (no header, no trailing newline).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = vec![n as u8 + OFFSET];
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            chunk |= u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        bytes.push(chunk + OFFSET);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 record, tolerating the standard header and
/// surrounding whitespace.
pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(GRAPH6_HEADER).unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6 {
            offset: 0,
            reason: "empty input".to_string(),
        });
    }
    if bytes[0] == 126 {
        return Err(GraphError::Graph6 {
            offset: 0,
            reason: "multi-byte order encoding (order >= 63) is not supported".to_string(),
        });
    }
    if bytes[0] < OFFSET {
        return Err(GraphError::Graph6 {
            offset: 0,
            reason: format!("invalid order byte {}", bytes[0]),
        });
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Graph6 {
            offset: 0,
            reason: format!("order {n} outside the supported range 1..={MAX_ORDER}"),
        });
    }
    let pair_count = n * (n - 1) / 2;
    let body_len = pair_count.div_ceil(6);
    if bytes.len() < 1 + body_len {
        return Err(GraphError::Graph6 {
            offset: bytes.len(),
            reason: format!(
                "truncated body: need {} bytes after the order byte, got {}",
                body_len,
                bytes.len() - 1
            ),
        });
    }
    if bytes.len() > 1 + body_len {
        return Err(GraphError::Graph6 {
            offset: 1 + body_len,
            reason: "trailing data after the graph body".to_string(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for (pos, &byte) in bytes.iter().enumerate().skip(1) {
        if !(OFFSET..=126).contains(&byte) {
            return Err(GraphError::Graph6 {
                offset: pos,
                reason: format!("invalid body byte {byte}"),
            });
        }
        let chunk = byte - OFFSET;
        for shift in (0..6).rev() {
            let set = chunk >> shift & 1 == 1;
            if bit < pair_count {
                if set {
                    let (i, j) = pair_at(bit);
                    g.insert_edge(i, j);
                }
            } else if set {
                return Err(GraphError::Graph6 {
                    offset: pos,
                    reason: "nonzero padding bits".to_string(),
                });
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Pair `(i, j)` for upper-triangle bit `t` in column-major order.
fn pair_at(t: usize) -> (usize, usize) {
    let mut j = 1;
    let mut offset = 0;
    while offset + j <= t {
        offset += j;
        j += 1;
    }
    (t - offset, j)
}

/// Encodes a graph as an edge list, one `u v` line per edge.
pub fn edgelist_encode(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes an edge list. Blank lines and comments are skipped; the input
/// must mention at least one edge.
pub fn edgelist_decode(text: &str) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (line_idx, raw_line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(GraphError::EdgeList {
                line: line_no,
                reason: format!("expected two vertex tokens, got {}", tokens.len()),
            });
        }
        let mut pair = [0usize; 2];
        for (slot, token) in tokens.iter().enumerate() {
            pair[slot] = token.parse().map_err(|_| GraphError::EdgeList {
                line: line_no,
                reason: format!("invalid vertex token '{token}'"),
            })?;
        }
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return Err(GraphError::EdgeList {
                line: line_no,
                reason: format!("self-loop at vertex {u}"),
            });
        }
        if u >= MAX_ORDER || v >= MAX_ORDER {
            return Err(GraphError::EdgeList {
                line: line_no,
                reason: format!("vertex {} exceeds the maximum index {}", u.max(v), MAX_ORDER - 1),
            });
        }
        edges.push((u, v, line_no));
    }
    let n = edges
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .ok_or(GraphError::EdgeList {
            line: 0,
            reason: "no edges found".to_string(),
        })?;
    let plain: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::from_edges(n, &plain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        bug, complete, complete_minus_edge, cycle, enumerate_connected, path, EnumerateOptions,
    };

    #[test]
    fn frozen_graph6_vectors() {
        let cases: Vec<(Graph, &str)> = vec![
            (complete(4).unwrap(), "C~"),
            (path(3).unwrap(), "Bg"),
            (path(4).unwrap(), "Ch"),
            (cycle(5).unwrap(), "Dhc"),
            (complete(5).unwrap(), "D~{"),
            (complete_minus_edge(4).unwrap(), "C^"),
            (bug(6, 3, 5).unwrap().graph, "K^~{?D??G?_@"),
        ];
        for (graph, text) in cases {
            assert_eq!(graph6_encode(&graph), text);
            assert_eq!(graph6_decode(text).unwrap(), graph);
        }
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        assert_eq!(
            graph6_decode(">>graph6<<C~\n").unwrap(),
            complete(4).unwrap()
        );
    }

    #[test]
    fn round_trip_on_enumerated_graphs() {
        let opts = EnumerateOptions {
            deduplicate: true,
            allow_order_eight: false,
        };
        for g in enumerate_connected(5, opts).unwrap() {
            assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn malformed_graph6_rejected() {
        for (text, expect_offset) in [
            ("", 0usize),
            ("~??", 0),
            // Truncated input reports the offset where the bytes ran out.
            ("C", 1),
            ("C~~", 2),
            ("?", 0),
        ] {
            match graph6_decode(text) {
                Err(GraphError::Graph6 { offset, .. }) => {
                    assert_eq!(offset, expect_offset, "offset for {text:?}")
                }
                other => panic!("expected graph6 error for {text:?}, got {other:?}"),
            }
        }
        // 'B' declares order 3 (one body byte). 'w' packs 111000, exactly
        // the three pairs of a triangle; '@' packs 000001, whose set bit
        // lands in the padding.
        assert_eq!(graph6_decode("Bw").unwrap(), complete(3).unwrap());
        assert!(matches!(
            graph6_decode("B@"),
            Err(GraphError::Graph6 { offset: 1, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        assert_eq!(edgelist_decode("0 1\n1 2").unwrap(), path(3).unwrap());
        let with_noise = "# triangle with a tail\n0 1\n\n1 2 # closing soon\n2 0\n2 3\n";
        let g = edgelist_decode(with_noise).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        assert_eq!(edgelist_decode(&edgelist_encode(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_edge_lists_rejected() {
        for (text, bad_line) in [
            ("0 1 2", 1usize),
            ("0 x", 1),
            ("3 3", 1),
            ("0 1\n2", 2),
            ("0 99", 1),
        ] {
            match edgelist_decode(text) {
                Err(GraphError::EdgeList { line, .. }) => assert_eq!(line, bad_line),
                other => panic!("expected edge list error for {text:?}, got {other:?}"),
            }
        }
        assert!(matches!(
            edgelist_decode("# nothing\n"),
            Err(GraphError::EdgeList { line: 0, .. })
        ));
    }
}
