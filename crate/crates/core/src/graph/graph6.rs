//! graph6 and plain edge-list text formats.
//!
//! graph6 encodes the order as one byte `n + 63` (short form, `n <= 62`)
//! followed by the upper triangle of the adjacency matrix in column order
//! `(1,2), (1,3), (2,3), (1,4), ...`, packed into 6-bit chunks, each chunk
//! emitted as `chunk + 63`.

use super::{Graph, Graph6ErrorKind, GraphError, MAX_VERTICES};

pub(super) fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut bytes = vec![(n as u8) + 63];
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for col in 2..=n {
        for row in 1..col {
            chunk <<= 1;
            if g.has_edge(row, col) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Parses a single short-form graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, kind: Graph6ErrorKind| GraphError::Graph6 { offset, kind };
    let first = *bytes.first().ok_or(err(0, Graph6ErrorKind::MalformedHeader))?;
    if first == 126 {
        return Err(err(0, Graph6ErrorKind::UnsupportedLongForm));
    }
    if !(63..=125).contains(&first) {
        return Err(err(0, Graph6ErrorKind::MalformedHeader));
    }
    let n = (first - 63) as usize;
    let bit_count = n * (n - 1) / 2;
    let body_len = bit_count.div_ceil(6);
    if bytes.len() < 1 + body_len {
        return Err(err(bytes.len(), Graph6ErrorKind::TruncatedBitVector));
    }
    if bytes.len() > 1 + body_len {
        return Err(err(1 + body_len, Graph6ErrorKind::TrailingGarbage));
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(bit_count);
    for col in 2..=n {
        for row in 1..col {
            pairs.push((row, col));
        }
    }
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, Graph6ErrorKind::ByteOutOfRange(b)));
        }
        let chunk = b - 63;
        for k in (0..6).rev() {
            let bit = chunk >> k & 1;
            if bit_index < bit_count {
                if bit == 1 {
                    let (u, v) = pairs[bit_index];
                    g.add_edge(u, v);
                }
            } else if bit == 1 {
                return Err(err(1 + i, Graph6ErrorKind::NonzeroPadding));
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Parses the plain edge-list format: first line `n`, then one `u v` pair per
/// line with 1-based labels. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or_else(|| GraphError::EdgeList {
        line: 1,
        message: "missing order line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GraphError::EdgeList {
        line: line_no,
        message: format!("expected vertex count, found {header:?}"),
    })?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(GraphError::EdgeList {
                    line: line_no,
                    message: format!("expected `u v`, found {line:?}"),
                })
            }
        };
        let parse = |s: &str| -> Result<usize, GraphError> {
            s.parse().map_err(|_| GraphError::EdgeList {
                line: line_no,
                message: format!("invalid vertex label {s:?}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == 0 || u > n || v == 0 || v > n {
            return Err(GraphError::EdgeList {
                line: line_no,
                message: format!("edge {{{u},{v}}} outside 1..={n}"),
            });
        }
        if u == v {
            return Err(GraphError::EdgeList {
                line: line_no,
                message: format!("loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::super::canonical_form;
    use super::*;

    #[test]
    fn parses_single_edge() {
        // 'A' = 63 + 2, '_' = 63 + 0b100000: one bit for the single pair.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn parses_edgeless_triple() {
        let g = parse_graph6("B?").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![]);
    }

    #[test]
    fn parses_path_representative() {
        // 'W' = 63 + 0b011000: pairs (1,2) off, (1,3) on, (2,3) on, so the
        // graph is the path 1-3-2.
        let g = parse_graph6("BW").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(1, 3), (2, 3)]);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&Graph::path(3)).unwrap()
        );
    }

    #[test]
    fn emits_known_strings() {
        assert_eq!(Graph::from_edges(2, &[(1, 2)]).unwrap().to_graph6(), "A_");
        assert_eq!(Graph::empty(3).to_graph6(), "B?");
        assert_eq!(Graph::empty(0).to_graph6(), "?");
        assert_eq!(Graph::complete(3).to_graph6(), "Bw");
    }

    #[test]
    fn round_trips() {
        for g in [
            Graph::empty(1),
            Graph::path(7),
            Graph::cycle(9),
            Graph::complete(13),
            Graph::star(20),
            Graph::from_edges(11, &[(1, 11), (2, 7), (3, 4)]).unwrap(),
        ] {
            assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(
            parse_graph6(""),
            Err(GraphError::Graph6 {
                offset: 0,
                kind: Graph6ErrorKind::MalformedHeader
            })
        );
        assert_eq!(
            parse_graph6("~??"),
            Err(GraphError::Graph6 {
                offset: 0,
                kind: Graph6ErrorKind::UnsupportedLongForm
            })
        );
        assert_eq!(
            parse_graph6("B"),
            Err(GraphError::Graph6 {
                offset: 1,
                kind: Graph6ErrorKind::TruncatedBitVector
            })
        );
        assert_eq!(
            parse_graph6("A_x"),
            Err(GraphError::Graph6 {
                offset: 2,
                kind: Graph6ErrorKind::TrailingGarbage
            })
        );
        assert_eq!(
            parse_graph6("A\x20"),
            Err(GraphError::Graph6 {
                offset: 1,
                kind: Graph6ErrorKind::ByteOutOfRange(0x20)
            })
        );
        // 'A' then chunk with a padding bit set beyond the single valid bit.
        assert_eq!(
            parse_graph6("AO"),
            Err(GraphError::Graph6 {
                offset: 1,
                kind: Graph6ErrorKind::NonzeroPadding
            })
        );
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let bad = "4\n1 2\n1 5\n";
        match parse_edge_list(bad) {
            Err(GraphError::EdgeList { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected edge list error, got {other:?}"),
        }
        let bad = "notanumber\n";
        assert!(matches!(
            parse_edge_list(bad),
            Err(GraphError::EdgeList { line: 1, .. })
        ));
    }
}
