//! Plain-text graph files and Artin presentations.
//!
//! A graph file is a sequence of lines `vertex NAME` and `edge NAME NAME INT`.
//! Blank lines and lines starting with `#` are ignored. Endpoints of an edge
//! line are declared implicitly; a missing edge means the label ∞.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{ArtinGraph, EdgeLabel, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed line at line {line}: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("invalid vertex name {name:?} at line {line}")]
    InvalidName { line: usize, name: String },
    #[error("label {label} is below 2 at line {line}")]
    LabelTooSmall { line: usize, label: u32 },
    #[error("duplicate edge {u}-{v} at line {line}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("loop at line {line}")]
    Loop { line: usize },
}

pub fn parse_graph(text: &str) -> Result<ArtinGraph, ParseError> {
    let mut vertices = BTreeSet::new();
    let mut edges: Vec<(VertexId, VertexId, EdgeLabel)> = Vec::new();
    let mut seen_pairs = BTreeSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::Malformed {
            line,
            text: trimmed.to_string(),
        };
        let name = |s: &str| {
            VertexId::new(s).map_err(|_| ParseError::InvalidName {
                line,
                name: s.to_string(),
            })
        };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", v] => {
                vertices.insert(name(v)?);
            }
            ["edge", u, v, m] => {
                let (u, v) = (name(u)?, name(v)?);
                let m: u32 = m.parse().map_err(|_| malformed())?;
                let m =
                    EdgeLabel::new(m).map_err(|_| ParseError::LabelTooSmall { line, label: m })?;
                if u == v {
                    return Err(ParseError::Loop { line });
                }
                let key = if u < v {
                    (u.clone(), v.clone())
                } else {
                    (v.clone(), u.clone())
                };
                if !seen_pairs.insert(key.clone()) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: key.0.to_string(),
                        v: key.1.to_string(),
                    });
                }
                vertices.insert(u.clone());
                vertices.insert(v.clone());
                edges.push((u, v, m));
            }
            _ => return Err(malformed()),
        }
    }
    Ok(ArtinGraph::new(vertices, edges).expect("parser checked every graph invariant"))
}

/// Graph file with every vertex declared, then every edge, in name order.
pub fn serialize_graph(g: &ArtinGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for (u, v, m) in g.edges() {
        writeln!(out, "edge {u} {v} {m}").unwrap();
    }
    out
}

fn alternating(first: &str, second: &str, len: u32, sep: &str) -> String {
    (0..len)
        .map(|i| if i % 2 == 0 { first } else { second })
        .collect::<Vec<_>>()
        .join(sep)
}

/// One `generator` line per vertex, then one braid relation per edge with
/// both sides written out as alternating words of length `m`. Letters are
/// juxtaposed when every generator name is a single character and separated
/// by spaces otherwise.
pub fn emit_presentation(g: &ArtinGraph) -> String {
    let sep = if g.vertices().iter().all(|v| v.as_str().len() == 1) {
        ""
    } else {
        " "
    };
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "generator {v}").unwrap();
    }
    for (u, v, m) in g.edges() {
        let (u, v) = (u.as_str(), v.as_str());
        writeln!(
            out,
            "{} = {}",
            alternating(u, v, m.get(), sep),
            alternating(v, u, m.get(), sep)
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edges_and_vertices() {
        let g = parse_graph("edge a b 3\nedge b c 2").unwrap();
        assert_eq!(
            g,
            ArtinGraph::from_labeled_edges(&[], &[("a", "b", 3), ("b", "c", 2)]).unwrap()
        );
        let g = parse_graph("vertex a\nvertex b\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn comments_blank_lines_and_redeclaration() {
        let g =
            parse_graph("# a path\n\n  edge b a 4\nvertex a\n   # trailing\nvertex c\n").unwrap();
        assert_eq!(
            g,
            ArtinGraph::from_labeled_edges(&["c"], &[("a", "b", 4)]).unwrap()
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("edge a a 2").unwrap_err().to_string(),
            "loop at line 1"
        );
        assert_eq!(
            parse_graph("edge a b 2\n\nedge b a 3").unwrap_err(),
            ParseError::DuplicateEdge {
                line: 3,
                u: "a".into(),
                v: "b".into()
            }
        );
        assert_eq!(
            parse_graph("edge a b 1").unwrap_err(),
            ParseError::LabelTooSmall { line: 1, label: 1 }
        );
        assert!(matches!(
            parse_graph("edge a b inf"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("vertex a\nnode b"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("vertex a-b"),
            Err(ParseError::InvalidName { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("edge a b -3"),
            Err(ParseError::Malformed { .. })
        ));
    }

    #[test]
    fn serialized_graph_parses_back() {
        let g = ArtinGraph::from_labeled_edges(&["z"], &[("a", "b", 3), ("b", "c", 2)]).unwrap();
        let text = serialize_graph(&g);
        assert_eq!(
            text,
            "vertex a\nvertex b\nvertex c\nvertex z\nedge a b 3\nedge b c 2\n"
        );
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn presentation_words() {
        let rel = |m| {
            let g = ArtinGraph::from_labeled_edges(&[], &[("a", "b", m)]).unwrap();
            emit_presentation(&g).lines().last().unwrap().to_string()
        };
        assert_eq!(rel(2), "ab = ba");
        assert_eq!(rel(3), "aba = bab");
        assert_eq!(rel(5), "ababa = babab");
        let g = ArtinGraph::from_labeled_edges(&["c"], &[("a", "b", 3)]).unwrap();
        assert_eq!(
            emit_presentation(&g),
            "generator a\ngenerator b\ngenerator c\naba = bab\n"
        );
        let long = ArtinGraph::from_labeled_edges(&[], &[("s1", "s2", 3)]).unwrap();
        assert!(emit_presentation(&long).ends_with("s1 s2 s1 = s2 s1 s2\n"));
    }
}
