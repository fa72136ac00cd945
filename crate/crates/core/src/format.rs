//! Edge-list text format.
//!
//! ```text
//! # optional comments and blank lines anywhere
//! U 4
//! 0 1
//! 1 2
//! ```
//!
//! The header is `U <n>` for an undirected graph or `D <n>` for a digraph.
//! Each following line is `<a> <b>` separated by exactly one space. Lines
//! use LF endings and the file ends with a newline. [`write_graph`] emits
//! no comments and lists edges in sorted order, so output is canonical.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{AnyGraph, Digraph, Graph, Vertex};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_decimal(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(line, format!("expected a decimal integer, found {token:?}")));
    }
    token
        .parse()
        .map_err(|_| parse_error(line, format!("integer {token:?} out of range")))
}

fn parse_pair(text: &str, line: usize) -> Result<(Vertex, Vertex)> {
    let mut parts = text.split(' ');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => Ok((parse_decimal(a, line)?, parse_decimal(b, line)?)),
        _ => Err(parse_error(line, format!("expected `<a> <b>`, found {text:?}"))),
    }
}

pub fn parse_graph(text: &str) -> Result<AnyGraph> {
    if let Some(pos) = text.find('\r') {
        let line = text[..pos].matches('\n').count() + 1;
        return Err(parse_error(line, "CR line endings are not accepted"));
    }
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(parse_error(text.lines().count(), "missing trailing newline"));
    }

    let mut graph: Option<AnyGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        match graph.as_mut() {
            None => {
                let (kind, count) = raw
                    .split_once(' ')
                    .ok_or_else(|| parse_error(line, format!("expected header `U <n>` or `D <n>`, found {raw:?}")))?;
                let n = parse_decimal(count, line)?;
                graph = Some(match kind {
                    "U" => AnyGraph::Undirected(Graph::new(n)),
                    "D" => AnyGraph::Directed(Digraph::new(n)),
                    other => return Err(parse_error(line, format!("unknown graph kind {other:?}"))),
                });
            }
            Some(g) => {
                let (a, b) = parse_pair(raw, line)?;
                let inserted = match g {
                    AnyGraph::Undirected(g) => g.insert_edge(a, b),
                    AnyGraph::Directed(d) => d.insert_arc(a, b),
                };
                inserted.map_err(|e| parse_error(line, e.to_string()))?;
            }
        }
    }
    graph.ok_or_else(|| parse_error(0, "missing header"))
}

pub fn write_graph(graph: &AnyGraph) -> String {
    let mut out = String::new();
    let (tag, n, pairs) = match graph {
        AnyGraph::Undirected(g) => ('U', g.vertex_count(), g.edges()),
        AnyGraph::Directed(d) => ('D', d.vertex_count(), d.arcs()),
    };
    writeln!(out, "{tag} {n}").unwrap();
    for &(a, b) in pairs {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_undirected_with_comments() {
        let g = parse_graph("# triangle\n\nU 3\n0 1\n# middle\n1 2\n2 0\n").unwrap();
        match g {
            AnyGraph::Undirected(g) => {
                assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
            }
            _ => panic!("expected undirected"),
        }
    }

    #[test]
    fn writes_canonical_form() {
        let d = Digraph::from_arcs(3, [(2, 0), (0, 1)]).unwrap();
        let text = write_graph(&AnyGraph::Directed(d.clone()));
        assert_eq!(text, "D 3\n0 1\n2 0\n");
        assert_eq!(parse_graph(&text).unwrap(), AnyGraph::Directed(d));
        assert_eq!(write_graph(&AnyGraph::Undirected(Graph::new(0))), "U 0\n");
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "X 3\n",
            "U\n",
            "U -1\n",
            "U 3\n0  1\n",
            "U 3\n0 1",
            "U 3\r\n0 1\r\n",
            "U 2\n0 2\n",
            "U 2\n0 1\n1 0\n",
            "D 2\n0 0\n",
            "U 2\n0 1 1\n",
            "",
            "# only a comment\n",
        ] {
            assert!(parse_graph(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn error_reports_line_number() {
        match parse_graph("U 3\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
