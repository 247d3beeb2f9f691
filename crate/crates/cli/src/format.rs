//! Plain-text graph format.
//!
//! ```text
//! # optional comment lines
//! n 4
//! e 0 1
//! e 1 2
//! ```
//!
//! Vertices are `0..n`. The writer emits edges with `u < v` in lexicographic
//! order, one per line, every line ending in `\n`.

use std::fmt::Write as _;

use catprod_core::Graph;
use log::warn;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("line {line}: malformed header, expected `n <count>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: graph must have at least one vertex")]
    Empty { line: usize },
    #[error("line {line}: expected `e <u> <v>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
}

fn numbers<'a>(fields: impl Iterator<Item = &'a str>) -> Option<Vec<usize>> {
    fields.map(|f| f.parse().ok()).collect()
}

/// Parses the text format. Repeated edges are merged with a warning;
/// self-loops are rejected.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("n") {
        return Err(ParseError::MalformedHeader { line });
    }
    let n = match numbers(fields).as_deref() {
        Some(&[0]) => return Err(ParseError::Empty { line }),
        Some(&[n]) => n,
        _ => return Err(ParseError::MalformedHeader { line }),
    };

    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, text) in lines {
        let mut fields = text.split_whitespace();
        if fields.next() != Some("e") {
            return Err(ParseError::MalformedEdge { line });
        }
        let (u, v) = match numbers(fields).as_deref() {
            Some(&[u, v]) => (u, v),
            _ => return Err(ParseError::MalformedEdge { line }),
        };
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
            return Err(ParseError::OutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            warn!("line {line}: duplicate edge {u} {v} ignored");
            continue;
        }
        edges.push((u, v));
    }
    // ranges and loops were checked line by line above
    Ok(Graph::from_edges(n, edges).expect("validated edge list"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_graph("n 2\ne 0 1\n").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph("n 1").unwrap(), Graph::edgeless(1).unwrap());
        let g = parse_graph("# a comment\nn 3\n\ne 2 1\n# another\ne 0 1\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn writer_is_canonical() {
        let g = parse_graph("n 4\ne 3 2\ne 1 0\ne 2 0\n").unwrap();
        assert_eq!(write_graph(&g), "n 4\ne 0 1\ne 0 2\ne 2 3\n");
    }

    #[test]
    fn duplicates_are_merged() {
        let g = parse_graph("n 2\ne 0 1\ne 1 0\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph(""), Err(ParseError::MissingHeader));
        assert_eq!(parse_graph("# only\n"), Err(ParseError::MissingHeader));
        assert_eq!(parse_graph("m 3"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(parse_graph("n x"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(parse_graph("n 3 4"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(parse_graph("n 0"), Err(ParseError::Empty { line: 1 }));
        assert_eq!(parse_graph("n 2\ne 0"), Err(ParseError::MalformedEdge { line: 2 }));
        assert_eq!(parse_graph("n 2\nf 0 1"), Err(ParseError::MalformedEdge { line: 2 }));
        assert_eq!(
            parse_graph("n 2\ne 0 2"),
            Err(ParseError::OutOfRange { line: 2, vertex: 2, n: 2 })
        );
        assert_eq!(
            parse_graph("n 2\n\ne 1 1"),
            Err(ParseError::SelfLoop { line: 3, vertex: 1 })
        );
    }
}
