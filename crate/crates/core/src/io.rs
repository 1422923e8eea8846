//! Text graph format.
//!
//! ```text
//! # comment
//! n m
//! <label> <weight>      (n lines)
//! <label> <label>       (m lines)
//! ```
//!
//! Tokens are whitespace separated. Vertex labels are arbitrary tokens and
//! are renumbered `0..n` in order of appearance. Weights are decimal
//! integers, or `p/q` for the rational domain. Blank lines and lines whose
//! first non-blank character is `#` are skipped.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::weight::{Weight, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header, expected `n m`")]
    MalformedHeader,
    #[error("expected `label weight`")]
    MalformedVertex,
    #[error("expected `u v`")]
    MalformedEdge,
    #[error("vertex label `{0}` declared twice")]
    DuplicateLabel(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("unexpected end of input: expected {expected} more line(s)")]
    UnexpectedEof { expected: usize },
    #[error("unexpected content after the last edge")]
    TrailingContent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed.split_whitespace().collect()))
        }
    })
}

pub fn parse_graph<W: Weight>(text: &str) -> Result<WeightedGraph<W>, ParseError> {
    let mut lines = content_lines(text);
    let last_line = text.lines().count().max(1);
    let err = |line, kind| ParseError { line, kind };

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(last_line, ParseErrorKind::MalformedHeader))?;
    let (n, m) = match header.as_slice() {
        [n, m] => match (n.parse::<usize>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(err(hline, ParseErrorKind::MalformedHeader)),
        },
        _ => return Err(err(hline, ParseErrorKind::MalformedHeader)),
    };

    let mut ids: HashMap<&str, usize> = HashMap::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let (line, toks) = lines
            .next()
            .ok_or_else(|| err(last_line, ParseErrorKind::UnexpectedEof { expected: n - i + m }))?;
        let [label, weight] = toks.as_slice() else {
            return Err(err(line, ParseErrorKind::MalformedVertex));
        };
        let w = W::parse_token(weight).map_err(|e| err(line, e.into()))?;
        if ids.insert(label, i).is_some() {
            return Err(err(line, ParseErrorKind::DuplicateLabel(label.to_string())));
        }
        weights.push(w);
    }

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let (line, toks) = lines
            .next()
            .ok_or_else(|| err(last_line, ParseErrorKind::UnexpectedEof { expected: m - i }))?;
        let [a, b] = toks.as_slice() else {
            return Err(err(line, ParseErrorKind::MalformedEdge));
        };
        let lookup = |label: &str| {
            ids.get(label)
                .copied()
                .ok_or_else(|| err(line, ParseErrorKind::UnknownEndpoint(label.to_string())))
        };
        let (u, v) = (lookup(a)?, lookup(b)?);
        if u == v {
            return Err(err(line, ParseErrorKind::SelfLoop(a.to_string())));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, ParseErrorKind::DuplicateEdge(a.to_string(), b.to_string())));
        }
        edges.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, ParseErrorKind::TrailingContent));
    }
    Ok(WeightedGraph::new(weights, edges).expect("edges validated while parsing"))
}

/// Writes `g` in the text format with labels `0..n`.
pub fn serialize_graph<W: Weight>(g: &WeightedGraph<W>) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (v, w) in g.weights().iter().enumerate() {
        writeln!(out, "{v} {w}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Rational;

    #[test]
    fn parses_k3() {
        let g: WeightedGraph<i64> = parse_graph("3 3\n0 1\n1 2\n2 -3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.weights(), &[1, 2, -3]);
        assert!(g.is_triangle(0, 1, 2));
    }

    #[test]
    fn parses_single_vertex() {
        let g: WeightedGraph<i64> = parse_graph("1 0\n0 5").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(g.weight(0), 5);
    }

    #[test]
    fn self_loop_reports_line() {
        let e = parse_graph::<i64>("2 1\n0 1\n1 1\n0 0").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(matches!(e.kind, ParseErrorKind::SelfLoop(_)));
    }

    #[test]
    fn comments_and_labels() {
        let text = "# a triangle\n3 3\na 1\n\nb 2\n# mid\nc -3\nc a\na b\nb c\n";
        let g: WeightedGraph<i64> = parse_graph(text).unwrap();
        assert_eq!(g.weights(), &[1, 2, -3]);
        assert!(g.is_triangle(0, 1, 2));
    }

    #[test]
    fn error_lines() {
        let cases: &[(&str, usize)] = &[
            ("x 1\n", 1),
            ("2 1\n0 1\n1 2\n0 5\n", 4),
            ("2 2\n0 1\n1 2\n0 1\n1 0\n", 5),
            ("2 0\n0 1\n0 2\n", 3),
            ("1 0\n0 1.5\n", 2),
            ("1 0\n0 99999999999999999999\n", 2),
            ("2 1\n0 1\n1 2\n0 1\n0 1\n", 5),
        ];
        for (text, line) in cases {
            let e = parse_graph::<i64>(text).unwrap_err();
            assert_eq!(e.line, *line, "{text:?}: {e}");
        }
        let e = parse_graph::<i64>("1 0\n0 0.5\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Weight(WeightError::Float(_))));
    }

    #[test]
    fn rational_weights() {
        let g: WeightedGraph<Rational> = parse_graph("3 3\n0 1/2\n1 1/3\n2 -5/6\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.weight(2), Rational::new(-5, 6));
        let back: WeightedGraph<Rational> = parse_graph(&serialize_graph(&g)).unwrap();
        assert_eq!(back, g);
    }
}
