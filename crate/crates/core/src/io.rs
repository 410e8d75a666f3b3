//! Text formats for graphs and covers.
//!
//! Graph files:
//!
//! ```text
//! # optional comments ("#" or "c")
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1-indexed)
//! ```
//!
//! Cover files hold `v <id>` and `e <u> <v>` lines, also 1-indexed.

use thiserror::Error;

use crate::element::{Element, ElementSet};
use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line {line}: ({u},{v}) is not an edge of the graph")]
    UnknownEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
}

impl ParseError {
    fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#') || line == "c" || line.starts_with("c ")
}

fn parse_number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::syntax(line, format!("missing {what}")))?;
    tok.parse::<usize>()
        .map_err(|_| ParseError::syntax(line, format!("invalid {what} '{tok}'")))
}

fn parse_vertex(tok: Option<&str>, line: usize) -> Result<usize, ParseError> {
    let id = parse_number(tok, line, "vertex")?;
    if id == 0 {
        return Err(ParseError::syntax(line, "vertex ids are 1-indexed"));
    }
    Ok(id - 1)
}

fn expect_end<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<(), ParseError> {
    match toks.next() {
        Some(extra) => Err(ParseError::syntax(
            line,
            format!("unexpected token '{extra}'"),
        )),
        None => Ok(()),
    }
}

/// Parses the graph format. Structural problems are `Syntax` errors carrying
/// the 1-based line number; loops, duplicates and out-of-range endpoints are
/// reported by graph construction.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if is_comment(trimmed) {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::syntax(line, "duplicate header"));
                }
                match toks.next() {
                    Some("edge") => {}
                    other => {
                        return Err(ParseError::syntax(
                            line,
                            format!("expected 'p edge', found {other:?}"),
                        ))
                    }
                }
                let n = parse_number(toks.next(), line, "vertex count")?;
                let m = parse_number(toks.next(), line, "edge count")?;
                expect_end(toks, line)?;
                header = Some((n, m));
                pairs.reserve(m);
            }
            Some("e") => {
                let (_, m) =
                    header.ok_or_else(|| ParseError::syntax(line, "edge line before header"))?;
                let u = parse_vertex(toks.next(), line)?;
                let v = parse_vertex(toks.next(), line)?;
                expect_end(toks, line)?;
                if pairs.len() == m {
                    return Err(ParseError::syntax(
                        line,
                        format!("more edge lines than the {m} declared"),
                    ));
                }
                pairs.push((u, v));
            }
            Some(other) => {
                return Err(ParseError::syntax(
                    line,
                    format!("unknown line type '{other}'"),
                ))
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let (n, m) =
        header.ok_or_else(|| ParseError::syntax(last_line.max(1), "missing 'p edge' header"))?;
    if pairs.len() != m {
        return Err(ParseError::syntax(
            last_line.max(1),
            format!("header declares {m} edges, found {}", pairs.len()),
        ));
    }
    Ok(Graph::new(n, &pairs)?)
}

/// Serializes `g` in edge-id order, so parsing the result restores ids.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u.0 + 1, e.v.0 + 1));
    }
    out
}

/// Parses a cover file against `g`. Repeated lines collapse into one element.
pub fn parse_cover(text: &str, g: &Graph) -> Result<ElementSet, ParseError> {
    let n = g.vertex_count();
    let check = |vertex: usize, line: usize| {
        if vertex >= n {
            Err(ParseError::VertexOutOfRange {
                line,
                vertex: vertex + 1,
                n,
            })
        } else {
            Ok(VertexId(vertex))
        }
    };
    let mut set = ElementSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let el = match toks.next() {
            Some("v") => {
                let v = check(parse_vertex(toks.next(), line)?, line)?;
                Element::Vertex(v)
            }
            Some("e") => {
                let a = parse_vertex(toks.next(), line)?;
                let b = parse_vertex(toks.next(), line)?;
                // a pair naming a nonexistent vertex is also not an edge
                let id = (a < n && b < n)
                    .then(|| g.find_edge(VertexId(a), VertexId(b)))
                    .flatten()
                    .ok_or(ParseError::UnknownEdge {
                        line,
                        u: a + 1,
                        v: b + 1,
                    })?;
                Element::Edge(id)
            }
            Some(other) => {
                return Err(ParseError::syntax(
                    line,
                    format!("unknown line type '{other}'"),
                ))
            }
            None => unreachable!("blank lines are skipped"),
        };
        expect_end(toks, line)?;
        set.insert(g, el)
            .expect("element resolved against the graph");
    }
    Ok(set)
}
