//! Text formats for graphs: 0-based edge lists, DIMACS `edge` files and JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use super::SimpleGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    /// First line the vertex count, then one `u v` pair per line, 0-based.
    EdgeList,
    /// `p edge n m` header and `e u v` lines, 1-based.
    Dimacs,
    /// `{ "vertices": n, "edges": [[u, v], ...] }`
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" | "edges" | "txt" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::parse(0, 0, format!("unknown graph format `{other}`"))),
        }
    }
}

/// Splits off a `#` comment and yields `(line number, column, token)` triples.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut offset = 0;
    content.split_whitespace().map(move |tok| {
        let at = content[offset..].find(tok).expect("token comes from this line") + offset;
        offset = at + tok.len();
        (at + 1, tok)
    })
}

fn number(line: usize, column: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, column, format!("expected a non-negative integer, found `{tok}`")))
}

fn push_edge(
    edges: &mut Vec<(usize, usize)>,
    vertex_count: usize,
    line: usize,
    column: usize,
    u: usize,
    v: usize,
) -> Result<()> {
    for x in [u, v] {
        if x >= vertex_count {
            return Err(Error::Range {
                vertex: x,
                vertex_count,
                line,
            });
        }
    }
    if u == v {
        return Err(Error::parse(line, column, format!("self-loop at vertex {u}")));
    }
    edges.push((u, v));
    Ok(())
}

fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<_> = tokens(raw).collect();
        match (vertex_count, toks.as_slice()) {
            (_, []) => {}
            (None, [(c, t)]) => vertex_count = Some(number(line, *c, t)?),
            (None, [_, (c, _), ..]) => {
                return Err(Error::parse(
                    line,
                    *c,
                    "expected the vertex count alone on the first line",
                ))
            }
            (Some(n), [(cu, u), (cv, v)]) => {
                let (u, v) = (number(line, *cu, u)?, number(line, *cv, v)?);
                push_edge(&mut edges, n, line, *cu, u, v)?;
            }
            (Some(_), [(c, _)]) | (Some(_), [_, _, (c, _), ..]) => {
                return Err(Error::parse(line, *c, "expected exactly two vertex indices"))
            }
        }
    }
    let n = vertex_count.ok_or_else(|| Error::parse(1, 1, "missing vertex count"))?;
    SimpleGraph::new(n, edges)
}

fn parse_dimacs(text: &str) -> Result<SimpleGraph> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<_> = tokens(raw).collect();
        match toks.as_slice() {
            [] => {}
            [(_, "c"), ..] => {}
            [(c, "p"), rest @ ..] => {
                if vertex_count.is_some() {
                    return Err(Error::parse(line, *c, "duplicate problem line"));
                }
                match rest {
                    [(_, "edge" | "col"), (cn, n), (cm, m)] => {
                        vertex_count = Some(number(line, *cn, n)?);
                        number(line, *cm, m)?;
                    }
                    _ => return Err(Error::parse(line, *c, "expected `p edge <vertices> <edges>`")),
                }
            }
            [(c, "e"), rest @ ..] => {
                let n = vertex_count.ok_or_else(|| Error::parse(line, *c, "edge before problem line"))?;
                let [(cu, u), (cv, v)] = rest else {
                    return Err(Error::parse(line, *c, "expected `e <u> <v>`"));
                };
                let (u, v) = (number(line, *cu, u)?, number(line, *cv, v)?);
                if u == 0 || v == 0 {
                    let col = if u == 0 { *cu } else { *cv };
                    return Err(Error::parse(line, col, "DIMACS vertices are 1-based"));
                }
                push_edge(&mut edges, n, line, *cu, u - 1, v - 1)?;
            }
            [(c, other), ..] => return Err(Error::parse(line, *c, format!("unknown line type `{other}`"))),
        }
    }
    let n = vertex_count.ok_or_else(|| Error::parse(1, 1, "missing problem line"))?;
    SimpleGraph::new(n, edges)
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.column(), e.to_string())
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<SimpleGraph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::Json => {
            #[derive(serde::Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Repr {
                vertices: usize,
                edges: Vec<[usize; 2]>,
            }
            let repr: Repr = serde_json::from_str(text).map_err(json_error)?;
            let mut edges = Vec::new();
            for [u, v] in repr.edges {
                push_edge(&mut edges, repr.vertices, 0, 0, u, v)?;
            }
            SimpleGraph::new(repr.vertices, edges)
        }
    }
}

pub fn emit_graph(g: &SimpleGraph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            writeln!(out, "{}", g.vertex_count()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        GraphFormat::Json => {
            out = serde_json::to_string(g).expect("graphs always serialize");
            out.push('\n');
        }
    }
    out
}
