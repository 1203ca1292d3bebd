//! Plain-text host graph format.
//!
//! ```text
//! # comment
//! n 6 directed 0
//! v 2 1        # vertex 2 has color 1 (default 0)
//! e 0 1 1      # edge 0-1 (arc 0->1 when directed) with color 1
//! ```
//!
//! The `n` line must come before any `v` or `e` line. Edge colors are at
//! least 1.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

pub fn parse_host_graph(text: &str) -> Result<ColoredGraph> {
    let mut header: Option<(usize, bool)> = None;
    let mut vertex_colors: Vec<i64> = Vec::new();
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let tag = toks.next().expect("non-empty line");
        match tag {
            "n" => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate 'n' line"));
                }
                let n: usize = field(toks.next(), lineno, "vertex count")?;
                if toks.next() != Some("directed") {
                    return Err(parse_err(lineno, "expected 'n <N> directed <0|1>'"));
                }
                let directed = match toks.next() {
                    Some("0") => false,
                    Some("1") => true,
                    _ => return Err(parse_err(lineno, "directed flag must be 0 or 1")),
                };
                vertex_colors = vec![0; n];
                header = Some((n, directed));
            }
            "v" | "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(lineno, "'n' line must come first"));
                };
                if tag == "v" {
                    let v: usize = field(toks.next(), lineno, "vertex")?;
                    let c: i64 = field(toks.next(), lineno, "color")?;
                    if v >= n {
                        return Err(Error::VertexOutOfRange { vertex: v, order: n });
                    }
                    vertex_colors[v] = c;
                } else {
                    let u: usize = field(toks.next(), lineno, "vertex")?;
                    let v: usize = field(toks.next(), lineno, "vertex")?;
                    let c: i64 = field(toks.next(), lineno, "color")?;
                    if c == 0 {
                        return Err(parse_err(lineno, "edge color must be at least 1"));
                    }
                    edges.push((u, v, c));
                }
            }
            other => return Err(parse_err(lineno, format!("unknown record '{other}'"))),
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(lineno, format!("unexpected token '{extra}'")));
        }
    }

    let (n, directed) = header.ok_or_else(|| parse_err(0, "missing 'n' line"))?;
    ColoredGraph::build(n, directed, &vertex_colors, &edges)
}

pub fn read_host_graph(path: &Path) -> Result<ColoredGraph> {
    parse_host_graph(&fs::read_to_string(path)?)
}

/// Writes `g` in the host format (colors only when nonzero).
pub fn format_host_graph(g: &ColoredGraph) -> String {
    let mut out = format!("n {} directed {}\n", g.order(), g.is_directed() as u8);
    for (v, &c) in g.vertex_colors().iter().enumerate() {
        if c != 0 {
            out.push_str(&format!("v {v} {c}\n"));
        }
    }
    for (u, v, c) in g.edges() {
        out.push_str(&format!("e {u} {v} {c}\n"));
    }
    out
}
