//! Graph text format.
//!
//! ```text
//! # comment
//! p vg 3 2
//! v a
//! v b
//! v c
//! e a b
//! e b c
//! ```

use std::fmt::Write as _;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct GraphFormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> GraphFormatError {
    GraphFormatError { line, message: message.into() }
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphFormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut g = Graph::new();
    let mut edges = 0usize;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(line, "duplicate `p` header"));
                }
                if toks.len() != 4 || toks[1] != "vg" {
                    return Err(err(line, "expected `p vg <n> <m>`"));
                }
                let n = toks[2].parse().map_err(|_| err(line, format!("bad vertex count `{}`", toks[2])))?;
                let m = toks[3].parse().map_err(|_| err(line, format!("bad edge count `{}`", toks[3])))?;
                header = Some((n, m, line));
            }
            "v" | "e" if header.is_none() => return Err(err(line, "`p vg <n> <m>` header must come first")),
            "v" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected `v <name>`"));
                }
                if edges > 0 {
                    return Err(err(line, "vertex lines must precede edge lines"));
                }
                g.add_vertex(toks[1]).map_err(|e| err(line, e.to_string()))?;
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(err(line, "expected `e <name> <name>`"));
                }
                match g.add_edge(toks[1], toks[2]) {
                    Ok(true) => edges += 1,
                    Ok(false) => return Err(err(line, format!("duplicate edge `{} {}`", toks[1], toks[2]))),
                    Err(e @ (GraphError::UnknownVertex(_) | GraphError::SelfLoop(_))) => return Err(err(line, e.to_string())),
                    Err(e) => return Err(err(line, e.to_string())),
                }
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m, hline) = header.ok_or_else(|| err(text.lines().count().max(1), "missing `p vg <n> <m>` header"))?;
    if g.n() != n {
        return Err(err(hline, format!("header declares {n} vertices, found {}", g.n())));
    }
    if edges != m {
        return Err(err(hline, format!("header declares {m} edges, found {edges}")));
    }
    Ok(g)
}

/// Canonical text: vertices in graph order, edges sorted by name pair.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("p vg {} {}\n", g.n(), g.m());
    for v in g.names() {
        let _ = writeln!(out, "v {v}");
    }
    for (a, b) in g.edge_set() {
        let _ = writeln!(out, "e {a} {b}");
    }
    out
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.names() {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in g.edge_set() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}
