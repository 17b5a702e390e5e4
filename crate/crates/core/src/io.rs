//! Edge-list files, DOT export and the ordered-adjacency digest.
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v` with 0-indexed
//! vertices. Fields are whitespace-separated and `#` starts a comment.

use std::collections::HashSet;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::vertex_set::VertexSet;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, msg: String| Error::EdgeList { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header".into()))?;
    let nums = parse_pair(header).map_err(|m| err(hline, m))?;
    let (n, m) = nums;
    if n == 0 {
        return Err(err(hline, "graph must have at least one vertex".into()));
    }

    let mut b = GraphBuilder::with_order(n);
    let mut seen = HashSet::new();
    let mut count = 0;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line).map_err(|m| err(lineno, m))?;
        if u >= n || v >= n {
            return Err(err(lineno, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(lineno, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(lineno, format!("duplicate edge ({u}, {v})")));
        }
        b.edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(err(hline, format!("header declares {m} edges but {count} were listed")));
    }
    b.build()
}

fn parse_pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(format!("expected two integers, found `{line}`"));
    }
    let p = |s: &str| s.parse::<usize>().map_err(|_| format!("`{s}` is not a non-negative integer"));
    Ok((p(fields[0])?, p(fields[1])?))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// DOT rendering with `highlight` vertices filled.
pub fn to_dot(g: &Graph, highlight: &VertexSet) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        let style = if highlight.contains(v) { ", style=filled, fillcolor=gray" } else { "" };
        writeln!(out, "  {v} [label=\"{}\"{style}];", g.label(v).replace('"', "\\\"")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// SHA-256 over the ordered adjacency (order, then each sorted neighbor
/// list). Labels do not contribute. This is not an isomorphism invariant:
/// relabelling the vertices changes the digest.
pub fn canonical_hash(g: &Graph) -> String {
    let mut h = Sha256::new();
    h.update((g.order() as u64).to_le_bytes());
    for v in 0..g.order() {
        h.update((g.degree(v) as u64).to_le_bytes());
        for u in g.neighbors(v) {
            h.update((u as u64).to_le_bytes());
        }
    }
    format!("{:x}", h.finalize())
}
