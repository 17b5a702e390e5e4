//! Immutable simple undirected graphs with bitset adjacency.
//!
//! Vertex ids are dense `0..n`. Every graph also carries one human-readable
//! label per vertex (`a_1`, `b_5`, ...) so that certificates can be printed
//! with the names used in hand-written arguments about the graph.
//!
//! There is no hard limit on `n`; in practice the exhaustive engine becomes
//! the bottleneck well before the representation does (a few dozen vertices).

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::with_order(n);
        for &(u, v) in edges {
            b.try_edge(u, v)?;
        }
        b.build()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Resolves a vertex by label, by label with `_` and `^` dropped
    /// (`b5` for `b_5`), or by numeric id.
    pub fn resolve_vertex(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        if let Some(v) = self.labels.iter().position(|l| l == token) {
            return Ok(v);
        }
        let squash = |s: &str| s.chars().filter(|c| *c != '_' && *c != '^').collect::<String>();
        let squashed = squash(token);
        let hits: Vec<usize> = (0..self.order()).filter(|&v| squash(&self.labels[v]) == squashed).collect();
        if hits.len() == 1 {
            return Ok(hits[0]);
        }
        match token.parse::<usize>() {
            Ok(v) if v < self.order() => Ok(v),
            Ok(v) => Err(Error::VertexOutOfRange { vertex: v, order: self.order() }),
            Err(_) => Err(Error::UnknownVertex(token.to_string())),
        }
    }

    /// Parses a comma-separated list of vertices (labels or ids), optionally
    /// wrapped in braces.
    pub fn parse_vertex_set(&self, text: &str) -> Result<VertexSet> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = self.empty_set();
        for token in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            set.insert(self.resolve_vertex(token)?);
        }
        Ok(set)
    }

    /// Formats a set using vertex labels, e.g. `{b_1, a_3, a_4}`.
    pub fn format_set(&self, set: &VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn is_dominating_naive(&self, set: &VertexSet) -> bool {
        (0..self.order()).all(|v| set.contains(v) || self.adj[v].intersects(set))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = self.empty_set();
        let mut count = 0;
        for s in 0..self.order() {
            if seen.contains(s) {
                continue;
            }
            count += 1;
            self.flood(s, &self.vertex_set(), &mut seen);
        }
        count
    }

    /// Whether the subgraph induced by `set` is connected. The empty set
    /// counts as connected.
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return true;
        };
        let mut seen = self.empty_set();
        self.flood(start, set, &mut seen);
        seen == *set
    }

    fn flood(&self, start: usize, within: &VertexSet, seen: &mut VertexSet) {
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].intersection(within).difference(seen).iter() {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }

    /// Size of a largest independent set, by branch and bound on the
    /// highest-degree remaining vertex.
    pub fn independence_number(&self) -> usize {
        fn go(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
            if size + cand.len() <= *best {
                return;
            }
            let Some(v) = cand.iter().max_by_key(|&v| g.adj[v].intersection(&cand).len()) else {
                *best = size;
                return;
            };
            if g.adj[v].intersection(&cand).is_empty() {
                // every candidate is isolated in the remainder
                *best = (*best).max(size + cand.len());
                return;
            }
            let mut take = cand.difference(&g.adj[v]);
            take.remove(v);
            go(g, take, size + 1, best);
            let mut skip = cand;
            skip.remove(v);
            go(g, skip, size, best);
        }
        let mut best = 0;
        go(self, self.vertex_set(), 0, &mut best);
        best
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.order())
            .map(|v| {
                let mut s = full.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { adj, labels: self.labels.clone() }
    }

    /// Smallest number of colors in a proper coloring, by exhaustive
    /// backtracking.
    pub fn chromatic_number(&self) -> usize {
        fn colorable(g: &Graph, order: &[usize], colors: &mut [usize], i: usize, k: usize) -> bool {
            if i == order.len() {
                return true;
            }
            let v = order[i];
            let used_max = order[..i].iter().map(|&u| colors[u]).max().map_or(0, |m| m + 1);
            for c in 0..k.min(used_max + 1) {
                if g.adj[v].iter().any(|u| colors[u] == c) {
                    continue;
                }
                colors[v] = c;
                if colorable(g, order, colors, i + 1, k) {
                    return true;
                }
            }
            colors[v] = usize::MAX;
            false
        }
        let n = self.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        (1..=n)
            .find(|&k| colorable(self, &order, &mut vec![usize::MAX; n], 0, k))
            .unwrap_or(n)
    }

    /// Returns a new graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// Cartesian product: vertex `(x, y)` has id `x * h.order() + y`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let (n1, n2) = (self.order(), h.order());
        let mut b = GraphBuilder::new();
        for x in 0..n1 {
            for y in 0..n2 {
                b.vertex(format!("({},{})", self.label(x), h.label(y)));
            }
        }
        for x in 0..n1 {
            for y in 0..n2 {
                let id = x * n2 + y;
                for y2 in h.neighbors(y).iter().filter(|&y2| y2 > y) {
                    b.edge(id, x * n2 + y2);
                }
                for x2 in self.neighbors(x).iter().filter(|&x2| x2 > x) {
                    b.edge(id, x2 * n2 + y);
                }
            }
        }
        b.build().expect("product of nonempty graphs is nonempty")
    }

    /// Block-diagonal union; labels get an `L.` or `R.` prefix.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let off = self.order();
        let mut b = GraphBuilder::new();
        for l in &self.labels {
            b.vertex(format!("L.{l}"));
        }
        for l in &h.labels {
            b.vertex(format!("R.{l}"));
        }
        for (u, v) in self.edges() {
            b.edge(u, v);
        }
        for (u, v) in h.edges() {
            b.edge(u + off, v + off);
        }
        b.build().expect("union of nonempty graphs is nonempty")
    }

    pub fn relabeled<I: IntoIterator<Item = String>>(mut self, labels: I) -> Graph {
        let labels: Vec<String> = labels.into_iter().collect();
        assert_eq!(labels.len(), self.order());
        self.labels = labels;
        self
    }
}

/// Incremental construction of a [`Graph`] with named vertices.
#[derive(Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    by_name: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builder with vertices `0..n` labelled by their ids.
    pub fn with_order(n: usize) -> Self {
        let mut b = Self::new();
        for v in 0..n {
            b.vertex(v.to_string());
        }
        b
    }

    pub fn vertex(&mut self, label: impl Into<String>) -> usize {
        let label = label.into();
        let id = self.labels.len();
        self.by_name.insert(label.clone(), id);
        self.labels.push(label);
        id
    }

    pub fn id(&self, label: &str) -> usize {
        *self.by_name.get(label).unwrap_or_else(|| panic!("no vertex named {label}"))
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn edge(&mut self, u: usize, v: usize) -> &mut Self {
        self.try_edge(u, v).expect("builder edge within range and loop-free");
        self
    }

    pub fn try_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.edges.push((u, v));
        Ok(self)
    }

    pub fn named_edge(&mut self, u: &str, v: &str) -> &mut Self {
        let (u, v) = (self.id(u), self.id(v));
        self.edge(u, v)
    }

    pub fn clique(&mut self, vertices: &[usize]) -> &mut Self {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.edge(u, v);
            }
        }
        self
    }

    pub fn build(self) -> Result<Graph> {
        let n = self.order();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: self.labels })
    }
}

fn numbered(prefix: &str, n: usize) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}_{i}"))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut b = GraphBuilder::new();
    for l in numbered("a", n) {
        b.vertex(l);
    }
    for i in 1..n {
        b.edge(i - 1, i);
    }
    b.build()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter { family: "cycle", msg: format!("needs at least 3 vertices, got {n}") });
    }
    let mut b = GraphBuilder::new();
    for l in numbered("a", n) {
        b.vertex(l);
    }
    for i in 0..n {
        b.edge(i, (i + 1) % n);
    }
    b.build()
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    let vs: Vec<usize> = numbered("v", n).map(|l| b.vertex(l)).collect();
    b.clique(&vs);
    b.build()
}

/// Complete bipartite graph `K_{m,n}` with sides `x_*` and `y_*`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::Parameter { family: "kbip", msg: "both sides need at least one vertex".into() });
    }
    let mut b = GraphBuilder::new();
    let xs: Vec<usize> = numbered("x", m).map(|l| b.vertex(l)).collect();
    let ys: Vec<usize> = numbered("y", n).map(|l| b.vertex(l)).collect();
    for &x in &xs {
        for &y in &ys {
            b.edge(x, y);
        }
    }
    b.build()
}

/// Star `K_{1,n}`: center `c` followed by leaves `l_1..l_n`.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Parameter { family: "star", msg: "needs at least one leaf".into() });
    }
    let mut b = GraphBuilder::new();
    let c = b.vertex("c");
    for l in numbered("l", n) {
        let v = b.vertex(l);
        b.edge(c, v);
    }
    b.build()
}

/// The ladder `P_2 □ P_n`; row `(a_1, .)` comes first, then row `(a_2, .)`.
pub fn ladder(n: usize) -> Result<Graph> {
    Ok(path(2)?.cartesian_product(&path(n)?))
}
