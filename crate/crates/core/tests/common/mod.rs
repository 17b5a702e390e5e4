#![allow(dead_code)]

use std::collections::HashSet;
use std::time::Duration;

use domlab::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Collects named checks and prints one line per check.
pub struct Tally {
    name: &'static str,
    pub checks: Vec<(String, bool)>,
}

impl Tally {
    pub fn new(name: &'static str) -> Tally {
        Tally { name, checks: Vec::new() }
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool) {
        let label = label.into();
        println!("  [{}] {}", if ok { "PASS" } else { "FAIL" }, label);
        self.checks.push((label, ok));
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: impl Into<String>, got: T, want: T) {
        let ok = got == want;
        self.check(format!("{}: got {got:?}, expected {want:?}", label.into()), ok);
    }

    pub fn within(&mut self, label: impl Into<String>, took: Duration, budget: Duration) {
        self.check(format!("{} took {:.2}s (budget {:.0}s)", label.into(), took.as_secs_f64(), budget.as_secs_f64()), took <= budget);
    }

    /// Prints the summary line and panics if anything failed.
    pub fn finish(self) {
        let failed: Vec<&String> = self.checks.iter().filter(|(_, ok)| !ok).map(|(l, _)| l).collect();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!("{}: {} ({}/{} checks)", self.name, verdict, self.checks.len() - failed.len(), self.checks.len());
        assert!(failed.is_empty(), "{}: failing checks:\n{}", self.name, failed.iter().map(|s| format!("  {s}")).collect::<Vec<_>>().join("\n"));
    }
}

pub fn graph_from_mask(n: usize, adj: &[u16]) -> Graph {
    let mut edges = Vec::new();
    for (u, row) in adj.iter().enumerate().take(n) {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn code(n: usize, adj: &[u16], perm: &[usize]) -> u64 {
    // perm[position] = original vertex
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | u64::from(adj[perm[i]] >> perm[j] & 1);
        }
    }
    c
}

/// Smallest adjacency code over orderings that list vertices by degree.
fn canonical(n: usize, adj: &[u16]) -> u64 {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| adj[v].count_ones());
    let mut best = u64::MAX;
    fn rec(perm: &mut Vec<usize>, adj: &[u16], order: &[usize], used: &mut [bool], best: &mut u64) {
        let n = order.len();
        if perm.len() == n {
            *best = (*best).min(code(n, adj, perm));
            return;
        }
        let want = adj[order[perm.len()]].count_ones();
        for v in 0..n {
            if !used[v] && adj[v].count_ones() == want {
                used[v] = true;
                perm.push(v);
                rec(perm, adj, order, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    rec(&mut Vec::new(), adj, &order, &mut vec![false; n], &mut best);
    best
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, as adjacency masks.
pub fn all_graphs(n: usize) -> Vec<Vec<u16>> {
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0u16..(1 << (m - 1)) {
                let mut adj = g.clone();
                adj.push(nbrs);
                for (u, a) in adj.iter_mut().enumerate().take(m - 1) {
                    if nbrs >> u & 1 == 1 {
                        *a |= 1 << (m - 1);
                    }
                }
                if seen.insert(canonical(m, &adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        level
    }
}

/// Random connected graph: a random spanning tree plus edges kept with
/// probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let mut list: Vec<(usize, usize)> = edges.into_iter().collect();
    list.sort();
    Graph::from_edges(n, &list).unwrap()
}

/// The seeded pool of 200 random connected graphs with 2 to 9 vertices.
pub fn random_pool() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=9);
            let p = rng.gen_range(0.1..0.7);
            random_connected(&mut rng, n, p)
        })
        .collect()
}

/// All k-subsets that dominate, by checking every subset.
pub fn naive_dominating(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.order();
    let mut out: Vec<VertexSet> = (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| VertexSet::from_mask(n, m))
        .filter(|s| (0..n).all(|v| s.contains(v) || g.neighbors(v).intersects(s)))
        .collect();
    out.sort();
    out
}

/// Independent sets, as bitmasks, by checking every subset.
pub fn independent_masks(g: &Graph) -> Vec<u64> {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || !g.neighbors(v).intersects(&VertexSet::from_mask(n, m))))
        .collect()
}

pub fn mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}
