//! Generators for the named example graphs and the six parametrised
//! families used by the realizability construction.
//!
//! Vertex numbering is always: the `a` block, then the `b` block, then the
//! `c` block, then singletons, each in index order. Labels carry the block
//! letter and index (`a_3`, `c^2_1`, `b^1_2`).
//!
//! Families `A` and `B` deviate from their printed definitions where those
//! definitions do not produce the stated invariants; see `CORRECTIONS.md`.

use crate::error::{Error, Result};
use crate::graph::{self, Graph, GraphBuilder};

fn block(b: &mut GraphBuilder, prefix: &str, count: usize) -> Vec<usize> {
    (1..=count).map(|i| b.vertex(format!("{prefix}_{i}"))).collect()
}

/// `A_n` (n >= 2): cliques `a_1..a_{2n+1}` and `b_1..b_{2n}`, matched pairs
/// `(a_i, b_i)` for `i <= 2n`, cross edges `(a_i, b_j)` for `1 <= i <= n-1`
/// and `j <= 2n-i`, and an apex `c` adjacent to everything.
///
/// Invariants: gamma = 1, eternal = 2, autonomous = n + 1.
pub fn family_a(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Parameter { family: "A", msg: format!("needs n >= 2, got {n}") });
    }
    let mut b = GraphBuilder::new();
    let a = block(&mut b, "a", 2 * n + 1);
    let bb = block(&mut b, "b", 2 * n);
    let c = b.vertex("c");
    b.clique(&a).clique(&bb);
    for i in 0..2 * n {
        b.edge(a[i], bb[i]);
    }
    // the printed range 1 <= i <= n lets {a_n, ..., a_2n} drift to a
    // configuration that fails at a_{2n+1}, pushing the value to n + 2
    for i in 1..n {
        for j in 1..=2 * n - i {
            b.edge(a[i - 1], bb[j - 1]);
        }
    }
    for v in a.iter().chain(&bb) {
        b.edge(c, *v);
    }
    b.build()
}

/// `B_{m,n}` (m, n >= 0): cliques `a_1..a_{2n+3}` and `b_1..b_{2n+4}`,
/// matched pairs `(a_i, b_i)` for every `i <= 2n+3`, the crossed pair
/// `(a_1, b_2), (a_2, b_1)`, staircase edges `(b_{3+i}, a_{3+j})` for
/// `0 <= i <= n`, `0 <= j <= 2n-i`, and `m` separate edges `c^1_i -- c^2_i`.
///
/// Invariants: gamma = eternal = m + 2, autonomous = m + n + 3.
pub fn family_b(m: usize, n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    let a = block(&mut b, "a", 2 * n + 3);
    let bb = block(&mut b, "b", 2 * n + 4);
    let spikes: Vec<(usize, usize)> = (1..=m)
        .map(|i| (b.vertex(format!("c^1_{i}")), b.vertex(format!("c^2_{i}"))))
        .collect();
    b.clique(&a).clique(&bb);
    for i in 0..2 * n + 3 {
        b.edge(a[i], bb[i]);
    }
    b.edge(a[0], bb[1]).edge(a[1], bb[0]);
    for i in 0..=n {
        for j in 0..=2 * n - i {
            b.edge(bb[2 + i], a[2 + j]);
        }
    }
    // attaching the spikes to the b clique lets a second guard settle on a
    // spike, so each would cost two guards instead of one
    for (c1, c2) in spikes {
        b.edge(c1, c2);
    }
    b.build()
}

/// `C_{m,n}` (m >= 2, n >= 1): two universal vertices `a_1, a_2`, an
/// independent `b_1..b_m`, and a clique `c_1..c_n`.
///
/// Invariants: gamma = 1, eternal = m + 1, autonomous = m + n.
pub fn family_c(m: usize, n: usize) -> Result<Graph> {
    if m < 2 || n < 1 {
        return Err(Error::Parameter { family: "C", msg: format!("needs m >= 2 and n >= 1, got ({m}, {n})") });
    }
    let mut b = GraphBuilder::new();
    let a = block(&mut b, "a", 2);
    block(&mut b, "b", m);
    let c = block(&mut b, "c", n);
    for &hub in &a {
        for v in 0..b.order() {
            if v != hub {
                b.edge(hub, v);
            }
        }
    }
    b.clique(&c);
    b.build()
}

/// `D_{m,n}` (m, n >= 1): clique on `a_1, a_2, b^1_1..b^1_m`, pendant edges
/// `b^1_i -- b^2_i`, and a clique on `a_2, c_1..c_n`.
///
/// Invariants: gamma = m + 1, eternal = m + 2, autonomous = m + n + 1.
pub fn family_d(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter { family: "D", msg: format!("needs m, n >= 1, got ({m}, {n})") });
    }
    let mut b = GraphBuilder::new();
    let a = block(&mut b, "a", 2);
    let pairs: Vec<(usize, usize)> = (1..=m)
        .map(|i| (b.vertex(format!("b^1_{i}")), b.vertex(format!("b^2_{i}"))))
        .collect();
    let c = block(&mut b, "c", n);
    let mut core = a.clone();
    core.extend(pairs.iter().map(|p| p.0));
    b.clique(&core);
    for &(inner, leaf) in &pairs {
        b.edge(inner, leaf);
    }
    let mut fat = vec![a[1]];
    fat.extend(&c);
    b.clique(&fat);
    b.build()
}

/// `E_{m,n}` (m, n >= 1): clique `a_1..a_{m+3}`, `b_1, b_2` each adjacent to
/// `a_1` and `a_2`, and leaves `c_1..c_n` on `a_{m+3}`.
///
/// Invariants: gamma = 2, eternal = n + 3, autonomous = m + n + 3.
pub fn family_e(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter { family: "E", msg: format!("needs m, n >= 1, got ({m}, {n})") });
    }
    let mut b = GraphBuilder::new();
    let a = block(&mut b, "a", m + 3);
    let bb = block(&mut b, "b", 2);
    let c = block(&mut b, "c", n);
    b.clique(&a);
    for &x in &a[..2] {
        for &y in &bb {
            b.edge(x, y);
        }
    }
    for &leaf in &c {
        b.edge(a[m + 2], leaf);
    }
    b.build()
}

/// `F_{l,m,n}` (l, m, n >= 1): leaves `a_i -- c_i` for `i <= l`, vertices
/// `b_1..b_m` adjacent to each of `c_1..c_l`, and a clique `c_1..c_{l+n}`.
///
/// Invariants for l >= 2: gamma = l, eternal = l + m + 1,
/// autonomous = l + m + n. With l = 1 and n >= 2 the autonomous number
/// collapses to the eternal one.
pub fn family_f(l: usize, m: usize, n: usize) -> Result<Graph> {
    if l < 1 || m < 1 || n < 1 {
        return Err(Error::Parameter { family: "F", msg: format!("needs l, m, n >= 1, got ({l}, {m}, {n})") });
    }
    let mut b = GraphBuilder::new();
    let a = block(&mut b, "a", l);
    let bb = block(&mut b, "b", m);
    let c = block(&mut b, "c", l + n);
    for i in 0..l {
        b.edge(a[i], c[i]);
        for &y in &bb {
            b.edge(y, c[i]);
        }
    }
    b.clique(&c);
    b.build()
}

/// Triangular prism: lower triangle `a_1..a_3`, upper triangle `b_1..b_3`,
/// rungs `a_i -- b_i`.
pub fn house() -> Graph {
    let mut b = GraphBuilder::new();
    let lower = block(&mut b, "a", 3);
    let upper = block(&mut b, "b", 3);
    b.clique(&lower).clique(&upper);
    for i in 0..3 {
        b.edge(lower[i], upper[i]);
    }
    b.build().unwrap()
}

/// [`house`] plus the diagonal `b_2 -- a_3`.
pub fn house_diag() -> Graph {
    let g = house();
    g.with_edge(4, 2).unwrap()
}

/// Cliques `a_1..a_4` and `b_1..b_5`, rungs `a_i -- b_i` for `i <= 4`, and
/// the extra edge `b_1 -- a_2`. `b_5` has no `a` neighbor.
pub fn house9() -> Graph {
    let mut b = GraphBuilder::new();
    let a = block(&mut b, "a", 4);
    let bb = block(&mut b, "b", 5);
    b.clique(&a).clique(&bb);
    for i in 0..4 {
        b.edge(a[i], bb[i]);
    }
    b.edge(bb[0], a[1]);
    b.build().unwrap()
}

/// A triangle `t_1 t_2 t_3` with two leaves `l_1, l_2` on `t_1`.
pub fn paw2() -> Graph {
    let mut b = GraphBuilder::new();
    let t = block(&mut b, "t", 3);
    let l = block(&mut b, "l", 2);
    b.clique(&t);
    for leaf in l {
        b.edge(t[0], leaf);
    }
    b.build().unwrap()
}

/// Six vertices `a, b, c, p, e, f`: `a` and `b` see everything, `c` sees
/// `a, b, p`, and `e, f` are seen only by `a` and `b`.
pub fn intro6() -> Graph {
    let mut b = GraphBuilder::new();
    for name in ["a", "b", "c", "p", "e", "f"] {
        b.vertex(name);
    }
    for (u, v) in [("a", "b"), ("a", "c"), ("a", "p"), ("a", "e"), ("a", "f")] {
        b.named_edge(u, v);
    }
    for (u, v) in [("b", "c"), ("b", "p"), ("b", "e"), ("b", "f"), ("c", "p")] {
        b.named_edge(u, v);
    }
    b.build().unwrap()
}

pub fn c5k3() -> Graph {
    graph::cycle(5).unwrap().disjoint_union(&graph::complete(3).unwrap())
}

/// [`c5k3`] with a bridge from the first cycle vertex to the first clique
/// vertex.
pub fn c5k3_bridge() -> Graph {
    c5k3().with_edge(0, 5).unwrap()
}
