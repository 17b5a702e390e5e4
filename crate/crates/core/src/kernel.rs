//! Domination predicates, guard moves, and the move graph.
//!
//! Two dominating sets of the same size are adjacent when one becomes the
//! other by a single guard sliding along an edge of the graph. The move
//! graph at size `k` has every dominating `k`-set as a node and this
//! adjacency as its edge relation; a set is never adjacent to itself.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Node count above which edge and flag construction fans out to rayon.
const PARALLEL_THRESHOLD: usize = 4096;

/// Resource limits for exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of candidate configurations a move graph may project.
    pub node_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { node_cap: 50_000_000 }
    }
}

impl Limits {
    /// Fails when `C(n, k)` exceeds the node cap.
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        let projected = binomial(n, k);
        if projected > self.node_cap as u128 {
            Err(Error::CapExceeded { projected, cap: self.node_cap })
        } else {
            Ok(())
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// A guard at `from` answering an attack at `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

pub fn covered(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut cov = set.clone();
    for v in set {
        cov.union_with(g.neighbors(v));
    }
    cov
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    covered(g, set).is_full()
}

/// Every move `w -> attack` with `w` a guard adjacent to `attack` whose
/// departure leaves a dominating set. Ordered by `w`.
pub fn legal_moves(g: &Graph, set: &VertexSet, attack: usize) -> Result<Vec<Move>> {
    if attack >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: attack, order: g.order() });
    }
    if set.contains(attack) {
        return Err(Error::Occupied(attack));
    }
    Ok(g.neighbors(attack)
        .intersection(set)
        .iter()
        .filter(|&w| is_dominating(g, &set.with_move(w, attack)))
        .map(|w| Move { from: w, to: attack })
        .collect())
}

pub fn is_secure_dominating(g: &Graph, set: &VertexSet) -> bool {
    is_dominating(g, set)
        && set
            .complement()
            .iter()
            .all(|v| !legal_moves(g, set, v).expect("v is unoccupied").is_empty())
}

/// All dominating sets of size `k` in colexicographic order.
///
/// Enumeration picks vertices from the largest down and abandons a branch
/// when some undominated vertex has no closed neighbor left to pick, or when
/// the undominated vertices outnumber what the remaining guards can reach.
pub fn enumerate_dominating(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    walk_dominating(g, k, &mut |s| {
        out.push(s.clone());
        true
    });
    out
}

/// The colex-first dominating set of size `k`, if any.
pub fn first_dominating(g: &Graph, k: usize) -> Option<VertexSet> {
    let mut found = None;
    walk_dominating(g, k, &mut |s| {
        found = Some(s.clone());
        false
    });
    found
}

/// Calls `visit` on each dominating `k`-set in colex order until it returns
/// false.
fn walk_dominating(g: &Graph, k: usize, visit: &mut dyn FnMut(&VertexSet) -> bool) {
    let n = g.order();
    if k == 0 || k > n {
        return;
    }
    // coverable[l]: vertices with a closed neighbor below l
    let lowest: Vec<usize> = (0..n).map(|v| g.neighbors(v).first().map_or(v, |u| u.min(v))).collect();
    let mut coverable = vec![VertexSet::new(n); n + 1];
    for l in 1..=n {
        coverable[l] = coverable[l - 1].clone();
        for (v, &low) in lowest.iter().enumerate() {
            if low == l - 1 {
                coverable[l].insert(v);
            }
        }
    }
    let reach = g.max_degree() + 1;

    struct Walk<'a> {
        g: &'a Graph,
        coverable: Vec<VertexSet>,
        reach: usize,
        chosen: VertexSet,
    }

    impl Walk<'_> {
        // picks `r` more vertices from 0..limit; false means stop everything
        fn rec(&mut self, limit: usize, r: usize, cov: &VertexSet, visit: &mut dyn FnMut(&VertexSet) -> bool) -> bool {
            if r == 0 {
                return !cov.is_full() || visit(&self.chosen);
            }
            let missing = cov.complement();
            if missing.len() > r * self.reach || !missing.is_subset(&self.coverable[limit]) {
                return true;
            }
            for v in r - 1..limit {
                let mut next = cov.clone();
                next.insert(v);
                next.union_with(self.g.neighbors(v));
                self.chosen.insert(v);
                let go_on = self.rec(v, r - 1, &next, visit);
                self.chosen.remove(v);
                if !go_on {
                    return false;
                }
            }
            true
        }
    }

    let mut walk = Walk { g, coverable, reach, chosen: VertexSet::new(n) };
    walk.rec(n, k, &VertexSet::new(n), visit);
}

#[derive(Clone, Debug)]
pub struct MoveEdge {
    pub target: usize,
    pub mv: Move,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub id: usize,
    pub size: usize,
    pub all_secure: bool,
    /// Colex-least member.
    pub representative: VertexSet,
}

/// All dominating `k`-sets with their adjacency, component labels and
/// secure flags. Immutable once built.
#[derive(Clone, Debug)]
pub struct MoveGraph {
    k: usize,
    nodes: Vec<VertexSet>,
    index: HashMap<VertexSet, usize>,
    edges: Vec<Vec<MoveEdge>>,
    component: Vec<usize>,
    secure: Vec<bool>,
    components: Vec<ComponentSummary>,
}

impl MoveGraph {
    pub fn build(g: &Graph, k: usize, limits: &Limits) -> Result<MoveGraph> {
        if k == 0 || k > g.order() {
            return Err(Error::InvalidSize { k, order: g.order() });
        }
        limits.check(g.order(), k)?;
        let nodes = enumerate_dominating(g, k);
        let index: HashMap<VertexSet, usize> = nodes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();

        let node_edges = |s: &VertexSet| -> Vec<MoveEdge> {
            let mut out = Vec::new();
            for w in s {
                for v in g.neighbors(w).difference(s).iter() {
                    if let Some(&target) = index.get(&s.with_move(w, v)) {
                        out.push(MoveEdge { target, mv: Move { from: w, to: v } });
                    }
                }
            }
            out
        };
        let edges: Vec<Vec<MoveEdge>> = if nodes.len() >= PARALLEL_THRESHOLD {
            nodes.par_iter().map(node_edges).collect()
        } else {
            nodes.iter().map(node_edges).collect()
        };

        let secure_flag = |(s, es): (&VertexSet, &Vec<MoveEdge>)| {
            let mut cov = s.clone();
            for e in es {
                cov.insert(e.mv.to);
            }
            cov.is_full()
        };
        let secure: Vec<bool> = if nodes.len() >= PARALLEL_THRESHOLD {
            nodes.par_iter().zip(edges.par_iter()).map(secure_flag).collect()
        } else {
            nodes.iter().zip(edges.iter()).map(secure_flag).collect()
        };

        let mut component = vec![usize::MAX; nodes.len()];
        let mut components = Vec::new();
        for start in 0..nodes.len() {
            if component[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut size = 0;
            let mut all_secure = true;
            let mut queue = VecDeque::from([start]);
            component[start] = id;
            while let Some(u) = queue.pop_front() {
                size += 1;
                all_secure &= secure[u];
                for e in &edges[u] {
                    if component[e.target] == usize::MAX {
                        component[e.target] = id;
                        queue.push_back(e.target);
                    }
                }
            }
            components.push(ComponentSummary { id, size, all_secure, representative: nodes[start].clone() });
        }

        Ok(MoveGraph { k, nodes, index, edges, component, secure, components })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &VertexSet {
        &self.nodes[id]
    }

    pub fn id_of(&self, set: &VertexSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn neighbors(&self, id: usize) -> &[MoveEdge] {
        &self.edges[id]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_secure(&self, id: usize) -> bool {
        self.secure[id]
    }

    pub fn component_of(&self, id: usize) -> usize {
        self.component[id]
    }

    pub fn components(&self) -> &[ComponentSummary] {
        &self.components
    }

    pub fn members(&self, component: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&i| self.component[i] == component)
    }

    /// The all-secure component with the fewest nodes (lowest id on ties).
    pub fn smallest_secure_component(&self) -> Option<&ComponentSummary> {
        self.components.iter().filter(|c| c.all_secure).min_by_key(|c| (c.size, c.id))
    }

    pub fn certificate(&self, component: usize) -> FamilyCertificate {
        let c = &self.components[component];
        FamilyCertificate {
            k: self.k,
            components: vec![c.id],
            representative: c.representative.clone(),
            size: c.size,
        }
    }
}

/// A union of move-graph components claimed to form an autonomously
/// dominating family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCertificate {
    pub k: usize,
    pub components: Vec<usize>,
    pub representative: VertexSet,
    pub size: usize,
}

/// Re-checks a certificate against the family definition directly, without
/// trusting the move graph's secure flags or edges.
pub fn verify_family(g: &Graph, mg: &MoveGraph, cert: &FamilyCertificate) -> Result<bool> {
    if let Some(&bad) = cert.components.iter().find(|&&c| c >= mg.components().len()) {
        return Err(Error::DanglingComponent(bad));
    }
    if cert.k != mg.k() {
        return Ok(false);
    }
    let wanted: HashSet<usize> = cert.components.iter().copied().collect();
    let members: Vec<VertexSet> = (0..mg.len())
        .filter(|&i| wanted.contains(&mg.component_of(i)))
        .map(|i| mg.node(i).clone())
        .collect();
    if members.len() != cert.size || !members.contains(&cert.representative) {
        return Ok(false);
    }
    Ok(is_autonomous_family(g, &members))
}

/// Checks the three family conditions from first principles: every member
/// dominates; every attack on a member can be answered by a move into the
/// family; every dominating set one move away from a member is a member.
pub fn is_autonomous_family(g: &Graph, members: &[VertexSet]) -> bool {
    let family: HashSet<&VertexSet> = members.iter().collect();
    members.iter().all(|s| {
        if !g.is_dominating_naive(s) {
            return false;
        }
        let answerable = s.complement().iter().all(|v| {
            g.neighbors(v)
                .intersection(s)
                .iter()
                .any(|w| family.contains(&s.with_move(w, v)))
        });
        let closed = s.iter().all(|w| {
            g.neighbors(w).difference(s).iter().all(|v| {
                let t = s.with_move(w, v);
                !g.is_dominating_naive(&t) || family.contains(&t)
            })
        });
        answerable && closed
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::families;
    use crate::graph::{complete, path};

    fn set(g: &Graph, text: &str) -> VertexSet {
        g.parse_vertex_set(text).unwrap()
    }

    #[test]
    fn path4_domination() {
        let p4 = path(4).unwrap();
        assert!(is_dominating(&p4, &set(&p4, "1,3")));
        assert!(!is_dominating(&p4, &set(&p4, "2,3")));
        let k5 = complete(5).unwrap();
        assert!((0..5).all(|v| is_dominating(&k5, &VertexSet::singleton(5, v))));
    }

    #[test]
    fn path4_preferred_defense() {
        let p4 = path(4).unwrap();
        let moves = legal_moves(&p4, &set(&p4, "1,3"), 2).unwrap();
        assert_eq!(moves, vec![Move { from: 3, to: 2 }]);
        assert!(matches!(legal_moves(&p4, &set(&p4, "1,3"), 1), Err(Error::Occupied(1))));
        assert!(is_secure_dominating(&p4, &set(&p4, "1,3")));
        assert!(is_secure_dominating(&p4, &p4.vertex_set()));
    }

    #[test]
    fn intro6_any_guard_may_answer() {
        let g = families::intro6();
        let s = set(&g, "a,b,c");
        let p = g.resolve_vertex("p").unwrap();
        assert_eq!(legal_moves(&g, &s, p).unwrap().len(), 3);
    }

    #[test]
    fn paw2_triangle_not_secure() {
        let g = families::paw2();
        let tri = set(&g, "t_1,t_2,t_3");
        assert!(is_dominating(&g, &tri));
        let leaf = g.resolve_vertex("l_1").unwrap();
        assert!(legal_moves(&g, &tri, leaf).unwrap().is_empty());
        assert!(!is_secure_dominating(&g, &tri));
    }

    #[test]
    fn enumerate_small_cases() {
        let p4 = path(4).unwrap();
        let sets: Vec<Vec<usize>> = enumerate_dominating(&p4, 2).iter().map(VertexSet::to_vec).collect();
        // colex: {0,2} < {1,2} < {0,3} < {1,3}
        assert_eq!(sets, vec![vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3]]);
        assert_eq!(enumerate_dominating(&complete(5).unwrap(), 1).len(), 5);
        assert!(enumerate_dominating(&p4, 0).is_empty());
        assert_eq!(first_dominating(&p4, 2).unwrap().to_vec(), vec![0, 2]);
        assert!(first_dominating(&p4, 1).is_none());
    }

    #[test]
    fn move_graph_path4() {
        let p4 = path(4).unwrap();
        let mg = MoveGraph::build(&p4, 2, &Limits::default()).unwrap();
        assert_eq!(mg.len(), 4);
        let a = mg.id_of(&set(&p4, "1,3")).unwrap();
        let b = mg.id_of(&set(&p4, "1,2")).unwrap();
        assert!(mg.neighbors(a).iter().any(|e| e.target == b && e.mv == Move { from: 3, to: 2 }));
        assert!((0..4).all(|i| mg.is_secure(i)));
        let cert = FamilyCertificate { k: 2, components: (0..mg.components().len()).collect(), representative: mg.node(0).clone(), size: 4 };
        assert!(verify_family(&p4, &mg, &cert).unwrap());
        assert!(is_autonomous_family(&p4, mg.nodes()));
    }

    #[test]
    fn move_graph_triangle() {
        let k3 = complete(3).unwrap();
        let mg = MoveGraph::build(&k3, 1, &Limits::default()).unwrap();
        assert_eq!(mg.len(), 3);
        assert_eq!(mg.edge_count(), 3);
        assert_eq!(mg.components().len(), 1);
    }

    #[test]
    fn house9_bad_upstairs_configuration() {
        let g = families::house9();
        let mg = MoveGraph::build(&g, 3, &Limits::default()).unwrap();
        let start = mg.id_of(&set(&g, "b_1,a_3,a_4")).unwrap();
        let mid = mg.id_of(&set(&g, "b_1,b_3,a_4")).unwrap();
        let end = mg.id_of(&set(&g, "b_1,b_3,b_4")).unwrap();
        assert!(mg.neighbors(start).iter().any(|e| e.target == mid));
        assert!(mg.neighbors(mid).iter().any(|e| e.target == end));
        assert!(!mg.is_secure(end));
        let family: Vec<VertexSet> = mg.members(mg.component_of(end)).map(|i| mg.node(i).clone()).collect();
        assert!(!is_autonomous_family(&g, &family));
        assert!(!is_autonomous_family(&g, &[mg.node(end).clone()]));
    }

    #[test]
    fn whole_vertex_set_is_a_family() {
        let g = families::house9();
        let mg = MoveGraph::build(&g, 9, &Limits::default()).unwrap();
        assert_eq!(mg.len(), 1);
        assert!(verify_family(&g, &mg, &mg.certificate(0)).unwrap());
        let dangling = FamilyCertificate { components: vec![7], ..mg.certificate(0) };
        assert!(matches!(verify_family(&g, &mg, &dangling), Err(Error::DanglingComponent(7))));
    }

    #[test]
    fn cap_is_enforced() {
        let g = complete(30).unwrap();
        let limits = Limits { node_cap: 1000 };
        assert!(matches!(MoveGraph::build(&g, 15, &limits), Err(Error::CapExceeded { .. })));
        assert_eq!(binomial(30, 15), 155_117_520);
        assert_eq!(binomial(4, 5), 0);
    }
}
