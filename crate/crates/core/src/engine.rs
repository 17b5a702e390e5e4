//! Exact computation of the domination invariants.
//!
//! Everything here is exhaustive over move graphs and therefore exponential.
//! Computations that would exceed the node cap fail with
//! [`Error::CapExceeded`] instead of returning a guess.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::canonical_hash;
use crate::kernel::{enumerate_dominating, first_dominating, legal_moves, verify_family, FamilyCertificate, Limits, MoveGraph};
use crate::trajectory::{Step, StepVerdict, Trajectory};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Gamma,
    Eternal,
    Foolproof,
    Autonomous,
}

impl Invariant {
    pub const ALL: [Invariant; 4] = [Invariant::Gamma, Invariant::Eternal, Invariant::Foolproof, Invariant::Autonomous];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::Eternal => "eternal",
            Invariant::Foolproof => "foolproof",
            Invariant::Autonomous => "autonomous",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown invariant `{s}` (expected gamma, eternal, foolproof or autonomous)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A dominating set of the reported size.
    Witness { set: VertexSet },
    /// An autonomous family at the reported size.
    Family(FamilyCertificate),
    /// Number of surviving sets in the eternal fixed point.
    FixedPoint { k: usize, size: usize },
    Formula { formula: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub invariant: Invariant,
    pub order: usize,
    pub hash: String,
    pub value: usize,
    pub certificate: Certificate,
    /// Sizes examined, inclusive.
    pub k_range: (usize, usize),
    /// Sizes in the range that were checked and failed.
    pub rejected: Vec<usize>,
    pub elapsed_secs: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub k: usize,
    pub feasible: bool,
    pub nodes: usize,
    pub components: usize,
    pub secure_components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityProfile {
    pub rows: Vec<ProfileRow>,
}

impl FeasibilityProfile {
    pub fn feasible(&self, k: usize) -> Option<bool> {
        self.rows.iter().find(|r| r.k == k).map(|r| r.feasible)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub gamma: usize,
    pub eternal: usize,
    pub autonomous: usize,
    pub foolproof: usize,
    pub independence: usize,
}

/// Runs invariant computations under a fixed set of resource limits.
#[derive(Clone, Copy, Debug, Default)]
pub struct Engine {
    pub limits: Limits,
}

impl Engine {
    pub fn new(limits: Limits) -> Engine {
        Engine { limits }
    }

    pub fn with_cap(node_cap: u64) -> Engine {
        Engine { limits: Limits { node_cap } }
    }

    pub fn move_graph(&self, g: &Graph, k: usize) -> Result<MoveGraph> {
        MoveGraph::build(g, k, &self.limits)
    }

    pub fn compute(&self, g: &Graph, invariant: Invariant) -> Result<InvariantReport> {
        match invariant {
            Invariant::Gamma => Ok(self.domination_number(g)),
            Invariant::Eternal => self.eternal_domination_number(g),
            Invariant::Foolproof => Ok(self.foolproof_number(g)),
            Invariant::Autonomous => self.autonomous_number(g),
        }
    }

    pub fn domination_number(&self, g: &Graph) -> InvariantReport {
        let clock = Instant::now();
        let (k, witness) = (1..=g.order())
            .find_map(|k| first_dominating(g, k).map(|s| (k, s)))
            .expect("the whole vertex set dominates");
        report(g, Invariant::Gamma, k, Certificate::Witness { set: witness }, (1, k), (1..k).collect(), clock)
    }

    pub fn eternal_domination_number(&self, g: &Graph) -> Result<InvariantReport> {
        let clock = Instant::now();
        let gamma = self.domination_number(g).value;
        let mut rejected = Vec::new();
        for k in gamma..=g.order() {
            let mg = self.move_graph(g, k)?;
            let size = eternal_fixed_point(&mg).iter().filter(|&&a| a).count();
            if size > 0 {
                return Ok(report(g, Invariant::Eternal, k, Certificate::FixedPoint { k, size }, (gamma, k), rejected, clock));
            }
            rejected.push(k);
        }
        unreachable!("the whole vertex set survives the fixed point")
    }

    /// `n - δ`, by formula. Exact for connected graphs; on a disjoint union
    /// the least `k` accepted by [`Engine::verify_foolproof`] is the sum over
    /// components, which can be smaller.
    pub fn foolproof_number(&self, g: &Graph) -> InvariantReport {
        let clock = Instant::now();
        let value = g.order() - g.min_degree();
        let cert = Certificate::Formula { formula: format!("n - min degree = {} - {}", g.order(), g.min_degree()) };
        report(g, Invariant::Foolproof, value, cert, (value, value), Vec::new(), clock)
    }

    /// Whether `k` guards defend foolproofly: some nonempty collection of
    /// dominating `k`-sets survives when every guard adjacent to an attack
    /// must be able to answer it. Computed directly over sets, without the
    /// move graph.
    pub fn verify_foolproof(&self, g: &Graph, k: usize) -> Result<bool> {
        if k == 0 || k > g.order() {
            return Err(Error::InvalidSize { k, order: g.order() });
        }
        self.limits.check(g.order(), k)?;
        let mut alive: HashSet<VertexSet> = enumerate_dominating(g, k).into_iter().collect();
        loop {
            let doomed: Vec<VertexSet> = alive
                .iter()
                .filter(|s| {
                    s.complement().iter().any(|v| {
                        g.neighbors(v).intersection(s).iter().any(|w| !alive.contains(&s.with_move(w, v)))
                    })
                })
                .cloned()
                .collect();
            if doomed.is_empty() {
                return Ok(!alive.is_empty());
            }
            for s in doomed {
                alive.remove(&s);
            }
        }
    }

    /// Some move-graph component at size `k` whose members are all secure,
    /// choosing the smallest such component.
    pub fn autonomous_feasible(&self, g: &Graph, k: usize) -> Result<(bool, Option<FamilyCertificate>)> {
        let mg = self.move_graph(g, k)?;
        Ok(match mg.smallest_secure_component() {
            Some(c) => (true, Some(mg.certificate(c.id))),
            None => (false, None),
        })
    }

    /// Scans upward from the domination number. Feasibility is not monotone
    /// in `k`, so each size is decided independently.
    pub fn autonomous_number(&self, g: &Graph) -> Result<InvariantReport> {
        let clock = Instant::now();
        let gamma = self.domination_number(g).value;
        let mut rejected = Vec::new();
        for k in gamma..=g.order() {
            if let (true, Some(cert)) = self.autonomous_feasible(g, k)? {
                return Ok(report(g, Invariant::Autonomous, k, Certificate::Family(cert), (gamma, k), rejected, clock));
            }
            rejected.push(k);
        }
        unreachable!("the whole vertex set is an autonomous family")
    }

    pub fn feasibility_profile(&self, g: &Graph, k_max: usize) -> Result<FeasibilityProfile> {
        if k_max > g.order() {
            return Err(Error::InvalidSize { k: k_max, order: g.order() });
        }
        let gamma = self.domination_number(g).value;
        let mut rows = Vec::new();
        for k in gamma..=k_max {
            let mg = self.move_graph(g, k)?;
            let secure_components = mg.components().iter().filter(|c| c.all_secure).count();
            rows.push(ProfileRow {
                k,
                feasible: secure_components > 0,
                nodes: mg.len(),
                components: mg.components().len(),
                secure_components,
            });
        }
        Ok(FeasibilityProfile { rows })
    }

    /// Shortest sequence of legal moves from `start` to a configuration with
    /// an unanswerable attack. The last step carries that attack (the highest
    /// numbered one if several) and no move.
    pub fn refute(&self, g: &Graph, k: usize, start: &VertexSet) -> Result<Trajectory> {
        let mg = self.move_graph(g, k)?;
        let origin = mg.id_of(start).ok_or_else(|| Error::NotANode { config: g.format_set(start), k })?;
        let mut parent = vec![usize::MAX; mg.len()];
        parent[origin] = origin;
        let mut queue = VecDeque::from([origin]);
        let mut target = None;
        while let Some(u) = queue.pop_front() {
            if !mg.is_secure(u) {
                target = Some(u);
                break;
            }
            for e in mg.neighbors(u) {
                if parent[e.target] == usize::MAX {
                    parent[e.target] = u;
                    queue.push_back(e.target);
                }
            }
        }
        let target = target.ok_or_else(|| Error::NoRefutation(g.format_set(start)))?;

        let mut chain = vec![target];
        while *chain.last().unwrap() != origin {
            chain.push(parent[*chain.last().unwrap()]);
        }
        chain.reverse();

        let mut steps = Vec::new();
        for (i, pair) in chain.windows(2).enumerate() {
            let edge = mg.neighbors(pair[0]).iter().find(|e| e.target == pair[1]).expect("bfs follows edges");
            steps.push(Step {
                round: i + 1,
                configuration: mg.node(pair[0]).clone(),
                attack: edge.mv.to,
                mv: Some(edge.mv),
                verdict: StepVerdict::Defended,
            });
        }
        let last = mg.node(target);
        let attack = last
            .complement()
            .iter()
            .filter(|&v| legal_moves(g, last, v).expect("unoccupied").is_empty())
            .last()
            .expect("insecure node has an unanswerable attack");
        steps.push(Step {
            round: chain.len(),
            configuration: last.clone(),
            attack,
            mv: None,
            verdict: StepVerdict::Failed,
        });
        Ok(Trajectory { steps })
    }

    /// Computes all four invariants plus the independence number and checks
    /// `γ ≤ γ∞ ≤ γ_aut ≤ n − δ` and `α ≤ γ_aut`.
    pub fn check_bounds(&self, g: &Graph) -> Result<BoundsReport> {
        let r = BoundsReport {
            gamma: self.domination_number(g).value,
            eternal: self.eternal_domination_number(g)?.value,
            autonomous: self.autonomous_number(g)?.value,
            foolproof: self.foolproof_number(g).value,
            independence: g.independence_number(),
        };
        let chain = r.gamma <= r.eternal && r.eternal <= r.autonomous && r.autonomous <= r.foolproof;
        if !chain || r.independence > r.autonomous {
            return Err(Error::BoundViolation(format!(
                "gamma {} eternal {} autonomous {} n-delta {} alpha {}",
                r.gamma, r.eternal, r.autonomous, r.foolproof, r.independence
            )));
        }
        Ok(r)
    }

    /// Whether every dominating `k`-set is secure. False when there are no
    /// dominating `k`-sets at all.
    pub fn secdom_sufficiency(&self, g: &Graph, k: usize) -> Result<bool> {
        let mg = self.move_graph(g, k)?;
        Ok(!mg.is_empty() && (0..mg.len()).all(|i| mg.is_secure(i)))
    }

    /// Checks a report's certificate against the graph from scratch.
    pub fn reverify(&self, g: &Graph, report: &InvariantReport) -> Result<bool> {
        Ok(match &report.certificate {
            Certificate::Witness { set } => set.len() == report.value && g.is_dominating_naive(set),
            Certificate::Family(cert) => {
                cert.k == report.value && verify_family(g, &self.move_graph(g, cert.k)?, cert)?
            }
            Certificate::FixedPoint { k, size } => {
                let mg = self.move_graph(g, *k)?;
                let alive = eternal_fixed_point(&mg);
                let survivors: HashSet<&VertexSet> = (0..mg.len()).filter(|&i| alive[i]).map(|i| mg.node(i)).collect();
                let closed = survivors.iter().all(|s| {
                    s.complement().iter().all(|v| {
                        g.neighbors(v).intersection(s).iter().any(|w| survivors.contains(&s.with_move(w, v)))
                    })
                });
                *k == report.value && survivors.len() == *size && *size > 0 && closed
            }
            Certificate::Formula { .. } => report.value == g.order() - g.min_degree(),
        })
    }
}

fn report(
    g: &Graph,
    invariant: Invariant,
    value: usize,
    certificate: Certificate,
    k_range: (usize, usize),
    rejected: Vec<usize>,
    clock: Instant,
) -> InvariantReport {
    InvariantReport {
        invariant,
        order: g.order(),
        hash: canonical_hash(g),
        value,
        certificate,
        k_range,
        rejected,
        elapsed_secs: clock.elapsed().as_secs_f64(),
    }
}

/// Greatest set of move-graph nodes from which every attack can be answered
/// by a move to another surviving node. Returns a survival flag per node.
pub fn eternal_fixed_point(mg: &MoveGraph) -> Vec<bool> {
    let len = mg.len();
    if len == 0 {
        return Vec::new();
    }
    let n = mg.node(0).universe();
    // support[i * n + v]: surviving neighbors of node i that answer attack v
    let mut support = vec![0u32; len * n];
    for i in 0..len {
        for e in mg.neighbors(i) {
            support[i * n + e.mv.to] += 1;
        }
    }
    let mut alive = vec![true; len];
    let mut dead = Vec::new();
    let starved = |i: usize, support: &[u32]| mg.node(i).complement().iter().any(|v| support[i * n + v] == 0);
    for (i, flag) in alive.iter_mut().enumerate() {
        if starved(i, &support) {
            *flag = false;
            dead.push(i);
        }
    }
    while let Some(j) = dead.pop() {
        for e in mg.neighbors(j) {
            let i = e.target;
            // i reaches j by moving the guard back from e.mv.to to e.mv.from
            let slot = &mut support[i * n + e.mv.from];
            *slot -= 1;
            if *slot == 0 && alive[i] {
                alive[i] = false;
                dead.push(i);
            }
        }
    }
    alive
}

/// Checks the clique-partition hypotheses and returns the number of classes
/// when they hold: every class is a clique with more vertices than there are
/// classes, and no vertex has two neighbors in the same other class.
pub fn partition_bound(g: &Graph, partition: &[VertexSet]) -> Result<Option<usize>> {
    let mut seen = g.empty_set();
    for class in partition {
        if class.universe() != g.order() {
            return Err(Error::NotPartition("class over a different vertex set".into()));
        }
        if class.is_empty() {
            return Err(Error::NotPartition("empty class".into()));
        }
        if seen.intersects(class) {
            return Err(Error::NotPartition(format!("classes overlap at {}", g.format_set(&seen.intersection(class)))));
        }
        seen.union_with(class);
    }
    if !seen.is_full() {
        return Err(Error::NotPartition(format!("uncovered vertices {}", g.format_set(&seen.complement()))));
    }
    let k = partition.len();
    let holds = partition.iter().all(|c| g.is_clique(c) && c.len() > k)
        && (0..g.order()).all(|v| partition.iter().filter(|c| !c.contains(v)).all(|c| g.neighbors(v).intersection(c).len() <= 1));
    Ok(holds.then_some(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::families;
    use crate::graph::{complete, cycle, ladder, path};

    fn engine() -> Engine {
        Engine::default()
    }

    #[test]
    fn small_values() {
        let e = engine();
        assert_eq!(e.domination_number(&complete(7).unwrap()).value, 1);
        assert_eq!(e.eternal_domination_number(&path(7).unwrap()).unwrap().value, 4);
        assert_eq!(e.foolproof_number(&path(5).unwrap()).value, 4);
        assert_eq!(e.foolproof_number(&cycle(6).unwrap()).value, 4);
        assert_eq!(e.autonomous_number(&cycle(9).unwrap()).unwrap().value, 6);
        assert_eq!(e.autonomous_number(&families::intro6()).unwrap().value, 4);
    }

    #[test]
    fn ladder_and_product() {
        let e = engine();
        assert_eq!(e.eternal_domination_number(&ladder(5).unwrap()).unwrap().value, 5);
        let k3k4 = complete(3).unwrap().cartesian_product(&complete(4).unwrap());
        assert_eq!(e.eternal_domination_number(&k3k4).unwrap().value, 3);
        let k2k5 = complete(2).unwrap().cartesian_product(&complete(5).unwrap());
        assert_eq!(e.autonomous_number(&k2k5).unwrap().value, 2);
    }

    #[test]
    fn foolproof_checks() {
        let e = engine();
        let p4 = path(4).unwrap();
        assert!(e.verify_foolproof(&p4, 3).unwrap());
        assert!(!e.verify_foolproof(&p4, 2).unwrap());
        assert!(e.verify_foolproof(&complete(5).unwrap(), 1).unwrap());
    }

    #[test]
    fn house9_is_not_monotone() {
        let e = engine();
        let g = families::house9();
        assert!(e.autonomous_feasible(&g, 2).unwrap().0);
        assert!(!e.autonomous_feasible(&g, 3).unwrap().0);
        let prof = e.feasibility_profile(&g, 4).unwrap();
        assert_eq!(prof.feasible(2), Some(true));
        assert_eq!(prof.feasible(3), Some(false));
    }

    #[test]
    fn path_feasibility() {
        let e = engine();
        let p7 = path(7).unwrap();
        assert!(e.autonomous_feasible(&p7, 5).unwrap().0);
        assert!(!e.autonomous_feasible(&p7, 4).unwrap().0);
        let prof = e.feasibility_profile(&path(4).unwrap(), 2).unwrap();
        assert_eq!(prof.rows.iter().map(|r| (r.k, r.feasible)).collect::<Vec<_>>(), vec![(2, true)]);
        assert!(e.autonomous_feasible(&p7, 7).unwrap().0);
    }

    #[test]
    fn refutations() {
        let e = engine();
        let g = families::house9();
        let start = g.parse_vertex_set("b_1,a_3,a_4").unwrap();
        let t = e.refute(&g, 3, &start).unwrap();
        assert!(t.failed());
        assert_eq!(t.steps.last().unwrap().configuration, g.parse_vertex_set("b_1,b_3,b_4").unwrap());
        assert_eq!(g.label(t.steps.last().unwrap().attack), "b_5");

        let p7 = path(7).unwrap();
        let t = e.refute(&p7, 4, &p7.parse_vertex_set("a_2,a_4,a_6,a_7").unwrap()).unwrap();
        assert!(t.failed());

        let p4 = path(4).unwrap();
        assert!(matches!(e.refute(&p4, 2, &p4.parse_vertex_set("1,3").unwrap()), Err(Error::NoRefutation(_))));
    }

    #[test]
    fn bounds_and_sufficiency() {
        let e = engine();
        let r = e.check_bounds(&cycle(9).unwrap()).unwrap();
        assert_eq!((r.gamma, r.eternal, r.autonomous, r.foolproof), (3, 5, 6, 7));
        assert!(e.secdom_sufficiency(&path(6).unwrap(), 4).unwrap());
        let paw = families::paw2();
        assert!(!e.secdom_sufficiency(&paw, 3).unwrap());
        assert!(e.autonomous_feasible(&paw, 3).unwrap().0);
        assert!(e.secdom_sufficiency(&paw, paw.order()).unwrap());
    }

    #[test]
    fn partitions() {
        let k2k5 = complete(2).unwrap().cartesian_product(&complete(5).unwrap());
        let fibers: Vec<VertexSet> = (0..2).map(|x| VertexSet::from_vertices(10, (0..5).map(|y| x * 5 + y))).collect();
        assert_eq!(partition_bound(&k2k5, &fibers).unwrap(), Some(2));

        let house = families::house();
        let tri = vec![house.parse_vertex_set("a_1,a_2,a_3").unwrap(), house.parse_vertex_set("b_1,b_2,b_3").unwrap()];
        assert_eq!(partition_bound(&house, &tri).unwrap(), Some(2));

        let p6 = path(6).unwrap();
        let pairs: Vec<VertexSet> = (0..3).map(|i| VertexSet::from_vertices(6, [2 * i, 2 * i + 1])).collect();
        assert_eq!(partition_bound(&p6, &pairs).unwrap(), None);
        assert!(matches!(partition_bound(&p6, &pairs[..2]), Err(Error::NotPartition(_))));
    }

    #[test]
    fn certificates_reverify() {
        let e = engine();
        let g = families::house9();
        for inv in Invariant::ALL {
            let r = e.compute(&g, inv).unwrap();
            assert!(e.reverify(&g, &r).unwrap(), "{inv}");
        }
    }
}
