//! The autonomous guard protocol played against an adversary.
//!
//! Each round the adversary attacks an unoccupied vertex. Among the guards
//! whose move to that vertex keeps the configuration dominating, one is
//! picked uniformly at random and moves. The game fails when no guard can
//! move.
//!
//! Randomness comes from [`draw`], a splitmix64 hash of
//! `(seed, trial, round, slot)`: slot 0 is the uniform adversary's pick,
//! slot 1 the choice among legal movers. A pick among `len` options is
//! `draw(..) % len`. Trials never share state, so running them in parallel
//! gives the same results as running them in order.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::{is_dominating, legal_moves, Limits, Move, MoveGraph};
use crate::trajectory::{Step, StepVerdict, Trajectory};
use crate::vertex_set::VertexSet;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic 64-bit value for one random decision.
pub fn draw(seed: u64, trial: u64, round: u64, slot: u64) -> u64 {
    let mut h = mix(seed.wrapping_add(GOLDEN));
    for part in [trial, round, slot] {
        h = mix((h ^ part).wrapping_add(GOLDEN));
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Adversary {
    /// A uniformly random unoccupied vertex.
    Uniform,
    /// The unoccupied vertex with the fewest legal responses, lowest id on
    /// ties.
    Greedy,
    /// A fixed list of attacks; the game ends when it runs out.
    Scripted(Vec<usize>),
    /// Uses the move graph: plays a forcing strategy when one exists,
    /// otherwise steers along a shortest path toward an insecure
    /// configuration, otherwise plays greedily.
    Oracle,
}

impl fmt::Display for Adversary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Adversary::Uniform => f.write_str("uniform"),
            Adversary::Greedy => f.write_str("greedy"),
            Adversary::Scripted(a) => write!(f, "scripted({} attacks)", a.len()),
            Adversary::Oracle => f.write_str("oracle"),
        }
    }
}

impl FromStr for Adversary {
    type Err = String;

    /// `uniform`, `greedy` or `oracle`. Scripts are loaded separately with
    /// [`parse_script`].
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "uniform" => Ok(Adversary::Uniform),
            "greedy" => Ok(Adversary::Greedy),
            "oracle" => Ok(Adversary::Oracle),
            _ => Err(format!("unknown adversary `{s}`")),
        }
    }
}

/// Reads whitespace- or comma-separated vertex names or ids.
pub fn parse_script(g: &Graph, text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(index, tok)| {
            g.resolve_vertex(tok).map_err(|e| Error::Script { index, vertex: tok.to_string(), msg: e.to_string() })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProtocolConfig {
    pub seed: u64,
    pub max_rounds: usize,
    pub adversary: Adversary,
    /// Only consulted by the oracle adversary.
    pub limits: Limits,
}

impl ProtocolConfig {
    pub fn new(seed: u64, max_rounds: usize, adversary: Adversary) -> Self {
        ProtocolConfig { seed, max_rounds, adversary, limits: Limits::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Survived,
    Failed { round: usize, attack: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimOutcome {
    pub trajectory: Trajectory,
    pub verdict: Verdict,
    pub rounds: usize,
}

impl SimOutcome {
    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Failed { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MonteCarloStats {
    pub trials: usize,
    pub failures: usize,
    pub mean_failure_round: Option<f64>,
    /// The failing trial with the lowest index.
    pub example_failure: Option<SimOutcome>,
}

/// Precomputed move-graph knowledge for the oracle adversary.
struct OracleData {
    mg: MoveGraph,
    /// Rounds the adversary needs to force a failure, if it can.
    force: Vec<Option<usize>>,
    /// Shortest distance to an insecure node, if reachable.
    distance: Vec<Option<usize>>,
}

impl OracleData {
    fn build(g: &Graph, k: usize, limits: &Limits) -> Result<OracleData> {
        let mg = MoveGraph::build(g, k, limits)?;
        let len = mg.len();

        let mut force: Vec<Option<usize>> = (0..len).map(|i| (!mg.is_secure(i)).then_some(0)).collect();
        for rank in 1.. {
            let snapshot = force.clone();
            let mut grew = false;
            for i in (0..len).filter(|&i| snapshot[i].is_none()) {
                let mut answers: HashMap<usize, bool> = HashMap::new();
                for e in mg.neighbors(i) {
                    let forced = snapshot[e.target].is_some();
                    *answers.entry(e.mv.to).or_insert(true) &= forced;
                }
                if answers.values().any(|&all| all) {
                    force[i] = Some(rank);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }

        let mut distance = vec![None; len];
        let mut queue = VecDeque::new();
        for (i, d) in distance.iter_mut().enumerate() {
            if !mg.is_secure(i) {
                *d = Some(0);
                queue.push_back(i);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = distance[u].unwrap();
            for e in mg.neighbors(u) {
                if distance[e.target].is_none() {
                    distance[e.target] = Some(du + 1);
                    queue.push_back(e.target);
                }
            }
        }
        Ok(OracleData { mg, force, distance })
    }

    fn attack(&self, g: &Graph, s: &VertexSet) -> usize {
        let id = self.mg.id_of(s).expect("configurations stay dominating");
        if !self.mg.is_secure(id) {
            return unanswerable(g, s).expect("insecure");
        }
        let neighbors = self.mg.neighbors(id);
        let mut by_attack: Vec<(usize, Vec<usize>)> = Vec::new();
        for e in neighbors {
            match by_attack.iter_mut().find(|(v, _)| *v == e.mv.to) {
                Some((_, targets)) => targets.push(e.target),
                None => by_attack.push((e.mv.to, vec![e.target])),
            }
        }
        by_attack.sort_by_key(|(v, _)| *v);
        if self.force[id].is_some() {
            // worst case over the random response, minimised over attacks
            return by_attack
                .iter()
                .filter_map(|(v, ts)| ts.iter().map(|&t| self.force[t]).collect::<Option<Vec<_>>>().map(|r| (r.into_iter().max().unwrap(), *v)))
                .min()
                .expect("forcing node has a forcing attack")
                .1;
        }
        if self.distance[id].is_some() {
            // the attack whose responses most often step closer
            let here = self.distance[id].unwrap();
            return by_attack
                .iter()
                .map(|(v, ts)| {
                    let closer = ts.iter().filter(|&&t| self.distance[t].is_some_and(|d| d < here)).count();
                    (std::cmp::Reverse(closer * 1000 / ts.len()), *v)
                })
                .min()
                .expect("secure node has responses")
                .1;
        }
        greedy_attack(g, s)
    }
}

fn unanswerable(g: &Graph, s: &VertexSet) -> Option<usize> {
    s.complement().iter().filter(|&v| legal_moves(g, s, v).expect("unoccupied").is_empty()).last()
}

fn greedy_attack(g: &Graph, s: &VertexSet) -> usize {
    s.complement()
        .iter()
        .min_by_key(|&v| (legal_moves(g, s, v).expect("unoccupied").len(), v))
        .expect("some vertex is unoccupied")
}

/// A validated game setup that can be replayed for any trial index.
pub struct Simulator<'g> {
    g: &'g Graph,
    start: VertexSet,
    cfg: ProtocolConfig,
    oracle: Option<OracleData>,
}

impl<'g> Simulator<'g> {
    pub fn new(g: &'g Graph, start: &VertexSet, cfg: &ProtocolConfig) -> Result<Simulator<'g>> {
        if start.universe() != g.order() || !is_dominating(g, start) {
            return Err(Error::NotDominating(g.format_set(start)));
        }
        if let Adversary::Scripted(script) = &cfg.adversary {
            if let Some((index, &v)) = script.iter().enumerate().find(|(_, &v)| v >= g.order()) {
                return Err(Error::Script { index, vertex: v.to_string(), msg: "no such vertex".into() });
            }
            if let Some(&v) = script.first() {
                if start.contains(v) {
                    return Err(Error::Script { index: 0, vertex: g.label(v).to_string(), msg: "attack on an occupied vertex".into() });
                }
            }
        }
        let oracle = match cfg.adversary {
            Adversary::Oracle if !start.is_full() => Some(OracleData::build(g, start.len(), &cfg.limits)?),
            _ => None,
        };
        Ok(Simulator { g, start: start.clone(), cfg: cfg.clone(), oracle })
    }

    pub fn run(&self, trial: u64) -> Result<SimOutcome> {
        let g = self.g;
        let seed = self.cfg.seed;
        let mut s = self.start.clone();
        let mut steps = Vec::new();
        let rounds_wanted = match &self.cfg.adversary {
            Adversary::Scripted(script) => script.len().min(self.cfg.max_rounds),
            _ => self.cfg.max_rounds,
        };
        for round in 1..=rounds_wanted {
            if s.is_full() {
                // nothing left to attack
                break;
            }
            let attack = match &self.cfg.adversary {
                Adversary::Uniform => {
                    let free = s.complement().to_vec();
                    free[(draw(seed, trial, round as u64, 0) % free.len() as u64) as usize]
                }
                Adversary::Greedy => greedy_attack(g, &s),
                Adversary::Scripted(script) => {
                    let v = script[round - 1];
                    if s.contains(v) {
                        return Err(Error::Script { index: round - 1, vertex: g.label(v).to_string(), msg: "attack on an occupied vertex".into() });
                    }
                    v
                }
                Adversary::Oracle => self.oracle.as_ref().expect("built for oracle").attack(g, &s),
            };
            let moves = legal_moves(g, &s, attack)?;
            if moves.is_empty() {
                steps.push(Step { round, configuration: s, attack, mv: None, verdict: StepVerdict::Failed });
                return Ok(SimOutcome {
                    trajectory: Trajectory { steps },
                    verdict: Verdict::Failed { round, attack },
                    rounds: round,
                });
            }
            let mv: Move = moves[(draw(seed, trial, round as u64, 1) % moves.len() as u64) as usize];
            let next = s.with_move(mv.from, mv.to);
            steps.push(Step { round, configuration: s, attack, mv: Some(mv), verdict: StepVerdict::Defended });
            s = next;
        }
        let rounds = steps.len();
        Ok(SimOutcome { trajectory: Trajectory { steps }, verdict: Verdict::Survived, rounds })
    }
}

/// One game with trial index 0.
pub fn simulate(g: &Graph, start: &VertexSet, cfg: &ProtocolConfig) -> Result<SimOutcome> {
    Simulator::new(g, start, cfg)?.run(0)
}

/// `trials` independent games, trial `t` using stream index `t`.
pub fn monte_carlo(g: &Graph, start: &VertexSet, cfg: &ProtocolConfig, trials: usize) -> Result<MonteCarloStats> {
    let sim = Simulator::new(g, start, cfg)?;
    let outcomes: Vec<SimOutcome> = (0..trials as u64).into_par_iter().map(|t| sim.run(t)).collect::<Result<_>>()?;
    let failed: Vec<&SimOutcome> = outcomes.iter().filter(|o| o.failed()).collect();
    let mean_failure_round =
        (!failed.is_empty()).then(|| failed.iter().map(|o| o.rounds as f64).sum::<f64>() / failed.len() as f64);
    Ok(MonteCarloStats {
        trials,
        failures: failed.len(),
        mean_failure_round,
        example_failure: failed.first().map(|o| (*o).clone()),
    })
}

/// Explores every attack and every legal response from `start`. Returns a
/// shortest play ending in an unanswerable attack, or `None` when every
/// reachable configuration can answer every attack.
pub fn reachable_failure(g: &Graph, start: &VertexSet) -> Result<Option<Trajectory>> {
    if !is_dominating(g, start) {
        return Err(Error::NotDominating(g.format_set(start)));
    }
    let mut parent: HashMap<VertexSet, Option<(VertexSet, Move)>> = HashMap::from([(start.clone(), None)]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(s) = queue.pop_front() {
        for v in s.complement().iter() {
            let moves = legal_moves(g, &s, v)?;
            if moves.is_empty() {
                let mut steps = vec![Step { round: 0, configuration: s.clone(), attack: v, mv: None, verdict: StepVerdict::Failed }];
                let mut cur = s.clone();
                while let Some(Some((prev, mv))) = parent.get(&cur) {
                    steps.push(Step { round: 0, configuration: prev.clone(), attack: mv.to, mv: Some(*mv), verdict: StepVerdict::Defended });
                    cur = prev.clone();
                }
                steps.reverse();
                for (i, step) in steps.iter_mut().enumerate() {
                    step.round = i + 1;
                }
                return Ok(Some(Trajectory { steps }));
            }
            for mv in moves {
                let next = s.with_move(mv.from, mv.to);
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((s.clone(), mv)));
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::families;
    use crate::graph::{complete, path};

    #[test]
    fn draw_is_stable() {
        assert_eq!(draw(1, 2, 3, 4), draw(1, 2, 3, 4));
        assert_ne!(draw(1, 2, 3, 0), draw(1, 2, 3, 1));
        assert_ne!(draw(0, 0, 1, 0), draw(0, 1, 0, 0));
    }

    #[test]
    fn preferred_defense_on_path() {
        let p4 = path(4).unwrap();
        let start = p4.parse_vertex_set("1,3").unwrap();
        let out = simulate(&p4, &start, &ProtocolConfig::new(7, 10, Adversary::Scripted(vec![2]))).unwrap();
        assert_eq!(out.verdict, Verdict::Survived);
        assert_eq!(out.trajectory.steps[0].mv, Some(Move { from: 3, to: 2 }));
    }

    #[test]
    fn house9_upstairs_fails() {
        let g = families::house9();
        let start = g.parse_vertex_set("b_1,b_3,b_4").unwrap();
        let b5 = g.resolve_vertex("b_5").unwrap();
        let out = simulate(&g, &start, &ProtocolConfig::new(0, 10, Adversary::Scripted(vec![b5]))).unwrap();
        assert_eq!(out.verdict, Verdict::Failed { round: 1, attack: b5 });
        assert!(out.trajectory.failed());
    }

    #[test]
    fn complete_graph_survives_uniform() {
        let k5 = complete(5).unwrap();
        let out = simulate(&k5, &VertexSet::singleton(5, 2), &ProtocolConfig::new(3, 1000, Adversary::Uniform)).unwrap();
        assert_eq!((out.verdict, out.rounds), (Verdict::Survived, 1000));
    }

    #[test]
    fn bad_inputs() {
        let p4 = path(4).unwrap();
        let cfg = ProtocolConfig::new(0, 5, Adversary::Uniform);
        assert!(matches!(simulate(&p4, &VertexSet::singleton(4, 0), &cfg), Err(Error::NotDominating(_))));
        let start = p4.parse_vertex_set("1,3").unwrap();
        let occupied = ProtocolConfig::new(0, 5, Adversary::Scripted(vec![1]));
        assert!(matches!(simulate(&p4, &start, &occupied), Err(Error::Script { index: 0, .. })));
        assert!(parse_script(&p4, "a_1, a_9").is_err());
        assert_eq!(parse_script(&p4, "a_1 a_3,2").unwrap(), vec![0, 2, 2]);
    }

    #[test]
    fn oracle_forces_house9_failure() {
        let g = families::house9();
        let start = g.parse_vertex_set("b_1,a_3,a_4").unwrap();
        for seed in 0..20 {
            let out = simulate(&g, &start, &ProtocolConfig::new(seed, 50, Adversary::Oracle)).unwrap();
            assert!(out.failed(), "seed {seed}");
        }
    }

    #[test]
    fn monte_carlo_counts() {
        let p7 = path(7).unwrap();
        let start = p7.parse_vertex_set("0,2,3,4,6").unwrap();
        let stats = monte_carlo(&p7, &start, &ProtocolConfig::new(1, 200, Adversary::Uniform), 50).unwrap();
        assert_eq!(stats.failures, 0);
        let empty = monte_carlo(&p7, &start, &ProtocolConfig::new(1, 200, Adversary::Uniform), 0).unwrap();
        assert_eq!((empty.trials, empty.failures, empty.mean_failure_round), (0, 0, None));

        let g = families::house9();
        let start = g.parse_vertex_set("b_1,a_3,a_4").unwrap();
        let stats = monte_carlo(&g, &start, &ProtocolConfig::new(9, 200, Adversary::Uniform), 100).unwrap();
        assert!(stats.failures > 0);
        assert!(stats.example_failure.unwrap().trajectory.failed());
        // greedy keeps attacking b_2 and b_1, each with a single forced reply
        let stats = monte_carlo(&g, &start, &ProtocolConfig::new(9, 200, Adversary::Greedy), 10).unwrap();
        assert_eq!(stats.failures, 0);
    }

    #[test]
    fn exhaustive_search() {
        let g = families::house9();
        let t = reachable_failure(&g, &g.parse_vertex_set("b_1,a_3,a_4").unwrap()).unwrap().unwrap();
        assert!(t.failed());
        let p4 = path(4).unwrap();
        assert!(reachable_failure(&p4, &p4.parse_vertex_set("1,3").unwrap()).unwrap().is_none());
    }

    #[test]
    fn reproducible() {
        let g = families::house9();
        let start = g.parse_vertex_set("a_1,b_2").unwrap();
        let cfg = ProtocolConfig::new(42, 300, Adversary::Uniform);
        assert_eq!(simulate(&g, &start, &cfg).unwrap(), simulate(&g, &start, &cfg).unwrap());
    }
}
