//! Sequences of attacks and guard responses.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::kernel::Move;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepVerdict {
    Defended,
    Failed,
}

/// One round: the configuration before the attack, the attack, and the
/// guard move that answered it (`None` when nothing could).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub round: usize,
    pub configuration: VertexSet,
    pub attack: usize,
    #[serde(rename = "move")]
    pub mv: Option<Move>,
    pub verdict: StepVerdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub steps: Vec<Step>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn failed(&self) -> bool {
        self.steps.last().is_some_and(|s| s.verdict == StepVerdict::Failed)
    }

    pub fn attacks(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.attack).collect()
    }

    /// Configuration after the last step.
    pub fn final_configuration(&self) -> Option<VertexSet> {
        let last = self.steps.last()?;
        Some(match last.mv {
            Some(m) => last.configuration.with_move(m.from, m.to),
            None => last.configuration.clone(),
        })
    }

    /// One JSON object per step.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&serde_json::to_string(step).expect("steps serialize"));
            out.push('\n');
        }
        out
    }

    /// Human-readable listing using vertex labels.
    pub fn render(&self, g: &Graph) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let answer = match s.mv {
                Some(m) => format!("{} -> {}", g.label(m.from), g.label(m.to)),
                None => "no legal move: FAILED".to_string(),
            };
            writeln!(out, "{:>4}  {}  attack {}  {}", s.round, g.format_set(&s.configuration), g.label(s.attack), answer).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_shape() {
        let t = Trajectory {
            steps: vec![
                Step {
                    round: 1,
                    configuration: VertexSet::from_vertices(4, [1, 3]),
                    attack: 2,
                    mv: Some(Move { from: 3, to: 2 }),
                    verdict: StepVerdict::Defended,
                },
                Step {
                    round: 2,
                    configuration: VertexSet::from_vertices(4, [1, 2]),
                    attack: 0,
                    mv: None,
                    verdict: StepVerdict::Failed,
                },
            ],
        };
        let jsonl = t.to_jsonl();
        let lines: Vec<&str> = jsonl.lines().collect();
        assert_eq!(lines[0], r#"{"round":1,"configuration":[1,3],"attack":2,"move":{"from":3,"to":2},"verdict":"defended"}"#);
        assert_eq!(lines[1], r#"{"round":2,"configuration":[1,2],"attack":0,"move":null,"verdict":"failed"}"#);
        assert!(t.failed());
        assert_eq!(t.attacks(), vec![2, 0]);
    }
}
