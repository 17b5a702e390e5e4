//! Builds a graph with prescribed (domination, eternal, autonomous) numbers.
//!
//! The dispatch is an ordered list of cases; the first matching case wins.
//! Three cases use parameters that differ from their printed form, listed in
//! `CORRECTIONS.md`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spec::GraphSpec;

pub struct RealizabilityCase {
    pub label: &'static str,
    pub construction: &'static str,
    matches: fn(usize, usize, usize) -> bool,
    build: fn(usize, usize, usize) -> GraphSpec,
}

impl RealizabilityCase {
    pub fn matches(&self, a: usize, b: usize, c: usize) -> bool {
        (self.matches)(a, b, c)
    }

    pub fn build(&self, a: usize, b: usize, c: usize) -> GraphSpec {
        (self.build)(a, b, c)
    }
}

fn k2_copies(count: usize) -> GraphSpec {
    (1..count).fold(GraphSpec::Complete(2), |acc, _| GraphSpec::disjoint(acc, GraphSpec::Complete(2)))
}

pub const CASES: &[RealizabilityCase] = &[
    RealizabilityCase {
        label: "c = 1",
        construction: "complete:2",
        matches: |_, _, c| c == 1,
        build: |_, _, _| GraphSpec::Complete(2),
    },
    RealizabilityCase {
        label: "a = 1, b = 2, c = 2",
        construction: "path:3",
        matches: |a, b, c| a == 1 && b == 2 && c == 2,
        build: |_, _, _| GraphSpec::Path(3),
    },
    RealizabilityCase {
        label: "a = 1, b = 2, c > 2",
        construction: "A_{c-1}",
        matches: |a, b, _| a == 1 && b == 2,
        build: |_, _, c| GraphSpec::A(c - 1),
    },
    RealizabilityCase {
        label: "a = 1, b > 2",
        construction: "C_{b-1, c-b+1}",
        matches: |a, _, _| a == 1,
        build: |_, b, c| GraphSpec::C(b - 1, c - b + 1),
    },
    RealizabilityCase {
        label: "a = 2, b = 2, c = 2",
        construction: "path:4",
        matches: |a, b, c| a == 2 && b == 2 && c == 2,
        build: |_, _, _| GraphSpec::Path(4),
    },
    RealizabilityCase {
        label: "a = 2, b = 2, c > 2",
        construction: "B_{0, c-3}",
        matches: |a, b, _| a == 2 && b == 2,
        build: |_, _, c| GraphSpec::B(0, c - 3),
    },
    RealizabilityCase {
        label: "a = 2, b = 3, c = 3",
        construction: "kbip:2,3",
        matches: |a, b, c| a == 2 && b == 3 && c == 3,
        build: |_, _, _| GraphSpec::CompleteBipartite(2, 3),
    },
    RealizabilityCase {
        label: "a = 2, b = 3, c > 3",
        construction: "D_{1, c-2}",
        matches: |a, b, _| a == 2 && b == 3,
        build: |_, _, c| GraphSpec::D(1, c - 2),
    },
    RealizabilityCase {
        label: "a = 2, b > 3, c = b",
        construction: "kbip:2,b",
        matches: |a, b, c| a == 2 && b == c,
        build: |_, b, _| GraphSpec::CompleteBipartite(2, b),
    },
    RealizabilityCase {
        label: "a = 2, b > 3, c > b",
        construction: "E_{c-b, b-3}",
        matches: |a, _, _| a == 2,
        build: |_, b, c| GraphSpec::E(c - b, b - 3),
    },
    RealizabilityCase {
        label: "a >= 3, b = a, c = a",
        construction: "a disjoint copies of K2",
        matches: |a, b, c| a == b && b == c,
        build: |a, _, _| k2_copies(a),
    },
    RealizabilityCase {
        label: "a >= 3, b = a, c > a",
        construction: "B_{a-2, c-a-1}",
        matches: |a, b, _| a == b,
        build: |a, _, c| GraphSpec::B(a - 2, c - a - 1),
    },
    RealizabilityCase {
        label: "a >= 3, b = a + 1",
        construction: "D_{a-1, c-a}",
        matches: |a, b, _| b == a + 1,
        build: |a, _, c| GraphSpec::D(a - 1, c - a),
    },
    RealizabilityCase {
        label: "a >= 3, b >= a + 2",
        construction: "F_{a, b-a-1, c-b+1}",
        matches: |_, _, _| true,
        build: |a, b, c| GraphSpec::F(a, b - a - 1, c - b + 1),
    },
];

/// The case and graph spec for `(a, b, c)`.
pub fn realize_spec(a: usize, b: usize, c: usize) -> Result<(&'static RealizabilityCase, GraphSpec)> {
    let reject = |reason: &str| Err(Error::Unrealizable { a, b, c, reason: reason.to_string() });
    if a == 0 {
        return reject("the domination number is at least 1");
    }
    if !(a <= b && b <= c) {
        return reject("needs a <= b <= c");
    }
    if c > 1 && b == 1 {
        return reject("eternal number 1 forces a complete graph, whose autonomous number is 1");
    }
    let case = CASES.iter().find(|k| k.matches(a, b, c)).expect("the last case matches everything");
    Ok((case, case.build(a, b, c)))
}

pub fn realize(a: usize, b: usize, c: usize) -> Result<Graph> {
    realize_spec(a, b, c)?.1.generate()
}

/// All valid `(a, b, c)` with `c <= max_c`.
pub fn valid_triples(max_c: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for c in 1..=max_c {
        for b in 1..=c {
            for a in 1..=b {
                if c == 1 || b > 1 {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}
