//! Runs the engine over the expected-value table and the realizability
//! cases and reports each entry.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::expected::{catalog_expected, ExpectedTriple, GROUPS};
use super::realize::{realize_spec, valid_triples};
use crate::engine::{Engine, InvariantReport};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which entries to run: a list of groups, each with an optional bound on
/// graph order (or on `c` for the `realize` group).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    pub groups: Vec<(String, Option<usize>)>,
}

pub const REALIZE_DEFAULT_MAX: usize = 6;

impl Scope {
    pub fn default_scope() -> Scope {
        let mut groups: Vec<(String, Option<usize>)> = GROUPS.iter().map(|g| (g.to_string(), None)).collect();
        groups.push(("realize".into(), None));
        Scope { groups }
    }

    fn bound(&self, group: &str) -> Option<Option<usize>> {
        self.groups.iter().find(|(g, _)| g == group).map(|(_, b)| *b)
    }

    pub fn includes(&self, group: &str) -> bool {
        self.bound(group).is_some()
    }
}

impl FromStr for Scope {
    type Err = Error;

    /// Comma-separated tokens: `default`, `families` (A through F),
    /// `realize`, or a group name, each optionally suffixed `:N`.
    fn from_str(s: &str) -> Result<Scope> {
        let mut groups = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (name, bound) = match token.split_once(':') {
                Some((name, n)) => {
                    let n = n.parse().map_err(|_| Error::Parameter { family: "scope", msg: format!("bad bound in `{token}`") })?;
                    (name, Some(n))
                }
                None => (token, None),
            };
            match name {
                "default" | "all" => groups.extend(Scope::default_scope().groups),
                "families" => groups.extend(["A", "B", "C", "D", "E", "F"].iter().map(|g| (g.to_string(), bound))),
                "realize" => groups.push((name.to_string(), bound)),
                g if GROUPS.contains(&g) => groups.push((g.to_string(), bound)),
                _ => return Err(Error::Parameter { family: "scope", msg: format!("unknown group `{name}`") }),
            }
        }
        if groups.is_empty() {
            return Err(Error::Parameter { family: "scope", msg: "empty scope".into() });
        }
        Ok(Scope { groups })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A computation hit the node cap.
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryOutcome {
    pub spec: String,
    pub group: String,
    pub source: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub elapsed_secs: f64,
}

impl EntryOutcome {
    pub fn check(&self, what: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.what == what)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<EntryOutcome>,
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
}

impl VerifyReport {
    fn from_entries(entries: Vec<EntryOutcome>) -> VerifyReport {
        let count = |s| entries.iter().filter(|e| e.status == s).count();
        VerifyReport { passed: count(Status::Pass), failed: count(Status::Fail), unknown: count(Status::Unknown), entries }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.unknown == 0
    }
}

/// Catalog entries and realizability triples selected by `scope`, as
/// expected-value rows. Realizability rows carry group `realize`.
pub fn scoped_entries(scope: &Scope) -> Result<Vec<ExpectedTriple>> {
    let mut out = Vec::new();
    for e in catalog_expected() {
        if let Some(bound) = scope.bound(e.group) {
            if bound.is_none_or(|max| e.spec.generate().is_ok_and(|g| g.order() <= max)) {
                out.push(e);
            }
        }
    }
    if let Some(bound) = scope.bound("realize") {
        for (a, b, c) in valid_triples(bound.unwrap_or(REALIZE_DEFAULT_MAX)) {
            let (case, spec) = realize_spec(a, b, c)?;
            out.push(ExpectedTriple {
                spec,
                group: "realize",
                gamma: Some(a),
                eternal: Some(b),
                autonomous: Some(c),
                foolproof: None,
                feasibility: Vec::new(),
                secure_sufficient: Vec::new(),
                source: format!("({a},{b},{c}) via case {}: {}", case.label, case.construction),
            });
        }
    }
    Ok(out)
}

pub fn verify_catalog(engine: &Engine, scope: &Scope) -> Result<VerifyReport> {
    Ok(verify_entries(engine, &scoped_entries(scope)?))
}

/// Evaluates entries concurrently; the report keeps input order.
pub fn verify_entries(engine: &Engine, entries: &[ExpectedTriple]) -> VerifyReport {
    VerifyReport::from_entries(entries.par_iter().map(|e| verify_entry(engine, e)).collect())
}

fn outcome_of(err: &Error) -> Status {
    if matches!(err, Error::CapExceeded { .. }) {
        Status::Unknown
    } else {
        Status::Fail
    }
}

pub fn verify_entry(engine: &Engine, e: &ExpectedTriple) -> EntryOutcome {
    let clock = Instant::now();
    let mut checks = Vec::new();
    match e.spec.generate() {
        Ok(g) => run_checks(engine, &g, e, &mut checks),
        Err(err) => checks.push(Check { what: "generate".into(), expected: "graph".into(), actual: err.to_string(), status: Status::Fail }),
    }
    let status = if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if checks.iter().any(|c| c.status == Status::Unknown) {
        Status::Unknown
    } else {
        Status::Pass
    };
    EntryOutcome {
        spec: e.spec.to_string(),
        group: e.group.to_string(),
        source: e.source.clone(),
        status,
        checks,
        elapsed_secs: clock.elapsed().as_secs_f64(),
    }
}

fn run_checks(engine: &Engine, g: &Graph, e: &ExpectedTriple, checks: &mut Vec<Check>) {
    let mut value_check = |what: &str, expected: Option<usize>, compute: &dyn Fn() -> Result<InvariantReport>| {
        let Some(expected) = expected else { return };
        let (actual, status) = match compute().and_then(|r| Ok((engine.reverify(g, &r)?, r))) {
            Ok((true, r)) => (r.value.to_string(), if r.value == expected { Status::Pass } else { Status::Fail }),
            Ok((false, r)) => (format!("{} (certificate rejected)", r.value), Status::Fail),
            Err(err) => (err.to_string(), outcome_of(&err)),
        };
        checks.push(Check { what: what.into(), expected: expected.to_string(), actual, status });
    };
    value_check("gamma", e.gamma, &|| Ok(engine.domination_number(g)));
    value_check("eternal", e.eternal, &|| engine.eternal_domination_number(g));
    value_check("autonomous", e.autonomous, &|| engine.autonomous_number(g));
    value_check("foolproof", e.foolproof, &|| Ok(engine.foolproof_number(g)));

    let mut bool_check = |what: String, expected: bool, got: Result<bool>| {
        let (actual, status) = match got {
            Ok(v) => (v.to_string(), if v == expected { Status::Pass } else { Status::Fail }),
            Err(err) => (err.to_string(), outcome_of(&err)),
        };
        checks.push(Check { what, expected: expected.to_string(), actual, status });
    };
    for &(k, expected) in &e.feasibility {
        bool_check(format!("feasible@{k}"), expected, engine.autonomous_feasible(g, k).map(|r| r.0));
    }
    for &(k, expected) in &e.secure_sufficient {
        bool_check(format!("all-secure@{k}"), expected, engine.secdom_sufficiency(g, k));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::GraphSpec;

    #[test]
    fn scope_parsing() {
        let s: Scope = "paths:6".parse().unwrap();
        assert_eq!(s.groups, vec![("paths".to_string(), Some(6))]);
        let d: Scope = "default".parse().unwrap();
        assert!(d.includes("realize") && d.includes("F"));
        assert!("families".parse::<Scope>().unwrap().includes("C"));
        assert!("nonsense".parse::<Scope>().is_err());
        assert!("".parse::<Scope>().is_err());
        assert!("paths:x".parse::<Scope>().is_err());
    }

    #[test]
    fn small_paths_pass() {
        let report = verify_catalog(&Engine::default(), &"paths:6".parse().unwrap()).unwrap();
        assert_eq!(report.entries.len(), 5);
        assert!(report.all_passed());
    }

    #[test]
    fn corrupted_value_fails_once() {
        let mut entries = scoped_entries(&"paths:6".parse().unwrap()).unwrap();
        entries[2].autonomous = Some(99);
        let report = verify_entries(&Engine::default(), &entries);
        assert_eq!(report.failed, 1);
        assert_eq!(report.entries[2].status, Status::Fail);
        assert_eq!(report.entries[2].check("autonomous").unwrap().actual, "2");
    }

    #[test]
    fn cap_gives_unknown() {
        let e = catalog_expected().into_iter().find(|e| e.spec == GraphSpec::Cycle(12)).unwrap();
        let out = verify_entry(&Engine::with_cap(10), &e);
        assert_eq!(out.status, Status::Unknown);
    }
}
