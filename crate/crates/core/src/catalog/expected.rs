//! Expected invariant values for the named graphs and families.

use serde::Serialize;

use crate::spec::GraphSpec;

/// Known values for one graph. `None` means the value is not asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedTriple {
    pub spec: GraphSpec,
    pub group: &'static str,
    pub gamma: Option<usize>,
    pub eternal: Option<usize>,
    pub autonomous: Option<usize>,
    pub foolproof: Option<usize>,
    /// `(k, feasible)` pairs for autonomous feasibility at exactly `k` guards.
    pub feasibility: Vec<(usize, bool)>,
    /// `(k, holds)` pairs for "every dominating k-set is secure".
    pub secure_sufficient: Vec<(usize, bool)>,
    pub source: String,
}

impl ExpectedTriple {
    fn new(spec: GraphSpec, group: &'static str, source: impl Into<String>) -> Self {
        ExpectedTriple {
            spec,
            group,
            gamma: None,
            eternal: None,
            autonomous: None,
            foolproof: None,
            feasibility: Vec::new(),
            secure_sufficient: Vec::new(),
            source: source.into(),
        }
    }

    fn triple(mut self, gamma: usize, eternal: usize, autonomous: usize) -> Self {
        self.gamma = Some(gamma);
        self.eternal = Some(eternal);
        self.autonomous = Some(autonomous);
        self
    }

    fn gamma(mut self, v: usize) -> Self {
        self.gamma = Some(v);
        self
    }

    fn eternal(mut self, v: usize) -> Self {
        self.eternal = Some(v);
        self
    }

    fn autonomous(mut self, v: usize) -> Self {
        self.autonomous = Some(v);
        self
    }

    fn foolproof(mut self, v: usize) -> Self {
        self.foolproof = Some(v);
        self
    }

    fn feasible(mut self, k: usize, yes: bool) -> Self {
        self.feasibility.push((k, yes));
        self
    }

    fn secure_sufficient(mut self, k: usize, yes: bool) -> Self {
        self.secure_sufficient.push((k, yes));
        self
    }
}

/// Serializable view with the spec rendered as text.
#[derive(Serialize)]
pub struct ExpectedRow<'a> {
    pub spec: String,
    pub group: &'a str,
    pub gamma: Option<usize>,
    pub eternal: Option<usize>,
    pub autonomous: Option<usize>,
    pub foolproof: Option<usize>,
    pub feasibility: &'a [(usize, bool)],
    pub secure_sufficient: &'a [(usize, bool)],
    pub source: &'a str,
}

impl<'a> From<&'a ExpectedTriple> for ExpectedRow<'a> {
    fn from(e: &'a ExpectedTriple) -> Self {
        ExpectedRow {
            spec: e.spec.to_string(),
            group: e.group,
            gamma: e.gamma,
            eternal: e.eternal,
            autonomous: e.autonomous,
            foolproof: e.foolproof,
            feasibility: &e.feasibility,
            secure_sufficient: &e.secure_sufficient,
            source: &e.source,
        }
    }
}

pub const GROUPS: [&str; 11] = ["paths", "cycles", "cliques", "ladders", "counterexamples", "A", "B", "C", "D", "E", "F"];

/// The full table of expected values.
pub fn catalog_expected() -> Vec<ExpectedTriple> {
    use GraphSpec as S;
    let mut out = Vec::new();

    for n in 2..=12usize {
        let autonomous = match n {
            2 => 1,
            3 => 2,
            _ => n - 2,
        };
        out.push(
            ExpectedTriple::new(S::Path(n), "paths", "paths: n-2 autonomous guards for n >= 4, n-1 foolproof")
                .gamma(n.div_ceil(3))
                .eternal(n.div_ceil(2))
                .autonomous(autonomous)
                .foolproof(n - 1),
        );
    }

    for n in 3..=12usize {
        let autonomous = match n {
            3 => 1,
            4 => 2,
            5 => 3,
            _ => n - 3,
        };
        out.push(
            ExpectedTriple::new(S::Cycle(n), "cycles", "cycles: n-3 autonomous guards for n >= 6, n-2 foolproof")
                .gamma(n.div_ceil(3))
                .eternal(n.div_ceil(2))
                .autonomous(autonomous)
                .foolproof(n - 2),
        );
    }

    for p in 2..=4usize {
        for q in p..=4usize {
            out.push(
                ExpectedTriple::new(S::cart(S::Complete(p), S::Complete(q)), "cliques", "clique products: p guards, pq-(p+q)+2 foolproof")
                    .triple(p, p, p)
                    .foolproof(p * q + 2 - p - q),
            );
        }
    }

    for n in 2..=7usize {
        out.push(
            ExpectedTriple::new(S::Ladder(n), "ladders", "ladders: n eternal, 2n-3 autonomous, 2n-2 foolproof")
                .eternal(n)
                .autonomous(2 * n - 3)
                .foolproof(2 * n - 2),
        );
    }

    let cx = "counterexamples";
    out.push(ExpectedTriple::new(S::House, cx, "two triangles joined by a perfect matching").autonomous(2));
    out.push(ExpectedTriple::new(S::HouseDiag, cx, "one diagonal added to the house").autonomous(3));
    out.push(ExpectedTriple::new(S::C5K3, cx, "disjoint union of C5 and K3").autonomous(5));
    out.push(ExpectedTriple::new(S::C5K3Bridge, cx, "C5 and K3 joined by one edge").autonomous(6));
    out.push(
        ExpectedTriple::new(S::Paw2, cx, "triangle with two pendant leaves; secure domination is not necessary")
            .triple(1, 3, 3)
            .feasible(3, true)
            .secure_sufficient(3, false),
    );
    out.push(
        ExpectedTriple::new(S::House9, cx, "two guards suffice but three do not")
            .triple(2, 2, 2)
            .feasible(2, true)
            .feasible(3, false),
    );
    out.push(ExpectedTriple::new(S::Intro6, cx, "complement is 3-colorable but 4 guards are needed").autonomous(4));
    out.push(ExpectedTriple::new(S::disjoint(S::Path(3), S::Path(4)), cx, "disjoint union adds: 2 + 2").autonomous(4));

    for n in 2..=3 {
        out.push(ExpectedTriple::new(S::A(n), "A", "A_n: (1, 2, n+1)").triple(1, 2, n + 1));
    }
    for m in 0..=2 {
        for n in 0..=2 {
            out.push(ExpectedTriple::new(S::B(m, n), "B", "B_{m,n}: (m+2, m+2, m+n+3)").triple(m + 2, m + 2, m + n + 3));
        }
    }
    for m in 2..=4 {
        for n in 1..=3 {
            out.push(ExpectedTriple::new(S::C(m, n), "C", "C_{m,n}: (1, m+1, m+n)").triple(1, m + 1, m + n));
        }
    }
    for m in 1..=3 {
        for n in 1..=3 {
            out.push(ExpectedTriple::new(S::D(m, n), "D", "D_{m,n}: (m+1, m+2, m+n+1)").triple(m + 1, m + 2, m + n + 1));
        }
    }
    for m in 1..=3 {
        for n in 1..=3 {
            out.push(ExpectedTriple::new(S::E(m, n), "E", "E_{m,n}: (2, n+3, m+n+3)").triple(2, n + 3, m + n + 3));
        }
    }
    for l in 1..=3 {
        for m in 1..=2 {
            for n in 1..=2 {
                out.push(
                    ExpectedTriple::new(S::F(l, m, n), "F", "F_{l,m,n}: (l, l+m+1, l+m+n)").triple(l, l + m + 1, l + m + n),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        let all = catalog_expected();
        let count = |g: &str| all.iter().filter(|e| e.group == g).count();
        assert_eq!(count("paths"), 11);
        assert_eq!(count("cycles"), 10);
        assert_eq!(count("cliques"), 6);
        assert_eq!(count("ladders"), 6);
        assert_eq!(count("B"), 9);
        assert_eq!(count("F"), 12);
        assert!(all.iter().all(|e| GROUPS.contains(&e.group)));
        assert!(all.iter().all(|e| e.spec.generate().is_ok()));
        let c33 = all.iter().find(|e| e.spec == GraphSpec::C(3, 3)).unwrap();
        assert_eq!((c33.gamma, c33.eternal, c33.autonomous), (Some(1), Some(4), Some(6)));
    }
}
