//! Textual graph constructors.
//!
//! ```text
//! SPEC := path:N | cycle:N | complete:N | kbip:M,N | star:N | ladder:N
//!       | cart(SPEC,SPEC) | disjoint(SPEC,SPEC)
//!       | A:N | B:M,N | C:M,N | D:M,N | E:M,N | F:L,M,N
//!       | house | house+diag | house9 | paw2 | intro6 | c5k3 | c5k3+bridge
//!       | file:PATH
//! ```
//!
//! `ladder:N` builds the same graph as `cart(path:2,path:N)`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::catalog::families;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::io;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Ladder(usize),
    Cartesian(Box<GraphSpec>, Box<GraphSpec>),
    Disjoint(Box<GraphSpec>, Box<GraphSpec>),
    A(usize),
    B(usize, usize),
    C(usize, usize),
    D(usize, usize),
    E(usize, usize),
    F(usize, usize, usize),
    House,
    HouseDiag,
    House9,
    Paw2,
    Intro6,
    C5K3,
    C5K3Bridge,
    File(PathBuf),
}

impl GraphSpec {
    pub fn parse(input: &str) -> Result<GraphSpec> {
        let mut p = Parser { input, pos: 0, depth: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != input.len() {
            return Err(p.error("unexpected trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn cart(a: GraphSpec, b: GraphSpec) -> GraphSpec {
        GraphSpec::Cartesian(Box::new(a), Box::new(b))
    }

    pub fn disjoint(a: GraphSpec, b: GraphSpec) -> GraphSpec {
        GraphSpec::Disjoint(Box::new(a), Box::new(b))
    }

    /// Checks each constructor's parameter range.
    pub fn validate(&self) -> Result<()> {
        use GraphSpec::*;
        let bad = |family: &'static str, msg: &str| Err(Error::Parameter { family, msg: msg.to_string() });
        match *self {
            Path(n) | Complete(n) | Star(n) | Ladder(n) if n == 0 => bad("basic", "size must be at least 1"),
            Cycle(n) if n < 3 => bad("cycle", "needs N >= 3"),
            CompleteBipartite(m, n) if m == 0 || n == 0 => bad("kbip", "needs M, N >= 1"),
            A(n) if n < 2 => bad("A", "needs N >= 2"),
            C(m, n) if m < 2 || n < 1 => bad("C", "needs M >= 2 and N >= 1"),
            D(m, n) if m < 1 || n < 1 => bad("D", "needs M, N >= 1"),
            E(m, n) if m < 1 || n < 1 => bad("E", "needs M, N >= 1"),
            F(l, m, n) if l < 1 || m < 1 || n < 1 => bad("F", "needs L, M, N >= 1"),
            Cartesian(ref a, ref b) | Disjoint(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        use GraphSpec::*;
        self.validate()?;
        match self {
            Path(n) => graph::path(*n),
            Cycle(n) => graph::cycle(*n),
            Complete(n) => graph::complete(*n),
            CompleteBipartite(m, n) => graph::complete_bipartite(*m, *n),
            Star(n) => graph::star(*n),
            Ladder(n) => graph::ladder(*n),
            Cartesian(a, b) => Ok(a.generate()?.cartesian_product(&b.generate()?)),
            Disjoint(a, b) => Ok(a.generate()?.disjoint_union(&b.generate()?)),
            A(n) => families::family_a(*n),
            B(m, n) => families::family_b(*m, *n),
            C(m, n) => families::family_c(*m, *n),
            D(m, n) => families::family_d(*m, *n),
            E(m, n) => families::family_e(*m, *n),
            F(l, m, n) => families::family_f(*l, *m, *n),
            House => Ok(families::house()),
            HouseDiag => Ok(families::house_diag()),
            House9 => Ok(families::house9()),
            Paw2 => Ok(families::paw2()),
            Intro6 => Ok(families::intro6()),
            C5K3 => Ok(families::c5k3()),
            C5K3Bridge => Ok(families::c5k3_bridge()),
            File(path) => io::parse_edge_list(&std::fs::read_to_string(path)?),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphSpec> {
        GraphSpec::parse(s)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphSpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteBipartite(m, n) => write!(f, "kbip:{m},{n}"),
            Star(n) => write!(f, "star:{n}"),
            Ladder(n) => write!(f, "ladder:{n}"),
            Cartesian(a, b) => write!(f, "cart({a},{b})"),
            Disjoint(a, b) => write!(f, "disjoint({a},{b})"),
            A(n) => write!(f, "A:{n}"),
            B(m, n) => write!(f, "B:{m},{n}"),
            C(m, n) => write!(f, "C:{m},{n}"),
            D(m, n) => write!(f, "D:{m},{n}"),
            E(m, n) => write!(f, "E:{m},{n}"),
            F(l, m, n) => write!(f, "F:{l},{m},{n}"),
            House => f.write_str("house"),
            HouseDiag => f.write_str("house+diag"),
            House9 => f.write_str("house9"),
            Paw2 => f.write_str("paw2"),
            Intro6 => f.write_str("intro6"),
            C5K3 => f.write_str("c5k3"),
            C5K3Bridge => f.write_str("c5k3+bridge"),
            File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::SpecParse { input: self.input.to_string(), pos: self.pos, msg: msg.to_string() }
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let value = self.rest()[..digits].parse().map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn numbers(&mut self, count: usize) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        for _ in 1..count {
            self.expect(",")?;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn pair(&mut self) -> Result<(GraphSpec, GraphSpec)> {
        self.expect("(")?;
        self.depth += 1;
        let a = self.spec()?;
        self.expect(",")?;
        let b = self.spec()?;
        self.expect(")")?;
        self.depth -= 1;
        Ok((a, b))
    }

    fn spec(&mut self) -> Result<GraphSpec> {
        self.skip_ws();
        let word_len = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '+')
            .count();
        let word = self.rest()[..word_len].to_string();
        self.pos += word_len;
        use GraphSpec::*;
        let spec = match word.as_str() {
            "cart" => {
                let (a, b) = self.pair()?;
                GraphSpec::cart(a, b)
            }
            "disjoint" => {
                let (a, b) = self.pair()?;
                GraphSpec::disjoint(a, b)
            }
            "house" => House,
            "house+diag" => HouseDiag,
            "house9" => House9,
            "paw2" => Paw2,
            "intro6" => Intro6,
            "c5k3" => C5K3,
            "c5k3+bridge" => C5K3Bridge,
            "file" => {
                self.expect(":")?;
                let stop = if self.depth > 0 { &[',', ')'][..] } else { &[][..] };
                let len = self.rest().find(stop).unwrap_or(self.rest().len());
                let path = self.rest()[..len].trim().to_string();
                if path.is_empty() {
                    return Err(self.error("expected a file path"));
                }
                self.pos += len;
                File(PathBuf::from(path))
            }
            _ => {
                let arity = match word.as_str() {
                    "path" | "cycle" | "complete" | "star" | "ladder" | "A" => 1,
                    "kbip" | "B" | "C" | "D" | "E" => 2,
                    "F" => 3,
                    "" => return Err(self.error("expected a graph constructor")),
                    _ => {
                        self.pos -= word_len;
                        return Err(self.error(&format!("unknown constructor `{word}`")));
                    }
                };
                self.expect(":")?;
                let p = self.numbers(arity)?;
                match word.as_str() {
                    "path" => Path(p[0]),
                    "cycle" => Cycle(p[0]),
                    "complete" => Complete(p[0]),
                    "star" => Star(p[0]),
                    "ladder" => Ladder(p[0]),
                    "A" => A(p[0]),
                    "kbip" => CompleteBipartite(p[0], p[1]),
                    "B" => B(p[0], p[1]),
                    "C" => C(p[0], p[1]),
                    "D" => D(p[0], p[1]),
                    "E" => E(p[0], p[1]),
                    _ => F(p[0], p[1], p[2]),
                }
            }
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_displays() {
        for text in [
            "path:4",
            "kbip:2,3",
            "cart(path:2,path:5)",
            "disjoint(cycle:5,complete:3)",
            "cart(kbip:2,3,disjoint(A:2,house9))",
            "F:4,3,3",
            "c5k3+bridge",
            "house+diag",
        ] {
            let spec = GraphSpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!(GraphSpec::parse(" cart( path:2 , path:3 ) ").unwrap().to_string(), "cart(path:2,path:3)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(GraphSpec::parse("A:1"), Err(Error::Parameter { family: "A", .. })));
        assert!(matches!(GraphSpec::parse("C:1,3"), Err(Error::Parameter { .. })));
        assert!(matches!(GraphSpec::parse("cycle:2"), Err(Error::Parameter { .. })));
        assert!(matches!(GraphSpec::parse("path:0"), Err(Error::Parameter { .. })));
        assert!(matches!(GraphSpec::parse("disjoint(path:0,path:2)"), Err(Error::Parameter { .. })));
        for bad in ["", "foo:3", "path:", "kbip:2", "cart(path:2)", "path:3 extra", "file:"] {
            assert!(GraphSpec::parse(bad).is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn file_inside_combinator() {
        let spec = GraphSpec::parse("disjoint(file:/tmp/x.txt,path:2)").unwrap();
        assert_eq!(spec, GraphSpec::disjoint(GraphSpec::File("/tmp/x.txt".into()), GraphSpec::Path(2)));
    }

    #[test]
    fn ladder_is_product_of_paths() {
        let a = GraphSpec::parse("ladder:4").unwrap().generate().unwrap();
        let b = GraphSpec::parse("cart(path:2,path:4)").unwrap().generate().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generate_is_deterministic() {
        let a = GraphSpec::parse("B:2,1").unwrap().generate().unwrap();
        let b = GraphSpec::parse("B:2,1").unwrap().generate().unwrap();
        assert_eq!(crate::io::write_edge_list(&a), crate::io::write_edge_list(&b));
        assert_eq!(a.labels(), b.labels());
    }
}
