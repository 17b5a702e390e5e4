//! Checks the expected-value table and the realizability cases.
//!
//! `cargo run --release --example verify_catalog -- [SCOPE]`, where SCOPE is
//! e.g. `default`, `paths:8`, `families`, `realize:5`.

use domlab::catalog::{verify_catalog, Scope, Status};
use domlab::engine::Engine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scope: Scope = std::env::args().nth(1).as_deref().unwrap_or("default").parse()?;
    let report = verify_catalog(&Engine::default(), &scope)?;
    for e in &report.entries {
        let mut line = format!("{:<8} {:<16} {:<48}", e.status, e.group, e.spec);
        for c in &e.checks {
            if c.status == Status::Pass {
                line += &format!(" {}={}", c.what, c.actual);
            } else {
                line += &format!(" {}={} (want {})", c.what, c.actual, c.expected);
            }
        }
        println!("{line}  [{:.2}s]", e.elapsed_secs);
    }
    println!("\n{} passed, {} failed, {} unknown", report.passed, report.failed, report.unknown);
    Ok(())
}
