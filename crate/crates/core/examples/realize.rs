//! Graphs with prescribed (domination, eternal, autonomous) numbers.
//!
//! `cargo run --release --example realize -- 6`

use domlab::catalog::realize::{realize_spec, valid_triples};
use domlab::engine::Engine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_c: usize = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let engine = Engine::default();
    let mut bad = 0;
    for (a, b, c) in valid_triples(max_c) {
        let (case, spec) = realize_spec(a, b, c)?;
        let g = spec.generate()?;
        let got = (
            engine.domination_number(&g).value,
            engine.eternal_domination_number(&g)?.value,
            engine.autonomous_number(&g)?.value,
        );
        let ok = got == (a, b, c);
        bad += usize::from(!ok);
        println!("({a},{b},{c})  {:<24} {:<48} {}", case.label, spec.to_string(), if ok { "ok" } else { "MISMATCH" });
    }
    println!("\n{bad} mismatches");
    if let Err(e) = realize_spec(1, 1, 3) {
        println!("(1,1,3): {e}");
    }
    Ok(())
}
