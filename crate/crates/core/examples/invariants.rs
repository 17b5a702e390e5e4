//! The four invariants, with certificates, and the bound chain
//! gamma <= eternal <= autonomous <= n - min degree.
//!
//! `cargo run --release --example invariants -- cycle:9 intro6`

use domlab::engine::{Engine, Invariant};
use domlab::record::describe_certificate;
use domlab::GraphSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        ["path:7", "cycle:9", "ladder:4", "cart(complete:3,complete:3)", "intro6", "D:2,3"].map(String::from).to_vec()
    } else {
        inputs
    };
    let engine = Engine::default();
    for text in &inputs {
        let spec: GraphSpec = text.parse()?;
        let g = spec.generate()?;
        println!("{spec}");
        for inv in Invariant::ALL {
            let r = engine.compute(&g, inv)?;
            let rejected = if r.rejected.is_empty() { String::new() } else { format!("  (ruled out {:?})", r.rejected) };
            println!("  {:<10} {:>3}  {}{}", inv, r.value, describe_certificate(&g, &r.certificate), rejected);
            assert!(engine.reverify(&g, &r)?);
        }
        let b = engine.check_bounds(&g)?;
        println!("  chain {} <= {} <= {} <= {}, independence {}", b.gamma, b.eternal, b.autonomous, b.foolproof, b.independence);
        let fool = (1..=g.order()).find(|&k| engine.verify_foolproof(&g, k).unwrap_or(false));
        println!("  foolproof by fixed point: {fool:?}\n");
    }
    Ok(())
}
