//! Autonomous feasibility is not monotone in the number of guards: house9
//! works with two guards, fails with three and works again with four.
//!
//! `cargo run --example feasibility_profile -- house9`

use domlab::engine::Engine;
use domlab::GraphSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: GraphSpec = std::env::args().nth(1).as_deref().unwrap_or("house9").parse()?;
    let g = spec.generate()?;
    let engine = Engine::default();
    let profile = engine.feasibility_profile(&g, g.order())?;
    println!("{spec}");
    for r in &profile.rows {
        let bar = if r.feasible { "feasible" } else { "--" };
        println!("  k={:<2} {:<9} {:>6} sets in {:>3} component(s), {} all-secure", r.k, bar, r.nodes, r.components, r.secure_components);
    }
    let secure_everywhere: Vec<usize> =
        profile.rows.iter().map(|r| r.k).filter(|&k| engine.secdom_sufficiency(&g, k).unwrap_or(false)).collect();
    println!("  every dominating k-set secure for k in {secure_everywhere:?}");
    Ok(())
}
