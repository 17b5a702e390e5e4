//! Build move graphs, list their components and check a family certificate
//! from first principles.
//!
//! `cargo run --example move_graph -- house9 3`

use domlab::kernel::{is_autonomous_family, verify_family, Limits, MoveGraph};
use domlab::GraphSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec: GraphSpec = args.first().map_or("house9", String::as_str).parse()?;
    let g = spec.generate()?;
    let ks: Vec<usize> = match args.get(1) {
        Some(k) => vec![k.parse()?],
        None => (1..=g.order()).collect(),
    };
    for k in ks {
        let mg = MoveGraph::build(&g, k, &Limits::default())?;
        if mg.is_empty() {
            println!("k={k}: no dominating sets");
            continue;
        }
        let insecure = (0..mg.len()).filter(|&i| !mg.is_secure(i)).count();
        println!("k={k}: {} sets, {} moves, {} insecure, {} component(s)", mg.len(), mg.edge_count(), insecure, mg.components().len());
        for c in mg.components() {
            println!("    component {} size {} all secure {} from {}", c.id, c.size, c.all_secure, g.format_set(&c.representative));
        }
        if let Some(c) = mg.smallest_secure_component() {
            let cert = mg.certificate(c.id);
            println!("    certificate verifies: {}", verify_family(&g, &mg, &cert)?);
        } else {
            let whole: Vec<_> = mg.nodes().to_vec();
            println!("    all dominating {k}-sets as a family: {}", is_autonomous_family(&g, &whole));
        }
    }
    Ok(())
}
