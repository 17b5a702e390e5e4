//! The guard protocol against each adversary, plus a Monte Carlo summary
//! and an exhaustive search for reachable failures.
//!
//! `cargo run --release --example simulate`

use domlab::catalog::families;
use domlab::graph::path;
use domlab::sim::{monte_carlo, reachable_failure, simulate, Adversary, ProtocolConfig};

fn main() -> domlab::Result<()> {
    let g = families::house9();
    let start = g.parse_vertex_set("b_1,a_3,a_4")?;
    for adversary in [Adversary::Uniform, Adversary::Greedy, Adversary::Oracle] {
        let cfg = ProtocolConfig::new(7, 200, adversary.clone());
        let stats = monte_carlo(&g, &start, &cfg, 500)?;
        println!(
            "house9 from {} vs {:<8} {:>3}/{} trials failed, mean failure round {:?}",
            g.format_set(&start),
            adversary.to_string(),
            stats.failures,
            stats.trials,
            stats.mean_failure_round.map(|m| (m * 10.0).round() / 10.0)
        );
    }

    let script = vec![g.resolve_vertex("b_3")?, g.resolve_vertex("b_4")?, g.resolve_vertex("b_5")?];
    let out = simulate(&g, &start, &ProtocolConfig::new(1, 10, Adversary::Scripted(script)))?;
    println!("\nscripted b_3, b_4, b_5 with seed 1:\n{}", out.trajectory.render(&g));
    print!("{}", out.trajectory.to_jsonl());

    let p7 = path(7)?;
    let safe = p7.parse_vertex_set("a_1,a_2,a_4,a_6,a_7")?;
    let stats = monte_carlo(&p7, &safe, &ProtocolConfig::new(3, 1000, Adversary::Uniform), 1000)?;
    println!("\npath:7 from {}: {} failures in {} trials", p7.format_set(&safe), stats.failures, stats.trials);
    println!("exhaustive search finds a failure: {}", reachable_failure(&p7, &safe)?.is_some());
    Ok(())
}
