//! Shortest legal play into an unanswerable attack.
//!
//! `cargo run --example refute -- house9 3 b1,a3,a4`

use domlab::engine::Engine;
use domlab::GraphSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (spec, k, start) = match args.as_slice() {
        [s, k, start] => (s.parse::<GraphSpec>()?, k.parse::<usize>()?, start.clone()),
        _ => (GraphSpec::House9, 3, "b_1,a_3,a_4".to_string()),
    };
    let g = spec.generate()?;
    let start = g.parse_vertex_set(&start)?;
    let engine = Engine::default();
    match engine.refute(&g, k, &start) {
        Ok(t) => {
            println!("{spec}, {k} guards from {}:", g.format_set(&start));
            print!("{}", t.render(&g));
            println!("\nas JSON lines:\n{}", t.to_jsonl());
        }
        Err(e) => println!("{e}"),
    }

    // every start in an all-secure component is safe
    let p7: GraphSpec = "path:7".parse()?;
    let g = p7.generate()?;
    let t = engine.refute(&g, 4, &g.parse_vertex_set("a_2,a_4,a_6,a_7")?)?;
    println!("path:7 with 4 guards fails after {} move(s)", t.len() - 1);
    println!("path:7 with 5 guards: {}", engine.refute(&g, 5, &g.parse_vertex_set("a_1,a_2,a_3,a_4,a_6")?).unwrap_err());
    Ok(())
}
