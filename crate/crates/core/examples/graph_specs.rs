//! Parse graph specs, inspect the result, round-trip through an edge list
//! and render DOT.
//!
//! `cargo run --example graph_specs -- 'cart(complete:3,path:2)'`

use domlab::io::{canonical_hash, parse_edge_list, to_dot, write_edge_list};
use domlab::GraphSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        ["path:4", "cycle:6", "ladder:3", "disjoint(path:3,path:4)", "house9", "F:2,1,1"].map(String::from).to_vec()
    } else {
        inputs
    };
    for text in &inputs {
        let spec: GraphSpec = text.parse()?;
        let g = spec.generate()?;
        println!(
            "{spec:<28} n={:<3} m={:<3} min deg={} max deg={} connected={} hash={}",
            g.order(),
            g.edge_count(),
            g.min_degree(),
            g.max_degree(),
            g.is_connected(),
            &canonical_hash(&g)[..12]
        );
    }

    // edge lists keep the adjacency but drop labels
    let g = GraphSpec::House9.generate()?;
    let text = write_edge_list(&g);
    let back = parse_edge_list(&text)?;
    assert_eq!(canonical_hash(&g), canonical_hash(&back));
    println!("\nhouse9 as an edge list:\n{text}");
    println!("{}", to_dot(&g, &g.parse_vertex_set("b_1,b_3,b_4")?));

    for bad in ["cycle:2", "A:1", "path:", "cart(path:2)"] {
        println!("{bad:<14} -> {}", GraphSpec::parse(bad).unwrap_err());
    }
    Ok(())
}
