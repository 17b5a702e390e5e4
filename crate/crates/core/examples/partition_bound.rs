//! Clique partitions that pin down the autonomous number, checked against
//! the exact engine.

use domlab::engine::{partition_bound, Engine};
use domlab::{GraphSpec, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = Engine::default();
    let cases: Vec<(GraphSpec, Vec<&str>)> = vec![
        ("cart(complete:2,complete:5)".parse()?, vec!["0,1,2,3,4", "5,6,7,8,9"]),
        (GraphSpec::House, vec!["a_1,a_2,a_3", "b_1,b_2,b_3"]),
        ("path:6".parse()?, vec!["a_1,a_2", "a_3,a_4", "a_5,a_6"]),
    ];
    for (spec, classes) in cases {
        let g = spec.generate()?;
        let parts: Vec<VertexSet> = classes.iter().map(|c| g.parse_vertex_set(c)).collect::<Result<_, _>>()?;
        let bound = partition_bound(&g, &parts)?;
        let exact = engine.autonomous_number(&g)?.value;
        println!("{spec:<30} partition bound {bound:?}, exact autonomous number {exact}");
    }
    Ok(())
}
