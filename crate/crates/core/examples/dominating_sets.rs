//! Domination, legal guard moves and secure domination on small graphs.

use domlab::catalog::families;
use domlab::graph::path;
use domlab::kernel::{enumerate_dominating, is_dominating, is_secure_dominating, legal_moves};

fn main() -> domlab::Result<()> {
    let p4 = path(4)?;
    println!("dominating pairs of P4:");
    for s in enumerate_dominating(&p4, 2) {
        println!("  {}  secure={}", p4.format_set(&s), is_secure_dominating(&p4, &s));
    }
    let s = p4.parse_vertex_set("a_2,a_4")?;
    let moves = legal_moves(&p4, &s, 2)?;
    println!("attack a_3 on {}: {} legal move(s), {} -> {}", p4.format_set(&s), moves.len(), p4.label(moves[0].from), p4.label(moves[0].to));

    // the triangle dominates the paw with two leaves but cannot answer a leaf
    let paw = families::paw2();
    let tri = paw.parse_vertex_set("t_1,t_2,t_3")?;
    println!("\n{} dominating={} secure={}", paw.format_set(&tri), is_dominating(&paw, &tri), is_secure_dominating(&paw, &tri));
    for v in tri.complement().iter() {
        println!("  attack {}: {} legal move(s)", paw.label(v), legal_moves(&paw, &tri, v)?.len());
    }

    // any of the three guards may answer the attack at p
    let g = families::intro6();
    let s = g.parse_vertex_set("a,b,c")?;
    let p = g.resolve_vertex("p")?;
    println!("\nintro6 {}: guards able to answer p: {:?}", g.format_set(&s), legal_moves(&g, &s, p)?.iter().map(|m| g.label(m.from)).collect::<Vec<_>>());
    Ok(())
}
