//! Maximal 2-cliques, the vertex set `V` they span, and a Hamiltonian cycle
//! through `V`.
//!
//!     cargo run --example cliques_and_hamiltonian -- 6

use blocktrans::graph::{build_bt_graph, build_btv_graph, expected_em_edges, hamiltonian_cycle_v};

fn main() -> blocktrans::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let g = build_bt_graph(n)?;

    println!("maximal 2-cliques (edges with no common neighbour):");
    for (u, v) in g.maximal_two_cliques() {
        println!("  {} -- {}", g.label(u), g.label(v));
    }
    println!("closed forms:");
    for e in expected_em_edges(n)? {
        println!("  e_{} = {{{}, {}}}", e.m, e.ends.0, e.ends.1);
    }

    let gv = build_btv_graph(n)?;
    println!("V: {} vertices, degrees {:?}", gv.vertex_count(), gv.degree_report());
    let cycle = hamiltonian_cycle_v(n)?;
    let line: Vec<String> = cycle.iter().map(ToString::to_string).collect();
    println!("cycle: {}", line.join(" "));
    let ix: Vec<usize> = cycle.iter().filter_map(|c| gv.index_of(c)).collect();
    println!("valid: {}", gv.is_hamiltonian_cycle(&ix));
    Ok(())
}
