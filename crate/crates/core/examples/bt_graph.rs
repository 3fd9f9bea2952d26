//! Degree audit and class-to-class degrees of the block transposition graph.
//!
//!     cargo run --example bt_graph

use blocktrans::graph::{build_bt_graph, class_vertices};
use blocktrans::PartitionClass;

fn main() -> blocktrans::Result<()> {
    for n in 4..=8 {
        let g = build_bt_graph(n)?;
        println!(
            "n={n}: {} vertices, {} edges, degrees {:?}, connected {}",
            g.vertex_count(),
            g.edge_count(),
            g.degree_report(),
            g.is_connected()
        );
    }

    let n = 6;
    let g = build_bt_graph(n)?;
    let [b, l, f, s] = PartitionClass::ALL.map(|c| class_vertices(&g, c));
    let lf: Vec<usize> = l.iter().chain(&f).copied().collect();
    let d = g.bipartite_degrees(&lf, &b)?;
    println!("n={n}: B vertices see {:?} vertices of L u F", b.iter().map(|v| d[v]).collect::<Vec<_>>());
    let d = g.bipartite_degrees(&b, &s)?;
    println!("n={n}: B-S edges: {}", d.values().sum::<usize>() / 2);
    println!("n={n}: B is a clique: {}", g.is_clique(&b));
    Ok(())
}
