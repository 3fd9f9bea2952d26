//! Automorphism groups of the block transposition graph and of the graph on
//! `V`, and the identification with the toric-reverse group.
//!
//!     cargo run --example automorphisms

use blocktrans::aut::{automorphism_group, check_theorem_aut_bt, stabilizer_fixing, AutOptions};
use blocktrans::graph::{build_bt_graph, build_btv_graph};
use blocktrans::Cuts;

fn main() -> blocktrans::Result<()> {
    let opts = AutOptions::default();
    for n in 4..=8 {
        let g = build_bt_graph(n)?;
        let grp = automorphism_group(&g, opts)?;
        println!("n={n}: |Aut| = {} ({}), {} generators", grp.order, grp.notes, grp.generators.len());
    }

    print!("{}", check_theorem_aut_bt(6, opts)?);

    let g = build_bt_graph(6)?;
    let v = g.index_of(&Cuts::new(6, 0, 2, 6)?).expect("vertex");
    let stab = stabilizer_fixing(&g, &[v], opts)?;
    println!("stabiliser of σ(0,2,6): order {}", stab.order);

    // V on its own has more symmetry than the whole graph allows
    let gv = build_btv_graph(6)?;
    println!("|Aut(graph on V)| at n=6: {}", automorphism_group(&gv, opts)?.order);
    Ok(())
}
