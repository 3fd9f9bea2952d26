//! Writes graphs as edge lists, Graphviz dot and JSON.
//!
//!     cargo run --example export_graph -- /tmp/bt5.dot

use std::fs::File;
use std::io::BufWriter;

use blocktrans::export::{export, export_to_string, Format};
use blocktrans::graph::{build_bt_graph, build_btv_graph, build_cayley};
use blocktrans::Convention;

fn main() -> blocktrans::Result<()> {
    print!("{}", export_to_string(&build_btv_graph(5)?, Format::Edges)?);

    let cay = build_cayley(3, Convention::Left, 7)?;
    print!("{}", export_to_string(&cay, Format::Json)?);

    if let Some(path) = std::env::args().nth(1) {
        let g = build_bt_graph(5)?;
        export(&g, Format::Dot, BufWriter::new(File::create(&path)?))?;
        eprintln!("wrote {path}");
    }
    Ok(())
}
