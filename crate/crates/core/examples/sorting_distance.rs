//! Sorting by block transpositions: distance table, diameter and a shortest
//! sorting sequence.
//!
//!     cargo run --release --example sorting_distance -- "4 6 1 3 5 2"

use blocktrans::sortdist::{distance, sorting_sequence, toric_reduce, DistanceTable, SortOptions};
use blocktrans::Perm;

fn main() -> blocktrans::Result<()> {
    let opts = SortOptions::default();
    for n in 2..=7 {
        let table = DistanceTable::build(n, opts)?;
        println!("n={n}: diameter {}, histogram {:?}", table.diameter(), table.histogram());
    }

    let p: Perm = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "4 6 1 3 5 2".into())
        .parse()?;
    let trace = sorting_sequence(&p, opts)?;
    println!("[{p}] needs {} moves:", trace.len());
    for line in trace.lines() {
        println!("  {line}");
    }
    let r = toric_reduce(&p);
    println!("toric-reverse representative [{r}], distance {}", distance(&r, opts)?);
    println!("reverse of degree 9: distance {}", distance(&Perm::reverse(9), opts)?);
    Ok(())
}
