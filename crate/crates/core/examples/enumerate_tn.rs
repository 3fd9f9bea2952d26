//! Lists the block transpositions of degree `n` with their partition class.
//!
//!     cargo run --example enumerate_tn -- 5

use std::collections::BTreeMap;

use blocktrans::{enumerate_tn, tn_size, Cuts, PartitionClass};

fn main() -> blocktrans::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let all = enumerate_tn(n)?;
    let mut by_class: BTreeMap<PartitionClass, Vec<Cuts>> = BTreeMap::new();
    for c in &all {
        by_class.entry(c.class()).or_default().push(*c);
    }
    for (class, members) in &by_class {
        println!("{class} ({} members, formula {})", members.len(), class.expected_size(n));
        for c in members {
            println!("  {c}  {}   inverse {}", c.to_perm(), c.inverse());
        }
    }
    println!("|T_{n}| = {} (formula {})", all.len(), tn_size(n));

    // σ(0,1,k)^e = σ(0,e,k)
    let k = n.min(4);
    for e in 1..k {
        println!("σ(0,1,{k})^{e} = {}", Cuts::power(n, 0, k, e)?);
    }
    Ok(())
}
