//! Toric classes of `Sym_n` and the toric-reverse group acting on cut points.
//!
//!     cargo run --example toric_classes -- 4

use std::collections::{BTreeMap, BTreeSet};

use blocktrans::toric::{toric_class, toric_map, reverse_map};
use blocktrans::{Convention, Cuts, Dihedral, Perm};

fn main() -> blocktrans::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);

    let mut seen = BTreeSet::new();
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for p in Perm::all(n) {
        if seen.contains(&p) {
            continue;
        }
        let class = toric_class(&p);
        *sizes.entry(class.len()).or_default() += 1;
        seen.extend(class.iter().cloned());
    }
    println!("n={n}: toric classes by size {sizes:?}");

    let p: Perm = "3 1 2".parse()?;
    println!("f_1([3 1 2]) = [{}]", toric_map(&p, 1)?);
    println!("g([3 1 2]) = [{}]", reverse_map(&p));

    let c = Cuts::new(n, 0, 1, n.min(3))?;
    println!("orbit of {c} under the right-invariant group:");
    for d in Dihedral::all(n, Convention::Right) {
        println!("  {:>6}: {}", d.short_name(), d.act_on_cuts(&c)?);
    }
    Ok(())
}
