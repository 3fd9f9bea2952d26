//! Automorphisms of `Cay(Sym_n, T_n)` fixing the identity and every block
//! transposition.
//!
//!     cargo run --release --example n_trivial -- 6

use std::time::Instant;

use blocktrans::aut::check_n_trivial;

fn main() -> blocktrans::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for n in 3..=max {
        let t = Instant::now();
        let out = check_n_trivial(n, max)?;
        println!(
            "n={n}: |Aut(Cay)| = {}, |stab(iota)| = {}, |N| = {}  [{:.2?}]",
            out.full_order,
            out.identity_stabilizer_order,
            out.pointwise_order,
            t.elapsed()
        );
        print!("{}", out.report);
    }
    Ok(())
}
