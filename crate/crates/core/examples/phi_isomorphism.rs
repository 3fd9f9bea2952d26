//! Right translations and toric maps together form `Sym_{n+1}`; the extra
//! involution `ω ∘ π` sits outside it.
//!
//!     cargo run --release --example phi_isomorphism

use blocktrans::aut::{phi_check, phi_image};
use blocktrans::Perm;

fn main() -> blocktrans::Result<()> {
    let h: Perm = "2 3 1".parse()?;
    for r in 0..=3 {
        println!("Phi([{h}] f^{r}) = {}", phi_image(&h, r));
    }
    for n in 3..=5 {
        print!("{}", phi_check(n, 1000, 7)?);
    }
    Ok(())
}
