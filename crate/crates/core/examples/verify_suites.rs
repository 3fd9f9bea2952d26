//! Runs every verification suite at one degree and prints the report.
//!
//!     cargo run --release --example verify_suites -- 7

use blocktrans::verify::{run, Suite, VerifyOptions};

fn main() -> blocktrans::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let report = run(Suite::All, n, &VerifyOptions::default())?;
    print!("{report}");
    let failed = report.failures().count();
    println!("{} checks, {failed} failed", report.checks.len());
    Ok(())
}
