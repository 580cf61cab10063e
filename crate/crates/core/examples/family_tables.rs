//! Tables for the `T(p, p+r)` families whose members admit no single
//! untwisting.
//!
//! Usage: `cargo run --release --example family_tables -- [p-plus-4|p-plus-r|bounded-r] [N_MAX]`

use torus_twist::cli::tables::{family_table, render_table, Family};
use torus_twist::obstruction::ClassifyOptions;

fn main() -> torus_twist::Result<()> {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("bounded-r").parse()?;
    let n_max = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let rows = family_table(family, 1, n_max, &ClassifyOptions::default())?;
    print!("{}", render_table(&rows));
    Ok(())
}
