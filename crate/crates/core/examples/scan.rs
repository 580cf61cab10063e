//! Classifies a rectangle of `(p, q)` pairs in parallel and prints CSV.
//!
//! Usage: `cargo run --release --example scan -- [P_MAX Q_MAX]`

use std::sync::atomic::AtomicBool;

use torus_twist::cli::scan::{render, run_scan, OutputFormat, ScanConfig};
use torus_twist::obstruction::Verdict;

fn main() -> torus_twist::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p_max, q_max) = match args[..] {
        [p, q] => (p, q),
        _ => (10, 15),
    };
    let cfg = ScanConfig {
        p_range: (2, p_max),
        q_range: (3, q_max),
        max_prime: None,
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        precision_cap: 1024,
    };
    let result = run_scan(&cfg, &AtomicBool::new(false), |_| Ok(()))?;
    print!("{}", render(&result, OutputFormat::Csv));
    let open = result
        .rows
        .iter()
        .filter(|r| r.verdict == Verdict::Undecided)
        .count();
    eprintln!("{} knots, {open} with surviving twists", result.rows.len());
    Ok(())
}
