//! Tristram-Levine signatures `σ_d` with certified inertia, compared with
//! the lattice count.
//!
//! Usage: `cargo run --release --example tristram -- [P Q]`

use std::time::Instant;

use torus_twist::knot::TorusKnotParams;
use torus_twist::tristram::{tristram_value, RoutePolicy, TristramConfig};

fn main() -> torus_twist::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (7, 11),
    };
    let k = TorusKnotParams::new(p, q)?;
    let hermitian = TristramConfig::default();
    let lattice = TristramConfig {
        route: RoutePolicy::Lattice,
        ..TristramConfig::default()
    };
    println!("{k}, form dimension {}", (p - 1) * (q - 1));
    for d in [2, 3, 5, 7, 11, 13] {
        let start = Instant::now();
        let h = tristram_value(k, d, &hermitian)?;
        let elapsed = start.elapsed();
        let l = tristram_value(k, d, &lattice)?;
        println!(
            "  d={d:<2} σ_d={:>5} nullity={} lattice={:>5} ({elapsed:.1?})",
            h.sigma, h.nullity, l.sigma
        );
    }
    Ok(())
}
