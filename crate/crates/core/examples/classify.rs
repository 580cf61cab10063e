//! Obstruction certificate for a torus knot: which twists `(n, ω)` could
//! still untie it.
//!
//! Usage: `cargo run --release --example classify -- [P Q] [--json]`

use torus_twist::knot::TorusKnotParams;
use torus_twist::obstruction::classify;

fn main() -> torus_twist::Result<()> {
    let json = std::env::args().any(|a| a == "--json");
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let knots = match args[..] {
        [p, q] => vec![(p, q)],
        _ => vec![(4, 7), (5, 7), (5, 8), (9, 13)],
    };
    for (p, q) in knots {
        let cert = classify(TorusKnotParams::new(p, q)?)?;
        if json {
            println!("{}", cert.to_json());
        } else {
            println!("{}", cert.to_text());
        }
    }
    Ok(())
}
