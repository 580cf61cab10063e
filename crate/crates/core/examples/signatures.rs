//! Knot signatures of torus knots by lattice count, floor sums and the
//! closed forms for the `T(p, p+r)` families.
//!
//! Usage: `cargo run --example signatures -- [P Q]`

use torus_twist::knot::TorusKnotParams;
use torus_twist::lattice::{
    sigma_closed, sigma_oracle, sigma_p_plus_4, sigma_p_plus_r, signature_upper_bound,
};

fn main() -> torus_twist::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (5, 8),
    };
    let k = TorusKnotParams::new(p, q)?;
    println!("{k}: lattice count {}", sigma_oracle(k)?);
    println!("{k}: floor sums    {}", sigma_closed(k)?);
    println!("{k}: upper bound   {}", signature_upper_bound(k)?);

    println!("\nT(p,p+4) for odd p");
    for p in (3..=21).step_by(2) {
        println!(
            "  {:<9} {:>5}",
            format!("T({p},{})", p + 4),
            sigma_p_plus_4(p)?.value()
        );
    }
    println!("\nT(11,11+r)");
    for r in (2..11).step_by(2) {
        println!("  r={r:<2} {:>5}", sigma_p_plus_r(11, r)?.value());
    }
    Ok(())
}
