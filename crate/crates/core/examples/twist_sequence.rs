//! Parses a twist-sequence file, builds the 4-manifold ledger and applies
//! the sphere test.
//!
//! Usage: `cargo run --example twist_sequence -- [FILE]`

use torus_twist::fourmanifold::{
    characteristic_check, kikuchi_eliminate, ledger_from_sequence, parse_sequence, Parity,
};

const DEFAULT: &str = "start T(5,8)
twist n=-1 w=5 -> T(5,3)
twist n=-1 w=5 -> T(5,-2)
identify T(2,-5)
twist n=2 w=2 -> T(2,-1)
end unknot
";

fn main() -> torus_twist::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => {
            std::fs::read_to_string(&path).map_err(|e| torus_twist::Error::Io(e.to_string()))?
        }
        None => DEFAULT.to_string(),
    };
    let seq = parse_sequence(&text)?;
    print!("{}", seq.serialize());
    let ledger = ledger_from_sequence(&seq, true)?;
    for s in ledger.summands() {
        println!("  {s}");
    }
    println!(
        "σ(M) = {}, b2+ = {}, b2- = {}, ξ·ξ = {}",
        ledger.sigma_m(),
        ledger.b2_plus(),
        ledger.b2_minus(),
        ledger.xi_self_intersection()
    );
    println!(
        "characteristic for odd ω: {}",
        characteristic_check(&ledger, Parity::Odd)
    );
    match kikuchi_eliminate(&ledger).admissible() {
        Some(ws) => println!("sphere test admits ω ∈ {ws:?}"),
        None => println!("sphere test inapplicable"),
    }
    Ok(())
}
