//! Seifert matrix of the closed positive braid `(σ_1 ⋯ σ_{p−1})^q`.
//!
//! Usage: `cargo run --example seifert_forms -- [P Q]`

use torus_twist::seifert::{genus_from_form, seifert_matrix, torus_braid};

fn main() -> torus_twist::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (3, 4),
    };
    let braid = torus_braid(p, q)?;
    println!("braid {braid}");
    let v = seifert_matrix(&braid)?;
    println!("genus {}", genus_from_form(&v)?);
    println!("V =\n{}", v.to_grid_string());
    Ok(())
}
