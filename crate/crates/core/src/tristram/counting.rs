//! Lattice-count evaluation of `σ_d` for torus knots.
//!
//! With `x = ⌊d/2⌋/d` and `s(i,j) = i/p + j/q`, the count
//! `#{s ∈ (0,x) ∪ (1+x,2)} − #{s ∈ (x,1+x)}` generalizes the half-turn count
//! used for the ordinary signature. Points landing exactly on `x` or `1+x`
//! contribute to the nullity. This route is only used after it has been
//! checked against the Hermitian forms on the tested range.

use crate::error::Result;
use crate::knot::TorusKnotParams;

/// `(signature, nullity)` of `T(p,q)` at angle `⌊d/2⌋/d`; `T(p,q)` normalized.
pub fn counting_sigma(k: TorusKnotParams, d: u32) -> Result<(i64, usize)> {
    let k = k.require_normalized()?;
    let (p, q) = (k.p() as i128, k.q() as i128);
    let (a, d) = ((d / 2) as i128, d as i128);
    let pq = p * q;
    let (low, high) = (a * pq, (a + d) * pq);
    let mut sigma = 0i64;
    let mut nullity = 0usize;
    for i in 1..p {
        for j in 1..q {
            // d·pq·s compared with a·pq and (a+d)·pq
            let v = (i * q + j * p) * d;
            if v == low || v == high {
                nullity += 1;
            } else if v > low && v < high {
                sigma -= 1;
            } else {
                sigma += 1;
            }
        }
    }
    Ok((sigma, nullity))
}
