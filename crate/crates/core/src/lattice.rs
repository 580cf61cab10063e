//! Signatures of torus knots from lattice-point counts.
//!
//! With `s(i,j) = i/p + j/q` over `0 < i < p`, `0 < j < q`, the signature of
//! `T(p,q)` is the number of points with `s` in `(0,1/2) ∪ (3/2,2)` minus the
//! number with `s` in `(1/2,3/2)`. [`sigma_oracle`] enumerates those points
//! directly; the remaining functions are floor-sum closed forms that must
//! agree with it.
//!
//! All comparisons are done on integers by cross-multiplication.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::TorusKnotParams;

/// A knot signature. Always even for torus knots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignatureValue(i64);

impl SignatureValue {
    pub fn new(value: i64) -> Result<Self> {
        if value % 2 != 0 {
            return Err(Error::Consistency(format!(
                "signature {value} is odd for a knot"
            )));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Display for SignatureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn positive_pair(k: TorusKnotParams) -> Result<(i64, i64)> {
    let k = k.require_normalized()?;
    Ok((k.p(), k.q()))
}

/// Brute-force `σ⁺ − σ⁻` over all `(p-1)(q-1)` lattice points.
///
/// The boundary values `s ∈ {1/2, 3/2}` are never attained for coprime
/// `p, q`; hitting one is reported as a consistency failure.
pub fn sigma_oracle(k: TorusKnotParams) -> Result<SignatureValue> {
    let (p, q) = positive_pair(k)?;
    let pq = p * q;
    let mut plus = 0i64;
    let mut minus = 0i64;
    for i in 1..p {
        for j in 1..q {
            // 2·pq·s compared against pq (s = 1/2) and 3pq (s = 3/2)
            let twice = 2 * (i * q + j * p);
            if twice == pq || twice == 3 * pq {
                return Err(Error::Consistency(format!(
                    "lattice point ({i},{j}) of T({p},{q}) lies on a boundary line"
                )));
            }
            if twice < pq || twice > 3 * pq {
                plus += 1;
            } else {
                minus += 1;
            }
        }
    }
    SignatureValue::new(plus - minus)
}

/// Two-term floor-sum formula:
/// `2 Σ_{i=1}^{⌊(p-1)/2⌋} (⌊(p-2i)q/2p⌋ − ⌊(3p-2⌊p/2⌋-2i)q/2p⌋) + (p-1-2⌊p/2⌋)(q-1)`.
pub fn sigma_closed(k: TorusKnotParams) -> Result<SignatureValue> {
    let (p, q) = positive_pair(k)?;
    let half = p / 2;
    let sum: i64 = (1..=(p - 1) / 2)
        .map(|i| {
            let a = Integer::div_floor(&((p - 2 * i) * q), &(2 * p));
            let b = Integer::div_floor(&((3 * p - 2 * half - 2 * i) * q), &(2 * p));
            a - b
        })
        .sum();
    SignatureValue::new(2 * sum + (p - 1 - 2 * half) * (q - 1))
}

/// `σ(T(p,p+r))` for odd `p` and even `2 <= r < p`:
/// `−(p−1)(p+r+1)/2 + 2 Σ_{i=1}^{r/2} (⌊(2i−1)p/2r⌋ − ⌊((2i−1)p+r)/2r⌋)`.
pub fn sigma_p_plus_r(p: i64, r: i64) -> Result<SignatureValue> {
    if p <= 0 || p % 2 == 0 {
        return Err(Error::Domain(format!(
            "p = {p} must be a positive odd integer"
        )));
    }
    if r % 2 != 0 || r < 2 || r >= p {
        return Err(Error::Domain(format!(
            "r = {r} must be even with 2 <= r < p = {p}"
        )));
    }
    if p.gcd(&r) != 1 {
        return Err(Error::Domain(format!(
            "p = {p} and r = {r} are not coprime"
        )));
    }
    let correction: i64 = (1..=r / 2)
        .map(|i| {
            let m = (2 * i - 1) * p;
            Integer::div_floor(&m, &(2 * r)) - Integer::div_floor(&(m + r), &(2 * r))
        })
        .sum();
    SignatureValue::new(-(p - 1) * (p + r + 1) / 2 + 2 * correction)
}

/// Closed form for `p = 2nr ± 1`: `−(p−1)(p+r+1)/2`, minus a further `r`
/// when `p = 2nr − 1`.
pub fn sigma_2nr_closed(n: i64, r: i64, sign: i8) -> Result<SignatureValue> {
    if n < 1 {
        return Err(Error::Domain(format!("n = {n} must be positive")));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::Domain(format!("sign must be ±1, got {sign}")));
    }
    let p = 2 * n * r + i64::from(sign);
    if r % 2 != 0 || r < 2 || r >= p {
        return Err(Error::Domain(format!(
            "r = {r} must be even with 2 <= r < p = {p}"
        )));
    }
    let base = -(p - 1) * (p + r + 1) / 2;
    SignatureValue::new(if sign == 1 { base } else { base - r })
}

/// `σ(T(p,p+4))` for odd `p`: `−(p−1)(p+5)/2` when `p ≡ 1, 3 (mod 8)`,
/// four less when `p ≡ 5, 7 (mod 8)`.
pub fn sigma_p_plus_4(p: i64) -> Result<SignatureValue> {
    if p <= 0 || p % 2 == 0 {
        return Err(Error::Domain(format!(
            "p = {p} must be a positive odd integer"
        )));
    }
    let base = -(p - 1) * (p + 5) / 2;
    SignatureValue::new(match p % 8 {
        1 | 3 => base,
        _ => base - 4,
    })
}

/// Upper bound `−2⌊p/2⌋⌊q/2⌋` on the signature of a nontrivial `T(p,q)`.
pub fn signature_upper_bound(k: TorusKnotParams) -> Result<i64> {
    let (p, q) = positive_pair(k)?;
    Ok(-2 * (p / 2) * (q / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: i64, q: i64) -> TorusKnotParams {
        TorusKnotParams::new(p, q).unwrap()
    }

    fn oracle(p: i64, q: i64) -> i64 {
        sigma_oracle(t(p, q)).unwrap().value()
    }

    #[test]
    fn oracle_values() {
        assert_eq!(oracle(2, 3), -2);
        assert_eq!(oracle(1, 5), 0);
        assert_eq!(oracle(5, 8), -20);
        assert_eq!(oracle(3, 7), -8);
    }

    #[test]
    fn closed_values() {
        assert_eq!(sigma_closed(t(5, 7)).unwrap().value(), -16);
        assert_eq!(sigma_closed(t(5, 8)).unwrap().value(), -20);
        assert_eq!(sigma_closed(t(2, 3)).unwrap().value(), -2);
    }

    #[test]
    fn p_plus_r_values() {
        assert_eq!(sigma_p_plus_r(5, 2).unwrap().value(), -16);
        assert_eq!(sigma_p_plus_r(7, 4).unwrap().value(), -40);
        assert_eq!(sigma_p_plus_r(9, 4).unwrap().value(), -56);
        assert_eq!(oracle(7, 11), -40);
        assert_eq!(oracle(9, 13), -56);
        assert!(sigma_p_plus_r(8, 2).is_err());
        assert!(sigma_p_plus_r(9, 3).is_err());
        assert!(sigma_p_plus_r(9, 10).is_err());
        assert!(sigma_p_plus_r(9, 6).is_err());
    }

    #[test]
    fn two_nr_values() {
        assert_eq!(sigma_2nr_closed(1, 4, 1).unwrap().value(), -56);
        assert_eq!(sigma_2nr_closed(1, 4, -1).unwrap().value(), -40);
        assert_eq!(sigma_2nr_closed(1, 2, 1).unwrap().value(), -16);
        assert!(sigma_2nr_closed(0, 4, 1).is_err());
        assert_eq!(sigma_2nr_closed(1, 2, -1).unwrap().value(), oracle(3, 5));
        assert!(sigma_2nr_closed(1, 3, 1).is_err());
    }

    #[test]
    fn p_plus_4_values() {
        assert_eq!(sigma_p_plus_4(3).unwrap().value(), -8);
        assert_eq!(sigma_p_plus_4(11).unwrap().value(), -80);
        assert_eq!(sigma_p_plus_4(7).unwrap().value(), -40);
        assert_eq!(sigma_p_plus_4(1).unwrap().value(), 0);
        assert_eq!(oracle(11, 15), -80);
        assert!(sigma_p_plus_4(6).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(signature_upper_bound(t(5, 8)).unwrap(), -16);
        assert_eq!(signature_upper_bound(t(2, 3)).unwrap(), -2);
        assert_eq!(signature_upper_bound(t(9, 13)).unwrap(), -48);
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(sigma_oracle(t(8, 5)).is_err());
        assert!(sigma_closed(t(-2, 3)).is_err());
    }

    #[test]
    fn odd_signature_is_rejected() {
        assert!(SignatureValue::new(3).is_err());
    }

    #[test]
    fn small_sweep_matches_oracle() {
        for q in 2..=25i64 {
            for p in 1..q {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let k = t(p, q);
                let o = sigma_oracle(k).unwrap();
                assert_eq!(sigma_closed(k).unwrap(), o, "T({p},{q})");
                if p > 1 {
                    assert!(o.value() <= signature_upper_bound(k).unwrap());
                }
            }
        }
    }
}
