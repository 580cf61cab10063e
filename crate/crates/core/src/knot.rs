//! Torus-knot parameters, normal forms and full-strand twisting.
//!
//! `T(p,q)` wraps `p` times longitudinally and `q` times meridionally around
//! the standard torus. The identities `T(p,q) ≅ T(q,p)`, `T(-p,-q) ≅ T(p,q)`
//! and `T(p,-q) = mirror of T(p,q)` reduce every pair to `0 < p' <= q'`
//! plus a mirror flag.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A coprime pair `(p, q)` describing the torus knot `T(p,q)`.
///
/// A zero entry is allowed only next to `±1` (the pair is then the unknot).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusKnotParams {
    p: i64,
    q: i64,
}

/// Result of [`normalize`]: parameters with `0 < p <= q` and whether the
/// original knot is the mirror image of `T(p,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub params: TorusKnotParams,
    pub mirror: bool,
}

impl TorusKnotParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidKnot {
                p,
                q,
                reason: "both parameters are zero".into(),
            });
        }
        if p.unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
            return Err(Error::InvalidKnot {
                p,
                q,
                reason: "parameters are not coprime".into(),
            });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `T(p,q)` is the unknot exactly when `|p| <= 1` or `|q| <= 1`.
    pub fn is_trivial(&self) -> bool {
        self.p.abs() <= 1 || self.q.abs() <= 1
    }

    /// True when `0 < p < q` (or the unknot written as `T(1,1)`).
    pub fn is_normalized(&self) -> bool {
        self.p > 0 && self.p <= self.q
    }

    /// Genus `(|p|-1)(|q|-1)/2` of the fiber surface.
    pub fn genus(&self) -> i64 {
        if self.is_trivial() {
            return 0;
        }
        (self.p.abs() - 1) * (self.q.abs() - 1) / 2
    }

    /// Returns the params in normal form, failing unless `0 < p <= q`.
    pub fn require_normalized(self) -> Result<Self> {
        if self.is_normalized() {
            Ok(self)
        } else {
            Err(Error::NotNormalized {
                p: self.p,
                q: self.q,
            })
        }
    }
}

impl fmt::Display for TorusKnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// Brings `T(p,q)` to `0 < p' <= q'`, recording a mirror when `pq < 0`.
///
/// Pairs with a zero entry are the unknot and normalize to `T(1,1)`.
pub fn normalize(k: TorusKnotParams) -> NormalForm {
    let (a, b) = (k.p.unsigned_abs() as i64, k.q.unsigned_abs() as i64);
    if a == 0 || b == 0 {
        return NormalForm {
            params: TorusKnotParams { p: 1, q: 1 },
            mirror: false,
        };
    }
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    NormalForm {
        params: TorusKnotParams { p: lo, q: hi },
        mirror: (k.p < 0) != (k.q < 0),
    }
}

/// Whether two parameter pairs describe the same oriented knot type up to
/// the standard torus-knot identities.
pub fn isotopic(a: TorusKnotParams, b: TorusKnotParams) -> bool {
    if a.is_trivial() || b.is_trivial() {
        return a.is_trivial() && b.is_trivial();
    }
    normalize(a) == normalize(b)
}

/// `T(p,q)` with `0 < p < q` is exceptional when `q ≡ ±1 (mod p)`.
pub fn is_exceptional(k: TorusKnotParams) -> Result<bool> {
    let k = k.require_normalized()?;
    let r = k.q.rem_euclid(k.p);
    Ok(r == 1 % k.p || r == k.p - 1)
}

/// One `(n, ω)`-twisting: `-1/n` surgery along the boundary of a disk that
/// meets the knot algebraically `ω` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistMove {
    n: i64,
    omega: u64,
}

impl TwistMove {
    pub fn new(n: i64, omega: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("twist count n must be nonzero".into()));
        }
        Ok(Self { n, omega })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn omega(&self) -> u64 {
        self.omega
    }

    /// Odd `|n| >= 3` has no homological model (only `|n| = 1` and even `n` do).
    pub fn is_supported(&self) -> bool {
        self.n.abs() == 1 || self.n % 2 == 0
    }
}

impl fmt::Display for TwistMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.omega)
    }
}

/// Twists all `|p|` strands `n` full times: `T(p,q) -> T(p, q + n·p)`.
pub fn apply_full_strand_twist(k: TorusKnotParams, m: TwistMove) -> Result<TorusKnotParams> {
    if m.omega != k.p.unsigned_abs() {
        return Err(Error::UnsupportedStep(format!(
            "twist {m} on {k}: the disk must meet all {} strands (ω = {})",
            k.p.abs(),
            k.p.abs()
        )));
    }
    let q =
        k.q.checked_add(m.n.checked_mul(k.p).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
    TorusKnotParams::new(k.p, q)
}

fn overflow() -> Error {
    Error::Domain("parameter overflow".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(p: i64, q: i64) -> TorusKnotParams {
        TorusKnotParams::new(p, q).unwrap()
    }

    #[test]
    fn normal_forms() {
        let n = normalize(t(5, -2));
        assert_eq!(n.params, t(2, 5));
        assert!(n.mirror);

        let n = normalize(t(7, 3));
        assert_eq!(n.params, t(3, 7));
        assert!(!n.mirror);

        let n = normalize(t(1, 9));
        assert_eq!(n.params, t(1, 9));
        assert!(n.params.is_trivial());

        assert_eq!(normalize(t(-3, -4)), normalize(t(3, 4)));
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(matches!(
            TorusKnotParams::new(4, 6),
            Err(Error::InvalidKnot { .. })
        ));
        assert!(TorusKnotParams::new(0, 0).is_err());
        assert!(TorusKnotParams::new(0, 3).is_err());
        assert!(TorusKnotParams::new(1, 0).is_ok());
    }

    #[test]
    fn exceptional_classes() {
        assert!(is_exceptional(t(4, 7)).unwrap());
        assert!(!is_exceptional(t(5, 7)).unwrap());
        assert!(!is_exceptional(t(5, 8)).unwrap());
        assert!(is_exceptional(t(6, 13)).unwrap());
        assert!(matches!(
            is_exceptional(t(7, 5)),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn full_strand_twists() {
        let m = TwistMove::new(-1, 5).unwrap();
        assert_eq!(apply_full_strand_twist(t(5, 8), m).unwrap(), t(5, 3));
        assert_eq!(apply_full_strand_twist(t(5, 3), m).unwrap(), t(5, -2));
        for k in 1..6 {
            let m = TwistMove::new(k, 7).unwrap();
            assert_eq!(
                apply_full_strand_twist(t(7, 1), m).unwrap(),
                t(7, 7 * k + 1)
            );
        }
        let bad = TwistMove::new(-1, 4).unwrap();
        assert!(matches!(
            apply_full_strand_twist(t(5, 8), bad),
            Err(Error::UnsupportedStep(_))
        ));
    }

    #[test]
    fn unsupported_odd_twists() {
        assert!(TwistMove::new(3, 2).map(|m| !m.is_supported()).unwrap());
        assert!(TwistMove::new(-1, 2).unwrap().is_supported());
        assert!(TwistMove::new(-4, 2).unwrap().is_supported());
        assert!(TwistMove::new(0, 2).is_err());
    }

    fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
        (-60i64..60, -60i64..60).prop_filter("coprime, nonzero", |(p, q)| {
            *p != 0 && *q != 0 && p.unsigned_abs().gcd(&q.unsigned_abs()) == 1
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent((p, q) in coprime_pair()) {
            let k = t(p, q);
            let once = normalize(k);
            let twice = normalize(once.params);
            prop_assert_eq!(once.params, twice.params);
            prop_assert!(!twice.mirror);
            prop_assert!(once.params.is_normalized());
            prop_assert!(TorusKnotParams::new(once.params.p(), once.params.q()).is_ok());
        }

        #[test]
        fn twist_then_untwist((p, q) in coprime_pair(), n in -5i64..5) {
            prop_assume!(n != 0);
            let k = t(p, q);
            let fwd = TwistMove::new(n, p.unsigned_abs()).unwrap();
            let back = TwistMove::new(-n, p.unsigned_abs()).unwrap();
            let there = apply_full_strand_twist(k, fwd).unwrap();
            prop_assert_eq!(apply_full_strand_twist(there, back).unwrap(), k);
        }

        #[test]
        fn two_and_three_strand_knots_are_exceptional(q in 3i64..500) {
            if q % 2 == 1 {
                prop_assert!(is_exceptional(t(2, q)).unwrap());
            }
            if q % 3 != 0 && q > 3 {
                prop_assert!(is_exceptional(t(3, q)).unwrap());
            }
        }
    }
}
