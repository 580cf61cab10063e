//! Homological bookkeeping for the closed 4-manifold assembled from a twist
//! sequence.
//!
//! Each `(ε, ω)` move with `ε = ±1` contributes a `−εCP²` summand in which the
//! sphere class has coefficient `ω` on the generator. Each `(2n, ω)` move
//! contributes an `S²×S²` summand carrying the class `ω·α − nω·β`, where
//! `α·α = β·β = 0` and `α·β = 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::exact_sqrt;
use crate::error::{Error, Result};

/// `omega·ω + constant`, with `ω` the unknown linking number of the
/// hypothesized first move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Linear {
    pub omega: i64,
    pub constant: i64,
}

impl Linear {
    pub fn constant(c: i64) -> Self {
        Self {
            omega: 0,
            constant: c,
        }
    }

    pub fn omega() -> Self {
        Self {
            omega: 1,
            constant: 0,
        }
    }

    pub fn scale(self, k: i64) -> Self {
        Self {
            omega: self.omega * k,
            constant: self.constant * k,
        }
    }

    pub fn eval(self, omega: i64) -> i64 {
        self.omega * omega + self.constant
    }

    pub fn mul(self, o: Self) -> QuadPoly {
        QuadPoly {
            c2: self.omega * o.omega,
            c1: self.omega * o.constant + self.constant * o.omega,
            c0: self.constant * o.constant,
        }
    }

    /// Whether the value is odd when `ω` has the given parity.
    pub fn is_odd(self, omega_odd: bool) -> bool {
        let w = if omega_odd { self.omega } else { 0 };
        (w + self.constant).rem_euclid(2) == 1
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.omega, self.constant) {
            (0, c) => write!(f, "{c}"),
            (1, 0) => write!(f, "ω"),
            (-1, 0) => write!(f, "-ω"),
            (w, 0) => write!(f, "{w}ω"),
            (1, c) => write!(f, "ω{c:+}"),
            (w, c) => write!(f, "{w}ω{c:+}"),
        }
    }
}

/// `c2·ω² + c1·ω + c0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadPoly {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
}

impl QuadPoly {
    pub fn add(self, o: Self) -> Self {
        Self {
            c2: self.c2 + o.c2,
            c1: self.c1 + o.c1,
            c0: self.c0 + o.c0,
        }
    }

    pub fn scale(self, k: i64) -> Self {
        Self {
            c2: self.c2 * k,
            c1: self.c1 * k,
            c0: self.c0 * k,
        }
    }

    pub fn eval(self, omega: i64) -> i128 {
        let w = omega as i128;
        self.c2 as i128 * w * w + self.c1 as i128 * w + self.c0 as i128
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (c, var) in [(self.c2, "ω²"), (self.c1, "ω")] {
            match c {
                0 => {}
                1 => terms.push(format!("+{var}")),
                -1 => terms.push(format!("-{var}")),
                c => terms.push(format!("{c:+}{var}")),
            }
        }
        if self.c0 != 0 || terms.is_empty() {
            terms.push(format!("{:+}", self.c0));
        }
        let s = terms.join(" ");
        let s = s.strip_prefix('+').unwrap_or(&s);
        f.write_str(&s.replace(" +", " + ").replace(" -", " - "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Summand {
    MinusCp2 { coefficient: Linear },
    PlusCp2 { coefficient: Linear },
    S2xS2 { alpha: Linear, beta: Linear },
}

impl Summand {
    pub fn b2_plus(&self) -> u32 {
        match self {
            Summand::MinusCp2 { .. } => 0,
            _ => 1,
        }
    }

    pub fn b2_minus(&self) -> u32 {
        match self {
            Summand::PlusCp2 { .. } => 0,
            _ => 1,
        }
    }

    pub fn signature(&self) -> i64 {
        self.b2_plus() as i64 - self.b2_minus() as i64
    }

    pub fn self_intersection(&self) -> QuadPoly {
        match *self {
            Summand::MinusCp2 { coefficient } => coefficient.mul(coefficient).scale(-1),
            Summand::PlusCp2 { coefficient } => coefficient.mul(coefficient),
            Summand::S2xS2 { alpha, beta } => alpha.mul(beta).scale(2),
        }
    }

    fn coefficients(&self) -> Vec<Linear> {
        match *self {
            Summand::MinusCp2 { coefficient } | Summand::PlusCp2 { coefficient } => {
                vec![coefficient]
            }
            Summand::S2xS2 { alpha, beta } => vec![alpha, beta],
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::MinusCp2 { coefficient } => write!(f, "-CP2[{coefficient}]"),
            Summand::PlusCp2 { coefficient } => write!(f, "+CP2[{coefficient}]"),
            Summand::S2xS2 { alpha, beta } => write!(f, "S2xS2[{alpha}, {beta}]"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourManifoldLedger {
    summands: Vec<Summand>,
    sigma_m: i64,
    b2_plus: u32,
    b2_minus: u32,
    xi_self_intersection: QuadPoly,
}

impl FourManifoldLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_summands(summands: impl IntoIterator<Item = Summand>) -> Self {
        let mut l = Self::new();
        for s in summands {
            l.push(s);
        }
        l
    }

    pub fn push(&mut self, s: Summand) {
        self.sigma_m += s.signature();
        self.b2_plus += s.b2_plus();
        self.b2_minus += s.b2_minus();
        self.xi_self_intersection = self.xi_self_intersection.add(s.self_intersection());
        self.summands.push(s);
    }

    /// Connected sum of the two manifolds.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for s in &other.summands {
            out.push(*s);
        }
        out
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn sigma_m(&self) -> i64 {
        self.sigma_m
    }

    pub fn b2_plus(&self) -> u32 {
        self.b2_plus
    }

    pub fn b2_minus(&self) -> u32 {
        self.b2_minus
    }

    pub fn xi_self_intersection(&self) -> QuadPoly {
        self.xi_self_intersection
    }
}

/// Parity of the unknown `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// `ξ` is characteristic on a sum of `±CP²` and `S²×S²` exactly when every
/// `±CP²` coefficient is odd and every `S²×S²` coefficient is even.
pub fn characteristic_check(l: &FourManifoldLedger, omega_parity: Parity) -> bool {
    let odd = omega_parity == Parity::Odd;
    l.summands.iter().all(|s| match s {
        Summand::MinusCp2 { coefficient } | Summand::PlusCp2 { coefficient } => {
            coefficient.is_odd(odd)
        }
        Summand::S2xS2 { alpha, beta } => !alpha.is_odd(odd) && !beta.is_odd(odd),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum KikuchiInapplicable {
    BettiNumbersTooLarge {
        b2_plus: u32,
        b2_minus: u32,
    },
    NotCharacteristic,
    /// `ξ·ξ` does not involve `ω`, so the equation does not constrain it.
    NoUnknown,
}

impl fmt::Display for KikuchiInapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KikuchiInapplicable::BettiNumbersTooLarge { b2_plus, b2_minus } => {
                write!(f, "b2+ = {b2_plus}, b2- = {b2_minus} exceed 3")
            }
            KikuchiInapplicable::NotCharacteristic => {
                f.write_str("class is not characteristic for odd ω")
            }
            KikuchiInapplicable::NoUnknown => f.write_str("self-intersection does not involve ω"),
        }
    }
}

/// Outcome of the sphere test `ξ·ξ = σ(M)` for characteristic `ξ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum KikuchiResult {
    /// Positive integers `ω` satisfying the equation (possibly none).
    Admissible {
        equation: QuadPoly,
        sigma_m: i64,
        omegas: Vec<u64>,
    },
    Inapplicable(KikuchiInapplicable),
}

impl KikuchiResult {
    pub fn admissible(&self) -> Option<&[u64]> {
        match self {
            KikuchiResult::Admissible { omegas, .. } => Some(omegas),
            KikuchiResult::Inapplicable(_) => None,
        }
    }
}

/// For `ξ·ξ = −ω² + C`, the value `C − σ(M)` that `ω²` must equal.
pub fn omega_squared_target(l: &FourManifoldLedger) -> Option<i64> {
    let q = l.xi_self_intersection;
    (q.c2 == -1 && q.c1 == 0).then(|| q.c0 - l.sigma_m)
}

/// Positive integer solutions of `ξ·ξ(ω) = σ(M)`, when the sphere test
/// applies (`b₂± <= 3` and `ξ` characteristic for odd `ω`).
pub fn kikuchi_eliminate(l: &FourManifoldLedger) -> KikuchiResult {
    if l.b2_plus > 3 || l.b2_minus > 3 {
        return KikuchiResult::Inapplicable(KikuchiInapplicable::BettiNumbersTooLarge {
            b2_plus: l.b2_plus,
            b2_minus: l.b2_minus,
        });
    }
    if !characteristic_check(l, Parity::Odd) {
        return KikuchiResult::Inapplicable(KikuchiInapplicable::NotCharacteristic);
    }
    let q = l.xi_self_intersection;
    let (a, b, c) = (q.c2 as i128, q.c1 as i128, (q.c0 - l.sigma_m) as i128);
    let mut omegas = Vec::new();
    if a == 0 {
        if b == 0 {
            return KikuchiResult::Inapplicable(KikuchiInapplicable::NoUnknown);
        }
        if c % b == 0 && -c / b > 0 {
            omegas.push((-c / b) as u64);
        }
    } else if let Some(s) = exact_sqrt(b * b - 4 * a * c) {
        for num in [-b + s, -b - s] {
            if num % (2 * a) == 0 {
                let w = num / (2 * a);
                if w > 0 && !omegas.contains(&(w as u64)) {
                    omegas.push(w as u64);
                }
            }
        }
        omegas.sort_unstable();
    }
    KikuchiResult::Admissible {
        equation: q,
        sigma_m: l.sigma_m,
        omegas,
    }
}

/// Checks `|2a(d−a)/d²·ξ·ξ − σ(M) − σ_d(K)| <= dim H₂(M; Z_d) + 2·genus`
/// with `a = ⌊d/2⌋`, at a concrete `ω`. Every coefficient of `ξ` must be
/// divisible by `d`.
pub fn gilmer_viro_check(
    l: &FourManifoldLedger,
    omega: i64,
    genus: u64,
    d: u32,
    sigma_d: i64,
) -> Result<bool> {
    if !crate::arith::is_prime(d as u64) {
        return Err(Error::Domain(format!("d = {d} is not prime")));
    }
    let dd = d as i64;
    for s in &l.summands {
        for c in s.coefficients() {
            if c.eval(omega) % dd != 0 {
                return Err(Error::Domain(format!(
                    "class coefficient {} of {s} is not divisible by {d} at ω = {omega}",
                    c.eval(omega)
                )));
            }
        }
    }
    let a = (d / 2) as i128;
    let d2 = (dd * dd) as i128;
    let xi2 = l.xi_self_intersection.eval(omega);
    // multiply through by d²
    let lhs = 2 * a * (dd as i128 - a) * xi2 - d2 * (l.sigma_m as i128 + sigma_d as i128);
    let dim_h2 = (l.b2_plus + l.b2_minus) as i128;
    Ok(lhs.abs() <= d2 * (dim_h2 + 2 * genus as i128))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Linear {
        Linear::constant(v)
    }

    #[test]
    fn summand_contributions() {
        let m = Summand::MinusCp2 {
            coefficient: Linear::omega(),
        };
        assert_eq!((m.b2_plus(), m.b2_minus(), m.signature()), (0, 1, -1));
        assert_eq!(
            m.self_intersection(),
            QuadPoly {
                c2: -1,
                c1: 0,
                c0: 0
            }
        );
        let p = Summand::PlusCp2 { coefficient: c(5) };
        assert_eq!((p.b2_plus(), p.b2_minus(), p.signature()), (1, 0, 1));
        assert_eq!(p.self_intersection().c0, 25);
        let s = Summand::S2xS2 {
            alpha: c(2),
            beta: c(-2),
        };
        assert_eq!((s.b2_plus(), s.b2_minus(), s.signature()), (1, 1, 0));
        assert_eq!(s.self_intersection().c0, -8);
    }

    #[test]
    fn empty_ledger() {
        let l = FourManifoldLedger::new();
        assert_eq!((l.sigma_m(), l.b2_plus(), l.b2_minus()), (0, 0, 0));
        assert_eq!(l.xi_self_intersection(), QuadPoly::default());
    }

    #[test]
    fn characteristic_parity() {
        let l = FourManifoldLedger::from_summands([
            Summand::MinusCp2 {
                coefficient: Linear::omega(),
            },
            Summand::PlusCp2 { coefficient: c(9) },
            Summand::S2xS2 {
                alpha: c(4),
                beta: c(4),
            },
        ]);
        assert!(characteristic_check(&l, Parity::Odd));
        assert!(!characteristic_check(&l, Parity::Even));
    }

    #[test]
    fn kikuchi_general_quadratic() {
        let l = FourManifoldLedger::from_summands([
            Summand::MinusCp2 {
                coefficient: Linear {
                    omega: 1,
                    constant: -2,
                },
            },
            Summand::PlusCp2 { coefficient: c(3) },
            Summand::PlusCp2 { coefficient: c(3) },
        ]);
        // −(ω−2)² + 18 = 1  →  (ω−2)² = 17: no solutions
        assert_eq!(kikuchi_eliminate(&l).admissible(), Some(&[][..]));
        let l = FourManifoldLedger::from_summands([
            Summand::MinusCp2 {
                coefficient: Linear {
                    omega: 1,
                    constant: -2,
                },
            },
            Summand::PlusCp2 { coefficient: c(5) },
        ]);
        // −(ω−2)² + 25 = 0  →  ω = 7 (and ω = −3 discarded)
        assert_eq!(kikuchi_eliminate(&l).admissible(), Some(&[7][..]));
    }

    #[test]
    fn kikuchi_inapplicable() {
        let big = FourManifoldLedger::from_summands(std::iter::repeat_n(
            Summand::PlusCp2 { coefficient: c(1) },
            4,
        ));
        assert!(matches!(
            kikuchi_eliminate(&big),
            KikuchiResult::Inapplicable(KikuchiInapplicable::BettiNumbersTooLarge { .. })
        ));
        let even = FourManifoldLedger::from_summands([Summand::PlusCp2 { coefficient: c(2) }]);
        assert!(matches!(
            kikuchi_eliminate(&even),
            KikuchiResult::Inapplicable(KikuchiInapplicable::NotCharacteristic)
        ));
    }

    #[test]
    fn gilmer_viro_single_summand() {
        // once-punctured −CP² with class ωγ: |−2a(d−a)/d²·ω² + 1 − σ_d| <= 1
        let l = FourManifoldLedger::from_summands([Summand::MinusCp2 {
            coefficient: Linear::omega(),
        }]);
        // d = 2, ω = 6: 18 ∈ {16, 18} for σ = −16
        assert!(gilmer_viro_check(&l, 6, 0, 2, -16).unwrap());
        assert!(!gilmer_viro_check(&l, 6, 0, 2, -20).unwrap());
        assert!(gilmer_viro_check(&l, 6, 10, 2, -20).unwrap());
        assert!(matches!(
            gilmer_viro_check(&l, 6, 0, 5, -16),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gilmer_viro_slice_disk() {
        // zero class, genus 0, dim H₂ = 1: |1 − σ_d(K₋) + σ_d(K₊)| <= 1
        let l = FourManifoldLedger::from_summands([Summand::MinusCp2 { coefficient: c(0) }]);
        for (minus, plus, ok) in [
            (-4, -2, false),
            (-4, -4, true),
            (-4, -6, true),
            (-4, -8, false),
        ] {
            assert_eq!(gilmer_viro_check(&l, 0, 0, 3, minus - plus).unwrap(), ok);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            QuadPoly {
                c2: -1,
                c1: 0,
                c0: 42
            }
            .to_string(),
            "-ω² + 42"
        );
        assert_eq!(
            QuadPoly {
                c2: 0,
                c1: 0,
                c0: 0
            }
            .to_string(),
            "0"
        );
        assert_eq!(
            QuadPoly {
                c2: 2,
                c1: -3,
                c0: 0
            }
            .to_string(),
            "2ω² - 3ω"
        );
        assert_eq!(
            Linear {
                omega: -2,
                constant: 0
            }
            .to_string(),
            "-2ω"
        );
        assert_eq!(c(-8).to_string(), "-8");
    }
}
