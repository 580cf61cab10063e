//! Exact arithmetic in the cyclotomic field `Q(ζ)`, `ζ = e^{2πi/d}`, `d` prime.
//!
//! Elements are stored as `Σ c_k ζ^k` for `0 <= k < d` with the relation
//! `1 + ζ + ⋯ + ζ^{d−1} = 0` used to keep `c_{d−1} = 0`, which makes the
//! representation unique.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::enclosure::{cos_sin_pi, Enclosure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    coeffs: Vec<BigRational>,
}

impl CycElem {
    pub fn zero(d: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); d],
        }
    }

    pub fn from_int(d: usize, v: i64) -> Self {
        let mut e = Self::zero(d);
        e.coeffs[0] = BigRational::from_integer(BigInt::from(v));
        e
    }

    /// `ζ^k`.
    pub fn root_power(d: usize, k: i64) -> Self {
        let mut e = Self::zero(d);
        e.coeffs[k.rem_euclid(d as i64) as usize] = BigRational::one();
        e.canonicalize();
        e
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn canonicalize(&mut self) {
        let d = self.coeffs.len();
        let top = self.coeffs[d - 1].clone();
        if !top.is_zero() {
            for c in &mut self.coeffs {
                *c -= &top;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (c, x) in coeffs.iter_mut().zip(&o.coeffs) {
            *c += x;
        }
        Self { coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (c, x) in coeffs.iter_mut().zip(&o.coeffs) {
            *c -= x;
        }
        Self { coeffs }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.coeffs.len();
        let mut out = Self::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[(i + j) % d] += a * b;
                }
            }
        }
        out.canonicalize();
        out
    }

    /// Image under the automorphism `ζ ↦ ζ^j`.
    pub fn galois(&self, j: usize) -> Self {
        let d = self.coeffs.len();
        let mut out = Self::zero(d);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(k * j) % d] += c;
        }
        out.canonicalize();
        out
    }

    /// Complex conjugate (`ζ ↦ ζ^{-1}`).
    pub fn conj(&self) -> Self {
        let d = self.coeffs.len();
        self.galois(d - 1)
    }

    /// Rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Multiplicative inverse through the field norm.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.coeffs.len();
        let mut rest = Self::from_int(d, 1);
        for j in 2..d {
            rest = rest.mul(&self.galois(j));
        }
        let norm = self.mul(&rest);
        let n = norm.as_rational().expect("field norm is rational").clone();
        Some(rest.scale(&n.recip()))
    }
}

/// Cosines `cos(2πk/d)` at a fixed precision, reused across evaluations.
pub struct CosineTable {
    d: usize,
    prec: u32,
    cos: Vec<Enclosure>,
}

impl CosineTable {
    pub fn new(d: usize, prec: u32) -> Self {
        let cos = (0..d)
            .map(|k| cos_sin_pi(2 * k as i64, d as i64, prec).0)
            .collect();
        Self { d, prec, cos }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Enclosure of the real part of `e`.
    pub fn real_part(&self, e: &CycElem) -> Enclosure {
        assert_eq!(e.degree(), self.d);
        let mut acc = Enclosure::from_int(0, self.prec);
        for (c, cos) in e.coeffs.iter().zip(&self.cos) {
            if !c.is_zero() {
                acc = acc.add(&cos.mul_rational(c));
            }
        }
        acc
    }
}

/// Cache of cosine tables keyed by precision.
#[derive(Default)]
pub struct CosineCache {
    tables: HashMap<(usize, u32), CosineTable>,
}

impl CosineCache {
    pub fn table(&mut self, d: usize, prec: u32) -> &CosineTable {
        self.tables
            .entry((d, prec))
            .or_insert_with(|| CosineTable::new(d, prec))
    }
}

/// Whether a real element is certainly positive, negative, or zero.
pub fn real_sign(
    e: &CycElem,
    cache: &mut CosineCache,
    precisions: impl IntoIterator<Item = u32>,
) -> Option<std::cmp::Ordering> {
    if let Some(r) = e.as_rational() {
        return Some(r.cmp(&BigRational::zero()));
    }
    if e.is_zero() {
        return Some(std::cmp::Ordering::Equal);
    }
    for prec in precisions {
        let v = cache.table(e.degree(), prec).real_part(e);
        match v.sign() {
            Some(std::cmp::Ordering::Equal) | None => continue,
            s => return s,
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn roots_sum_to_zero() {
        for d in [2usize, 3, 5, 7] {
            let mut s = CycElem::zero(d);
            for k in 0..d as i64 {
                s = s.add(&CycElem::root_power(d, k));
            }
            assert!(s.is_zero());
            let z = CycElem::root_power(d, 1);
            let mut p = CycElem::from_int(d, 1);
            for _ in 0..d {
                p = p.mul(&z);
            }
            assert_eq!(p, CycElem::from_int(d, 1));
        }
    }

    #[test]
    fn inverses() {
        let d = 5;
        let z = CycElem::root_power(d, 1);
        let e = CycElem::from_int(d, 3)
            .sub(&z.scale(&r(2, 7)))
            .add(&CycElem::root_power(d, 3));
        let inv = e.inv().unwrap();
        assert_eq!(e.mul(&inv), CycElem::from_int(d, 1));
        let half = CycElem::from_int(2, 2).inv().unwrap();
        assert_eq!(half.as_rational(), Some(&r(1, 2)));
        assert!(CycElem::zero(3).inv().is_none());
    }

    #[test]
    fn conjugation_and_real_parts() {
        let d = 7;
        let z = CycElem::root_power(d, 2);
        let w = z.add(&z.conj());
        assert_eq!(w, w.conj());
        let mut cache = CosineCache::default();
        let v = cache.table(d, 64).real_part(&w);
        let expect = 2.0 * (4.0 * std::f64::consts::PI / 7.0).cos();
        assert!((v.midpoint_f64() - expect).abs() < 1e-12);
        assert_eq!(real_sign(&w, &mut cache, [64]), Some(Ordering::Less));
        let neg = CycElem::from_int(d, -3);
        assert_eq!(real_sign(&neg, &mut cache, [64]), Some(Ordering::Less));
    }
}
