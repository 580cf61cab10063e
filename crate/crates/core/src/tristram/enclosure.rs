//! Rigorous real enclosures on a dyadic grid.
//!
//! An [`Enclosure`] at precision `prec` is the closed interval
//! `[lo·2^-prec, hi·2^-prec]`. Every operation rounds outward, so the true
//! value of an expression always lies inside the enclosure computed for it.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn unit(prec: u32) -> BigInt {
    BigInt::one() << prec as usize
}

impl Enclosure {
    pub fn from_int(v: i64, prec: u32) -> Self {
        let x = BigInt::from(v) << prec as usize;
        Self {
            lo: x.clone(),
            hi: x,
            prec,
        }
    }

    /// Encloses `num/den` for `den > 0`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        debug_assert!(den.is_positive());
        let scaled = num << prec as usize;
        Self {
            lo: scaled.div_floor(den),
            hi: Integer::div_ceil(&scaled, den),
            prec,
        }
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Lower endpoint as an integer multiple of `2^-prec`.
    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    pub fn lo_rational(&self) -> BigRational {
        BigRational::new(self.lo.clone(), unit(self.prec))
    }

    pub fn hi_rational(&self) -> BigRational {
        BigRational::new(self.hi.clone(), unit(self.prec))
    }

    pub fn midpoint_f64(&self) -> f64 {
        let m = BigRational::new(&self.lo + &self.hi, unit(self.prec) * 2);
        num_traits::ToPrimitive::to_f64(&m).unwrap_or(f64::NAN)
    }

    pub fn width_scaled(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// `Some(sign)` when the enclosure excludes zero or is exactly zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.prec, o.prec);
        Self {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.prec, o.prec);
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        let u = unit(self.prec);
        Self {
            lo: min.div_floor(&u),
            hi: Integer::div_ceil(max, &u),
            prec: self.prec,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Self {
                lo: b,
                hi: a,
                prec: self.prec,
            }
        } else {
            Self {
                lo: a,
                hi: b,
                prec: self.prec,
            }
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, k: &BigInt) -> Self {
        debug_assert!(k.is_positive());
        Self {
            lo: self.lo.div_floor(k),
            hi: Integer::div_ceil(&self.hi, k),
            prec: self.prec,
        }
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        self.mul_int(r.numer()).div_int(r.denom())
    }

    /// Division by an enclosure that is strictly positive.
    pub fn div_positive(&self, o: &Self) -> Option<Self> {
        assert_eq!(self.prec, o.prec);
        if !o.lo.is_positive() {
            return None;
        }
        let p = self.prec as usize;
        let quotients = |round_up: bool| {
            [
                (&self.lo, &o.lo),
                (&self.lo, &o.hi),
                (&self.hi, &o.lo),
                (&self.hi, &o.hi),
            ]
            .into_iter()
            .map(|(a, b)| {
                let n = a << p;
                if round_up {
                    Integer::div_ceil(&n, b)
                } else {
                    n.div_floor(b)
                }
            })
            .collect::<Vec<_>>()
        };
        Some(Self {
            lo: quotients(false).into_iter().min().unwrap(),
            hi: quotients(true).into_iter().max().unwrap(),
            prec: self.prec,
        })
    }

    /// Grows the enclosure by `err·2^-prec` on both sides.
    pub fn widen(&self, err: &BigInt) -> Self {
        Self {
            lo: &self.lo - err,
            hi: &self.hi + err,
            prec: self.prec,
        }
    }

    /// Re-expresses the enclosure at a coarser (or finer) grid, rounding outward.
    pub fn round_to(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = (prec - self.prec) as usize;
                Self {
                    lo: &self.lo << s,
                    hi: &self.hi << s,
                    prec,
                }
            }
            Ordering::Less => {
                let u = unit(self.prec - prec);
                Self {
                    lo: self.lo.div_floor(&u),
                    hi: Integer::div_ceil(&self.hi, &u),
                    prec,
                }
            }
        }
    }

    fn is_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }
}

const GUARD_BITS: u32 = 24;

/// `atan(1/m)` by its alternating series.
fn atan_inv(m: u64, prec: u32) -> Enclosure {
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut power = m.clone();
    let mut sum = Enclosure::from_int(0, prec);
    let mut k: u64 = 0;
    loop {
        let den = &power * BigInt::from(2 * k + 1);
        let term = Enclosure::from_ratio(&BigInt::one(), &den, prec);
        if term.hi <= BigInt::one() {
            // remaining tail is bounded by this term
            return sum.widen(&term.hi);
        }
        sum = if k.is_multiple_of(2) {
            sum.add(&term)
        } else {
            sum.sub(&term)
        };
        power *= &m2;
        k += 1;
    }
}

/// π from Machin's formula `π = 16·atan(1/5) − 4·atan(1/239)`.
pub fn pi(prec: u32) -> Enclosure {
    let work = prec + GUARD_BITS;
    let a = atan_inv(5, work).mul_int(&BigInt::from(16));
    let b = atan_inv(239, work).mul_int(&BigInt::from(4));
    a.sub(&b).round_to(prec)
}

/// Alternating Taylor series `Σ (−1)^k x^(2k+offset)/(2k+offset)!` for
/// `0 <= x <= π/2` (`offset = 0` gives cos, `1` gives sin).
fn taylor(x: &Enclosure, offset: u64) -> Enclosure {
    debug_assert!(x.is_nonnegative());
    let prec = x.prec;
    let x2 = x.mul(x);
    let mut term = if offset == 0 {
        Enclosure::from_int(1, prec)
    } else {
        x.clone()
    };
    let mut sum = Enclosure::from_int(0, prec);
    let mut k: u64 = 0;
    loop {
        sum = if k.is_multiple_of(2) {
            sum.add(&term)
        } else {
            sum.sub(&term)
        };
        let a = 2 * k + 1 + offset;
        term = term.mul(&x2).div_int(&BigInt::from(a * (a + 1)));
        k += 1;
        // past the first term the magnitudes decrease, so the tail is bounded
        // by the next term
        if k >= 2 && term.hi <= BigInt::one() {
            return sum.widen(&term.hi.clone().max(BigInt::one()));
        }
    }
}

/// Enclosures of `cos(π·num/den)` and `sin(π·num/den)`.
pub fn cos_sin_pi(num: i64, den: i64, prec: u32) -> (Enclosure, Enclosure) {
    assert!(den > 0);
    let work = prec + GUARD_BITS;
    let mut n = num.rem_euclid(2 * den);
    let mut cos_sign = 1;
    let mut sin_sign = 1;
    if n >= den {
        n -= den;
        cos_sign = -cos_sign;
        sin_sign = -sin_sign;
    }
    if 2 * n > den {
        n = den - n;
        cos_sign = -cos_sign;
    }
    let x = pi(work)
        .mul_int(&BigInt::from(n))
        .div_int(&BigInt::from(den));
    // x may dip below zero only by rounding when n == 0
    let x = if n == 0 {
        Enclosure::from_int(0, work)
    } else {
        x
    };
    let c = taylor(&x, 0);
    let s = taylor(&x, 1);
    let c = if cos_sign < 0 { c.neg() } else { c };
    let s = if sin_sign < 0 { s.neg() } else { s };
    (c.round_to(prec), s.round_to(prec))
}

/// `cot(π·num/den)` for `0 < num/den < 1`.
pub fn cot_pi(num: i64, den: i64, prec: u32) -> Enclosure {
    assert!(0 < num && num < den);
    let work = prec + GUARD_BITS;
    let (c, s) = cos_sin_pi(num, den, work);
    c.div_positive(&s)
        .expect("sine is positive on (0, π)")
        .round_to(prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(e: &Enclosure, v: f64) -> bool {
        let tol = 1e-15;
        e.lo_rational() <= BigRational::from_float(v + tol).unwrap()
            && e.hi_rational() >= BigRational::from_float(v - tol).unwrap()
    }

    #[test]
    fn pi_digits() {
        let p = pi(200);
        assert!(contains(&p, std::f64::consts::PI));
        // width is a handful of ulps at the requested grid
        assert!(p.width_scaled() <= BigInt::from(8));
        let lo = p.lo_rational();
        let known = BigRational::new(
            "314159265358979323846264338327950288419716939937510"
                .parse()
                .unwrap(),
            BigInt::from(10).pow(50),
        );
        assert!((lo - known).abs() < BigRational::new(BigInt::one(), BigInt::from(10).pow(48)));
    }

    #[test]
    fn trig_values() {
        for (num, den) in [
            (0, 1),
            (1, 3),
            (2, 3),
            (1, 2),
            (2, 5),
            (7, 5),
            (-3, 7),
            (11, 4),
        ] {
            let (c, s) = cos_sin_pi(num, den, 80);
            let x = std::f64::consts::PI * num as f64 / den as f64;
            assert!(contains(&c, x.cos()), "cos {num}/{den}");
            assert!(contains(&s, x.sin()), "sin {num}/{den}");
            assert!(c.width_scaled() < BigInt::from(64));
        }
        let (c, s) = cos_sin_pi(1, 2, 64);
        assert!(c.lo_scaled() <= &BigInt::zero() && c.hi_scaled() >= &BigInt::zero());
        assert_eq!(s.sign(), Some(Ordering::Greater));
    }

    #[test]
    fn cotangent() {
        let t = cot_pi(1, 3, 100);
        assert!(contains(&t, 1.0 / 3f64.sqrt()));
        let t = cot_pi(3, 7, 100);
        assert!(contains(&t, 1.0 / (3.0 * std::f64::consts::PI / 7.0).tan()));
    }

    #[test]
    fn outward_rounding() {
        let third = Enclosure::from_ratio(&BigInt::one(), &BigInt::from(3), 10);
        assert!(third.lo_rational() < BigRational::new(1.into(), 3.into()));
        assert!(third.hi_rational() > BigRational::new(1.into(), 3.into()));
        let sq = third.mul(&third);
        let ninth = BigRational::new(1.into(), 9.into());
        assert!(sq.lo_rational() <= ninth && sq.hi_rational() >= ninth);
        let coarse = third.round_to(4);
        assert!(coarse.lo_rational() <= third.lo_rational());
        assert!(coarse.hi_rational() >= third.hi_rational());
    }
}
