use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use proptest::prelude::*;

use torus_twist::knot::TorusKnotParams;
use torus_twist::seifert::{genus_from_form, seifert_matrix, torus_braid, torus_seifert_form};

/// Fraction-free Gaussian elimination.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`.
fn torus_alexander(p: u32, q: u32, t: i64) -> BigInt {
    let t = BigInt::from(t);
    let pow = |e: u32| Pow::pow(&t, e) - BigInt::one();
    let num = pow(p * q) * (&t - BigInt::one());
    let den = pow(p) * pow(q);
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero());
    quot
}

fn alexander_from_form(p: i64, q: i64, t: i64) -> BigInt {
    let v = torus_seifert_form(TorusKnotParams::new(p, q).unwrap()).unwrap();
    let n = v.dimension();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(v.get(i, j)) - BigInt::from(t) * BigInt::from(v.get(j, i)))
                .collect()
        })
        .collect();
    bareiss(m)
}

#[test]
fn trefoil_form() {
    let v = torus_seifert_form(TorusKnotParams::new(2, 3).unwrap()).unwrap();
    assert_eq!(v.rows(), vec![vec![-1, 1], vec![0, -1]]);
    assert_eq!(alexander_from_form(2, 3, 2).abs(), torus_alexander(2, 3, 2));
}

#[test]
fn alexander_polynomials_agree() {
    for q in 3..=11i64 {
        for p in 2..q {
            if p.gcd(&q) != 1 {
                continue;
            }
            let signs: Vec<bool> = [2, 3, 5, -2]
                .into_iter()
                .map(|t| {
                    let a = alexander_from_form(p, q, t);
                    let b = torus_alexander(p as u32, q as u32, t);
                    assert_eq!(a.abs(), b.abs(), "T({p},{q}) at t={t}");
                    a == b
                })
                .collect();
            assert!(
                signs.iter().all(|&s| s == signs[0]),
                "T({p},{q}): inconsistent unit"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intersection_form_is_unimodular(p in 2i64..9, q in 3i64..13) {
        prop_assume!(p < q && p.gcd(&q) == 1);
        let v = seifert_matrix(&torus_braid(p, q).unwrap()).unwrap();
        let n = v.dimension();
        prop_assert_eq!(n as i64, (p - 1) * (q - 1));
        prop_assert_eq!(genus_from_form(&v).unwrap() as i64, (p - 1) * (q - 1) / 2);
        let skew: Vec<Vec<BigInt>> = v.antisymmetrized().into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        prop_assert_eq!(bareiss(skew), BigInt::one());
    }
}
