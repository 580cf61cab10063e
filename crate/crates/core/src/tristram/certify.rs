//! Inertia of `M(t) = M0 + t·M1` (integer symmetric `M0`, `M1`) certified by
//! a rounded congruence.
//!
//! Floating-point eigenvectors of `M(t̃)` give an approximately diagonalizing
//! basis `X`. It is rounded to an integer matrix `Xi`, the products
//! `P = Xi·M0·Xiᵀ` and `Q = Xi·M1·Xiᵀ` are formed exactly, and Gershgorin
//! discs of `P + t·Q` are bounded over a dyadic enclosure of `t`. When every
//! disc avoids zero, `Xi` is invertible and the inertia of `M(t)` is read off
//! the signs of the disc centres.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::enclosure::Enclosure;

/// Sparse symmetric integer matrix as `(row, col, value)` triples.
pub(crate) type Sparse = Vec<(usize, usize, i64)>;

pub(crate) struct RoundedCongruence {
    n: usize,
    p: Vec<i128>,
    q: Option<Vec<i128>>,
}

fn sparse_to_dense(m: &Sparse, scale: f64, out: &mut DMatrix<f64>) {
    for &(r, c, v) in m {
        out[(r, c)] += v as f64 * scale;
    }
}

fn ceil_log2(x: u64) -> u32 {
    64 - x.saturating_sub(1).leading_zeros()
}

/// `Xi·M·Xiᵀ` computed exactly; `xi` is row-major `n×n`.
fn congruence(n: usize, xi: &[i64], m: &Sparse) -> Vec<i128> {
    // b = Xi·M
    let mut b = vec![0i128; n * n];
    for &(k, l, v) in m {
        let v = v as i128;
        for r in 0..n {
            let x = xi[r * n + k];
            if x != 0 {
                b[r * n + l] += x as i128 * v;
            }
        }
    }
    let mut out = vec![0i128; n * n];
    for r in 0..n {
        let br = &b[r * n..(r + 1) * n];
        for s in r..n {
            let xs = &xi[s * n..(s + 1) * n];
            let v: i128 = br.iter().zip(xs).map(|(&a, &x)| a * x as i128).sum();
            out[r * n + s] = v;
            out[s * n + r] = v;
        }
    }
    out
}

impl RoundedCongruence {
    /// Returns `None` when the floating-point spectrum of `M(t̃)` has an
    /// eigenvalue too close to zero to be separated by this route.
    pub(crate) fn prepare(n: usize, m0: &Sparse, m1: Option<(&Sparse, f64)>) -> Option<Self> {
        if n == 0 {
            return Some(Self {
                n,
                p: Vec::new(),
                q: m1.map(|_| Vec::new()),
            });
        }
        let mut dense = DMatrix::<f64>::zeros(n, n);
        sparse_to_dense(m0, 1.0, &mut dense);
        if let Some((m, t)) = m1 {
            sparse_to_dense(m, t, &mut dense);
        }
        let eig = dense.symmetric_eigen();
        let max = eig.eigenvalues.iter().fold(1.0f64, |a, v| a.max(v.abs()));
        let min = eig
            .eigenvalues
            .iter()
            .fold(f64::INFINITY, |a, v| a.min(v.abs()));
        if !(min > 1e-9 * max) {
            return None;
        }

        // keep every exact product below 2^125
        let mut row_sums = vec![0u64; n];
        for &(r, _, v) in m0.iter().chain(m1.map(|(m, _)| m).into_iter().flatten()) {
            row_sums[r] += v.unsigned_abs();
        }
        let l = row_sums.into_iter().max().unwrap_or(1).max(1);
        let budget = 125i64 - ceil_log2(l) as i64 - ceil_log2(n as u64) as i64;
        let g = (budget / 2).clamp(8, 52) as i32;
        if 2 * g as i64 + ceil_log2(l) as i64 + ceil_log2(n as u64) as i64 > 125 {
            return None;
        }
        let scale = 2f64.powi(g);
        let mut xi = vec![0i64; n * n];
        for r in 0..n {
            for k in 0..n {
                xi[r * n + k] = (eig.eigenvectors[(k, r)] * scale).round() as i64;
            }
        }
        Some(Self {
            n,
            p: congruence(n, &xi, m0),
            q: m1.map(|(m, _)| congruence(n, &xi, m)),
        })
    }

    /// Counts `(positive, negative)` eigenvalues of `M(t)` for every `t` in
    /// the enclosure, or `None` if some disc still meets zero.
    pub(crate) fn certify(&self, t: Option<&Enclosure>) -> Option<(usize, usize)> {
        let n = self.n;
        let (shift, tl, th) = match (t, &self.q) {
            (Some(t), Some(_)) => (
                t.prec() as usize,
                t.lo_scaled().clone(),
                t.hi_scaled().clone(),
            ),
            _ => (0, BigInt::zero(), BigInt::zero()),
        };
        let entry = |idx: usize, tv: &BigInt| -> BigInt {
            let mut v = BigInt::from(self.p[idx]) << shift;
            if let Some(q) = &self.q {
                if q[idx] != 0 && !tv.is_zero() {
                    v += tv * BigInt::from(q[idx]);
                }
            }
            v
        };
        let mut plus = 0;
        let mut minus = 0;
        for i in 0..n {
            let a = entry(i * n + i, &tl);
            let b = entry(i * n + i, &th);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut radius = BigInt::zero();
            for j in 0..n {
                if j == i {
                    continue;
                }
                let idx = i * n + j;
                let a = entry(idx, &tl).abs();
                let b = entry(idx, &th).abs();
                radius += a.max(b);
            }
            if lo > radius {
                plus += 1;
            } else if hi < -radius {
                minus += 1;
            } else {
                return None;
            }
        }
        Some((plus, minus))
    }
}
