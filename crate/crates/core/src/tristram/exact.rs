//! Inertia by exact Hermitian elimination over `Q(ζ)`.
//!
//! Pivots are exact cyclotomic numbers; only their signs are decided
//! numerically, through rigorous enclosures of `Σ c_k cos(2πk/d)`.

use std::cmp::Ordering;

use super::cyclotomic::{real_sign, CosineCache, CycElem};
use super::Inertia;

/// Outcome of an elimination: the inertia, or the index of a pivot whose
/// sign stayed ambiguous at every precision offered.
pub(crate) enum ExactOutcome {
    Decided(Inertia),
    Undecided,
}

/// `h` must be Hermitian; entries are indexed `h[row][col]`.
pub(crate) fn exact_inertia(mut h: Vec<Vec<CycElem>>, precisions: &[u32]) -> ExactOutcome {
    let mut active: Vec<usize> = (0..h.len()).collect();
    let mut cache = CosineCache::default();
    let mut inertia = Inertia::default();

    while !active.is_empty() {
        let pivot = active.iter().position(|&i| !h[i][i].is_zero());
        let Some(pos) = pivot else {
            match find_offdiagonal(&h, &active) {
                None => {
                    inertia.n_zero += active.len();
                    break;
                }
                Some((j, k)) => {
                    combine(&mut h, &active, j, k);
                    continue;
                }
            }
        };
        let i = active.remove(pos);
        let d = h[i][i].clone();
        match real_sign(&d, &mut cache, precisions.iter().copied()) {
            Some(Ordering::Greater) => inertia.n_plus += 1,
            Some(Ordering::Less) => inertia.n_minus += 1,
            _ => return ExactOutcome::Undecided,
        }
        let d_inv = d.inv().expect("pivot is nonzero");
        // row i scaled by the inverse pivot
        let scaled: Vec<CycElem> = active.iter().map(|&k| d_inv.mul(&h[i][k])).collect();
        for &j in &active {
            let hji = h[j][i].clone();
            if hji.is_zero() {
                continue;
            }
            for (&k, s) in active.iter().zip(&scaled) {
                if !s.is_zero() {
                    h[j][k] = h[j][k].sub(&hji.mul(s));
                }
            }
        }
    }
    ExactOutcome::Decided(inertia)
}

fn find_offdiagonal(h: &[Vec<CycElem>], active: &[usize]) -> Option<(usize, usize)> {
    for &j in active {
        for &k in active {
            if j != k && !h[j][k].is_zero() {
                return Some((j, k));
            }
        }
    }
    None
}

/// Replaces basis vector `j` by `e_j + u·e_k` with `u ∈ {1, ζ}` chosen so that
/// the new diagonal entry `2·Re(u·h[k][j])` is nonzero.
fn combine(h: &mut [Vec<CycElem>], active: &[usize], j: usize, k: usize) {
    let d = h[j][k].degree();
    let one = CycElem::from_int(d, 1);
    let zeta = CycElem::root_power(d, 1);
    let u = [one, zeta]
        .into_iter()
        .find(|u| {
            let t = u.mul(&h[k][j]);
            !t.add(&t.conj()).is_zero()
        })
        .expect("a nonzero entry has a nonzero real part after rotation by 1 or ζ");
    let u_bar = u.conj();
    // row j += u·row k, then column j += ū·column k
    for &c in active {
        let add = u.mul(&h[k][c]);
        h[j][c] = h[j][c].add(&add);
    }
    for &r in active {
        let add = h[r][k].mul(&u_bar);
        h[r][j] = h[r][j].add(&add);
    }
}
