//! Seifert matrices of positive braid closures.
//!
//! The closure of a positive braid on `s` strands bounds the surface made of
//! `s` stacked disks joined by one half-twisted band per letter. Its first
//! homology has one basis cycle for each pair of consecutive occurrences of
//! the same generator, so the rank is `#letters − s + 1`.
//!
//! Entries of the linking form `V` on that basis, with cycle `x` spanning
//! letters `a < b` of generator `g` and cycle `y` spanning `c < e`:
//!
//! * `V(x,x) = −1`;
//! * `V(x,y) = 1` when `y` is the next cycle of generator `g` (`c = b`);
//! * for `y` on generator `g + 1`: `V(y,x) = 1` if `a < c < b < e`,
//!   `V(y,x) = −1` if `c < a < e < b`;
//! * everything else is zero.
//!
//! With this orientation the trefoil gives `[[−1, 1], [0, −1]]` and positive
//! braids have negative signature.

use std::fmt;

use crate::error::{Error, Result};
use crate::knot::TorusKnotParams;

/// A positive braid word: each letter `i` is the generator `σ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Domain(format!(
                "a braid needs at least 2 strands, got {strands}"
            )));
        }
        if let Some(bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(Error::Domain(format!(
                "generator σ_{bad} does not exist on {strands} strands"
            )));
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            perm.swap(g - 1, g);
        }
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        count
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} strands]", self.strands)?;
        for g in &self.letters {
            write!(f, " s{g}")?;
        }
        Ok(())
    }
}

/// `(σ₁σ₂⋯σ_{p−1})^q`, whose closure is `T(p,q)`.
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord> {
    let k = TorusKnotParams::new(p, q)?;
    if !(2 <= p && p < q) {
        return Err(Error::NotNormalized { p: k.p(), q: k.q() });
    }
    let p = p as usize;
    let letters = (0..q).flat_map(|_| 1..p).collect();
    BraidWord::new(p, letters)
}

/// An integer Seifert matrix together with its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertForm {
    dimension: usize,
    // row-major
    entries: Vec<i64>,
}

impl SeifertForm {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dimension = rows.len();
        if rows.iter().any(|r| r.len() != dimension) {
            return Err(Error::Domain("Seifert matrix must be square".into()));
        }
        Ok(Self {
            dimension,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dimension + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.dimension + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dimension.max(1))
            .take(self.dimension)
            .map(|r| r.to_vec())
            .collect()
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.dimension;
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) + self.get(j, i)).collect())
            .collect()
    }

    /// `V − Vᵀ`.
    pub fn antisymmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.dimension;
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) - self.get(j, i)).collect())
            .collect()
    }

    /// Plain-text integer grid, one row per line.
    pub fn to_grid_string(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SeifertForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid_string())
    }
}

#[derive(Debug, Clone, Copy)]
struct Cycle {
    generator: usize,
    from: usize,
    to: usize,
}

/// Seifert matrix of the closure of a positive braid whose closure is a knot.
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertForm> {
    let components = b.components();
    if components != 1 {
        return Err(Error::MultiComponent { components });
    }

    let mut cycles = Vec::new();
    for g in 1..b.strands {
        let positions: Vec<usize> = b
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == g)
            .map(|(k, _)| k)
            .collect();
        cycles.extend(positions.windows(2).map(|w| Cycle {
            generator: g,
            from: w[0],
            to: w[1],
        }));
    }

    let n = cycles.len();
    debug_assert_eq!(n, b.letters.len() + 1 - b.strands);
    let mut form = SeifertForm {
        dimension: n,
        entries: vec![0; n * n],
    };
    for (x, cx) in cycles.iter().enumerate() {
        form.set(x, x, -1);
        for (y, cy) in cycles.iter().enumerate() {
            if cy.generator == cx.generator && cy.from == cx.to {
                form.set(x, y, 1);
            } else if cy.generator == cx.generator + 1 {
                let (a, b, c, e) = (cx.from, cx.to, cy.from, cy.to);
                if a < c && c < b && b < e {
                    form.set(y, x, 1);
                } else if c < a && a < e && e < b {
                    form.set(y, x, -1);
                }
            }
        }
    }
    Ok(form)
}

/// Genus of the surface carrying the form.
pub fn genus_from_form(f: &SeifertForm) -> Result<usize> {
    if !f.dimension.is_multiple_of(2) {
        return Err(Error::Consistency(format!(
            "Seifert form of odd dimension {} cannot come from a knot",
            f.dimension
        )));
    }
    Ok(f.dimension / 2)
}

/// Seifert form of `T(p,q)` for `2 <= p < q`.
pub fn torus_seifert_form(k: TorusKnotParams) -> Result<SeifertForm> {
    seifert_matrix(&torus_braid(k.p(), k.q())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_braid_lengths() {
        assert_eq!(torus_braid(2, 3).unwrap().letters(), &[1, 1, 1]);
        let b = torus_braid(3, 4).unwrap();
        assert_eq!((b.strands(), b.letters().len()), (3, 8));
        let b = torus_braid(5, 8).unwrap();
        assert_eq!((b.strands(), b.letters().len()), (5, 32));
        assert!(torus_braid(4, 6).is_err());
        assert!(torus_braid(5, 3).is_err());
    }

    #[test]
    fn trefoil_form() {
        let f = torus_seifert_form(TorusKnotParams::new(2, 3).unwrap()).unwrap();
        assert_eq!(f.rows(), vec![vec![-1, 1], vec![0, -1]]);
        assert_eq!(f.to_grid_string(), "-1  1\n 0 -1\n");
    }

    #[test]
    fn dimensions_and_genus() {
        for (p, q, g) in [(2, 3, 1), (5, 8, 14), (5, 7, 12), (3, 4, 3)] {
            let f = torus_seifert_form(TorusKnotParams::new(p, q).unwrap()).unwrap();
            assert_eq!(f.dimension() as i64, (p - 1) * (q - 1));
            assert_eq!(genus_from_form(&f).unwrap(), g);
        }
        let odd = SeifertForm::from_rows(vec![vec![-1]]).unwrap();
        assert!(genus_from_form(&odd).is_err());
    }

    #[test]
    fn links_are_rejected() {
        let b = BraidWord::new(2, vec![1, 1]).unwrap();
        assert_eq!(b.components(), 2);
        assert!(matches!(
            seifert_matrix(&b),
            Err(Error::MultiComponent { components: 2 })
        ));
        let split = BraidWord::new(3, vec![1, 1, 1]).unwrap();
        assert!(seifert_matrix(&split).is_err());
    }

    #[test]
    fn invalid_letters() {
        assert!(BraidWord::new(3, vec![1, 3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![]).is_err());
    }
}
