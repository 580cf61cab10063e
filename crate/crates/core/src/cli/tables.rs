//! Classification tables for the infinite families `T(p, p+r)`.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::TorusKnotParams;
use crate::obstruction::{classify_with, CandidateTwist, ClassifyOptions, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `T(p, p+4)` with `p = 8n+1` or `p = 8n+3`.
    PPlus4,
    /// `T(p, p+r)` with `p = 2nr+1`, `r >= 4`, `2p >= (r/2+1)² − r/2`, or
    /// `p = 2nr−1`, `r >= 8`, `2p >= (r/2−1)² − r/2`.
    PPlusR,
    /// `T(p, p+r)` with `p = 2nr+1` for `4 <= r <= 14` and `p = 2nr−1` for
    /// `8 <= r <= 20`, `r` even.
    BoundedR,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p-plus-4" => Ok(Family::PPlus4),
            "p-plus-r" => Ok(Family::PPlusR),
            "bounded-r" => Ok(Family::BoundedR),
            _ => Err(Error::Domain(format!(
                "unknown family {s}; expected p-plus-4, p-plus-r or bounded-r"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// Residue description such as `p=2nr+1`.
    pub shape: String,
    pub n: i64,
    pub r: i64,
    pub p: i64,
    pub q: i64,
    pub verdict: Verdict,
    pub survivors: Vec<CandidateTwist>,
}

fn plus_constraint(p: i64, r: i64) -> bool {
    let h = r / 2;
    2 * p >= (h + 1) * (h + 1) - h
}

fn minus_constraint(p: i64, r: i64) -> bool {
    let h = r / 2;
    2 * p >= (h - 1) * (h - 1) - h
}

/// `(shape, n, r, p)` members of the family for `n` in the given range.
pub fn members(family: Family, n_min: i64, n_max: i64) -> Result<Vec<(String, i64, i64, i64)>> {
    if n_min < 1 || n_min > n_max {
        return Err(Error::Domain(
            "n range must be nonempty and start at 1 or above".into(),
        ));
    }
    let mut out = Vec::new();
    for n in n_min..=n_max {
        match family {
            Family::PPlus4 => {
                out.push(("p=8n+1".to_string(), n, 4, 8 * n + 1));
                out.push(("p=8n+3".to_string(), n, 4, 8 * n + 3));
            }
            Family::PPlusR => {
                let mut r = 4;
                while plus_constraint(2 * n * r + 1, r) {
                    out.push(("p=2nr+1".to_string(), n, r, 2 * n * r + 1));
                    r += 2;
                }
                let mut r = 8;
                while minus_constraint(2 * n * r - 1, r) {
                    out.push(("p=2nr-1".to_string(), n, r, 2 * n * r - 1));
                    r += 2;
                }
            }
            Family::BoundedR => {
                for r in (4..=14).step_by(2) {
                    out.push(("p=2nr+1".to_string(), n, r, 2 * n * r + 1));
                }
                for r in (8..=20).step_by(2) {
                    out.push(("p=2nr-1".to_string(), n, r, 2 * n * r - 1));
                }
            }
        }
    }
    Ok(out)
}

/// Classifies every member of the family; rows keep the enumeration order.
pub fn family_table(
    family: Family,
    n_min: i64,
    n_max: i64,
    options: &ClassifyOptions,
) -> Result<Vec<TableRow>> {
    members(family, n_min, n_max)?
        .into_par_iter()
        .map(|(shape, n, r, p)| {
            let c = classify_with(TorusKnotParams::new(p, p + r)?, options)?;
            Ok(TableRow {
                shape,
                n,
                r,
                p,
                q: p + r,
                verdict: c.verdict,
                survivors: c.survivors,
            })
        })
        .collect()
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut o = String::new();
    writeln!(o, "| shape | n | r | knot | verdict | survivors |").unwrap();
    writeln!(o, "|---|---|---|---|---|---|").unwrap();
    for row in rows {
        let survivors = if row.survivors.is_empty() {
            "∅".to_string()
        } else {
            row.survivors
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(
            o,
            "| {} | {} | {} | T({},{}) | {} | {} |",
            row.shape, row.n, row.r, row.p, row.q, row.verdict, survivors
        )
        .unwrap();
    }
    o
}
