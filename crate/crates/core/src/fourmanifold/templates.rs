//! Built-in twist sequences that untie a torus knot after the hypothesized
//! first move.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::TorusKnotParams;

use super::sequence::{RawStep, TwistSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum TemplateKind {
    /// `q = p + r`, `p = 2nr + sign`:
    /// `T(p,p+r) →(−1,p) T(p,r) ≅ T(r,p) →(−2n,r) T(r,±1)`.
    StrandReduction { n: i64, r: i64, sign: i64 },
    /// `q = p + 4`, `p = 8n + 3`:
    /// `→(−1,p) T(4,p) →(−2n,4) T(4,3) ≅ T(3,4) →(−1,3) T(3,1)`.
    FourStrandUp { n: i64 },
    /// `q = p + 4`, `p = 8n − 3`:
    /// `→(−1,p) T(4,p) →(−2n,4) T(4,−3) ≅ T(3,−4) →(1,3) T(3,−1)`.
    FourStrandDown { n: i64 },
    /// `q = 2p − 2`, `p ≡ 1 (mod 4)`:
    /// `→(−1,p) T(p,p−2) →(−1,p) T(p,−2) ≅ T(2,−p) →((p−1)/2,2) T(2,−1)`.
    DoubleUntwist { p: i64 },
}

impl fmt::Display for TemplateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TemplateKind::StrandReduction { n, r, sign } => {
                let s = if sign > 0 { '+' } else { '-' };
                write!(f, "strand-reduction(p=2nr{s}1, n={n}, r={r})")
            }
            TemplateKind::FourStrandUp { n } => write!(f, "four-strand(p=8n+3, n={n})"),
            TemplateKind::FourStrandDown { n } => write!(f, "four-strand(p=8n-3, n={n})"),
            TemplateKind::DoubleUntwist { p } => write!(f, "double-untwist(p={p})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub kind: TemplateKind,
    pub sequence: TwistSequence,
}

fn t(p: i64, q: i64) -> Result<TorusKnotParams> {
    TorusKnotParams::new(p, q)
}

fn twist(n: i64, omega: i64, result: TorusKnotParams) -> RawStep {
    RawStep::Twist {
        n,
        omega: omega as u64,
        result,
    }
}

fn steps_for(kind: TemplateKind, p: i64, q: i64) -> Result<Vec<RawStep>> {
    Ok(match kind {
        TemplateKind::StrandReduction { n, r, sign } => vec![
            twist(-1, p, t(p, q - p)?),
            RawStep::Identify(t(r, p)?),
            twist(-2 * n, r, t(r, sign)?),
        ],
        TemplateKind::FourStrandUp { n } => vec![
            twist(-1, p, t(p, 4)?),
            RawStep::Identify(t(4, p)?),
            twist(-2 * n, 4, t(4, 3)?),
            RawStep::Identify(t(3, 4)?),
            twist(-1, 3, t(3, 1)?),
        ],
        TemplateKind::FourStrandDown { n } => vec![
            twist(-1, p, t(p, 4)?),
            RawStep::Identify(t(4, p)?),
            twist(-2 * n, 4, t(4, -3)?),
            RawStep::Identify(t(3, -4)?),
            twist(1, 3, t(3, -1)?),
        ],
        TemplateKind::DoubleUntwist { p } => vec![
            twist(-1, p, t(p, p - 2)?),
            twist(-1, p, t(p, -2)?),
            RawStep::Identify(t(2, -p)?),
            twist((p - 1) / 2, 2, t(2, -1)?),
        ],
    })
}

/// Kinds of built-in sequence that apply to `T(p,q)` with `0 < p < q`.
pub fn applicable_kinds(p: i64, q: i64) -> Vec<TemplateKind> {
    let mut out = Vec::new();
    if p < 3 || q <= p {
        return out;
    }
    let r = q - p;
    if r >= 2 && r % 2 == 0 {
        for sign in [1, -1] {
            let m = p - sign;
            if m > 0 && m % (2 * r) == 0 {
                out.push(TemplateKind::StrandReduction {
                    n: m / (2 * r),
                    r,
                    sign,
                });
            }
        }
    }
    if r == 4 && p % 8 == 3 && p >= 11 {
        out.push(TemplateKind::FourStrandUp { n: (p - 3) / 8 });
    }
    if r == 4 && p % 8 == 5 && p >= 5 {
        out.push(TemplateKind::FourStrandDown { n: (p + 3) / 8 });
    }
    if q == 2 * p - 2 && p % 4 == 1 && p >= 5 {
        out.push(TemplateKind::DoubleUntwist { p });
    }
    out
}

/// Built-in sequences for a normalized knot, each validated step by step.
pub fn template_sequences(k: TorusKnotParams) -> Result<Vec<Template>> {
    let k = k.require_normalized()?;
    let (p, q) = (k.p(), k.q());
    applicable_kinds(p, q)
        .into_iter()
        .map(|kind| {
            let sequence = TwistSequence::build(k, steps_for(kind, p, q)?).map_err(|e| {
                Error::Consistency(format!("built-in sequence {kind} for {k} is invalid: {e}"))
            })?;
            Ok(Template { kind, sequence })
        })
        .collect()
}
