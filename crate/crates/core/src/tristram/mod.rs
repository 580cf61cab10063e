//! Tristram `d`-signatures `σ_d`, the signature of the Hermitian form
//! `(1−ζ)V + (1−ζ̄)Vᵀ` at `ζ = exp(2πi·⌊d/2⌋/d)` for a prime `d`.
//!
//! Writing `S = V + Vᵀ`, `A = V − Vᵀ` and `θ = 2π⌊d/2⌋/d`, the form is
//! `(1 − cos θ)·S − i·sin θ·A`. Dividing by `1 − cos θ > 0` leaves
//! `S − i·t·A` with `t = cot(θ/2)`, whose inertia is half that of the real
//! symmetric matrix `[[S, tA], [−tA, S]]`.
//!
//! Inertia is certified in one of two ways: a rounded congruence checked with
//! Gershgorin discs over an enclosure of `t`, or exact elimination in the
//! cyclotomic field when the first route cannot separate the spectrum from
//! zero (singular and nearly singular forms).

pub mod cyclotomic;
pub mod enclosure;

mod certify;
mod counting;
mod exact;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::knot::{normalize, TorusKnotParams};
use crate::seifert::{torus_seifert_form, SeifertForm};

use certify::{RoundedCongruence, Sparse};
use cyclotomic::CycElem;
use exact::{exact_inertia, ExactOutcome};

pub use counting::counting_sigma;

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn dimension(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

/// Exact coefficients of one entry: the real part is
/// `one + cos·cos θ` and the imaginary part is `sin·sin θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormEntry {
    pub one: i64,
    pub cos: i64,
    pub sin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianForm {
    dimension: usize,
    sym: Vec<i64>,
    skew: Vec<i64>,
    a: u32,
    d: u32,
}

fn check_prime(d: u32) -> Result<()> {
    if is_prime(d as u64) {
        Ok(())
    } else {
        Err(Error::Domain(format!("d = {d} is not prime")))
    }
}

impl HermitianForm {
    /// Form with symmetric part `sym` and antisymmetric part `skew`
    /// (`V + Vᵀ` and `V − Vᵀ` for a Seifert matrix `V`).
    pub fn from_parts(sym: Vec<Vec<i64>>, skew: Vec<Vec<i64>>, d: u32) -> Result<Self> {
        check_prime(d)?;
        let n = sym.len();
        let square = |m: &Vec<Vec<i64>>| m.len() == n && m.iter().all(|r| r.len() == n);
        if !square(&sym) || !square(&skew) {
            return Err(Error::Domain(
                "form parts must be square of equal size".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if sym[i][j] != sym[j][i] || skew[i][j] != -skew[j][i] {
                    return Err(Error::Domain(
                        "form parts must be symmetric and antisymmetric".into(),
                    ));
                }
            }
        }
        Ok(Self {
            dimension: n,
            sym: sym.into_iter().flatten().collect(),
            skew: skew.into_iter().flatten().collect(),
            a: d / 2,
            d,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Numerator of the evaluation angle `2π·a/d`.
    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn entry(&self, j: usize, k: usize) -> FormEntry {
        let idx = j * self.dimension + k;
        let (s, a) = (self.sym[idx], self.skew[idx]);
        FormEntry {
            one: s,
            cos: -s,
            sin: -a,
        }
    }

    /// Floating-point value of an entry as `(re, im)`.
    pub fn entry_f64(&self, j: usize, k: usize) -> (f64, f64) {
        let e = self.entry(j, k);
        let theta = 2.0 * std::f64::consts::PI * self.a as f64 / self.d as f64;
        (
            e.one as f64 + e.cos as f64 * theta.cos(),
            e.sin as f64 * theta.sin(),
        )
    }

    fn sparse_sym(&self, offset: usize, out: &mut Sparse) {
        let n = self.dimension;
        for j in 0..n {
            for k in 0..n {
                let v = self.sym[j * n + k];
                if v != 0 {
                    out.push((j + offset, k + offset, v));
                }
            }
        }
    }

    fn cyclotomic(&self) -> Vec<Vec<CycElem>> {
        let d = self.d as usize;
        let za = CycElem::root_power(d, self.a as i64);
        let zb = za.conj();
        let half = num_rational::BigRational::new(1.into(), 2.into());
        let cos = za.add(&zb).scale(&half);
        let isin = za.sub(&zb).scale(&half);
        let one = CycElem::from_int(d, 1);
        let re_factor = one.sub(&cos);
        let n = self.dimension;
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        let idx = j * n + k;
                        let s = num_rational::BigRational::from_integer(self.sym[idx].into());
                        let a = num_rational::BigRational::from_integer(self.skew[idx].into());
                        re_factor.scale(&s).sub(&isin.scale(&a))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Builds the form of a Seifert matrix at `ζ = exp(2πi⌊d/2⌋/d)`.
pub fn build_form(f: &SeifertForm, d: u32) -> Result<HermitianForm> {
    HermitianForm::from_parts(f.symmetrized(), f.antisymmetrized(), d)
}

/// Which certification route [`inertia_with`] may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InertiaStrategy {
    /// Rounded congruence first, exact elimination when it cannot decide.
    #[default]
    Auto,
    RoundedCongruence,
    ExactElimination,
}

/// Working precisions: `initial_bits`, doubled until `cap_bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub initial_bits: u32,
    pub cap_bits: u32,
    pub strategy: InertiaStrategy,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        Self {
            initial_bits: 64,
            cap_bits: 1024,
            strategy: InertiaStrategy::Auto,
        }
    }
}

impl PrecisionPolicy {
    pub fn with_cap(cap_bits: u32) -> Self {
        Self {
            cap_bits,
            ..Self::default()
        }
    }

    fn schedule(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut bits = self.initial_bits.max(1);
        while bits < self.cap_bits {
            out.push(bits);
            bits = bits.saturating_mul(2);
        }
        out.push(self.cap_bits.max(1));
        out
    }
}

pub fn inertia(h: &HermitianForm) -> Result<Inertia> {
    inertia_with(h, &PrecisionPolicy::default())
}

pub fn inertia_with(h: &HermitianForm, policy: &PrecisionPolicy) -> Result<Inertia> {
    if h.dimension == 0 {
        return Ok(Inertia::default());
    }
    let schedule = policy.schedule();
    if policy.strategy != InertiaStrategy::ExactElimination {
        if let Some(i) = rounded_inertia(h, &schedule)? {
            return Ok(i);
        }
        if policy.strategy == InertiaStrategy::RoundedCongruence {
            return Err(Error::Undecided {
                cap_bits: policy.cap_bits,
                detail: format!(
                    "rounded congruence could not separate the spectrum of a {}-dimensional form from zero",
                    h.dimension
                ),
            });
        }
    }
    match exact_inertia(h.cyclotomic(), &schedule) {
        ExactOutcome::Decided(i) => Ok(i),
        ExactOutcome::Undecided => Err(Error::Undecided {
            cap_bits: policy.cap_bits,
            detail: format!("a pivot sign of the d = {} form stayed unresolved", h.d),
        }),
    }
}

fn rounded_inertia(h: &HermitianForm, schedule: &[u32]) -> Result<Option<Inertia>> {
    let n = h.dimension;
    if h.d == 2 {
        let mut m0 = Sparse::new();
        h.sparse_sym(0, &mut m0);
        let Some(rc) = RoundedCongruence::prepare(n, &m0, None) else {
            return Ok(None);
        };
        return Ok(rc.certify(None).map(|(p, m)| Inertia {
            n_plus: p,
            n_zero: 0,
            n_minus: m,
        }));
    }

    let mut m0 = Sparse::new();
    h.sparse_sym(0, &mut m0);
    h.sparse_sym(n, &mut m0);
    let mut m1 = Sparse::new();
    for j in 0..n {
        for k in 0..n {
            let a = h.skew[j * n + k];
            if a != 0 {
                m1.push((j, k + n, a));
                m1.push((j + n, k, -a));
            }
        }
    }
    let t_approx = 1.0 / (std::f64::consts::PI * h.a as f64 / h.d as f64).tan();
    let Some(rc) = RoundedCongruence::prepare(2 * n, &m0, Some((&m1, t_approx))) else {
        return Ok(None);
    };
    for &bits in schedule {
        let t = enclosure::cot_pi(h.a as i64, h.d as i64, bits);
        if let Some((p, m)) = rc.certify(Some(&t)) {
            if p % 2 != 0 || m % 2 != 0 {
                return Err(Error::Consistency(format!(
                    "real embedding of a Hermitian form has odd inertia ({p}, {m})"
                )));
            }
            return Ok(Some(Inertia {
                n_plus: p / 2,
                n_zero: 0,
                n_minus: m / 2,
            }));
        }
    }
    Ok(None)
}

/// Route that produced a value of `σ_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaRoute {
    Hermitian,
    Lattice,
}

impl std::fmt::Display for SigmaRoute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SigmaRoute::Hermitian => "hermitian",
            SigmaRoute::Lattice => "lattice",
        })
    }
}

/// How [`tristram_value`] chooses between the Hermitian form and the
/// lattice count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoutePolicy {
    Hermitian,
    Lattice,
    /// Hermitian up to the given form dimension, lattice count beyond it.
    Auto {
        max_hermitian_dimension: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TristramConfig {
    pub route: RoutePolicy,
    pub precision: PrecisionPolicy,
}

impl Default for TristramConfig {
    fn default() -> Self {
        Self {
            route: RoutePolicy::Hermitian,
            precision: PrecisionPolicy::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TristramValue {
    pub sigma: i64,
    pub nullity: usize,
    pub route: SigmaRoute,
}

/// `σ_d(T(p,q))` through the Hermitian form of the braid Seifert matrix.
pub fn tristram_sigma(k: TorusKnotParams, d: u32) -> Result<i64> {
    Ok(tristram_value(k, d, &TristramConfig::default())?.sigma)
}

pub fn tristram_value(
    k: TorusKnotParams,
    d: u32,
    config: &TristramConfig,
) -> Result<TristramValue> {
    check_prime(d)?;
    let nf = normalize(k);
    let k = nf.params;
    let dim = if k.is_trivial() {
        0
    } else {
        ((k.p() - 1) * (k.q() - 1)) as usize
    };
    let route = match config.route {
        RoutePolicy::Hermitian => SigmaRoute::Hermitian,
        RoutePolicy::Lattice => SigmaRoute::Lattice,
        RoutePolicy::Auto {
            max_hermitian_dimension,
        } => {
            if dim <= max_hermitian_dimension {
                SigmaRoute::Hermitian
            } else {
                SigmaRoute::Lattice
            }
        }
    };
    let (sigma, nullity) = if k.is_trivial() {
        (0, 0)
    } else {
        match route {
            SigmaRoute::Hermitian => {
                let form = build_form(&torus_seifert_form(k)?, d)?;
                let i = inertia_with(&form, &config.precision)?;
                (i.signature(), i.n_zero)
            }
            SigmaRoute::Lattice => counting_sigma(k, d)?,
        }
    };
    if sigma % 2 != 0 {
        return Err(Error::Consistency(format!("σ_{d}({k}) = {sigma} is odd")));
    }
    Ok(TristramValue {
        sigma: if nf.mirror { -sigma } else { sigma },
        nullity,
        route,
    })
}

/// Whether `σ_d(K) <= −4`, the bound every nontrivial torus knot other than
/// the trefoil satisfies.
pub fn tristram_bound_check(k: TorusKnotParams, d: u32) -> Result<bool> {
    let n = normalize(k).params;
    if n.is_trivial() || (n.p() == 2 && n.q() == 3) {
        return Err(Error::Domain(format!(
            "the bound applies only to nontrivial torus knots other than T(2,3), got {k}"
        )));
    }
    let k = n.require_normalized()?;
    Ok(tristram_sigma(k, d)? <= -4)
}
