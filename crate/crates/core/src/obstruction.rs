//! Candidate filtering for single twists that could produce a torus knot from
//! the unknot, and the certificate recording why each candidate falls.
//!
//! For a non-exceptional `T(p,q)` (`0 < p < q`) obtained by one `(n,ω)`
//! twisting, `n = 1`, `ω < q`, `ω > p` when `ω` is even, and for every prime
//! `d | ω` the number `2⌊d/2⌋(d−⌊d/2⌋)ω²/d²` equals `−σ_d` or `2 − σ_d`.
//! Remaining odd `ω` are tested against the built-in twist sequences: the
//! sphere they produce must satisfy `ξ·ξ = σ(M)`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::arith::prime_divisors;
use crate::error::{Error, Result};
use crate::fourmanifold::templates::template_sequences;
use crate::fourmanifold::{
    gilmer_viro_check, kikuchi_eliminate, ledger_from_sequence, FourManifoldLedger, KikuchiResult,
    Linear, QuadPoly, Summand, TemplateKind,
};
use crate::knot::{is_exceptional, normalize, TorusKnotParams};
use crate::lattice::sigma_closed;
use crate::tristram::{
    tristram_value, PrecisionPolicy, RoutePolicy, TristramConfig, TristramValue,
};

pub const CERTIFICATE_SCHEMA: &str = "torus-twist-certificate/1";

/// A twist `(n, ω)` not ruled out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CandidateTwist {
    pub n: i64,
    pub omega: u64,
}

impl fmt::Display for CandidateTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.omega)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Reason {
    /// `(ω−1)(ω−2) > (p−1)(q−1)`: the sphere would beat the minimal genus.
    GenusBound,
    /// Even `ω <= p`.
    EvenBelowP,
    /// The two-valued signature condition fails at the prime `d`.
    Tristram { d: u32 },
    /// `ω² = C − σ(M)` fails for the sphere of a built-in sequence.
    KikuchiNoSquare { template: TemplateKind },
    /// The only solution of `ω² = C − σ(M)` is even, while the sequence
    /// yields a characteristic class only for odd `ω`.
    CharacteristicParity { template: TemplateKind },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::GenusBound => f.write_str("genus-bound"),
            Reason::EvenBelowP => f.write_str("even-below-p"),
            Reason::Tristram { d } => write!(f, "tristram(d={d})"),
            Reason::KikuchiNoSquare { template } => write!(f, "kikuchi-no-square [{template}]"),
            Reason::CharacteristicParity { template } => {
                write!(f, "characteristic-parity [{template}]")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    TrivialOrExceptional,
    NotInT,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::TrivialOrExceptional => "TrivialOrExceptional",
            Verdict::NotInT => "NotInT",
            Verdict::Undecided => "Undecided",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Elimination {
    pub omega: u64,
    #[serde(flatten)]
    pub reason: Reason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaInput {
    pub d: u32,
    #[serde(flatten)]
    pub value: TristramValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateReport {
    pub template: TemplateKind,
    pub sequence: String,
    pub sigma_m: i64,
    pub b2_plus: u32,
    pub b2_minus: u32,
    pub xi_self_intersection: QuadPoly,
    pub kikuchi: KikuchiResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub schema: String,
    pub knot: TorusKnotParams,
    pub normalized: TorusKnotParams,
    pub mirror: bool,
    pub exceptional: bool,
    pub verdict: Verdict,
    /// Twist count every candidate must have.
    pub twist_count: i64,
    /// Signature of the normalized knot.
    pub signature: i64,
    /// `σ_d` of the normalized knot for every prime used.
    pub sigma_inputs: Vec<SigmaInput>,
    pub templates: Vec<TemplateReport>,
    pub eliminations: Vec<Elimination>,
    pub survivors: Vec<CandidateTwist>,
    pub diagnostics: Vec<String>,
}

/// Which primes `d | ω` the signature condition is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrimeSelection {
    /// Every prime divisor of `ω`.
    #[default]
    AllDivisors,
    /// Only `d = 2`, as in the hand arguments for the `T(p,p+r)` families;
    /// odd `ω` are then left entirely to the built-in sequences.
    HalfTurnOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub tristram: TristramConfig,
    pub primes: PrimeSelection,
    /// Skip the signature condition at primes above this bound.
    pub max_prime: Option<u64>,
    pub use_templates: bool,
}

/// Largest Hermitian form evaluated directly before switching to the
/// lattice count.
pub const DEFAULT_MAX_HERMITIAN_DIMENSION: usize = 160;

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            tristram: TristramConfig {
                route: RoutePolicy::Auto {
                    max_hermitian_dimension: DEFAULT_MAX_HERMITIAN_DIMENSION,
                },
                precision: PrecisionPolicy::default(),
            },
            primes: PrimeSelection::AllDivisors,
            max_prime: None,
            use_templates: true,
        }
    }
}

/// `(ω−1)(ω−2) <= (p−1)(q−1)`.
pub fn thom_bound_check(p: i64, q: i64, omega: i64) -> bool {
    (omega - 1) as i128 * (omega - 2) as i128 <= (p - 1) as i128 * (q - 1) as i128
}

/// `2⌊d/2⌋(d−⌊d/2⌋)ω²/d²`, which is an integer when `d | ω`.
pub fn divisor_condition_lhs(omega: u64, d: u32) -> Result<i128> {
    if d < 2 || !omega.is_multiple_of(d as u64) {
        return Err(Error::Domain(format!(
            "d = {d} does not divide ω = {omega}"
        )));
    }
    let a = (d / 2) as i128;
    let m = (omega / d as u64) as i128;
    Ok(2 * a * (d as i128 - a) * m * m)
}

/// Whether the left side lies in `{−σ_d, 2 − σ_d}`.
pub fn divisor_condition_holds(omega: u64, d: u32, sigma_d: i64) -> Result<bool> {
    let lhs = divisor_condition_lhs(omega, d)?;
    let s = sigma_d as i128;
    Ok(lhs == -s || lhs == 2 - s)
}

/// The two-valued condition for `T(p,q)` at the prime `d | ω`.
pub fn divisor_condition_check(p: i64, q: i64, omega: u64, d: u32) -> Result<bool> {
    let k = TorusKnotParams::new(p, q)?.require_normalized()?;
    divisor_condition_lhs(omega, d)?;
    let s = tristram_value(k, d, &TristramConfig::default())?.sigma;
    divisor_condition_holds(omega, d, s)
}

pub fn classify(k: TorusKnotParams) -> Result<ObstructionCertificate> {
    classify_with(k, &ClassifyOptions::default())
}

struct Context<'a> {
    knot: TorusKnotParams,
    options: &'a ClassifyOptions,
    sigmas: BTreeMap<u32, TristramValue>,
    diagnostics: Vec<String>,
}

enum SigmaLookup {
    Value(i64),
    Undecided(String),
}

impl Context<'_> {
    fn sigma(&mut self, d: u32) -> Result<SigmaLookup> {
        if let Some(v) = self.sigmas.get(&d) {
            return Ok(SigmaLookup::Value(v.sigma));
        }
        match tristram_value(self.knot, d, &self.options.tristram) {
            Ok(v) => {
                if v.sigma > -4 {
                    return Err(Error::Consistency(format!(
                        "σ_{d}({}) = {} violates the bound σ_d <= −4",
                        self.knot, v.sigma
                    )));
                }
                self.sigmas.insert(d, v);
                Ok(SigmaLookup::Value(v.sigma))
            }
            Err(e @ Error::Undecided { .. }) => Ok(SigmaLookup::Undecided(e.to_string())),
            Err(e) => Err(e),
        }
    }
}

/// Once-punctured `−CP²` carrying `ω` times the generator.
fn single_twist_ledger() -> FourManifoldLedger {
    FourManifoldLedger::from_summands([Summand::MinusCp2 {
        coefficient: Linear::omega(),
    }])
}

pub fn classify_with(
    k: TorusKnotParams,
    options: &ClassifyOptions,
) -> Result<ObstructionCertificate> {
    let nf = normalize(k);
    let n = nf.params;
    let trivial = n.is_trivial();
    let exceptional = trivial || is_exceptional(n)?;
    let twist_count = if nf.mirror { -1 } else { 1 };
    let mut cert = ObstructionCertificate {
        schema: CERTIFICATE_SCHEMA.to_string(),
        knot: k,
        normalized: n,
        mirror: nf.mirror,
        exceptional,
        verdict: Verdict::TrivialOrExceptional,
        twist_count,
        signature: if trivial { 0 } else { sigma_closed(n)?.value() },
        sigma_inputs: Vec::new(),
        templates: Vec::new(),
        eliminations: Vec::new(),
        survivors: Vec::new(),
        diagnostics: Vec::new(),
    };
    if exceptional {
        return Ok(cert);
    }

    let (p, q) = (n.p(), n.q());
    if thom_bound_check(p, q, q) {
        return Err(Error::Consistency(format!(
            "genus bound admits ω = q for non-exceptional {n}"
        )));
    }
    let mut ctx = Context {
        knot: n,
        options,
        sigmas: BTreeMap::new(),
        diagnostics: Vec::new(),
    };
    let single = single_twist_ledger();

    let mut pending = Vec::new();
    for omega in 2..q as u64 {
        if !thom_bound_check(p, q, omega as i64) {
            cert.eliminations.push(Elimination {
                omega,
                reason: Reason::GenusBound,
            });
            continue;
        }
        if omega % 2 == 0 && omega as i64 <= p {
            cert.eliminations.push(Elimination {
                omega,
                reason: Reason::EvenBelowP,
            });
            continue;
        }
        let mut failed_at = None;
        for d in prime_divisors(omega) {
            if options.primes == PrimeSelection::HalfTurnOnly && d != 2 {
                continue;
            }
            if options.max_prime.is_some_and(|m| d > m) {
                continue;
            }
            let d = d as u32;
            let s = match ctx.sigma(d)? {
                SigmaLookup::Value(s) => s,
                SigmaLookup::Undecided(msg) => {
                    ctx.diagnostics
                        .push(format!("ω = {omega}: σ_{d} undecided ({msg}); ω kept"));
                    continue;
                }
            };
            let holds = divisor_condition_holds(omega, d, s)?;
            // same condition through the general inequality
            let general = gilmer_viro_check(&single, omega as i64, 0, d, s)?;
            if holds != general {
                return Err(Error::Consistency(format!(
                    "ω = {omega}, d = {d}: two-valued condition and general inequality disagree"
                )));
            }
            if !holds {
                failed_at = Some(d);
                break;
            }
        }
        match failed_at {
            Some(d) => cert.eliminations.push(Elimination {
                omega,
                reason: Reason::Tristram { d },
            }),
            None => pending.push(omega),
        }
    }

    if options.use_templates {
        for t in template_sequences(n)? {
            let ledger = ledger_from_sequence(&t.sequence, true)?;
            cert.templates.push(TemplateReport {
                template: t.kind,
                sequence: t.sequence.serialize(),
                sigma_m: ledger.sigma_m(),
                b2_plus: ledger.b2_plus(),
                b2_minus: ledger.b2_minus(),
                xi_self_intersection: ledger.xi_self_intersection(),
                kikuchi: kikuchi_eliminate(&ledger),
            });
        }
        pending.retain(|&omega| {
            if omega % 2 == 0 {
                return true;
            }
            for t in &cert.templates {
                let Some(admissible) = t.kikuchi.admissible() else {
                    continue;
                };
                if admissible.contains(&omega) {
                    continue;
                }
                let reason = if !admissible.is_empty() && admissible.iter().all(|w| w % 2 == 0) {
                    Reason::CharacteristicParity {
                        template: t.template,
                    }
                } else {
                    Reason::KikuchiNoSquare {
                        template: t.template,
                    }
                };
                cert.eliminations.push(Elimination { omega, reason });
                return false;
            }
            true
        });
    }
    for t in &cert.templates {
        if let KikuchiResult::Inapplicable(why) = &t.kikuchi {
            ctx.diagnostics
                .push(format!("{}: sphere test inapplicable ({why})", t.template));
        }
    }

    cert.eliminations.sort_by_key(|e| e.omega);
    cert.survivors = pending
        .into_iter()
        .map(|omega| CandidateTwist {
            n: twist_count,
            omega,
        })
        .collect();
    cert.sigma_inputs = ctx
        .sigmas
        .iter()
        .map(|(&d, &value)| SigmaInput { d, value })
        .collect();
    cert.diagnostics = ctx.diagnostics;
    cert.verdict = if cert.survivors.is_empty() {
        Verdict::NotInT
    } else {
        Verdict::Undecided
    };
    check_partition(&cert)?;
    Ok(cert)
}

fn check_partition(cert: &ObstructionCertificate) -> Result<()> {
    let mut seen: Vec<u64> = cert
        .eliminations
        .iter()
        .map(|e| e.omega)
        .chain(cert.survivors.iter().map(|c| c.omega))
        .collect();
    seen.sort_unstable();
    let expected: Vec<u64> = (2..cert.normalized.q() as u64).collect();
    if seen != expected {
        return Err(Error::Consistency(format!(
            "certificate for {} does not partition ω ∈ [2, q−1]",
            cert.knot
        )));
    }
    Ok(())
}

/// Survivors of `T(p,p+2)` for odd `p >= 5`.
pub fn survivors_p_plus_2(p: i64) -> Result<Vec<CandidateTwist>> {
    if p < 5 || p % 2 == 0 {
        return Err(Error::Domain(format!("p = {p} must be odd and at least 5")));
    }
    Ok(classify(TorusKnotParams::new(p, p + 2)?)?.survivors)
}

/// Survivors of `T(p,p+4)` for `p >= 7` with `p ≡ 5, 7 (mod 8)`.
pub fn survivors_p_plus_4(p: i64) -> Result<Vec<CandidateTwist>> {
    if p < 7 || !matches!(p % 8, 5 | 7) {
        return Err(Error::Domain(format!(
            "p = {p} must be at least 7 with p ≡ 5 or 7 (mod 8)"
        )));
    }
    Ok(classify(TorusKnotParams::new(p, p + 4)?)?.survivors)
}

impl ObstructionCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Plain-text form with a fixed field order.
    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let w = &mut o;
        writeln!(w, "schema: {}", self.schema).unwrap();
        writeln!(w, "knot: {}", self.knot).unwrap();
        writeln!(w, "normalized: {}", self.normalized).unwrap();
        writeln!(w, "mirror: {}", self.mirror).unwrap();
        writeln!(w, "exceptional: {}", self.exceptional).unwrap();
        writeln!(w, "verdict: {}", self.verdict).unwrap();
        writeln!(w, "signature: {}", self.signature).unwrap();
        if self.verdict == Verdict::TrivialOrExceptional {
            writeln!(w, "note: trivial and exceptional torus knots are obtained from the unknot by one twist").unwrap();
            return o;
        }
        writeln!(
            w,
            "note: candidates have n = {}; ω <= 1 is omitted since such twists keep the knot type",
            self.twist_count
        )
        .unwrap();
        writeln!(w, "omega range: 2..={}", self.normalized.q() - 1).unwrap();
        writeln!(w, "tristram inputs:").unwrap();
        for s in &self.sigma_inputs {
            writeln!(
                w,
                "  d={} sigma={} nullity={} route={}",
                s.d, s.value.sigma, s.value.nullity, s.value.route
            )
            .unwrap();
        }
        writeln!(w, "templates:").unwrap();
        for t in &self.templates {
            writeln!(w, "  {}", t.template).unwrap();
            for line in t.sequence.lines() {
                writeln!(w, "    | {line}").unwrap();
            }
            writeln!(
                w,
                "    sigma(M)={} b2+={} b2-={} xi.xi={}",
                t.sigma_m, t.b2_plus, t.b2_minus, t.xi_self_intersection
            )
            .unwrap();
            match &t.kikuchi {
                KikuchiResult::Admissible { omegas, .. } => {
                    let list: Vec<String> = omegas.iter().map(u64::to_string).collect();
                    writeln!(
                        w,
                        "    sphere test: {} = {} admits ω ∈ {{{}}}",
                        t.xi_self_intersection,
                        t.sigma_m,
                        list.join(",")
                    )
                    .unwrap();
                }
                KikuchiResult::Inapplicable(why) => {
                    writeln!(w, "    sphere test: inapplicable ({why})").unwrap()
                }
            }
        }
        writeln!(w, "eliminations:").unwrap();
        for e in &self.eliminations {
            writeln!(w, "  omega={} {}", e.omega, e.reason).unwrap();
        }
        writeln!(w, "survivors:").unwrap();
        for s in &self.survivors {
            writeln!(w, "  {s}").unwrap();
        }
        writeln!(w, "diagnostics:").unwrap();
        for d in &self.diagnostics {
            writeln!(w, "  {d}").unwrap();
        }
        o
    }
}
