//! Command implementations behind the `torus-twist` binary. Each returns the
//! text to print so the commands can be exercised without a process.

pub mod scan;
pub mod tables;

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourmanifold::{
    characteristic_check, kikuchi_eliminate, ledger_from_sequence, parse_sequence, KikuchiResult,
    Parity, QuadPoly,
};
use crate::knot::{isotopic, normalize, TorusKnotParams};
use crate::lattice::{sigma_closed, sigma_oracle};
use crate::obstruction::{classify_with, ClassifyOptions, ObstructionCertificate};
use crate::tristram::{tristram_value, PrecisionPolicy, TristramConfig};

/// Environment variable read for the default precision cap in bits.
pub const PRECISION_CAP_ENV: &str = "TORUS_TWIST_PRECISION_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaMethod {
    Oracle,
    Closed,
    Seifert,
}

impl SigmaMethod {
    pub const ALL: [SigmaMethod; 3] = [
        SigmaMethod::Oracle,
        SigmaMethod::Closed,
        SigmaMethod::Seifert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SigmaMethod::Oracle => "oracle",
            SigmaMethod::Closed => "closed",
            SigmaMethod::Seifert => "seifert",
        }
    }
}

impl FromStr for SigmaMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown method {s}")))
    }
}

/// `σ(T(p,q))` by one method; any coprime `p, q` is accepted.
pub fn signature_by(k: TorusKnotParams, method: SigmaMethod, precision_cap: u32) -> Result<i64> {
    let nf = normalize(k);
    if nf.params.is_trivial() {
        return Ok(0);
    }
    let sign = if nf.mirror { -1 } else { 1 };
    Ok(match method {
        SigmaMethod::Oracle => sign * sigma_oracle(nf.params)?.value(),
        SigmaMethod::Closed => sign * sigma_closed(nf.params)?.value(),
        SigmaMethod::Seifert => {
            let cfg = TristramConfig {
                precision: PrecisionPolicy::with_cap(precision_cap),
                ..TristramConfig::default()
            };
            tristram_value(k, 2, &cfg)?.sigma
        }
    })
}

/// With `all`, prints every method and fails when they disagree.
pub fn cmd_sigma(
    k: TorusKnotParams,
    method: SigmaMethod,
    all: bool,
    precision_cap: u32,
) -> Result<String> {
    if !all {
        return Ok(format!("{}\n", signature_by(k, method, precision_cap)?));
    }
    let mut out = String::new();
    let mut values = Vec::new();
    for m in SigmaMethod::ALL {
        let v = signature_by(k, m, precision_cap)?;
        writeln!(out, "{} {v}", m.name()).unwrap();
        values.push(v);
    }
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Consistency(format!(
            "signature methods disagree for {k}:\n{out}"
        )));
    }
    Ok(out)
}

pub fn cmd_tristram(k: TorusKnotParams, d: u32, precision_cap: u32) -> Result<String> {
    let cfg = TristramConfig {
        precision: PrecisionPolicy::with_cap(precision_cap),
        ..TristramConfig::default()
    };
    let v = tristram_value(k, d, &cfg)?;
    Ok(format!("sigma_{d} {} nullity {}\n", v.sigma, v.nullity))
}

/// Ledger of a user-supplied sequence for the classified knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub sequence: String,
    pub sigma_m: i64,
    pub b2_plus: u32,
    pub b2_minus: u32,
    pub xi_self_intersection: QuadPoly,
    /// Whether `ξ` is characteristic for odd `ω`.
    pub characteristic_for_odd_omega: bool,
    /// Whether `ξ` is characteristic for even `ω`.
    pub characteristic_for_even_omega: bool,
    pub kikuchi: KikuchiResult,
}

pub fn sequence_report(k: TorusKnotParams, text: &str) -> Result<SequenceReport> {
    let s = parse_sequence(text)?;
    if !isotopic(s.start(), k) {
        return Err(Error::Semantic {
            line: 1,
            message: format!(
                "sequence starts at {}, but the classified knot is {k}",
                s.start()
            ),
        });
    }
    let l = ledger_from_sequence(&s, true)?;
    Ok(SequenceReport {
        sequence: s.serialize(),
        sigma_m: l.sigma_m(),
        b2_plus: l.b2_plus(),
        b2_minus: l.b2_minus(),
        xi_self_intersection: l.xi_self_intersection(),
        characteristic_for_odd_omega: characteristic_check(&l, Parity::Odd),
        characteristic_for_even_omega: characteristic_check(&l, Parity::Even),
        kikuchi: kikuchi_eliminate(&l),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateFormat {
    Text,
    Json,
}

impl FromStr for CertificateFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(CertificateFormat::Text),
            "json" => Ok(CertificateFormat::Json),
            _ => Err(Error::Domain(format!("unknown format {s}"))),
        }
    }
}

#[derive(Serialize)]
struct WithSequence<'a> {
    certificate: &'a ObstructionCertificate,
    sequence: &'a SequenceReport,
}

fn sequence_text(r: &SequenceReport) -> String {
    let mut o = String::new();
    writeln!(o, "supplied sequence:").unwrap();
    for line in r.sequence.lines() {
        writeln!(o, "  | {line}").unwrap();
    }
    writeln!(
        o,
        "  sigma(M)={} b2+={} b2-={} xi.xi={}",
        r.sigma_m, r.b2_plus, r.b2_minus, r.xi_self_intersection
    )
    .unwrap();
    writeln!(
        o,
        "  characteristic: odd ω {}, even ω {}",
        r.characteristic_for_odd_omega, r.characteristic_for_even_omega
    )
    .unwrap();
    match &r.kikuchi {
        KikuchiResult::Admissible { omegas, .. } => {
            let list: Vec<String> = omegas.iter().map(u64::to_string).collect();
            writeln!(o, "  sphere test admits ω ∈ {{{}}}", list.join(",")).unwrap();
        }
        KikuchiResult::Inapplicable(why) => {
            writeln!(o, "  sphere test: inapplicable ({why})").unwrap()
        }
    }
    o
}

pub fn cmd_classify(
    k: TorusKnotParams,
    sequence: Option<&str>,
    format: CertificateFormat,
    options: &ClassifyOptions,
) -> Result<String> {
    let cert = classify_with(k, options)?;
    let report = sequence.map(|text| sequence_report(k, text)).transpose()?;
    Ok(match (format, &report) {
        (CertificateFormat::Text, None) => cert.to_text(),
        (CertificateFormat::Text, Some(r)) => cert.to_text() + &sequence_text(r),
        (CertificateFormat::Json, None) => cert.to_json() + "\n",
        (CertificateFormat::Json, Some(r)) => {
            let doc = WithSequence {
                certificate: &cert,
                sequence: r,
            };
            serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))? + "\n"
        }
    })
}
