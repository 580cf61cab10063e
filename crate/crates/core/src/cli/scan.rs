//! Batch classification over a rectangle of `(p, q)` pairs.
//!
//! Rows are produced in `(p, q)` order regardless of the worker count, and
//! every format is written row by row so an interrupted scan still leaves a
//! well-formed document ending in a truncation marker.

use std::io::{self, Write};
use std::sync::atomic::{AtomicBool, Ordering};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::TorusKnotParams;
use crate::obstruction::{classify_with, ClassifyOptions, Verdict};
use crate::tristram::{PrecisionPolicy, TristramConfig};

pub const SCAN_SCHEMA: &str = "torus-twist-scan/1";
pub const CSV_HEADER: [&str; 7] = [
    "p",
    "q",
    "exceptional",
    "verdict",
    "survivor_omegas",
    "sigma",
    "sigma_d",
];

const CHUNK: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub p_range: (i64, i64),
    pub q_range: (i64, i64),
    pub max_prime: Option<u64>,
    pub jobs: usize,
    pub precision_cap: u32,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let (p0, p1) = self.p_range;
        let (q0, q1) = self.q_range;
        if p0 > p1 || q0 > q1 {
            return Err(Error::Domain("scan ranges must be nonempty".into()));
        }
        if p0 < 1 || q0 < 1 {
            return Err(Error::Domain("scan ranges must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(Error::Domain("at least one worker is required".into()));
        }
        Ok(())
    }

    /// Coprime pairs with `p < q` inside both ranges, sorted.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for p in self.p_range.0..=self.p_range.1 {
            for q in self.q_range.0.max(p + 1)..=self.q_range.1 {
                if p.gcd(&q) == 1 {
                    out.push((p, q));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: i64,
    pub q: i64,
    pub exceptional: bool,
    pub verdict: Verdict,
    /// `ω` of the surviving candidates; every candidate has `n = 1`.
    pub survivor_omegas: Vec<u64>,
    pub sigma: i64,
    /// `(d, σ_d)` for each prime used, ascending.
    pub sigma_d: Vec<(u32, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub truncated: bool,
}

fn row_for(p: i64, q: i64, options: &ClassifyOptions) -> Result<ScanRow> {
    let c = classify_with(TorusKnotParams::new(p, q)?, options)?;
    Ok(ScanRow {
        p,
        q,
        exceptional: c.exceptional,
        verdict: c.verdict,
        survivor_omegas: c.survivors.iter().map(|s| s.omega).collect(),
        sigma: c.signature,
        sigma_d: c
            .sigma_inputs
            .iter()
            .map(|s| (s.d, s.value.sigma))
            .collect(),
    })
}

/// Classifies every pair, handing finished rows to `on_rows` in order.
/// When `cancel` is raised the scan stops after the current chunk and the
/// result is marked truncated.
pub fn run_scan(
    cfg: &ScanConfig,
    cancel: &AtomicBool,
    mut on_rows: impl FnMut(&[ScanRow]) -> Result<()>,
) -> Result<ScanResult> {
    cfg.validate()?;
    let defaults = ClassifyOptions::default();
    let options = ClassifyOptions {
        max_prime: cfg.max_prime,
        tristram: TristramConfig {
            precision: PrecisionPolicy::with_cap(cfg.precision_cap),
            ..defaults.tristram
        },
        ..defaults
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let pairs = cfg.pairs();
    let mut result = ScanResult::default();
    for chunk in pairs.chunks(CHUNK) {
        if cancel.load(Ordering::SeqCst) {
            result.truncated = true;
            break;
        }
        let rows: Vec<ScanRow> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&(p, q)| row_for(p, q, &options))
                .collect::<Result<Vec<_>>>()
        })?;
        on_rows(&rows)?;
        result.rows.extend(rows);
    }
    Ok(result)
}

fn sigma_d_text(row: &ScanRow) -> String {
    row.sigma_d
        .iter()
        .map(|(d, s)| format!("{d}:{s}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn omegas_text(row: &ScanRow) -> String {
    row.survivor_omegas
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Incremental writer for one output format.
pub struct ScanWriter<W: Write> {
    out: W,
    format: OutputFormat,
    written: usize,
}

impl<W: Write> ScanWriter<W> {
    pub fn begin(mut out: W, format: OutputFormat) -> io::Result<Self> {
        match format {
            OutputFormat::Json => write!(out, "{{\"schema\":\"{SCAN_SCHEMA}\",\"rows\":[")?,
            OutputFormat::Csv => {
                writeln!(out, "# schema: {SCAN_SCHEMA}")?;
                writeln!(out, "{}", CSV_HEADER.join(","))?;
            }
            OutputFormat::Markdown => {
                writeln!(out, "<!-- schema: {SCAN_SCHEMA} -->")?;
                writeln!(
                    out,
                    "| p | q | exceptional | verdict | survivor ω | σ | σ_d |"
                )?;
                writeln!(out, "|---|---|---|---|---|---|---|")?;
            }
        }
        Ok(Self {
            out,
            format,
            written: 0,
        })
    }

    pub fn rows(&mut self, rows: &[ScanRow]) -> io::Result<()> {
        for row in rows {
            match self.format {
                OutputFormat::Json => {
                    let sep = if self.written == 0 { "\n" } else { ",\n" };
                    let json = serde_json::to_string(row).map_err(io::Error::other)?;
                    write!(self.out, "{sep}{json}")?;
                }
                OutputFormat::Csv => {
                    let mut w = csv::WriterBuilder::new()
                        .has_headers(false)
                        .from_writer(Vec::new());
                    w.write_record([
                        row.p.to_string(),
                        row.q.to_string(),
                        row.exceptional.to_string(),
                        row.verdict.to_string(),
                        omegas_text(row),
                        row.sigma.to_string(),
                        sigma_d_text(row),
                    ])?;
                    let bytes = w
                        .into_inner()
                        .map_err(|e| io::Error::other(e.to_string()))?;
                    self.out.write_all(&bytes)?;
                }
                OutputFormat::Markdown => {
                    let survivors = if row.survivor_omegas.is_empty() {
                        "∅".to_string()
                    } else {
                        omegas_text(row)
                    };
                    writeln!(
                        self.out,
                        "| {} | {} | {} | {} | {} | {} | {} |",
                        row.p,
                        row.q,
                        row.exceptional,
                        row.verdict,
                        survivors,
                        row.sigma,
                        sigma_d_text(row)
                    )?;
                }
            }
            self.written += 1;
        }
        self.out.flush()
    }

    pub fn finish(mut self, truncated: bool) -> io::Result<W> {
        match self.format {
            OutputFormat::Json => {
                let sep = if self.written == 0 { "" } else { "\n" };
                writeln!(self.out, "{sep}],\"truncated\":{truncated}}}")?;
            }
            OutputFormat::Csv => {
                if truncated {
                    writeln!(self.out, "# truncated")?;
                }
            }
            OutputFormat::Markdown => {
                if truncated {
                    writeln!(self.out, "\n_truncated_")?;
                }
            }
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

pub fn render(result: &ScanResult, format: OutputFormat) -> String {
    let mut w = ScanWriter::begin(Vec::new(), format).expect("writing to memory");
    w.rows(&result.rows).expect("writing to memory");
    let bytes = w.finish(result.truncated).expect("writing to memory");
    String::from_utf8(bytes).expect("utf-8 output")
}

#[derive(Deserialize)]
struct JsonDocument {
    schema: String,
    rows: Vec<ScanRow>,
    truncated: bool,
}

fn bad(message: impl Into<String>) -> Error {
    Error::Domain(format!("malformed scan document: {}", message.into()))
}

pub fn parse_json(text: &str) -> Result<ScanResult> {
    let doc: JsonDocument = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if doc.schema != SCAN_SCHEMA {
        return Err(bad(format!("unknown schema {}", doc.schema)));
    }
    Ok(ScanResult {
        rows: doc.rows,
        truncated: doc.truncated,
    })
}

fn parse_list<T: std::str::FromStr>(field: &str) -> Result<Vec<T>> {
    field
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(format!("bad list entry {t}"))))
        .collect()
}

pub fn parse_csv(text: &str) -> Result<ScanResult> {
    let mut lines = text.lines();
    if lines.next() != Some(&format!("# schema: {SCAN_SCHEMA}")[..]) {
        return Err(bad("missing schema line"));
    }
    let truncated = text.lines().any(|l| l == "# truncated");
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| bad(e.to_string()))?;
    if header.iter().collect::<Vec<_>>() != CSV_HEADER {
        return Err(bad("unexpected header"));
    }
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        let field = |i: usize| rec.get(i).ok_or_else(|| bad("short record"));
        let int = |i: usize| -> Result<i64> {
            field(i)?
                .parse()
                .map_err(|_| bad(format!("bad integer in column {i}")))
        };
        let verdict = match field(3)? {
            "TrivialOrExceptional" => Verdict::TrivialOrExceptional,
            "NotInT" => Verdict::NotInT,
            "Undecided" => Verdict::Undecided,
            v => return Err(bad(format!("unknown verdict {v}"))),
        };
        let sigma_d = field(6)?
            .split_whitespace()
            .map(|t| {
                let (d, s) = t.split_once(':').ok_or_else(|| bad("bad σ_d entry"))?;
                Ok((
                    d.parse().map_err(|_| bad("bad prime"))?,
                    s.parse().map_err(|_| bad("bad σ_d value"))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(ScanRow {
            p: int(0)?,
            q: int(1)?,
            exceptional: field(2)?.parse().map_err(|_| bad("bad boolean"))?,
            verdict,
            survivor_omegas: parse_list(field(4)?)?,
            sigma: int(5)?,
            sigma_d,
        });
    }
    Ok(ScanResult { rows, truncated })
}
