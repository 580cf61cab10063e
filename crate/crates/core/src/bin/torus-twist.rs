use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use torus_twist::cli::scan::{run_scan, OutputFormat, ScanConfig, ScanWriter};
use torus_twist::cli::tables::{family_table, render_table, Family};
use torus_twist::cli::{
    cmd_classify, cmd_sigma, cmd_tristram, CertificateFormat, SigmaMethod, PRECISION_CAP_ENV,
};
use torus_twist::knot::TorusKnotParams;
use torus_twist::obstruction::ClassifyOptions;
use torus_twist::tristram::{PrecisionPolicy, TristramConfig};
use torus_twist::{Error, Result};

#[derive(Parser)]
#[command(
    name = "torus-twist",
    version,
    about = "Which torus knots unknot after one generalized twist"
)]
struct Cli {
    /// Working precision cap in bits for certified eigenvalue signs.
    #[arg(long, global = true, env = PRECISION_CAP_ENV, default_value_t = 1024)]
    precision_cap: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Closed,
    Seifert,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFormatArg {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "p-plus-4")]
    PPlus4,
    PPlusR,
    BoundedR,
}

#[derive(Subcommand)]
enum Command {
    /// Signature of T(p,q).
    Sigma {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        /// Print every method and fail if they disagree.
        #[arg(long)]
        all: bool,
    },
    /// Tristram-Levine signature at the primitive d-th root of unity nearest -1.
    Tristram {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short, allow_negative_numbers = true)]
        q: i64,
        #[arg(short)]
        d: u32,
    },
    /// Obstruction certificate for T(p,q).
    Classify {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short, allow_negative_numbers = true)]
        q: i64,
        /// Twist-sequence file whose ledger is appended to the certificate.
        #[arg(long)]
        sequence: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: CertArg,
        /// Skip the signature condition at primes above this bound.
        #[arg(long)]
        max_prime: Option<u64>,
    },
    /// Classification table for a family T(p,p+r).
    Tables {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        n_min: i64,
        #[arg(long, default_value_t = 3)]
        n_max: i64,
    },
    /// Classify every coprime pair p < q in a rectangle.
    Scan {
        #[arg(long, default_value_t = 2)]
        p_min: i64,
        #[arg(long)]
        p_max: i64,
        #[arg(long, default_value_t = 3)]
        q_min: i64,
        #[arg(long)]
        q_max: i64,
        #[arg(long)]
        max_prime: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: ScanFormatArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn classify_options(precision_cap: u32, max_prime: Option<u64>) -> ClassifyOptions {
    let defaults = ClassifyOptions::default();
    ClassifyOptions {
        max_prime,
        tristram: TristramConfig {
            precision: PrecisionPolicy::with_cap(precision_cap),
            ..defaults.tristram
        },
        ..defaults
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

fn run(cli: Cli) -> Result<String> {
    let cap = cli.precision_cap;
    match cli.command {
        Command::Sigma { p, q, method, all } => {
            let method = match method {
                MethodArg::Oracle => SigmaMethod::Oracle,
                MethodArg::Closed => SigmaMethod::Closed,
                MethodArg::Seifert => SigmaMethod::Seifert,
            };
            cmd_sigma(TorusKnotParams::new(p, q)?, method, all, cap)
        }
        Command::Tristram { p, q, d } => cmd_tristram(TorusKnotParams::new(p, q)?, d, cap),
        Command::Classify {
            p,
            q,
            sequence,
            format,
            max_prime,
        } => {
            let text = sequence
                .map(|path| {
                    fs::read_to_string(&path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
                })
                .transpose()?;
            let format = match format {
                CertArg::Text => CertificateFormat::Text,
                CertArg::Json => CertificateFormat::Json,
            };
            cmd_classify(
                TorusKnotParams::new(p, q)?,
                text.as_deref(),
                format,
                &classify_options(cap, max_prime),
            )
        }
        Command::Tables {
            family,
            n_min,
            n_max,
        } => {
            let family = match family {
                FamilyArg::PPlus4 => Family::PPlus4,
                FamilyArg::PPlusR => Family::PPlusR,
                FamilyArg::BoundedR => Family::BoundedR,
            };
            let rows = family_table(family, n_min, n_max, &classify_options(cap, None))?;
            Ok(render_table(&rows))
        }
        Command::Scan {
            p_min,
            p_max,
            q_min,
            q_max,
            max_prime,
            format,
            jobs,
            output,
        } => {
            let cfg = ScanConfig {
                p_range: (p_min, p_max),
                q_range: (q_min, q_max),
                max_prime,
                jobs,
                precision_cap: cap,
            };
            cfg.validate()?;
            let format = match format {
                ScanFormatArg::Json => OutputFormat::Json,
                ScanFormatArg::Csv => OutputFormat::Csv,
                ScanFormatArg::Markdown => OutputFormat::Markdown,
            };
            let cancel = Arc::new(AtomicBool::new(false));
            let flag = cancel.clone();
            ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst))
                .map_err(|e| Error::Io(e.to_string()))?;
            let sink: Box<dyn Write> = match output {
                Some(path) => Box::new(io::BufWriter::new(fs::File::create(path).map_err(io_err)?)),
                None => Box::new(io::stdout().lock()),
            };
            let mut writer = ScanWriter::begin(sink, format).map_err(io_err)?;
            let result = run_scan(&cfg, &cancel, |rows| writer.rows(rows).map_err(io_err))?;
            writer.finish(result.truncated).map_err(io_err)?;
            if result.truncated {
                eprintln!("scan interrupted after {} rows", result.rows.len());
            }
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
