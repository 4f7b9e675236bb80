//! `verify`: runs the Leinster-group claim suites and prints a report.
//!
//! Exit codes: 0 when every claim is verified, 1 when any claim is refuted,
//! 2 on usage or capacity errors before a report exists, 3 when the worst
//! verdict is partial.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use leinster_core::verify::{self, list_claims, ClaimResult, Options, Report, ReportCache, Status};
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "verify",
    version,
    about = "Reproduce the checkable claims about Leinster groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,

    /// JSON-lines cache of per-group reports.
    #[arg(long, value_name = "FILE", global = true, conflicts_with = "no_cache")]
    cache: Option<PathBuf>,

    /// Ignore any cache and recompute everything.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, value_name = "K", global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Leinster groups among the constructible families up to an order bound.
    Census {
        #[arg(long)]
        bound: u64,
    },
    /// Every group of squarefree order with four distinct prime factors.
    Pqrs {
        #[arg(long)]
        bound: u64,
    },
    /// Candidate families of order p^2qr with p < q < r <= the prime bound.
    P2qr {
        #[arg(long = "prime-bound")]
        prime_bound: u64,
    },
    /// Property suites, equation scanners and fraction bounds.
    Theorems,
    /// Every claim id with its kind and statement.
    ListClaims,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn exit_code(report: &Report) -> u8 {
    match report.overall() {
        None | Some(Status::Verified) => 0,
        Some(Status::Refuted) => 1,
        Some(Status::Partial) => 3,
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON value serializes")
}

fn render_text(claims: &[ClaimResult]) -> String {
    let mut out = String::new();
    for c in claims {
        out.push_str(&format!(
            "{:<9} {}  ({} ms)\n  {}\n",
            c.status.to_string().to_uppercase(),
            c.claim_id,
            c.elapsed_ms,
            c.statement
        ));
        for e in &c.evidence {
            out.push_str(&format!("    {}\n", compact(e)));
        }
    }
    out
}

fn emit(cli: &Cli, body: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    if let Some(k) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| format!("cannot start {k} workers: {e}"))?;
    }
    let cache = match (&cli.cache, cli.no_cache) {
        (Some(path), false) => Some(ReportCache::open(path).map_err(|e| e.to_string())?),
        _ => None,
    };
    let opts = Options { cache };

    let claims = match cli.command {
        Command::ListClaims => {
            let infos = list_claims();
            let body = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&infos).expect("claims serialize") + "\n"
                }
                Format::Text => infos
                    .iter()
                    .map(|c| {
                        format!(
                            "{}\t{}\t{}\t{}\n",
                            c.claim_id, c.kind, c.command, c.statement
                        )
                    })
                    .collect(),
            };
            emit(cli, &body).map_err(|e| e.to_string())?;
            return Ok(0);
        }
        Command::Census { bound } => vec![verify::census(bound, &opts)],
        Command::Pqrs { bound } => vec![verify::pqrs(bound, &opts)],
        Command::P2qr { prime_bound } => vec![verify::p2qr(prime_bound, &opts)],
        Command::Theorems => match verify::theorems(&opts) {
            Ok(v) => v.into_iter().map(Ok).collect(),
            Err(e) => vec![Err(e)],
        },
    };
    let claims: Vec<ClaimResult> = claims
        .into_iter()
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let report = Report::new(claims);
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Text => render_text(&report.claims),
    };
    emit(cli, &body).map_err(|e| e.to_string())?;
    Ok(exit_code(&report))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("verify: {msg}");
            ExitCode::from(2)
        }
    }
}
