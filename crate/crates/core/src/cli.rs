//! Command-line front end.
//!
//! [`run`] parses arguments and writes to caller-supplied streams so the
//! whole interface can be driven in-process. Exit codes: `0` success or
//! passing check, `1` failed check or I/O failure, `2` usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::json;
use tempfile::NamedTempFile;

use crate::divisibility::{divides_multinomial, multinomial};
use crate::partitions::enumerate_partitions;
use crate::sequence::{a200144_range_observed, a200144_term, prime_scan, SequenceTerm};
use crate::verify::{run_check, CheckKind};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Seed used by `verify theorem1` when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 200_144;

#[derive(Debug, Parser)]
#[command(name = "a200144", version, about = "Partitions whose multinomial coefficient is divisible by the number of parts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a(n).
    Term {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Print a(1..=n_max).
    Range {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the partitions of n into k parts.
    Partitions {
        n: u32,
        k: u32,
        /// Append the multiplicity profile, b and the divisibility marker.
        #[arg(long)]
        details: bool,
    },
    /// Write an OEIS b-file for a(1..=n_max).
    Bfile {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare a(n) with p(n) - 1 and report primality.
    PrimeScan {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a verification check: theorem1, theorem2, corollary, oracle or monotone.
    Verify {
        check: String,
        n_max: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn report_slow_term(term: &SequenceTerm, elapsed: Duration) {
    if elapsed > Duration::from_secs(1) {
        eprintln!("progress: a({}) = {} took {:.2?}", term.n, term.a_n, elapsed);
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Term { n } => {
            let t = a200144_term(n)?;
            writeln!(out, "a({}) = {}", t.n, t.a_n)?;
        }
        Command::Range { n_max, format } => {
            let terms = a200144_range_observed(n_max, report_slow_term)?;
            match format {
                Format::Tsv => {
                    writeln!(out, "n\ta(n)")?;
                    for t in &terms {
                        writeln!(out, "{}\t{}", t.n, t.a_n)?;
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = terms.iter().map(|t| json!({"n": t.n, "a": t.a_n})).collect();
                    writeln!(out, "{}", serde_json::Value::Array(rows))?;
                }
            }
        }
        Command::Partitions { n, k, details } => {
            for part in enumerate_partitions(n, k)? {
                let parts: Vec<String> = part.parts().iter().map(u32::to_string).collect();
                write!(out, "{}", parts.join(" "))?;
                if details {
                    let profile = part.profile();
                    let divisible = divides_multinomial(u64::from(k), &profile)?;
                    write!(
                        out,
                        "\tprofile={}\tb={}\t{}",
                        profile,
                        multinomial(&profile),
                        if divisible { "divisible" } else { "not-divisible" }
                    )?;
                }
                writeln!(out)?;
            }
        }
        Command::Bfile { n_max, out: path } => {
            let terms = a200144_range_observed(n_max, report_slow_term)?;
            write_bfile(&path, &terms).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        }
        Command::PrimeScan { n_max, format } => prime_scan_table(n_max, format, out)?,
        Command::Verify { check, n_max, seed } => {
            let kind: CheckKind = check.parse().map_err(Failure::Usage)?;
            let report = run_check(kind, n_max, seed)?;
            write!(out, "{report}")?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE });
        }
    }
    Ok(EXIT_OK)
}

/// Renders b-file lines `n a(n)`, LF-terminated.
pub fn bfile_contents(terms: &[SequenceTerm]) -> String {
    terms.iter().map(|t| format!("{t}\n")).collect()
}

/// Writes the b-file atomically: a temporary file beside `path` is renamed
/// into place, so a failure leaves no partial output.
pub fn write_bfile(path: &Path, terms: &[SequenceTerm]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    if fs::metadata(path).map(|m| m.is_dir()).unwrap_or(false) {
        return Err(io::Error::other("output path is a directory"));
    }
    let mut tmp = NamedTempFile::new_in(dir)?;
    tmp.write_all(bfile_contents(terms).as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Parses b-file text back into terms.
pub fn parse_bfile(text: &str) -> Option<Vec<SequenceTerm>> {
    text.lines()
        .map(|line| {
            let (n, a) = line.split_once(' ')?;
            Some(SequenceTerm {
                n: n.parse().ok()?,
                a_n: a.parse().ok()?,
            })
        })
        .collect()
}

fn prime_scan_table(n_max: u32, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let reports = prime_scan(n_max)?;
    let mismatches: Vec<u32> = reports
        .iter()
        .filter(|r| !r.is_unit() && r.deficit.is_zero() != r.prime)
        .map(|r| r.n)
        .collect();
    let summary = if n_max < 2 {
        "no n >= 2 in range; nothing to compare".to_string()
    } else if mismatches.is_empty() {
        format!("deficit = 0 coincides exactly with primality for n = 2..{n_max}")
    } else {
        let list: Vec<String> = mismatches.iter().map(u32::to_string).collect();
        format!(
            "deficit = 0 differs from primality at n = {} (range 2..{n_max})",
            list.join(",")
        )
    };
    match format {
        Format::Tsv => {
            writeln!(out, "n\tp(n)\ta(n)\tdeficit\tprime")?;
            for r in &reports {
                let deficit = if r.is_unit() {
                    "n/a (unit)".to_string()
                } else {
                    r.deficit.to_string()
                };
                writeln!(out, "{}\t{}\t{}\t{}\t{}", r.n, r.p_n, r.a_n, deficit, r.prime)?;
            }
            writeln!(out, "summary: {summary}")?;
        }
        Format::Json => {
            let rows: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "p": r.p_n.to_string(),
                        "a": r.a_n,
                        "deficit": if r.is_unit() { serde_json::Value::Null } else { json!(r.deficit.to_string()) },
                        "prime": r.prime,
                    })
                })
                .collect();
            let doc = json!({
                "rows": rows,
                "coincides": n_max >= 2 && mismatches.is_empty(),
                "mismatches": mismatches,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

/// Entry point for the binary: real process arguments and streams.
pub fn main_with_env() -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    // Not locked: range workers report progress on stderr concurrently.
    let mut err = io::stderr();
    let code = run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}
