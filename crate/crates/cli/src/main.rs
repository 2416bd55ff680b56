//! Command-line front end: single-class queries, range sweeps, theorem
//! verification runs, and h0 queries, with CSV/JSON emission.
//!
//! Exit codes: 0 on success (and on a fully verified run), 1 when `verify`
//! finds a disagreement between the two routes, 2 on usage or input errors.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use k3cliff::clifford::clifford_index;
use k3cliff::cones::{h0, NonCurveReason};
use k3cliff::sweep::{render_csv, render_json, report_row, sweep, verify_range, SweepConfig};
use k3cliff::{CurveClass, DivClass, Error, Lattice};

/// An inclusive range of lattice scales, written `n` or `a..b`.
#[derive(Debug, Clone, Copy)]
struct MRange {
    lo: i64,
    hi: i64,
}

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| format!("invalid integer `{t}` in m range"))
        };
        if let Some((a, b)) = s.split_once("..") {
            Ok(MRange {
                lo: parse(a)?,
                hi: parse(b)?,
            })
        } else {
            let n = parse(s)?;
            Ok(MRange { lo: n, hi: n })
        }
    }
}

/// A divisor class `x,y` in the (E, F) basis.
fn parse_class(s: &str) -> Result<DivClass, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid integer `{t}` in class `{s}`"))
    };
    Ok(DivClass::new(parse(x)?, parse(y)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QueryFormat {
    Text,
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "k3cliff",
    version,
    about = "Clifford index and gonality of curves on K3 surfaces with Picard lattice U(m)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full Clifford report for one curve class
    Query {
        /// Lattice scale m >= 1
        #[arg(long)]
        m: i64,
        /// Curve class `x,y` in the (E, F) basis
        #[arg(long, visible_alias = "class", allow_hyphen_values = true, value_parser = parse_class)]
        curve: DivClass,
        #[arg(long, value_enum, default_value = "text")]
        format: QueryFormat,
    },
    /// Tabulate every curve class with 2 < genus <= max-genus
    Sweep {
        /// Lattice scale(s), `n` or `a..b` inclusive
        #[arg(long)]
        m: MRange,
        #[arg(long)]
        max_genus: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Write the table here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the closed form against brute force over a range
    Verify {
        /// Lattice scale(s), `n` or `a..b` inclusive
        #[arg(long)]
        m: MRange,
        #[arg(long)]
        max_genus: i64,
    },
    /// Sections of one divisor class, with its mobile part
    H0 {
        /// Lattice scale m >= 1
        #[arg(long)]
        m: i64,
        /// Divisor class `x,y` in the (E, F) basis
        #[arg(long, visible_alias = "curve", allow_hyphen_values = true, value_parser = parse_class)]
        class: DivClass,
    },
}

/// Errors that terminate with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.cmd {
        Command::Query { m, curve, format } => query(m, curve, format),
        Command::Sweep {
            m,
            max_genus,
            format,
            out,
        } => {
            let config = SweepConfig::new(m.lo, m.hi, max_genus)?;
            let rows = sweep(config)?;
            let rendered = match format {
                TableFormat::Csv => render_csv(&rows),
                TableFormat::Json => render_json(&rows),
            };
            match out {
                Some(path) => std::fs::write(&path, rendered.as_bytes())
                    .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { m, max_genus } => {
            if max_genus < 3 {
                return Err(UsageError(format!(
                    "verify needs --max-genus >= 3, got {max_genus}"
                )));
            }
            let config = SweepConfig::new(m.lo, m.hi, max_genus)?;
            let outcome = verify_range(config)?;
            match outcome.counterexample {
                None => {
                    println!(
                        "checked {} classes (m={}..{}, genus<={max_genus}): all agree",
                        outcome.classes_checked, m.lo, m.hi
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Some(cex) => {
                    println!(
                        "checked {} classes: counterexample at m={} class={},{}: \
                         brute clifford={} general={} vs predicted clifford={} general={}",
                        outcome.classes_checked,
                        cex.m,
                        cex.curve.x,
                        cex.curve.y,
                        cex.brute.clifford,
                        cex.brute.is_general,
                        cex.predicted.clifford,
                        cex.predicted.is_general,
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::H0 { m, class } => {
            let lat = Lattice::new(m)?;
            let r = h0(&lat, class);
            println!(
                "m={m} class={class} h0={} mobile={} stripped_gamma={}",
                r.h0, r.mobile_part, r.stripped_gamma_count
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn query(m: i64, cls: DivClass, format: QueryFormat) -> Result<ExitCode, UsageError> {
    let lat = Lattice::new(m)?;
    let curve = CurveClass::new(&lat, cls).map_err(|e| match e {
        // The one fixed-component family deserves its classical description.
        Error::NotACurveClass {
            reason: NonCurveReason::FixedComponent,
            cls,
        } => UsageError(format!(
            "no irreducible curves in |{cls}| for m=1 (fixed component)"
        )),
        other => UsageError(other.to_string()),
    })?;
    let report = clifford_index(&lat, &curve)?;
    report
        .check_invariants()
        .map_err(|msg| UsageError(format!("internal invariant violation: {msg}")))?;
    match format {
        QueryFormat::Text => {
            let gonality = match report.gonality_exact() {
                Some(g) => format!("{g}"),
                None => format!("{}..{}", report.gonality_lo, report.gonality_hi),
            };
            let kind = if report.is_general {
                "Clifford-general"
            } else {
                "Clifford-special"
            };
            let mu = report
                .mu
                .map(|v| v.to_string())
                .unwrap_or_else(|| "none".into());
            println!("m={m} curve={} genus={}", curve, report.genus);
            println!(
                "d_C={} mu={mu} clifford={} gonality={gonality} {kind}",
                report.elliptic_degree, report.clifford
            );
            println!("A0 witnesses: {}", join(&report.moving_witnesses));
            println!("E0 witnesses: {}", join(&report.elliptic_witnesses));
        }
        QueryFormat::Csv => {
            let row = report_row(m, &report);
            print!("{}", render_csv(std::slice::from_ref(&row)));
        }
        QueryFormat::Json => {
            let row = report_row(m, &report);
            let json = serde_json::to_string_pretty(&row)
                .map_err(|e| UsageError(format!("json rendering failed: {e}")))?;
            println!("{json}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn join(classes: &[DivClass]) -> String {
    if classes.is_empty() {
        return "none".into();
    }
    classes
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
