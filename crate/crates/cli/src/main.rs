//! `abelcount`: print curve counts, their generating series and tables, and
//! run the verification suite.
//!
//! Exit status: 0 on success, 1 when `verify` finds a mismatch, 2 on usage
//! or domain errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use abelcount::golden::GoldenTables;
use abelcount::verify::{verify, VerifyBounds};
use abelcount::{generating_series, invariant, oracle, CountTable, InvariantKind, Source};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "abelcount",
    version,
    about = "Curve counts on Abelian surfaces from quasi-modular forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single count.
    Coeff {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        nodes: u32,
        #[arg(long, value_enum, default_value = "closed")]
        source: SourceArg,
    },
    /// Print a grid of counts, rows g and columns n.
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        gmin: u32,
        #[arg(long)]
        gmax: u32,
        #[arg(long)]
        nmin: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long, value_enum, default_value = "closed")]
        source: SourceArg,
    },
    /// Print the generating series modulo q^prec as `exponent:coefficient` pairs.
    Series {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        prec: usize,
        /// Render as a table instead of the pair list.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Cross-check reference tables, closed forms, oracles and identities.
    Verify {
        #[arg(long, default_value_t = 5)]
        gmax: u32,
        #[arg(long, default_value_t = 7)]
        nmax: u32,
        #[arg(long = "sigma-max", default_value_t = 200)]
        sigma_max: u64,
        /// Override one reference cell, `KIND:G:N=VALUE`.
        #[arg(long = "golden-cell", hide = true)]
        golden_cell: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    N,
    Fls,
    N12,
    N34,
    Zero13,
    Zero14,
    Zero23,
    Zero24,
}

impl From<KindArg> for InvariantKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::N => InvariantKind::N,
            KindArg::Fls => InvariantKind::Fls,
            KindArg::N12 => InvariantKind::N12,
            KindArg::N34 => InvariantKind::N34,
            KindArg::Zero13 => InvariantKind::Zero13,
            KindArg::Zero14 => InvariantKind::Zero14,
            KindArg::Zero23 => InvariantKind::Zero23,
            KindArg::Zero24 => InvariantKind::Zero24,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Closed,
    Oracle,
}

impl From<SourceArg> for Source {
    fn from(source: SourceArg) -> Self {
        match source {
            SourceArg::Closed => Source::Closed,
            SourceArg::Oracle => Source::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<abelcount::Error> for Failure {
    fn from(e: abelcount::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Coeff {
            kind,
            genus,
            nodes,
            source,
        } => {
            let kind = kind.into();
            let value = match source.into() {
                Source::Closed => invariant(kind, genus, nodes)?,
                Source::Oracle => oracle::oracle(kind, genus, nodes)?,
            };
            Ok(format!("{value}\n"))
        }
        Command::Table {
            kind,
            gmin,
            gmax,
            nmin,
            nmax,
            format,
            source,
        } => {
            let table =
                CountTable::compute(kind.into(), (gmin, gmax), (nmin, nmax), source.into())?;
            Ok(match format {
                Format::Md => table.to_markdown(),
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json() + "\n",
            })
        }
        Command::Series {
            kind,
            genus,
            prec,
            format,
        } => {
            let kind: InvariantKind = kind.into();
            let series = generating_series(kind, genus, prec)?;
            let coefficients = series.coefficients().iter().map(ToString::to_string);
            let mut out = String::new();
            match format {
                None => {
                    let pairs: Vec<_> = coefficients
                        .enumerate()
                        .map(|(k, c)| format!("{k}:{c}"))
                        .collect();
                    out = pairs.join(" ") + "\n";
                }
                Some(Format::Md) => {
                    out.push_str("| exponent | coefficient |\n|---:|---:|\n");
                    for (k, c) in coefficients.enumerate() {
                        let _ = writeln!(out, "| {k} | {c} |");
                    }
                }
                Some(Format::Csv) => {
                    out.push_str("exponent,coefficient\n");
                    for (k, c) in coefficients.enumerate() {
                        let _ = writeln!(out, "{k},{c}");
                    }
                }
                Some(Format::Json) => {
                    let quoted: Vec<_> = coefficients.map(|c| format!("\"{c}\"")).collect();
                    let _ = writeln!(
                        out,
                        "{{\"kind\":\"{kind}\",\"genus\":{genus},\"prec\":{prec},\"coefficients\":[{}]}}",
                        quoted.join(",")
                    );
                }
            }
            Ok(out)
        }
        Command::Verify {
            gmax,
            nmax,
            sigma_max,
            golden_cell,
        } => {
            let mut golden = GoldenTables::embedded();
            for spec in &golden_cell {
                let (kind, genus, nodes, value) = parse_golden_cell(spec)?;
                golden.set(kind, genus, nodes, value)?;
            }
            let bounds = VerifyBounds {
                g_max: gmax,
                n_max: nmax,
                sigma_max,
            };
            let report = verify(bounds, &golden)?;
            print!("{report}");
            match report.first_failure() {
                None => Ok(String::new()),
                Some(failure) => {
                    eprintln!("verification failed: {failure}");
                    Err(Failure::Mismatch)
                }
            }
        }
    }
}

fn parse_golden_cell(spec: &str) -> Result<(InvariantKind, u32, u32, u64), Failure> {
    let bad = || Failure::Usage(format!("expected KIND:G:N=VALUE, got `{spec}`"));
    let (key, value) = spec.split_once('=').ok_or_else(bad)?;
    let mut fields = key.split(':');
    let (Some(kind), Some(genus), Some(nodes), None) =
        (fields.next(), fields.next(), fields.next(), fields.next())
    else {
        return Err(bad());
    };
    Ok((
        kind.parse()?,
        genus.parse().map_err(|_| bad())?,
        nodes.parse().map_err(|_| bad())?,
        value.parse().map_err(|_| bad())?,
    ))
}
