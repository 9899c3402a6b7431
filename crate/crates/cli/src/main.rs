//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 on unreadable or malformed input, 2 when the
//! computation itself reports an inconsistency (an inexact or infeasible
//! sequence).

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use gysinseq::complexes::relative_cohomology;
use gysinseq::equivariant::quotient_complex;
use gysinseq::formats;
use gysinseq::gysin::{self, GysinInput};
use gysinseq::lesolve::{alternating_sum_check, solve_dims, SlotDim};
use report::Report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable report.
    Text,
    /// Deterministic JSON with sorted keys.
    Machine,
}

#[derive(Parser)]
#[command(
    name = "gysinseq",
    version,
    about = "Long exact sequences of S3-actions over finite simplicial models",
    after_help = "File formats are documented in the repository README."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology dimensions of a complex file.
    Cohomology { input: PathBuf },
    /// Relative cohomology of a pair file.
    Relative { input: PathBuf },
    /// Symmetric/antisymmetric splitting of an involution file.
    Split { input: PathBuf },
    /// Orbit complex of a regular involution file.
    Quotient { input: PathBuf },
    /// Exactness feasibility of a fully known template file.
    LesCheck { input: PathBuf },
    /// Solve a template file for its unknown dimensions.
    LesSolve { input: PathBuf },
    /// Assemble and solve the sequence of an orbit-data file or fixture.
    Gysin {
        /// `fixture <name>` or a path to an orbit-data file.
        #[arg(num_args = 1..=2, required = true)]
        input: Vec<String>,
        /// Pin a known total dimension, e.g. `--known H2=2` (repeatable).
        #[arg(long = "known", value_name = "H<k>=<d>")]
        known: Vec<String>,
    },
    /// Second-page rows of an orbit-data file or fixture.
    E2 {
        #[arg(num_args = 1..=2, required = true)]
        input: Vec<String>,
    },
    /// Duality obstruction of an orbit-data file or fixture.
    Duality {
        #[arg(num_args = 1..=2, required = true)]
        input: Vec<String>,
    },
    /// Print a canned fixture in the orbit-data file format.
    Fixture { name: String },
}

enum Failure {
    /// Malformed or unreadable input: message to stderr, exit 1.
    Input(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_known(flags: &[String]) -> Result<Vec<(usize, usize)>, Failure> {
    flags
        .iter()
        .map(|raw| {
            let body = raw.strip_prefix('H').unwrap_or(raw);
            let (k, d) = body.split_once('=').ok_or_else(|| {
                Failure::Input(format!("--known expects H<k>=<d>, found \"{raw}\""))
            })?;
            let k = k.trim().parse::<usize>().map_err(|_| {
                Failure::Input(format!("bad degree in --known \"{raw}\""))
            })?;
            let d = d.trim().parse::<usize>().map_err(|_| {
                Failure::Input(format!("bad dimension in --known \"{raw}\""))
            })?;
            Ok((k, d))
        })
        .collect()
}

/// Resolves `fixture <name>` or a file path into orbit data plus a label
/// for the report.
fn resolve_gysin_input(args: &[String]) -> Result<(String, GysinInput), Failure> {
    match args {
        [one] => {
            let path = PathBuf::from(one);
            let text = read_input(&path)?;
            Ok((one.clone(), formats::parse_gysin_input(&text)?))
        }
        [kw, name] if kw == "fixture" => Ok((format!("fixture {name}"), gysin::fixture(name)?)),
        _ => Err(Failure::Input(
            "expected a file path or `fixture <name>`".to_string(),
        )),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Cohomology { input } => {
            let x = formats::parse_complex(&read_input(input)?)?;
            let dims = gysinseq::complexes::cohomology(&x).dims;
            Ok(report::cohomology_report(
                "cohomology",
                &dims,
                x.dim().unwrap_or(0),
            ))
        }
        Command::Relative { input } => {
            let p = formats::parse_pair(&read_input(input)?)?;
            let dims = relative_cohomology(&p).dims;
            Ok(report::cohomology_report(
                "relative",
                &dims,
                p.total().dim().unwrap_or(0),
            ))
        }
        Command::Split { input } => {
            let inv = formats::parse_involution(&read_input(input)?)?;
            Ok(report::split_report(&inv))
        }
        Command::Quotient { input } => {
            let inv = formats::parse_involution(&read_input(input)?)?;
            let q = quotient_complex(&inv)?;
            Ok(report::quotient_report(&q))
        }
        Command::LesCheck { input } => {
            let t = formats::parse_template(&read_input(input)?)?;
            if let Some(pos) = t.dims().iter().position(|d| *d == SlotDim::Unknown) {
                return Err(Failure::Input(format!(
                    "les-check needs every dimension known; slot {pos} is `?` (use les-solve)"
                )));
            }
            let balanced = alternating_sum_check(&t)?;
            let solve = solve_dims(&t)?;
            Ok(report::les_check_report(&t, &solve, balanced))
        }
        Command::LesSolve { input } => {
            let t = formats::parse_template(&read_input(input)?)?;
            let solve = solve_dims(&t)?;
            Ok(report::les_solve_report(&t, &solve))
        }
        Command::Gysin { input, known } => {
            let (source, mut g) = resolve_gysin_input(input)?;
            for (k, d) in parse_known(known)? {
                g.known_total.insert(k, d);
            }
            let rep = gysin::assemble(&g)?;
            Ok(report::gysin_report(&source, &g, &rep))
        }
        Command::E2 { input } => {
            let (source, g) = resolve_gysin_input(input)?;
            let rows = gysin::e2_rows(&g)?;
            Ok(report::e2_report(&source, &rows))
        }
        Command::Duality { input } => {
            let (source, g) = resolve_gysin_input(input)?;
            let (obstructed, detail) = gysin::duality_report(&g)?;
            Ok(report::duality_cli_report(&source, obstructed, &detail))
        }
        Command::Fixture { name } => {
            let g = gysin::fixture(name)?;
            let note = gysin::fixture_note(name)?;
            Ok(report::fixture_report(name, note, &g))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Machine => {
                    let rendered = serde_json::to_string_pretty(&report.machine)
                        .expect("reports serialize");
                    println!("{rendered}");
                }
            }
            ExitCode::from(report.exit_code as u8)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
