//! Command-line front end for `numsg`.
//!
//! [`run`] parses arguments, dispatches to the library, and writes either
//! line-oriented text or a single JSON object. Exit codes: 0 on success, 2 on
//! usage or input validation errors, 1 when a computation hits a limit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use numsg::enumerator::LgenStream;
use numsg::{
    apery, apery_decompose, apery_residue, gaps_from_generators, generating_set_from_gaps,
    small_elements_from_generators, AperyList, Error, GapsList, GeneratorList,
};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "numsg", version, about = "Invariants of numerical semigroups")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Algorithm {
    /// Shift the gaps by n and keep the members (any n)
    Direct,
    /// Least member of each residue class (n must be a nonzero member)
    Residue,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the semigroup generated by a coprime generator list
    Gaps {
        #[arg(long, value_parser = parse_csv)]
        generators: Csv,
    },
    /// Invariants of the semigroup with the given gaps
    Invariants {
        #[arg(long, value_parser = parse_csv)]
        gaps: Csv,
    },
    /// Apéry set with respect to n
    Apery {
        #[arg(long, value_parser = parse_csv)]
        gaps: Csv,
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, value_enum, default_value_t = Algorithm::Direct)]
        algorithm: Algorithm,
    },
    /// Write a member a as k * n + w with w in the Apéry set of n
    Decompose {
        #[arg(long, value_parser = parse_csv)]
        gaps: Csv,
        #[arg(short = 'n')]
        n: u64,
        #[arg(short = 'a')]
        a: u64,
    },
    /// Whether x belongs to the semigroup
    Member {
        #[arg(long, value_parser = parse_csv)]
        gaps: Csv,
        #[arg(short = 'x')]
        x: u64,
    },
    /// Members up to the conductor, computed from generators
    SmallElements {
        #[arg(long, value_parser = parse_csv)]
        generators: Csv,
        #[arg(long)]
        max_iterations: Option<u64>,
    },
    /// First `count` multiplicity index lists with bound m
    EnumLists {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        count: usize,
    },
    /// First `count` linear combinations of the generators
    Mgen {
        #[arg(long, value_parser = parse_csv)]
        generators: Csv,
        #[arg(long)]
        count: usize,
    },
    /// Generating set from the Apéry set with respect to the multiplicity
    GeneratingSet {
        #[arg(long, value_parser = parse_csv)]
        gaps: Csv,
    },
}

#[derive(Debug, Clone)]
struct Csv(Vec<u64>);

fn parse_csv(s: &str) -> Result<Csv, String> {
    if s.is_empty() {
        return Ok(Csv(Vec::new()));
    }
    s.split(',')
        .map(|item| {
            item.parse::<u64>()
                .map_err(|e| format!("invalid natural number {item:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(Csv)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Nothing is written to `out` unless the command succeeds.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_invalid_input() {
                2
            } else {
                1
            }
        }
    }
}

fn render(format: Format, text: impl FnOnce() -> String, value: serde_json::Value) -> String {
    match format {
        Format::Text => text(),
        Format::Json => format!("{value}\n"),
    }
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let mut s = String::from("[");
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            s.push(';');
        }
        let _ = write!(s, "{x}");
    }
    s.push(']');
    s
}

fn execute(cli: &Cli) -> Result<String, Error> {
    let format = cli.format;
    let output = match &cli.command {
        Command::Gaps { generators } => {
            let gens = GeneratorList::normalize(generators.0.clone(), true)?;
            let gaps = gaps_from_generators(&gens, None)?;
            let report = gaps.invariants();
            render(
                format,
                || {
                    format!(
                        "generators: {gens}\ngaps: {gaps}\nconductor: {}\nmultiplicity: {}\ngenus: {}\nsmall_elements: {}\n",
                        report.conductor, report.multiplicity, report.genus, report.small_elements
                    )
                },
                json!({
                    "generators": gens.as_slice(),
                    "gaps": gaps.as_slice(),
                    "conductor": report.conductor,
                    "multiplicity": report.multiplicity,
                    "genus": report.genus,
                    "small_elements": report.small_elements.as_slice(),
                }),
            )
        }
        Command::Invariants { gaps } => {
            let gaps = GapsList::new(gaps.0.clone())?;
            let report = gaps.invariants();
            let frobenius = report
                .frobenius
                .map_or_else(|| "none".to_string(), |f| f.to_string());
            render(
                format,
                || {
                    format!(
                        "gaps: {gaps}\nmultiplicity: {}\nconductor: {}\nfrobenius: {frobenius}\ngenus: {}\nsmall_elements: {}\n",
                        report.multiplicity, report.conductor, report.genus, report.small_elements
                    )
                },
                json!({
                    "gaps": gaps.as_slice(),
                    "multiplicity": report.multiplicity,
                    "conductor": report.conductor,
                    "frobenius": report.frobenius,
                    "genus": report.genus,
                    "small_elements": report.small_elements.as_slice(),
                }),
            )
        }
        Command::Apery { gaps, n, algorithm } => {
            let gaps = GapsList::new(gaps.0.clone())?;
            let ap: AperyList = match algorithm {
                Algorithm::Direct => apery(&gaps, *n),
                Algorithm::Residue => apery_residue(&gaps.small_elements(), *n)?,
            };
            render(
                format,
                || format!("{ap}\n"),
                json!({
                    "gaps": gaps.as_slice(),
                    "n": n,
                    "algorithm": algorithm,
                    "apery": ap.elements(),
                }),
            )
        }
        Command::Decompose { gaps, n, a } => {
            let gaps = GapsList::new(gaps.0.clone())?;
            let d = apery_decompose(&gaps, *n, *a)?;
            render(
                format,
                || format!("k: {}\nw: {}\n", d.coefficient, d.apery_element),
                json!({ "n": n, "a": a, "k": d.coefficient, "w": d.apery_element }),
            )
        }
        Command::Member { gaps, x } => {
            let gaps = GapsList::new(gaps.0.clone())?;
            let member = gaps.is_member(*x);
            render(
                format,
                || format!("{member}\n"),
                json!({ "x": x, "member": member }),
            )
        }
        Command::SmallElements {
            generators,
            max_iterations,
        } => {
            let gens = GeneratorList::normalize(generators.0.clone(), true)?;
            let se = small_elements_from_generators(&gens, *max_iterations)?;
            render(
                format,
                || format!("{se}\n"),
                json!({ "generators": gens.as_slice(), "small_elements": se.as_slice() }),
            )
        }
        Command::EnumLists { m, count } => {
            let lists: Vec<Vec<usize>> = LgenStream::new(*m)
                .take(*count)
                .map(|l| l.indices().to_vec())
                .collect();
            render(
                format,
                || lists.iter().map(|l| list(l) + "\n").collect(),
                json!({ "m": m, "lists": lists }),
            )
        }
        Command::Mgen { generators, count } => {
            let gens = GeneratorList::normalize(generators.0.clone(), false)?;
            let values = gens
                .combinations()
                .take(*count)
                .collect::<Result<Vec<u64>, _>>()?;
            render(
                format,
                || values.iter().map(|v| format!("{v}\n")).collect(),
                json!({ "generators": gens.as_slice(), "values": values }),
            )
        }
        Command::GeneratingSet { gaps } => {
            let gaps = GapsList::new(gaps.0.clone())?;
            let gens = generating_set_from_gaps(&gaps);
            render(
                format,
                || format!("{gens}\n"),
                json!({ "gaps": gaps.as_slice(), "generators": gens.as_slice() }),
            )
        }
    };
    Ok(output)
}
