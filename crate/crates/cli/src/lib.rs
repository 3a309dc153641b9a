//! Command-line front end for `affix-core`.
//!
//! Exit status: 0 for success, a feasible verdict or a true property; 1 for an
//! infeasible verdict, a false property or a construction that did not
//! complete; 2 for usage, I/O and parse errors.

pub mod formats;

use std::io::Write;
use std::path::{Path, PathBuf};

use affix_core::{
    approx_optimal, average_cost, build_fix_free, build_prefix_free, check_prefix_feasibility,
    is_fix_free, is_prefix_free, is_suffix_free, is_uniquely_decodable, BuildOutcome, CostModel,
    Distribution, FixFreeOutcome,
};
use clap::{Parser, Subcommand, ValueEnum};

use crate::formats::{
    format_decimal, format_fraction, parse_code, parse_compositions, parse_rational, render_code,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "affix", version, about = "Prefix-free and fix-free codes with prescribed codeword compositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a prefix-free code with the given compositions exists.
    CheckFeasible { compositions: PathBuf },
    /// Build the smallest binary prefix-free code with the given compositions.
    BuildPrefix { compositions: PathBuf },
    /// Build a binary fix-free code with the given compositions.
    BuildFixfree { compositions: PathBuf },
    /// Near-optimal binary fix-free code of n words under letter costs (1, m).
    Approx {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational)]
        m: affix_core::Rational,
        #[arg(long, value_parser = parse_rational)]
        epsilon: affix_core::Rational,
    },
    /// Check a code for a freeness or decodability property.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        /// Alphabet size; inferred from the largest digit when omitted.
        #[arg(long)]
        alphabet: Option<usize>,
        code: PathBuf,
    },
    /// Average codeword cost of a code.
    Cost {
        code: PathBuf,
        /// Comma-separated letter costs, one per symbol.
        #[arg(long, value_parser = parse_rational, value_delimiter = ',', required = true)]
        costs: Vec<affix_core::Rational>,
        /// Comma-separated codeword probabilities; uniform when omitted.
        #[arg(long, value_parser = parse_rational, value_delimiter = ',')]
        probs: Option<Vec<affix_core::Rational>>,
        /// Also print a decimal approximation.
        #[arg(long)]
        decimal: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Prefix,
    Suffix,
    Fixfree,
    Ud,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn with_path<T, E: std::fmt::Display>(path: &Path, r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn verdict(out: &mut dyn Write, ok: bool, yes: &str, no: &str) -> Result<i32, Failure> {
    writeln!(out, "{}", if ok { yes } else { no })?;
    Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::CheckFeasible { compositions } => {
            let ms = with_path(&compositions, parse_compositions(&read(&compositions)?))?;
            let v = check_prefix_feasibility(&ms);
            if let Some(w) = v.witness() {
                writeln!(err, "violated at composition {}: {} < {}", w.composition, w.lhs, w.rhs)?;
            }
            verdict(out, v.is_feasible(), "FEASIBLE", "INFEASIBLE")
        }
        Command::BuildPrefix { compositions } => {
            let ms = with_path(&compositions, parse_compositions(&read(&compositions)?))?;
            match build_prefix_free(&ms)? {
                BuildOutcome::Success(code) => {
                    out.write_all(render_code(&code).as_bytes())?;
                    Ok(EXIT_OK)
                }
                BuildOutcome::Infeasible { step, composition } => {
                    writeln!(err, "no prefix-free code: step {step}, composition {composition}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::BuildFixfree { compositions } => {
            let ms = with_path(&compositions, parse_compositions(&read(&compositions)?))?;
            match build_fix_free(&ms)? {
                FixFreeOutcome::Success(code) => {
                    out.write_all(render_code(&code).as_bytes())?;
                    Ok(EXIT_OK)
                }
                FixFreeOutcome::Infeasible { step, composition } => {
                    writeln!(err, "no fix-free code: step {step}, composition {composition}")?;
                    Ok(EXIT_NEGATIVE)
                }
                FixFreeOutcome::NotApplicable { lengths } => {
                    writeln!(err, "not applicable: lengths {lengths:?} are not pairwise equal or at least doubling")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Approx { n, m, epsilon } => {
            let r = approx_optimal(n, &m, &epsilon)?;
            out.write_all(render_code(&r.code).as_bytes())?;
            writeln!(
                err,
                "cost {} at budget {} (ratio bound {}, {} probes)",
                format_fraction(&r.achieved_cost),
                format_fraction(&r.budget_used),
                format_fraction(&r.ratio_bound),
                r.probes
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify { property, alphabet, code } => {
            let c = with_path(&code, parse_code(&read(&code)?, alphabet))?;
            let holds = match property {
                Property::Prefix => is_prefix_free(&c),
                Property::Suffix => is_suffix_free(&c),
                Property::Fixfree => is_fix_free(&c),
                Property::Ud => is_uniquely_decodable(&c),
            };
            verdict(out, holds, "TRUE", "FALSE")
        }
        Command::Cost { code, costs, probs, decimal } => {
            let c = with_path(&code, parse_code(&read(&code)?, Some(costs.len())))?;
            let cm = CostModel::new(costs)?;
            let dist = match probs {
                Some(p) => Distribution::new(p)?,
                None => Distribution::uniform(c.len())?,
            };
            let avg = average_cost(&c, &dist, &cm)?;
            writeln!(out, "{}", format_fraction(&avg))?;
            if decimal {
                writeln!(out, "{}", format_decimal(&avg, 6))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (program name first), writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
