//! Argument parsing and command execution.

use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use extbar_core::algebra::{make_free_algebra, Alg, Flavor};
use extbar_core::bar::iterate_bar;
use extbar_core::extract::{ext_table, Method};
use extbar_core::homology::slice_homology;
use extbar_core::words::{enumerate_p_pairs, enumerate_words};
use extbar_core::{Error, Prime, Ring};

use crate::report::{BarHomologyReport, ExtTableReport, VerifyReport, WordsReport};
use crate::verify::{self, Bounds, Suite};

#[derive(Debug, Parser)]
#[command(name = "extbar", version, about = "Ext-algebras between exponential functors through bar constructions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List admissible words or p-pairs.
    Words {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        height: usize,
        #[arg(long)]
        max_degree: u64,
        /// List p-pairs instead of words.
        #[arg(long)]
        pairs: bool,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Homology of the n-fold bar construction of Γ(R^m[2]) in one weight.
    BarHomology {
        #[arg(long, value_parser = parse_ring)]
        ring: Ring,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Ext table E(X^(s+t), Y^(s)) evaluated on R^m.
    ExtTable {
        #[arg(long, value_parser = parse_flavor)]
        source: Flavor,
        #[arg(long, value_parser = parse_flavor)]
        target: Flavor,
        #[arg(long, value_parser = parse_ring)]
        ring: Ring,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        t: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, allow_negative_numbers = true)]
        max_codegree: Option<i64>,
        /// Defaults to bar where a bar route exists, predict otherwise.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        max_s: Option<u32>,
        #[arg(long)]
        max_t: Option<u32>,
        #[command(flatten)]
        format: FormatArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Bar,
    Predict,
}

#[derive(Clone, Copy, Debug, Default, Args)]
pub struct FormatArgs {
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

fn parse_ring(s: &str) -> Result<Ring, Error> {
    s.parse()
}

fn parse_flavor(s: &str) -> Result<Flavor, Error> {
    s.parse()
}

/// Printed output and exit code of a successful run.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAComplex { .. } | Error::FactorOverflow(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn internal(message: impl ToString) -> Failure {
    Failure {
        code: 3,
        message: message.to_string(),
    }
}

fn render<T: serde::Serialize>(
    value: &T,
    format: FormatArgs,
    text: impl FnOnce() -> String,
    csv: impl FnOnce() -> Result<String, csv::Error>,
) -> Result<String, Failure> {
    if format.json {
        let mut s = serde_json::to_string(value).map_err(internal)?;
        s.push('\n');
        Ok(s)
    } else if format.csv {
        csv().map_err(internal)
    } else {
        Ok(text())
    }
}

/// Caps the global thread pool at `EXTBAR_THREADS` if set.
fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("EXTBAR_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("EXTBAR_THREADS must be a positive integer, got `{v}`")))?;
    // a pool built earlier in the same process is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn has_bar_route(x: Flavor, y: Flavor, ring: Ring, twisted: bool) -> bool {
    if twisted {
        return false;
    }
    let from_sym = x == Flavor::Sym && matches!(y, Flavor::Lambda | Flavor::Gamma);
    from_sym || (ring == Ring::Integers && (x, y) == (Flavor::Lambda, Flavor::Gamma))
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Words {
            p,
            height,
            max_degree,
            pairs,
            format,
        } => {
            Prime::new(*p)?;
            let words = enumerate_words(*p, *height, *max_degree);
            let pp = pairs.then(|| enumerate_p_pairs(*p, *height, *max_degree));
            let report = WordsReport::new(*p, *height, *max_degree, &words, pp.as_deref());
            let output = render(&report, *format, || report.text(), || report.csv())?;
            Ok(Outcome { output, code: 0 })
        }
        Command::BarHomology {
            ring,
            n,
            weight,
            m,
            format,
        } => {
            if *m == 0 {
                return Err(usage("--m must be positive"));
            }
            let base: Alg = Arc::new(make_free_algebra(Flavor::Gamma, &[(2, 1, *m)], *ring)?);
            let alg = iterate_bar(base, *n);
            let h = slice_homology(alg.as_ref(), *weight)?;
            let report = BarHomologyReport::new(ring.to_string(), *n, *weight, *m, &h);
            let output = render(&report, *format, || report.text(), || report.csv())?;
            Ok(Outcome { output, code: 0 })
        }
        Command::ExtTable {
            source,
            target,
            ring,
            s,
            t,
            m,
            max_weight,
            max_codegree,
            method,
            format,
        } => {
            if *m == 0 {
                return Err(usage("--m must be positive"));
            }
            let bar_ok = has_bar_route(*source, *target, *ring, s + t > 0);
            let method = match method {
                Some(MethodArg::Bar) if !bar_ok => {
                    return Err(usage(format!(
                        "no bar construction route for E({source}, {target}) with s={s}, t={t} over {ring}"
                    )))
                }
                Some(MethodArg::Bar) => Method::Bar,
                Some(MethodArg::Predict) => Method::Predict,
                None if bar_ok => Method::Bar,
                None => Method::Predict,
            };
            let table = ext_table(*source, *target, *ring, *s, *t, *m, *max_weight, method)?;
            let name = match method {
                Method::Bar => "bar",
                Method::Predict => "predict",
            };
            let report = ExtTableReport::new(&table, *s, *t, *max_codegree, name);
            let output = render(&report, *format, || report.text(), || report.csv())?;
            Ok(Outcome { output, code: 0 })
        }
        Command::Verify {
            suite,
            p,
            n,
            m,
            max_weight,
            max_s,
            max_t,
            format,
        } => {
            let bounds = Bounds {
                p: *p,
                n: *n,
                m: *m,
                max_weight: *max_weight,
                max_s: *max_s,
                max_t: *max_t,
            };
            if matches!(suite, Suite::CartanField | Suite::TwistConsistency | Suite::Exponential) {
                if let Some(p) = p {
                    Prime::new(*p)?;
                }
            }
            let report: VerifyReport = verify::run(*suite, &bounds)?;
            let output = render(&report, *format, || report.text(), || report.csv())?;
            let code = if report.passed { 0 } else { 1 };
            Ok(Outcome { output, code })
        }
    }
}
