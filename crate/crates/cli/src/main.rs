use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lidef::engine::{delta, l_k, qme_residual, validate_algebra, AlgebraInstance, Cochain};
use lidef::io;
use lidef::prop::{sum_to_sexpr, GeneratorId, Model};
use lidef::suites::{run_suite, Suite, SuiteConfig};
use lidef::{Error, Result};

/// Exact L∞ deformation complexes of algebra morphisms and isomorphisms.
///
/// Exit status: 0 when every check passes, 1 when a mathematical check
/// fails, 2 on malformed input.
#[derive(Parser)]
#[command(name = "lidef", version, about)]
struct Cli {
    /// Write the result to this file instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra file
    Validate { algebra: PathBuf },
    /// Compute l_k of the given cochains
    Lk {
        #[arg(long)]
        k: usize,
        algebra: PathBuf,
        cochains: Vec<PathBuf>,
    },
    /// Compute the differential δ = l_1 of a cochain
    Delta { algebra: PathBuf, cochain: PathBuf },
    /// Print the differential of a generator as s-expressions
    Differential {
        #[arg(long)]
        model: String,
        #[arg(long)]
        generator: String,
    },
    /// Run a seeded verification suite
    Verify {
        /// differential, delta2, linfty, oracle, vanishing, transport, qme,
        /// curvature, or all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: i64,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Residual of the quantum master equation for a degree-1 cochain κ
    Qme {
        algebra: PathBuf,
        kappa: PathBuf,
        /// Last bracket to include (defaults to the model's bound)
        #[arg(long)]
        k_max: Option<usize>,
    },
}

enum Outcome {
    Pass(String),
    Fail(String),
}

fn read_json(path: &Path) -> Result<serde_json::Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::Argument(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_algebra(path: &Path) -> Result<AlgebraInstance> {
    io::algebra_from_json(&read_json(path)?)
}

fn read_cochain(path: &Path) -> Result<Cochain> {
    io::cochain_from_json(&read_json(path)?)
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Validate { algebra } => {
            let a = read_algebra(&algebra)?;
            let report = validate_algebra(&a)?;
            let mut out = String::new();
            for (name, residual) in &report.residuals {
                let status = if residual.is_zero() { "ok" } else { "FAILED" };
                out.push_str(&format!("{status} {name}\n"));
            }
            Ok(if report.holds() { Outcome::Pass(out) } else { Outcome::Fail(out) })
        }
        Command::Lk { k, algebra, cochains } => {
            if cochains.len() != k {
                return Err(Error::Argument(format!("--k {k} needs {k} cochains, got {}", cochains.len())));
            }
            let a = read_algebra(&algebra)?;
            let xs = cochains.iter().map(|p| read_cochain(p)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&Cochain> = xs.iter().collect();
            Ok(Outcome::Pass(io::to_string(&io::cochain_to_json(&l_k(&refs, &a, None)?))))
        }
        Command::Delta { algebra, cochain } => {
            let a = read_algebra(&algebra)?;
            let x = read_cochain(&cochain)?;
            Ok(Outcome::Pass(io::to_string(&io::cochain_to_json(&delta(&x, &a)?))))
        }
        Command::Differential { model, generator } => {
            let model: Model = model.parse()?;
            let gen: GeneratorId = generator.parse()?;
            Ok(Outcome::Pass(sum_to_sexpr(&model.differential(gen)?)))
        }
        Command::Verify { suite, model, seed, trials, max_degree, json } => {
            let model: Model = model.parse()?;
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.into_iter().filter(|s| s.applies_to(model)).collect()
            } else {
                vec![suite.parse()?]
            };
            let config = SuiteConfig::new(model, seed, trials, max_degree);
            let mut out = String::new();
            let mut reports = Vec::new();
            let mut passed = true;
            for s in suites {
                let report = run_suite(s, &config)?;
                eprint!("{}", report.timings());
                passed &= report.passed();
                if json {
                    reports.push(io::report_to_json(&report));
                } else {
                    out.push_str(&format!("{report}\n"));
                }
            }
            if json {
                let doc = if reports.len() == 1 { reports.remove(0) } else { serde_json::Value::Array(reports) };
                out = io::to_string(&doc);
            }
            Ok(if passed { Outcome::Pass(out) } else { Outcome::Fail(out) })
        }
        Command::Qme { algebra, kappa, k_max } => {
            let a = read_algebra(&algebra)?;
            let kappa = read_cochain(&kappa)?;
            let residual = qme_residual(&kappa, &a, k_max.unwrap_or(a.model().qme_bound()))?;
            let out = io::to_string(&io::cochain_to_json(&residual));
            Ok(if residual.is_zero() { Outcome::Pass(out) } else { Outcome::Fail(out) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(cli.command) {
        Ok(Outcome::Pass(text)) => (text, 0),
        Ok(Outcome::Fail(text)) => (text, 1),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
