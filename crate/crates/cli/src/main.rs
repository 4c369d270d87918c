mod commands;
mod expr;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Deserialize;

use reptilt::algebra::ReplicatedAlgebra;
use reptilt::hereditary::Quiver;
use reptilt::tiltquiver::Limits;
use reptilt::{Error, Field, Fp, Q};

use commands::{GraphFormat, Outcome};
use expr::ModuleExpr;

const INPUT: u8 = 2;
const SEED: u8 = 3;
const FAILURE: u8 = 1;

/// Tilting theory over replicated algebras of acyclic quivers.
#[derive(Parser)]
#[command(name = "reptilt", version)]
struct Cli {
    /// Scalar field: `q` for the rationals or `fp:<p>` for a supported prime
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Write the report to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a module is tilting
    CheckTilting { algebra: PathBuf, module: String },
    /// List the complements of an almost complete partial tilting module
    Complements {
        algebra: PathBuf,
        module: String,
        /// A complement to start the exchange chain from
        #[arg(long)]
        seed: Option<String>,
    },
    /// Explore the tilting quiver from the regular module
    TiltingQuiver {
        algebra: PathBuf,
        #[arg(long, default_value_t = 500)]
        max_nodes: usize,
        #[arg(long)]
        max_radius: Option<usize>,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimal projective resolution and injective coresolution
    Resolve {
        algebra: PathBuf,
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// Auslander-Reiten quiver of a representation-finite replicated algebra
    ArQuiver {
        algebra: PathBuf,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the worked examples and their cross-checks
    VerifyPaper,
}

#[derive(Deserialize)]
struct AlgebraFile {
    #[serde(default = "one")]
    m: usize,
}

fn one() -> usize {
    1
}

enum Failure {
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(format!("{e:#}"))
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => INPUT,
            Failure::Lib(e) => match e {
                Error::Seed(_) => SEED,
                Error::Dimension(_)
                | Error::Quiver(_)
                | Error::InvalidModule(_)
                | Error::NotHomomorphism(_)
                | Error::OutOfRange(_)
                | Error::AlgebraMismatch
                | Error::Precondition(_)
                | Error::NotDynkin(_)
                | Error::Parse(_) => INPUT,
                Error::StrategyUnavailable(_) | Error::TheoremViolation(_) | Error::Internal(_) => {
                    FAILURE
                }
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(s) => s.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn load_algebra(path: &Path) -> Result<Arc<ReplicatedAlgebra>, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading algebra file {}", path.display()))?;
    let file: AlgebraFile = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let quiver = Quiver::from_json(&text)?;
    Ok(Arc::new(ReplicatedAlgebra::new(quiver, file.m)?))
}

/// A module argument is a path to a JSON file or inline JSON.
fn load_module(arg: &str) -> Result<ModuleExpr, Failure> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).with_context(|| format!("reading module file {arg}"))?
    } else {
        arg.to_string()
    };
    Ok(ModuleExpr::parse(&text)?)
}

fn graph_format(dot: bool) -> GraphFormat {
    if dot {
        GraphFormat::Dot
    } else {
        GraphFormat::Json
    }
}

fn run<F: Field>(cli: &Cli) -> Result<Outcome, Failure> {
    Ok(match &cli.command {
        Command::CheckTilting { algebra, module } => {
            commands::check::<F>(&load_algebra(algebra)?, &load_module(module)?)?
        }
        Command::Complements { algebra, module, seed } => {
            let alg = load_algebra(algebra)?;
            let seed = seed.as_deref().map(load_module).transpose()?;
            commands::complements::<F>(&alg, &load_module(module)?, seed.as_ref())?
        }
        Command::TiltingQuiver { algebra, max_nodes, max_radius, dot, .. } => {
            let limits =
                Limits { max_vertices: *max_nodes, max_radius: max_radius.unwrap_or(usize::MAX) };
            commands::tilting_quiver::<F>(&load_algebra(algebra)?, limits, graph_format(*dot))?
        }
        Command::Resolve { algebra, module, json } => {
            commands::resolve::<F>(&load_algebra(algebra)?, &load_module(module)?, *json)?
        }
        Command::ArQuiver { algebra, dot, .. } => {
            commands::ar::<F>(&load_algebra(algebra)?, graph_format(*dot))?
        }
        Command::VerifyPaper => commands::verify_paper::<F>()?,
    })
}

/// Prime fields are instantiated at compile time; these are the ones built in.
const PRIMES: [u64; 9] = [2, 3, 5, 7, 11, 13, 101, 65521, 2147483647];

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let field = cli.field.trim().to_ascii_lowercase();
    if field == "q" {
        return run::<Q>(cli);
    }
    let p: u64 = field
        .strip_prefix("fp:")
        .and_then(|p| p.parse().ok())
        .ok_or_else(|| Failure::Input(format!("unknown field {:?}", cli.field)))?;
    match p {
        2 => run::<Fp<2>>(cli),
        3 => run::<Fp<3>>(cli),
        5 => run::<Fp<5>>(cli),
        7 => run::<Fp<7>>(cli),
        11 => run::<Fp<11>>(cli),
        13 => run::<Fp<13>>(cli),
        101 => run::<Fp<101>>(cli),
        65521 => run::<Fp<65521>>(cli),
        2147483647 => run::<Fp<2147483647>>(cli),
        _ => Err(Failure::Input(format!("unsupported prime {p}; built in: {PRIMES:?}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &outcome.body) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(INPUT);
                }
            } else {
                print!("{}", outcome.body);
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
