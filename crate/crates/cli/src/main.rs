//! `ccm-lab`: centers of mass, circumcenters of mass and their invariants
//! from the command line.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or parse
//! error, 3 degenerate geometry.

mod compute;
mod error;
mod experiment;
mod input;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use ccm_core::suites::{Suite, SuiteConfig};
use ccm_core::Rational;
use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::output::{Emission, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Rational,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Triangulation,
    Archimedes,
    Isometry,
    Basis,
    Actions,
    Uniqueness,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Triangulation => Suite::Triangulation,
            SuiteArg::Archimedes => Suite::Archimedes,
            SuiteArg::Isometry => Suite::Isometry,
            SuiteArg::Basis => Suite::Basis,
            SuiteArg::Actions => Suite::Actions,
            SuiteArg::Uniqueness => Suite::Uniqueness,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ccm-lab", version, about = "Exact centers of simplicial polytopes")]
struct Cli {
    /// JSON input document.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Backend::Rational)]
    backend: Backend,
    /// Absolute tolerance for comparisons on the float backend.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 2)]
    dimension: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Omit the timestamp so that reports are byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Center of mass, circumcenter of mass or Euler line point of the input.
    Compute {
        #[arg(value_enum)]
        which: compute::Which,
        /// Euler line parameter: `t * CM + (1 - t) * CCM`.
        #[arg(long, default_value = "1/3")]
        t: String,
    },
    /// Run a randomized or certified invariant suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Run one of the valuation experiments.
    Experiment {
        #[arg(value_enum)]
        name: experiment::Experiment,
        #[command(flatten)]
        params: experiment::Params,
    },
}

fn run(cli: &Cli) -> Result<Emission, CliError> {
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        return Err(CliError::Usage(format!("--tolerance must be positive, got {}", cli.tolerance)));
    }
    if cli.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let doc = cli.input.as_deref().map(input::load).transpose()?;
    match &cli.command {
        Command::Compute { which, t } => {
            let doc = doc.ok_or_else(|| CliError::Usage("compute needs --input".into()))?;
            let t: Rational =
                input::parse_number(t).ok_or_else(|| CliError::Usage(format!("--t: cannot parse {t:?}")))?;
            match cli.backend {
                Backend::Rational => compute::run::<Rational>(&doc, *which, &t),
                Backend::Float => compute::run::<f64>(&doc, *which, &t),
            }
        }
        Command::Verify { suite } => {
            let cfg = SuiteConfig {
                dimension: cli.dimension,
                trials: cli.trials,
                seed: cli.seed,
                tolerance: cli.tolerance,
            };
            match cli.backend {
                Backend::Rational => verify::run::<Rational>((*suite).into(), &cfg),
                Backend::Float => verify::run::<f64>((*suite).into(), &cfg),
            }
        }
        Command::Experiment { name, params } => match cli.backend {
            Backend::Rational => experiment::run::<Rational>(*name, doc.as_ref(), params),
            Backend::Float => experiment::run::<f64>(*name, doc.as_ref(), params),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(em) => {
            let passed = em.passed;
            let stdout = std::io::stdout();
            if let Err(e) = output::write(&mut stdout.lock(), em, cli.output, !cli.no_timestamp) {
                eprintln!("ccm-lab: writing output: {e}");
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("ccm-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
