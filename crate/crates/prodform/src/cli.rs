use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use prodform_core::Tier;

use crate::commands;
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(name = "prodform", version, about = "Search, verify and benchmark product formulae")]
pub struct Cli {
    /// Significant digits: <=17 runs in f64, <=32 in double-double, <=64 in
    /// quad-double. Each subcommand documents its default.
    #[arg(long, global = true)]
    pub digits: Option<u32>,
    /// Worker threads [default: available cores]. Output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multi-start search for composition weights (digits default 17; more polishes the solutions).
    Search(SearchArgs),
    /// Word-series residuals of a formula (digits default 32).
    Verify(VerifyArgs),
    /// Error constants on random Hamiltonians (digits default 17 up to order 4, else 32).
    Bench(BenchArgs),
    /// Crossover T/ε between a lower- and a higher-order formula.
    Threshold(ThresholdArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SearchArgs {
    #[arg(long)]
    pub order: u32,
    /// Free weights: the composition has 2m+1 stages.
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 500)]
    pub restarts: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Standard deviation of the initial weights [default: 0.6 at order 8, 0.9 at 10, else 1].
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Cycle restarts through these standard deviations instead.
    #[arg(long, value_delimiter = ',')]
    pub sigma_cycle: Vec<f64>,
    #[arg(long, default_value_t = 400)]
    pub max_iter: usize,
    /// Accept a restart when the residual norm is below this.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Solutions closer than this are duplicates.
    #[arg(long, default_value_t = 0.01)]
    pub dedup: f64,
    /// Processor length; nonzero searches kernel and processor jointly.
    #[arg(long, default_value_t = 0)]
    pub processor_len: usize,
    /// Move each solution along its manifold to lower the next-order residual.
    #[arg(long)]
    pub refine: bool,
    /// Directory for the solution files and manifest.
    #[arg(long, default_value = "solutions")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Formula file, or catalog:LABEL.
    #[arg(long)]
    pub formula: String,
    /// Order to check [default: the formula's].
    #[arg(long)]
    pub order: Option<u32>,
    /// Certify the kernel by conjugation: check the given processor and, if
    /// it fails or is missing, solve for one.
    #[arg(long)]
    pub conjugated: bool,
    /// Largest accepted residual [default: 1e-12 in f64, 1e-20 in double-double, 1e-40 in quad-double].
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Processor length when solving for a processor [default: the file's, else 10].
    #[arg(long)]
    pub processor_len: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Write the certified processed formula here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveMetric {
    Spectral,
    Eigen,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BenchArgs {
    /// Formula file, or catalog:LABEL.
    #[arg(long)]
    pub formula: String,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Dimension of the random Hermitian pairs.
    #[arg(long, default_value_t = 6)]
    pub dim: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Smallest step [default: 0.02; fermionic 0.03 in the scaled time].
    #[arg(long)]
    pub t_min: Option<f64>,
    /// Largest step [default: 0.1; fermionic 0.3 in the scaled time].
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Geometrically spaced steps between t-min and t-max.
    #[arg(long, default_value_t = 5)]
    pub points: usize,
    /// Interacting-electron Hamiltonians T + V instead of random pairs.
    #[arg(long)]
    pub fermionic: bool,
    /// Orbitals [default: 6, or the size of --tau].
    #[arg(long)]
    pub d: Option<usize>,
    /// Electrons [default: d/2].
    #[arg(long)]
    pub eta: Option<usize>,
    /// One-body coefficients as a CSV matrix (with --nu: a single instance).
    #[arg(long, requires = "nu")]
    pub tau: Option<PathBuf>,
    #[arg(long, requires = "tau")]
    pub nu: Option<PathBuf>,
    /// CSV output [default: stdout, manifest on stderr].
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the geometric-mean error curve (t,error) here, for `threshold --curves`.
    #[arg(long)]
    pub curve_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CurveMetric::Eigen)]
    pub curve_metric: CurveMetric,
    /// Only the summary row.
    #[arg(long)]
    pub summary_only: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ThresholdArgs {
    /// Lower-order formula as M,k,c (stages, order, constant).
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub low: Option<Vec<f64>>,
    /// Higher-order formula as M,k,c.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub high: Option<Vec<f64>>,
    /// Read the third number of --low/--high as M c^{1/k}.
    #[arg(long)]
    pub metric: bool,
    /// Per-step error curves (t,error) of the lower- and higher-order formula.
    #[arg(long, num_args = 2)]
    pub curves: Option<Vec<PathBuf>>,
    /// Stage counts M1,M2 for --curves [default: from --low/--high].
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub stages: Option<Vec<f64>>,
    /// Total simulated time, for the step counts r1 and r2.
    #[arg(long, default_value_t = 1.0)]
    pub time: f64,
    /// Fermionic norms ‖τ‖₁,‖ν‖_{1,[η]},η: also report T/ε for them.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub norms: Option<Vec<f64>>,
    /// CSV output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Resolved global settings.
#[derive(Debug, Clone, Copy)]
pub struct Globals {
    pub tier: Tier,
    pub jobs: usize,
}

impl Globals {
    fn resolve(cli: &Cli, default_digits: u32) -> CliResult<Self> {
        let tier = Tier::for_digits(cli.digits.unwrap_or(default_digits))?;
        let jobs = match cli.jobs {
            Some(0) => return Err(CliError::Usage("--jobs must be at least 1".into())),
            Some(j) => j,
            None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        };
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
        Ok(Globals {
            tier,
            jobs: rayon::current_num_threads(),
        })
    }
}

pub fn run(cli: Cli) -> CliResult<()> {
    match &cli.command {
        Command::Search(a) => commands::search::run(a.clone(), Globals::resolve(&cli, 17)?),
        Command::Verify(a) => commands::verify::run(a.clone(), Globals::resolve(&cli, 32)?),
        Command::Bench(a) => {
            let order = crate::formula_file::FormulaFile::resolve(&a.formula)?.order;
            let g = Globals::resolve(&cli, if order <= 4 { 17 } else { 32 })?;
            commands::bench::run(a.clone(), g)
        }
        Command::Threshold(a) => commands::threshold::run(a.clone(), Globals::resolve(&cli, 17)?),
    }
}

/// Parse, run and map the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
