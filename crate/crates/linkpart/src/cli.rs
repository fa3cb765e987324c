use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkpart_core::partition::{BlueStrategy, MarkStrategy};
use linkpart_core::SolverConfig;

/// Hamiltonicity and long paths on intersection graphs of fat objects.
///
/// Exit status: 0 on success or "yes", 1 on "no", 2 on malformed input.
#[derive(Debug, Parser)]
#[command(name = "linkpart", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a seeded instance of balls and boxes as JSON.
    Generate(GenerateArgs),
    /// Write the intersection graph of an instance.
    Graph(GraphArgs),
    /// Compute the refined partition, its quotient and a lifted decomposition.
    Partition(PartitionArgs),
    /// Decide Hamiltonian cycle (or path with `--path`).
    Ham(HamArgs),
    /// Search for a simple path on at least k vertices.
    Longpath(LongpathArgs),
    /// Draw pattern covers (or outer covers) and report statistics.
    Cover(CoverArgs),
    /// Run a solver over a seeded batch of generated instances.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InstanceShape {
    #[arg(long = "d", default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    /// Side of the cube holding the centers.
    #[arg(long, default_value_t = 6.0)]
    pub side: f64,
    /// Fraction of balls; the rest are boxes.
    #[arg(long, default_value_t = 1.0)]
    pub mix: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub shape: InstanceShape,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Instance JSON.
    pub instance: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BlueArg {
    All,
    Bounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MarkArg {
    Full,
    Bounded,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 3)]
    pub kappa: usize,
    #[arg(long, default_value_t = 3)]
    pub lambda: usize,
    #[arg(long = "g-threshold", default_value_t = 8)]
    pub g_threshold: usize,
    /// Enforce the structural bounds of the refinement and fail on violation.
    #[arg(long)]
    pub theory: bool,
    #[arg(long = "blue-strategy", value_enum, default_value_t = BlueArg::All)]
    pub blue_strategy: BlueArg,
    #[arg(long = "mark-strategy", value_enum, default_value_t = MarkArg::Full)]
    pub mark_strategy: MarkArg,
    /// Maximum long-path repetitions.
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    /// Pattern-cover radius cap multiplier.
    #[arg(long, default_value_t = 2.0)]
    pub cr: f64,
    /// Repetition schedule multiplier.
    #[arg(long, default_value_t = 1.0)]
    pub crep: f64,
    /// Widest long-path component kept whole when a sample is redrawn after overflow.
    #[arg(long = "max-path-width", default_value_t = 9)]
    pub max_path_width: usize,
    /// Entry cap per dynamic-program table.
    #[arg(long = "max-states", default_value_t = 200_000)]
    pub max_states: usize,
}

impl SolverArgs {
    pub fn config(&self, dimension: usize, seed: u64) -> SolverConfig {
        SolverConfig {
            kappa: self.kappa,
            lambda: self.lambda,
            g_threshold: self.g_threshold,
            theory_mode: self.theory,
            blue_strategy: match self.blue_strategy {
                BlueArg::All => BlueStrategy::All,
                BlueArg::Bounded => BlueStrategy::Bounded,
            },
            mark_strategy: match self.mark_strategy {
                MarkArg::Full => MarkStrategy::Full,
                MarkArg::Bounded => MarkStrategy::Bounded,
            },
            repetition_budget: self.budget,
            c_r: self.cr,
            c_rep: self.crep,
            max_path_width: self.max_path_width,
            max_dp_states: self.max_states,
            dimension,
            seed,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    /// Graph text file.
    pub graph: PathBuf,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Partition JSON output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the decomposition lifted from the quotient.
    #[arg(long)]
    pub td: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HamArgs {
    pub graph: PathBuf,
    /// Hamiltonian path instead of cycle.
    #[arg(long)]
    pub path: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct LongpathArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "d", default_value_t = 2)]
    pub d: usize,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Pattern-cover trace as JSON lines.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "d", default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 2.0)]
    pub cr: f64,
    /// Number of independent draws; draw `i` uses seed `seed + i`.
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    /// Outer cover instead of pattern cover.
    #[arg(long)]
    pub outer: bool,
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchCmd {
    HamCycle,
    HamPath,
    Longpath,
}

impl BenchCmd {
    pub fn name(self) -> &'static str {
        match self {
            BenchCmd::HamCycle => "ham-cycle",
            BenchCmd::HamPath => "ham-path",
            BenchCmd::Longpath => "longpath",
        }
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = BenchCmd::HamCycle)]
    pub cmd: BenchCmd,
    /// Instance `i` uses seed `seed + i`.
    #[command(flatten)]
    pub shape: InstanceShape,
    #[arg(long, default_value_t = 10)]
    pub count: u64,
    /// Path length for `longpath`; defaults to `n / 2`.
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// CSV output; stdout when absent.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Certificates as `<id> <certificate line>`.
    #[arg(long)]
    pub certs: Option<PathBuf>,
    /// Leave the `ms` column empty so output is reproducible.
    #[arg(long = "omit-timing")]
    pub omit_timing: bool,
}
