use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "subsample", version, about = "Subsample graphs, sequences and partitions; estimate and test their output laws")]
pub struct Cli {
    /// Worker threads for replicate loops (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a synthetic input.
    Generate(GenerateArgs),
    /// Run one sampler once.
    Sample(SampleArgs),
    /// Estimate densities, profiles or traces.
    #[command(subcommand)]
    Estimate(EstimateCommand),
    /// Run a statistical invariance test; exit status 1 on failure.
    #[command(subcommand)]
    Test(TestCommand),
    /// Trace the output law along a schedule of input sizes.
    Diagnose(DiagnoseArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    /// Vertex-counted star: hub 1, leaves 2..n.
    Star,
    /// Edge sequence (1,2),(1,3),..,(1,n+1).
    StarEdges,
    /// Edge sequence of n disjoint edges.
    Matching,
    Y4,
    /// Edge sequence with one hub edge in every other slot.
    HalfMultiplicity,
    Cycle,
    Complete,
    /// Label sequence 1,2,1,2,..
    Alternating,
    /// Label sequence 1,2,..,n
    Singletons,
    /// Vertex graph drawn from a step graphon file.
    Graphon,
    /// Label sequence drawn from a paintbox.
    Paintbox,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub name: Generator,
    /// Size parameter of the structure.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of vertices or entries drawn (graphon, paintbox).
    #[arg(long)]
    pub k: Option<usize>,
    /// Step graphon file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Paintbox atom masses, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub atoms: Vec<f64>,
    /// Paintbox dust mass.
    #[arg(long, default_value_t = 0.0)]
    pub dust: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Sampler selection and input shared by most commands.
#[derive(Debug, Args)]
pub struct SamplerArgs {
    /// Algorithm name or number 1..10.
    #[arg(long)]
    pub algo: String,
    /// Input file; its format follows the algorithm's input kind.
    #[arg(long)]
    pub input: PathBuf,
    /// Input size used (default: whole input).
    #[arg(long)]
    pub n: Option<usize>,
    /// Retention probability for p-sampling.
    #[arg(long)]
    pub p: Option<f64>,
    /// Edge-retention schedule for sparsified sampling: `0.5`, `inv:2`, `pow:1,0.5` or `table:1,0.5`.
    #[arg(long)]
    pub rho: Option<String>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub sampler: SamplerArgs,
    /// Output size (ball radius for bs-root; ignored by p-sample).
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum EstimateCommand {
    /// Prefix-density vector, or the density of one pattern.
    Density(DensityArgs),
    /// Relative degrees of an edge sequence along a schedule.
    DegreeProfile(ProfileArgs),
    /// Relative multiplicities of an edge sequence along a schedule.
    MultiplicityProfile(ProfileArgs),
    /// Label frequencies of a sequence along a schedule.
    FrequencyProfile(ProfileArgs),
    /// Symmetrized averages over growing sample sizes.
    Lln(LlnArgs),
    /// Exact 1/C(k,j).
    Misspec(MisspecArgs),
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub sampler: SamplerArgs,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = 10_000)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Pattern file; its size sets `k`.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Increasing input sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub schedule: Vec<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statistic {
    /// `1{x_1 = label}` on sequences, `j = 1`.
    FirstLabel(u32),
    /// `1{1 ~ 2}` on vertex graphs, `j = 2`.
    Edge,
}

impl std::str::FromStr for Statistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(':') {
            None if s == "edge" => Ok(Statistic::Edge),
            Some(("first-label", v)) => v
                .parse()
                .map(Statistic::FirstLabel)
                .map_err(|e| format!("bad label `{v}`: {e}")),
            _ => Err(format!("unknown statistic `{s}` (use `edge` or `first-label:<L>`)")),
        }
    }
}

#[derive(Debug, Args)]
pub struct LlnArgs {
    #[command(flatten)]
    pub sampler: SamplerArgs,
    /// Sample sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub schedule: Vec<usize>,
    /// `edge` or `first-label:<L>`.
    #[arg(long)]
    pub statistic: Statistic,
    #[arg(long, default_value_t = 20)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MisspecArgs {
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub j: u64,
}

#[derive(Debug, Subcommand)]
pub enum TestCommand {
    Exchangeability(ExchangeabilityArgs),
    Idempotence(IdempotenceArgs),
    Equivalence(EquivalenceArgs),
    Involution(InvolutionArgs),
}

#[derive(Debug, Args)]
pub struct TestCommon {
    #[arg(long, default_value_t = 100_000)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tallies of both operands as CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExchangeabilityArgs {
    #[command(flatten)]
    pub sampler: SamplerArgs,
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub common: TestCommon,
}

#[derive(Debug, Args)]
pub struct IdempotenceArgs {
    #[command(flatten)]
    pub sampler: SamplerArgs,
    /// Intermediate size.
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub common: TestCommon,
}

#[derive(Debug, Args)]
pub struct EquivalenceArgs {
    #[command(flatten)]
    pub sampler: SamplerArgs,
    /// Second input, same format as the first.
    #[arg(long)]
    pub input2: PathBuf,
    /// Largest output size compared.
    #[arg(long = "k")]
    pub k_max: usize,
    #[command(flatten)]
    pub common: TestCommon,
}

#[derive(Debug, Args)]
pub struct InvolutionArgs {
    /// Vertex graph file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub radius: usize,
    /// `uniform`, `degree` or `vertex:<v>`.
    #[arg(long, default_value = "uniform")]
    pub root: String,
    #[command(flatten)]
    pub common: TestCommon,
}

#[derive(Debug, Args)]
pub struct DiagnoseArgs {
    #[command(flatten)]
    pub sampler: SamplerArgs,
    #[arg(long)]
    pub k: usize,
    /// Increasing input sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub schedule: Vec<usize>,
    #[arg(long, default_value_t = 10_000)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
