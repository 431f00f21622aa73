use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pcc", version, about = "Distance-l proper-path colorings of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family graph as an edge list.
    Generate(GenerateArgs),
    /// Build a coloring with a known construction and re-verify it.
    Color(ColorArgs),
    /// Check that a coloring joins every pair by a distance-l proper path.
    Verify(VerifyArgs),
    /// Compute the minimum number of colors by exhaustive search.
    Exact(ExactArgs),
    /// Sweep a family's parameter grid and emit a CSV table.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FamilyName {
    Path,
    Cycle,
    Star,
    Wheel,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Hypercube,
    DoubleStar,
    RandomTree,
    #[value(name = "random_2connected")]
    Random2Connected,
}

/// Family parameters shared by `generate` and `color`.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Main size parameter (path/cycle/complete order, star leaves, wheel rim,
    /// larger side of K_{m,n}, tree order, 2-connected order).
    #[arg(long)]
    pub n: Option<usize>,
    /// Smaller side of K_{m,n}; edge count for random_2connected.
    #[arg(long)]
    pub m: Option<usize>,
    /// Hypercube dimension.
    #[arg(long)]
    pub t: Option<usize>,
    /// Part sizes of a complete multipartite graph.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Double star center degrees.
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub family: FamilyName,
    #[command(flatten)]
    pub params: FamilyArgs,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Traceable,
    Tree,
    #[value(name = "2connected")]
    TwoConnected,
    Join,
    Cartesian,
    Permutation,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[arg(long, conflicts_with_all = ["input", "method"], required_unless_present = "input")]
    pub family: Option<FamilyName>,
    #[command(flatten)]
    pub params: FamilyArgs,
    #[arg(long, requires = "method")]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "input")]
    pub method: Option<Method>,
    /// Second factor for join and cartesian.
    #[arg(long)]
    pub other: Option<PathBuf>,
    /// Permutation of [n], 1-indexed, for the permutation method.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<usize>>,
    #[arg(long)]
    pub ell: usize,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
    /// Where to write the colored graph. Required when it differs from the
    /// input (join, cartesian, permutation).
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub ell: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Time budget per vertex pair, in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub ell: usize,
    #[arg(long, default_value_t = 8)]
    pub max_colors: usize,
    #[arg(long, default_value_t = 60.0)]
    pub time_limit: f64,
    /// Refuse graphs with more edges than this.
    #[arg(long, default_value_t = 24)]
    pub max_edges: usize,
    /// Also write the witness coloring.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableTheorem {
    Bipartite,
    Multipartite,
    Wheel,
    Cube,
    Tree,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub theorem: TableTheorem,
    /// Window parameters to sweep (default depends on the theorem).
    #[arg(long, value_delimiter = ',')]
    pub ell: Option<Vec<usize>>,
    /// Largest n (bipartite larger side, wheel rim, hypercube dimension,
    /// tree order).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Largest vertex total for multipartite part vectors.
    #[arg(long, default_value_t = 12)]
    pub max_total: usize,
    /// Number of random trees.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run the exact lower-bound check only up to this many edges (default
    /// 18 for wheels, 12 otherwise).
    #[arg(long)]
    pub exact_edges: Option<usize>,
    /// Seconds per exact call.
    #[arg(long, default_value_t = 60.0)]
    pub time_limit: f64,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}
