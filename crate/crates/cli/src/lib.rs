//! Subcommands of the `beergraph` binary. Each writes its report to the given
//! sink so tests can run them in-process.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

mod bench;
mod count;
mod query;
mod verify;

pub use verify::{run_trial, Failure};

#[derive(Debug, Parser)]
#[command(name = "beergraph", version, about = "Distance and beer-distance queries on interval graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Proper,
    Interval,
}

impl From<KindArg> for beergraph::Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Proper => beergraph::Kind::Proper,
            KindArg::Interval => beergraph::Kind::Interval,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Dist,
    ShortestPath,
    BeerDist,
    BeerShortestPath,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Dist => "dist",
            Op::ShortestPath => "shortest_path",
            Op::BeerDist => "beer_dist",
            Op::BeerShortestPath => "beer_shortest_path",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    Cbar,
    H,
    CatalanIdentity,
    Sxy,
    Bounds,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random graph file.
    Generate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        beer_density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Answer one query and print a JSON record.
    Query {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Answer proper-graph beer distances with the compact index.
        #[arg(long)]
        compact: bool,
        #[arg(long, default_value_t = 2)]
        delta: usize,
    },
    /// Compare the indexes against breadth-first search on random instances.
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Level spacings for the compact index, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![2, 3, 5])]
        delta: Vec<usize>,
    },
    /// Print a counting series as CSV.
    Count {
        #[arg(long, value_enum)]
        series: SeriesArg,
        #[arg(long)]
        max_n: usize,
    },
    /// Time index construction and queries and report structure sizes.
    Bench {
        #[arg(long, conflicts_with = "n")]
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2, 4, 8, 16])]
        delta: Vec<usize>,
    },
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failed {
    /// Bad flags or input files; exit code 2.
    Usage(String),
    /// A verification mismatch; exit code 1.
    Verification,
}

impl fmt::Display for Failed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failed::Usage(msg) => f.write_str(msg),
            Failed::Verification => f.write_str("verification failed"),
        }
    }
}

impl Failed {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failed::Usage(_) => 2,
            Failed::Verification => 1,
        }
    }
}

impl From<beergraph::Error> for Failed {
    fn from(e: beergraph::Error) -> Self {
        Failed::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failed {
    fn from(e: std::io::Error) -> Self {
        Failed::Usage(e.to_string())
    }
}

pub type Outcome = Result<(), Failed>;

pub fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Generate { kind, n, beer_density, seed, out: path } => {
            let file = generate(kind, n, beer_density, seed)?;
            match path {
                Some(p) => std::fs::write(p, file.to_string())?,
                None => write!(out, "{file}")?,
            }
            Ok(())
        }
        Command::Query { graph, op, u, v, compact, delta } => query::run(&read_graph(&graph)?, op, u, v, compact.then_some(delta), out),
        Command::Verify { kind, n, trials, seed, delta } => verify::run(kind, n, trials, seed, &delta, out),
        Command::Count { series, max_n } => count::run(series, max_n, out),
        Command::Bench { graph, n, queries, seed, delta } => {
            let file = match (graph, n) {
                (Some(p), _) => read_graph(&p)?,
                (None, Some(n)) => generate(KindArg::Proper, n, 0.05, seed)?,
                (None, None) => return Err(Failed::Usage("bench needs --graph or --n".into())),
            };
            bench::run(&file, queries, seed, &delta, out)
        }
    }
}

pub fn read_graph(path: &std::path::Path) -> Result<beergraph::GraphFile, Failed> {
    let text = std::fs::read_to_string(path).map_err(|e| Failed::Usage(format!("{}: {e}", path.display())))?;
    beergraph::GraphFile::parse(&text).map_err(|e| Failed::Usage(format!("{}: {e}", path.display())))
}

/// The random graph file for `(kind, n, density, seed)`; the RNG is ChaCha8
/// seeded with `seed`.
pub fn generate(kind: KindArg, n: usize, density: f64, seed: u64) -> Result<beergraph::GraphFile, Failed> {
    use beergraph::generate::{random_beers, random_interval, random_proper};
    use rand::SeedableRng;

    if n == 0 {
        return Err(Failed::Usage("--n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Failed::Usage(format!("--beer-density must lie in [0, 1], got {density}")));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let graph = match kind {
        KindArg::Proper => random_proper(n, &mut rng).into_graph(),
        KindArg::Interval => random_interval(n, &mut rng),
    };
    let beers = random_beers(n, density, &mut rng);
    Ok(beergraph::GraphFile::new(kind.into(), graph, Some(beers)))
}
