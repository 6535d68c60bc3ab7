use std::path::PathBuf;

use agx_core::Connectivity;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "agx",
    version,
    about = "Arithmetic-geometric index of chemical graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Add exact values as rational coefficients on 1, √2, √3, √6.
    #[arg(long, global = true)]
    pub exact: bool,

    /// Worker threads for enumeration sweeps.
    #[arg(long, global = true, env = "AGX_THREADS")]
    pub threads: Option<usize>,

    /// Enumeration cache directory.
    #[arg(long, global = true, env = "AGX_CACHE", default_value = ".agx-cache")]
    pub cache_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// AG value of graph6 graphs given as arguments or on stdin.
    Ag { graphs: Vec<String> },
    /// Upper bound report for one order and size.
    Bound(Pair),
    /// Connected extremal graph built directly.
    Construct(Pair),
    /// All chemical graphs (or G(n,m) members) of one order and size.
    Enumerate {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        connectivity: ConnectivityFlags,
        /// Only members of G(n,m).
        #[arg(long)]
        gnm: bool,
    },
    /// Numbers of connected and non-connected extremal graphs.
    Count(Pair),
    /// Run the reproduction checks up to an order budget.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Reproduce one of the reference tables as CSV.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Largest order for table 3.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// The extremal graphs of the 22 exceptional pairs.
    Catalog,
    /// Apply AG-increasing moves until none applies.
    Improve {
        #[arg(long = "in")]
        input: String,
        /// Print each applied move and its exact gain.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Pair {
    #[arg(short)]
    pub n: usize,
    #[arg(short)]
    pub m: usize,
}

#[derive(Debug, Clone, Copy, Args)]
#[group(multiple = false)]
pub struct ConnectivityFlags {
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub disconnected: bool,
    #[arg(long)]
    pub all: bool,
}

impl ConnectivityFlags {
    pub fn selected(self) -> Connectivity {
        if self.connected {
            Connectivity::Connected
        } else if self.disconnected {
            Connectivity::Disconnected
        } else {
            Connectivity::All
        }
    }
}
