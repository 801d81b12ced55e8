//! Library side of the `coxsolomon` command: argument definitions, command
//! execution, bundled fixtures, emitters and the group cache.

pub mod cache;
pub mod commands;
pub mod emit;
pub mod error;
pub mod fixtures;

pub use commands::{run, Outcome};
pub use error::{CliError, Result};

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "coxsolomon",
    version,
    about = "Finite Coxeter groups, the descent algebra and the Solomon homomorphism"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = coxsolomon_core::DEFAULT_CAP)]
    pub cap: u64,
    /// Directory of cached element stores.
    #[arg(long, global = true, env = "COXSOLOMON_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Report wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Isometry,
    Symmetry,
    Dcc,
    Gessel,
    Structure,
    Classes,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, classes, Coxeter classes and dim ker Φ.
    Group { spec: String },
    /// The matrix D′ over Coxeter class representatives.
    Dmatrix {
        spec: String,
        /// Smallest representative size included.
        #[arg(long, default_value_t = 2)]
        min_size: usize,
        /// Use the row order and labels of the bundled fixture.
        #[arg(long)]
        paper_order: bool,
    },
    /// Run theorem and conjecture checks.
    Check {
        spec: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Compare bundled fixtures with recomputation (all fixtures if no type is given).
    Fixtures { spec: Option<String> },
    /// Manage cached element stores.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Enumerate the group and write its store.
    Write { spec: String },
    /// Load a store and compare it with a fresh enumeration.
    Load { spec: String },
    /// Re-check the structural invariants of a stored file.
    Verify { spec: String },
}
