//! `epgraph`: build enhanced power graphs of small groups, inspect their
//! complements and run the claim checks.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use epgraph::topology::{CERT_DIR_ENV, DEFAULT_BUDGET};

#[derive(Debug, Parser)]
#[command(name = "epgraph", version, about = "Enhanced power graphs of finite groups and their complements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Directory for cached embedding certificates.
    #[arg(long, global = true, env = CERT_DIR_ENV)]
    pub cert_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Catalog groups with their maximal cyclic subgroup profile.
    List {
        #[arg(long, default_value_t = 15)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Maximal cyclic subgroups and isolated elements of one group.
    Show {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = ShowFormat::Text)]
        format: ShowFormat,
    },
    /// Emits the enhanced power graph, its complement or the reduced complement.
    Build {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = GraphArg::Reduced)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Connectivity, girth, clique and chromatic numbers and the like.
    Invariants {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Outerplanarity, planarity, genus and crosscap of the reduced complement.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Print the certificates found.
        #[arg(long)]
        certificates: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs the claim checks over the catalog; exits 1 if any fails.
    Verify {
        #[arg(long, default_value_t = 15)]
        max_order: usize,
        /// Run every claim (the default when no --claim is given).
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        #[arg(long)]
        claim: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Show every group row in text output.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Reads a Cayley table file and reports what it is.
    Ingest {
        #[arg(long)]
        file: PathBuf,
        /// Display name; defaults to the file stem.
        #[arg(long)]
        name: Option<String>,
        /// Check isomorphism against this selector.
        #[arg(long)]
        compare: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GroupArgs {
    /// Selector such as Q8, D:12, Zn:7, S3, A4 or Z2xZ6.
    #[arg(long)]
    pub group: Option<String>,
    /// Cayley table file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShowFormat {
    Text,
    Json,
    /// The Cayley table in the format `ingest` reads.
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphArg {
    Epg,
    Complement,
    Reduced,
}

pub enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(dir) = &cli.cert_dir {
        // Still single-threaded here; the library reads the variable later.
        std::env::set_var(CERT_DIR_ENV, dir);
    }
    let mut out = std::io::stdout().lock();
    match commands::run(&cli.command, &mut out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
