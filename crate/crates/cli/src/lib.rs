//! The `ghys` command-line tool.
//!
//! [`run`] parses arguments, dispatches one subcommand and writes its result
//! to `stdout`. Exit status is 0 on success, 1 on a usage error and 2 on a
//! domain error; in the error cases the first line on `stderr` is
//! `error: <Code>: <message>`.

mod commands;
mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ghys_core::graph::{BallCache, DEFAULT_NODE_BUDGET, DEFAULT_TRACE_CAP};
use ghys_core::birkhoff::DEFAULT_AUDIT_CAP;

pub use svg::emit_parallelogram_svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Word,
    Conj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "ghys", version, about = "Exact RL-word, Birkhoff section and Ghys graph computations")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,
    /// Ball cache directory [default: $GHYS_CACHE_DIR or ./.ghys-cache]
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Do not read or write the ball cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Largest |trace| kept when exploring the conjugacy graph.
    #[arg(long, global = true, default_value_t = DEFAULT_TRACE_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub trace_cap: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_budget: u64,
    /// Largest period accepted by `audit`.
    #[arg(long, global = true, default_value_t = DEFAULT_AUDIT_CAP, value_parser = clap::value_parser!(u32).range(1..))]
    pub audit_cap: u32,
}

impl CliConfig {
    fn cache(&self) -> Option<BallCache> {
        if self.no_cache {
            return None;
        }
        Some(match &self.cache_dir {
            Some(d) => BallCache::new(d),
            None => BallCache::from_env(),
        })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor a hyperbolic matrix "a,b;c,d" into a canonical RL-word.
    Factor {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Matrix, trace and normal forms of a word.
    Word { word: String },
    /// Decide whether two words are conjugate.
    Conj {
        w1: String,
        w2: String,
        /// Conjugacy in GL(2,Z), which also swaps R and L.
        #[arg(long)]
        gl2: bool,
    },
    /// Fixed points of the n-th power of a matrix on the torus.
    Fixed {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
        /// List the points only when there are at most this many.
        #[arg(long, default_value_t = 1000)]
        limit: u64,
    },
    /// Parallelogram and pair of pants for a word.
    Pants {
        word: String,
        /// Also write an SVG picture here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Genus-one Birkhoff section and its first-return map.
    Section { word: String },
    /// Trace descent from a word (or hyperbolic matrix) to RL.
    Descend {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Genus-one section census over an orbifold.
    Orbifold {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u32>,
    },
    /// Upper bound on the Ghys distance between two words.
    Ghys {
        w1: String,
        w2: String,
        #[arg(long, default_value_t = 8)]
        max_radius: u32,
    },
    /// Export a ball of the word or conjugacy graph.
    Graph {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// A word; for `conj` also a matrix or a class label like `-R^2`.
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        #[arg(long)]
        radius: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Word graph up to SL(2,Z) conjugacy instead of GL(2,Z).
        #[arg(long)]
        sl2: bool,
    },
    /// Four-point δ on the core of a word-graph ball.
    Delta {
        #[arg(long)]
        center: String,
        #[arg(long)]
        radius: u32,
        #[arg(long, default_value_t = 0)]
        margin: u32,
        #[arg(long)]
        sl2: bool,
    },
    /// Lefschetz audit of the section boundary.
    Audit {
        word: String,
        #[arg(long)]
        max_period: u32,
        #[arg(long)]
        csv: bool,
    },
}

/// Runs the tool on `argv` (including the program name) and returns the exit code.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(stderr, "error: UsageError: {first}");
            let _ = write!(stderr, "{msg}");
            return 1;
        }
    };
    match commands::dispatch(&cli.command, &cli.config) {
        Ok(out) => {
            let body = match cli.config.output {
                OutputFormat::Text => out.text,
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&out.json).expect("json");
                    s.push('\n');
                    s
                }
            };
            let body = out.raw.unwrap_or(body);
            if stdout.write_all(body.as_bytes()).is_err() {
                return 2;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}: {}", e.code(), e);
            2
        }
    }
}
