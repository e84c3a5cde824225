//! Batch front door: parses graph corpora, runs the classification and
//! verification pipelines, and emits line-delimited JSON records plus a
//! summary. Exit status is 0 on success, 1 when a verification that should
//! pass reported failures, and 2 for configuration or parse errors.

mod commands;
mod corpus;
mod records;

use anyhow::{bail, Context, Result};
use bei_core::groebner::{TermOrder, DEGREVLEX, LEX};
use bei_core::oracle::ConjectureKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bei",
    version,
    about = "Regularity classification and verification for binomial edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// Input file: one graph6 string per line, or a single edge list
    /// (`n` on the first line, then `u v` pairs)
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Enumerate all isomorphism classes on exactly N vertices instead of
    /// reading input
    #[arg(long, global = true, value_name = "N", conflicts_with = "input")]
    enumerate: Option<usize>,

    /// Keep only connected graphs in the corpus
    #[arg(long, global = true)]
    connected: bool,

    /// Term order for Groebner and Betti computations
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Lex)]
    order: OrderArg,

    /// Prime field characteristics, comma separated
    #[arg(
        long = "char",
        global = true,
        value_name = "P,..",
        value_delimiter = ',',
        default_value = "2,32003"
    )]
    characteristics: Vec<u32>,

    /// Degree bound for degreewise verifications (default: per-graph cap)
    #[arg(long = "max-degree", global = true, value_name = "D")]
    max_degree: Option<u32>,

    /// Worker threads for corpus sweeps
    #[arg(long, global = true, value_name = "K", default_value_t = 1)]
    jobs: usize,

    /// Write the JSON records here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural regularity class and join certificate for each graph
    Classify,
    /// Certified regularity for each graph
    Reg,
    /// Cut-point sets and the minimal primes they index, per graph
    Primes,
    /// Betti table of the initial ideal, per graph and characteristic
    Betti,
    /// Check the join regularity formula on all pairs from the corpus
    VerifyJoin,
    /// Check degreewise that the minimal primes cut out each ideal
    VerifyDecomposition,
    /// Sweep the corpus for conjecture violations
    CheckConjectures {
        /// Conjectures to test: ehh_equality, sk_cliques, weakly_closed_ell
        /// (default: all three)
        #[arg(long, value_delimiter = ',', value_parser = parse_kind)]
        which: Vec<ConjectureKind>,
    },
    /// Sweep all graphs on N vertices and cross-check the structural class
    /// against the initial-ideal regularity
    Census {
        /// Vertex count to enumerate
        #[arg(long)]
        n: usize,
    },
    /// Build the apex-over-paths family and verify its advertised behavior
    Counterexample {
        /// Number of paths under the apex
        #[arg(long)]
        q: usize,
        /// Path sizes, comma separated (each at least 3)
        #[arg(long, value_name = "T1,..", value_delimiter = ',')]
        t: Vec<usize>,
    },
}

fn parse_kind(s: &str) -> Result<ConjectureKind, String> {
    s.parse()
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OrderArg {
    Lex,
    Degrevlex,
}

impl OrderArg {
    fn to_order(self) -> TermOrder {
        match self {
            OrderArg::Lex => LEX,
            OrderArg::Degrevlex => DEGREVLEX,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("BEI_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every verification that must pass did pass.
fn run(cli: Cli) -> Result<bool> {
    let opts = &cli.opts;
    if opts.characteristics.is_empty() {
        bail!("at least one characteristic is required");
    }
    for &p in &opts.characteristics {
        if !is_prime(p) {
            bail!("characteristic {p} is not prime");
        }
    }
    if opts.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .context("building the worker pool")?;
    let output = pool.install(|| dispatch(&cli))?;
    records::write_output(&output, opts.out.as_deref())?;
    eprintln!("{}", output.human_summary());
    Ok(!output.verification_failed)
}

fn dispatch(cli: &Cli) -> Result<records::Output> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Classify => commands::classify(&corpus::load(opts)?),
        Command::Reg => commands::reg(&corpus::load(opts)?, opts.order, &opts.characteristics),
        Command::Primes => commands::primes(&corpus::load(opts)?),
        Command::Betti => commands::betti(&corpus::load(opts)?, opts.order, &opts.characteristics),
        Command::VerifyJoin => {
            commands::verify_join(&corpus::load(opts)?, opts.order, &opts.characteristics)
        }
        Command::VerifyDecomposition => {
            commands::verify_decomposition(&corpus::load(opts)?, opts.max_degree)
        }
        Command::CheckConjectures { which } => {
            let kinds = if which.is_empty() {
                ConjectureKind::ALL.to_vec()
            } else {
                which.clone()
            };
            commands::check_conjectures(&corpus::load(opts)?, &kinds, &opts.characteristics)
        }
        Command::Census { n } => commands::census(*n, opts),
        Command::Counterexample { q, t } => {
            if *q != t.len() {
                bail!("--q {} does not match the {} path sizes in --t", q, t.len());
            }
            commands::counterexample(t, opts.characteristics[0])
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
