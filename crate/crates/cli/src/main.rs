//! Command line front end over the core library.
//!
//! Exit codes: 0 for a clean run, 1 when a scan or verification sweep
//! produced findings, 2 for bad input, I/O trouble, or refused resource
//! limits. Tables go to stdout in the selected format; findings and the
//! run stamp always go to stderr as JSON lines.

mod analyze;
mod enumerate;
mod output;
mod verify;

use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "wilf", version, about = "Numerical semigroup invariants and Wilf inequality checks")]
struct Cli {
    /// Output format for stdout tables.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Jsonl)]
    emit: Emit,

    /// Suppress the "# run <seconds>" stderr stamp so repeated runs are
    /// byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Worker threads. Defaults to WILF_WORKERS, then to the machine's
    /// available parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and the Wilf report for one generator set.
    Analyze(analyze::Args),
    /// Walk the genus tree, tally counts per genus, scan for findings.
    Enumerate(enumerate::Args),
    /// Run the lemma, type-inequality, and positivity-trace sweeps.
    Verify(verify::Args),
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    if !cli.no_timestamp {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        eprintln!("# run {now}");
    }
    let workers = resolve_workers(cli.workers);
    let result = match &cli.command {
        Command::Analyze(args) => analyze::run(args, cli.emit),
        Command::Enumerate(args) => enumerate::run(args, cli.emit, workers),
        Command::Verify(args) => verify::run(args, cli.emit, workers),
    };
    match result {
        Ok(false) => 0,
        Ok(true) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn resolve_workers(flag: Option<usize>) -> usize {
    if let Some(w) = flag {
        return w.max(1);
    }
    if let Ok(env) = std::env::var("WILF_WORKERS") {
        if let Ok(w) = env.trim().parse::<usize>() {
            return w.max(1);
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}
