use anyhow::{bail, Result};
use clap::Parser;
use serde::Serialize;

use wilf_core::{
    census_lemma_sweep, default_lemma_samples, sampled_lemma_sweep, theorem_trace_sweep,
    type_inequality_sweep, LemmaSweepStats, ProofCase,
};

use crate::output::{emit_finding, emit_rows, join_generators};
use crate::Emit;

#[derive(Parser)]
pub struct Args {
    /// Replay the floor and window bounds over a census and a random
    /// sample.
    #[arg(long)]
    lemmas: bool,

    /// Check c <= (t + 1)(c - g) over a census.
    #[arg(long)]
    type_inequality: bool,

    /// Replay the positivity argument on random instances at scale:
    /// rho=R [count=N] [seed=S].
    #[arg(long, num_args = 1..=3, value_name = "K=V")]
    theorem: Option<Vec<String>>,

    /// Census depth for the census-backed suites.
    #[arg(long, default_value_t = 12)]
    genus: u32,

    /// Sample count for the sampled lemma sweep.
    #[arg(long, default_value_t = 1000)]
    samples: usize,

    /// Base seed for everything randomized.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Serialize)]
struct SuiteRow {
    suite: &'static str,
    checked: u64,
    failures: u64,
}

#[derive(Serialize)]
struct LemmaFailRow {
    suite: &'static str,
    lemma: &'static str,
    generators: String,
    x: Option<u64>,
    y: Option<u64>,
    z: Option<u64>,
}

#[derive(Serialize)]
struct TypeFailRow {
    suite: &'static str,
    generators: String,
}

#[derive(Serialize)]
struct TraceFailRow {
    suite: &'static str,
    generators: String,
    case: &'static str,
    step: String,
    delta: i64,
}

pub fn run(args: &Args, emit: Emit, workers: usize) -> Result<bool> {
    let all = !args.lemmas && !args.type_inequality && args.theorem.is_none();
    let mut rows = Vec::new();
    let mut found = false;

    if all || args.lemmas {
        let census = census_lemma_sweep(args.genus, workers)?;
        found |= report_lemmas("lemmas_census", &census, &mut rows)?;

        let samples = default_lemma_samples(args.samples, args.seed)?;
        let sampled = sampled_lemma_sweep(&samples);
        found |= report_lemmas("lemmas_sampled", &sampled, &mut rows)?;
    }

    if all || args.type_inequality {
        let stats = type_inequality_sweep(args.genus, workers)?;
        for gens in &stats.failures {
            emit_finding(&TypeFailRow {
                suite: "type_inequality",
                generators: join_generators(gens),
            })?;
        }
        found |= !stats.failures.is_empty();
        rows.push(SuiteRow {
            suite: "type_inequality",
            checked: stats.checked,
            failures: stats.failures.len() as u64,
        });
    }

    if all || args.theorem.is_some() {
        let (rho, count, seed) = parse_theorem(args)?;
        let stats = theorem_trace_sweep(rho, count, seed)?;
        for f in &stats.failures {
            let case = match f.case {
                ProofCase::EqualityCase => "equality_case",
                ProofCase::LargeNQ => "large_nq",
                ProofCase::SmallNQ => "small_nq",
            };
            emit_finding(&TraceFailRow {
                suite: "theorem_trace",
                generators: join_generators(&f.generators),
                case,
                step: f.label.clone(),
                delta: f.delta,
            })?;
        }
        found |= !stats.failures.is_empty();
        rows.push(SuiteRow {
            suite: "theorem_trace",
            checked: stats.total as u64,
            failures: stats.failures.len() as u64,
        });
    }

    emit_rows(emit, &rows)?;
    Ok(found)
}

fn report_lemmas(
    suite: &'static str,
    stats: &LemmaSweepStats,
    rows: &mut Vec<SuiteRow>,
) -> Result<bool> {
    for f in &stats.failures {
        emit_finding(&LemmaFailRow {
            suite,
            lemma: f.lemma,
            generators: join_generators(&f.generators),
            x: f.x,
            y: f.y,
            z: f.z,
        })?;
    }
    rows.push(SuiteRow {
        suite,
        checked: stats.total_checked(),
        failures: stats.failures.len() as u64,
    });
    Ok(!stats.failures.is_empty())
}

/// `--theorem rho=R [count=N] [seed=S]`; when the whole suite runs with
/// no explicit selection, rho = 3 with the default count.
fn parse_theorem(args: &Args) -> Result<(u64, usize, u64)> {
    let mut rho = None;
    let mut count = 200usize;
    let mut seed = args.seed;
    if let Some(kvs) = &args.theorem {
        for kv in kvs {
            let Some((k, v)) = kv.split_once('=') else {
                bail!("expected k=v in --theorem, got '{kv}'");
            };
            match k {
                "rho" => rho = Some(v.parse()?),
                "count" => count = v.parse()?,
                "seed" => seed = v.parse()?,
                other => bail!("unknown --theorem parameter '{other}'"),
            }
        }
        if rho.is_none() {
            bail!("--theorem needs rho=R");
        }
    } else {
        rho = Some(3);
    }
    if count == 0 {
        bail!("--theorem count must be positive");
    }
    Ok((rho.unwrap(), count, seed))
}
