use anyhow::{bail, Result};
use clap::Parser;
use serde::Serialize;

use wilf_core::{EqualityWitness, NumericalSemigroup};

use crate::output::{emit_rows, join_generators};
use crate::Emit;

#[derive(Parser)]
pub struct Args {
    /// Generators; minimalized automatically, so redundant values are
    /// fine.
    #[arg(required = true)]
    generators: Vec<u64>,

    /// Also emit the Apery set, the window profile, and the
    /// pseudo-Frobenius numbers (JSONL only).
    #[arg(long)]
    full: bool,
}

#[derive(Serialize)]
struct Report {
    generators: String,
    multiplicity: u64,
    edim: u64,
    frobenius: i64,
    genus: u64,
    type_t: u64,
    q: u64,
    r: u64,
    n_q: u64,
    delta: i64,
    wilf_holds: bool,
    equality: bool,
    witness_kind: Option<&'static str>,
    witness_k: Option<u64>,
}

#[derive(Serialize)]
struct Profile {
    q: u64,
    r: u64,
    n: Vec<u64>,
    eta: Vec<u32>,
    eps: Vec<u32>,
    j_q: u64,
}

#[derive(Serialize)]
struct FullReport {
    #[serde(flatten)]
    report: Report,
    apery_omegas: Vec<u64>,
    profile: Profile,
    pseudo_frobenius: Vec<u64>,
}

pub fn run(args: &Args, emit: Emit) -> Result<bool> {
    if args.full && emit == Emit::Csv {
        bail!("--full output is nested; use the default JSONL format");
    }
    let s = NumericalSemigroup::new(&args.generators)?;
    let report = s.wilf_report()?;
    let profile = s.interval_profile()?;
    let td = s.type_data()?;

    let (witness_kind, witness_k) = match report.witness() {
        Some(EqualityWitness::TwoGenerators) => (Some("two_generators"), None),
        Some(EqualityWitness::ArithmeticForm { k }) => (Some("arithmetic_form"), Some(k)),
        None => (None, None),
    };
    let row = Report {
        generators: join_generators(s.generators().values()),
        multiplicity: s.multiplicity(),
        edim: s.edim() as u64,
        frobenius: report.frobenius(),
        genus: report.genus(),
        type_t: td.type_t(),
        q: profile.q(),
        r: profile.r(),
        n_q: profile.n_q(),
        delta: report.delta(),
        wilf_holds: report.holds(),
        equality: report.equality(),
        witness_kind,
        witness_k,
    };

    if args.full {
        let ap = s.apery_set();
        let full = FullReport {
            report: row,
            apery_omegas: ap.omegas().to_vec(),
            profile: Profile {
                q: profile.q(),
                r: profile.r(),
                n: profile.n().to_vec(),
                eta: profile.eta().to_vec(),
                eps: profile.eps().to_vec(),
                j_q: profile.j_q(),
            },
            pseudo_frobenius: td.pseudo_frobenius().to_vec(),
        };
        emit_rows(emit, &[full])?;
    } else {
        emit_rows(emit, &[row])?;
    }
    Ok(false)
}
