use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::Parser;
use serde::Serialize;

use wilf_core::{
    decode_checkpoint, encode_checkpoint, enumerate_tree, enumerate_tree_with, resume_from,
    EnumerateOptions, Error, FindingKind, ScanKind, TreeNode, TreeVisitor, DEFAULT_NODE_BUDGET,
};

use crate::output::{emit_finding, emit_rows, join_generators};
use crate::Emit;

#[derive(Parser)]
pub struct Args {
    /// Largest genus to walk.
    genus: u32,

    /// Node budget; walks estimated past it are refused up front.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,

    /// Which findings to scan for while walking.
    #[arg(long, value_enum, default_value_t = Scan::All)]
    scan: Scan,

    /// Write a checkpoint of this walk: every node at the capture depth
    /// plus every leaf above it.
    #[arg(long, value_name = "PATH", conflicts_with = "resume")]
    checkpoint_out: Option<PathBuf>,

    /// Capture depth for --checkpoint-out (default: min(genus, 10)).
    #[arg(long, value_name = "D", requires = "checkpoint_out")]
    checkpoint_depth: Option<u32>,

    /// Resume a walk from a checkpoint file instead of the root.
    #[arg(long, value_name = "PATH")]
    resume: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Scan {
    /// Equality instances outside the two known families.
    Question,
    /// Semigroups with a negative Wilf difference.
    Wilf,
    /// Both.
    All,
}

impl From<Scan> for ScanKind {
    fn from(s: Scan) -> ScanKind {
        match s {
            Scan::Question => ScanKind::Question,
            Scan::Wilf => ScanKind::Wilf,
            Scan::All => ScanKind::All,
        }
    }
}

#[derive(Serialize)]
struct GenusRow {
    genus: u32,
    count: u64,
    equality_count: u64,
}

#[derive(Serialize)]
struct FindingRow {
    kind: &'static str,
    generators: String,
    genus: u32,
    delta: i64,
}

struct Capture {
    depth: u32,
}

impl TreeVisitor for Capture {
    type Acc = Vec<TreeNode>;

    fn empty(&self) -> Vec<TreeNode> {
        Vec::new()
    }

    fn visit(&self, node: &TreeNode, acc: &mut Vec<TreeNode>) {
        if node.genus() == self.depth || (node.genus() < self.depth && node.is_leaf()) {
            acc.push(node.clone());
        }
    }

    fn merge(&self, mut a: Vec<TreeNode>, b: Vec<TreeNode>) -> Vec<TreeNode> {
        a.extend(b);
        a
    }
}

pub fn run(args: &Args, emit: Emit, workers: usize) -> Result<bool> {
    let opts = EnumerateOptions {
        workers,
        node_budget: args.budget,
        split_genus: None,
        scan: Some(args.scan.into()),
    };

    let table = if let Some(path) = &args.resume {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let (depth, nodes) = decode_checkpoint(&bytes, 2 * args.genus as usize + 2)?;
        resume_from(depth, &nodes, args.genus, &opts).map_err(budget_hint)?
    } else if let Some(path) = &args.checkpoint_out {
        let depth = args.checkpoint_depth.unwrap_or_else(|| args.genus.min(10));
        if depth > args.genus {
            return Err(anyhow!("capture depth {depth} exceeds the walk genus {}", args.genus));
        }
        let (table, captured) =
            enumerate_tree_with(args.genus, &opts, &Capture { depth }).map_err(budget_hint)?;
        fs::write(path, encode_checkpoint(depth, &captured))
            .with_context(|| format!("writing {}", path.display()))?;
        table
    } else {
        enumerate_tree(args.genus, &opts).map_err(budget_hint)?
    };

    for f in table.violations() {
        let kind = match f.kind {
            FindingKind::UnclassifiedEquality => "unclassified_equality",
            FindingKind::WilfViolation => "wilf_violation",
        };
        emit_finding(&FindingRow {
            kind,
            generators: join_generators(&f.generators),
            genus: f.genus,
            delta: f.delta,
        })?;
    }

    let rows: Vec<GenusRow> = table
        .counts()
        .iter()
        .zip(table.equality_counts())
        .enumerate()
        .map(|(g, (&count, &equality_count))| GenusRow { genus: g as u32, count, equality_count })
        .collect();
    emit_rows(emit, &rows)?;

    Ok(!table.violations().is_empty())
}

fn budget_hint(e: Error) -> anyhow::Error {
    match e {
        Error::LimitTooLarge { estimated, budget } => anyhow!(
            "walk estimated at {estimated} nodes exceeds the budget of {budget}; \
             rerun with --budget {estimated} to opt in"
        ),
        other => other.into(),
    }
}
