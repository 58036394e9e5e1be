//! Exact invariants of numerical semigroups and the machinery around the
//! Wilf inequality: Apery sets, genus/Frobenius/type, the interval-count
//! identity for d(F+1-g) - (F+1), equality classification, lemma checks
//! with an explicit proof trace, genus-tree enumeration (sequential and
//! parallel, with checkpointing), a small-genus gap-set oracle, and a
//! seeded random sampler.
//!
//! All arithmetic is exact integer arithmetic; overflow aborts rather
//! than wrapping. Inputs are validated once at the boundary
//! ([`NumericalSemigroup::new`]) and everything downstream relies on
//! those invariants.

pub mod apery;
pub mod bits;
pub mod checkpoint;
pub mod error;
pub mod gapset;
pub mod membership;
pub mod oracle;
pub mod sample;
pub mod semigroup;
pub mod sweeps;
pub mod theorem;
pub mod tree;
pub mod type_data;
pub mod wilf;

pub use apery::{AperyPoset, AperySet};
pub use bits::BitSet;
pub use checkpoint::{decode_checkpoint, encode_checkpoint, resume_from};
pub use error::{Error, Result};
pub use gapset::gapset_oracle;
pub use membership::MembershipTable;
pub use sample::{random_semigroups, theorem_samples, SampleSpec};
pub use semigroup::{minimal_generators, GeneratorSet, NumericalSemigroup};
pub use sweeps::{
    census_lemma_sweep, default_lemma_samples, sampled_lemma_sweep, theorem_trace_sweep,
    type_inequality_sweep, LemmaFailure, LemmaSweepStats, TraceFailure, TraceSweepStats,
    TypeSweepStats,
};
pub use theorem::{
    check_lemma_nq, check_lemma_nq1, check_lemma_x, check_lemma_y, smallest_prime_factor,
    ProofCase, ProofTrace, TheoremParams, TraceStep,
};
pub use tree::{
    enumerate_tree, enumerate_tree_with, scan_question, scan_wilf, EnumerateOptions, Finding,
    FindingKind, GenusTable, NullVisitor, ScanKind, TreeNode, TreeVisitor, DEFAULT_NODE_BUDGET,
};
pub use type_data::TypeData;
pub use wilf::{EqualityWitness, IntervalProfile, WilfReport};
