//! Bulk verification drivers: run the lemma checkers, the type
//! inequality, and the positivity trace across whole censuses or random
//! samples, collecting counterexamples instead of stopping at the first.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sample::{random_semigroups, theorem_samples, SampleSpec};
use crate::semigroup::NumericalSemigroup;
use crate::theorem::{
    check_lemma_nq, check_lemma_nq1, check_lemma_x, check_lemma_y, smallest_prime_factor,
    ProofCase,
};
use crate::tree::{enumerate_tree_with, EnumerateOptions, TreeNode, TreeVisitor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaFailure {
    pub lemma: &'static str,
    pub generators: Vec<u64>,
    pub x: Option<u64>,
    pub y: Option<u64>,
    pub z: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaSweepStats {
    pub checked_x: u64,
    pub checked_y: u64,
    pub checked_nq: u64,
    pub checked_nq1: u64,
    pub failures: Vec<LemmaFailure>,
}

impl LemmaSweepStats {
    pub fn total_checked(&self) -> u64 {
        self.checked_x + self.checked_y + self.checked_nq + self.checked_nq1
    }

    fn absorb(&mut self, other: LemmaSweepStats) {
        self.checked_x += other.checked_x;
        self.checked_y += other.checked_y;
        self.checked_nq += other.checked_nq;
        self.checked_nq1 += other.checked_nq1;
        self.failures.extend(other.failures);
    }

    fn sort(&mut self) {
        self.failures.sort_by(|a, b| {
            (a.lemma, &a.generators, a.x, a.y, a.z).cmp(&(b.lemma, &b.generators, b.x, b.y, b.z))
        });
    }
}

/// Grid per semigroup: x in [1, min(4, spf - 1)], y in {2, 3, 4} where
/// the guard a1 - d >= C(y, 2) + 1 admits it, z in [2, y]. Checks whose
/// preconditions fail are skipped, not counted.
fn sweep_one(sg: &NumericalSemigroup, stats: &mut LemmaSweepStats) {
    let a1 = sg.multiplicity();
    let d = sg.edim() as u64;
    let spf = smallest_prime_factor(a1).expect("multiplicity is at least 2");
    let gens = sg.generators().values().to_vec();
    let mut fail = |lemma, x, y, z| {
        stats.failures.push(LemmaFailure { lemma, generators: gens.clone(), x, y, z });
    };

    for x in 1..spf.min(5) {
        stats.checked_x += 1;
        if !check_lemma_x(sg, x).expect("grid respects the preconditions") {
            fail("floor_subadditivity", Some(x), None, None);
        }
    }
    for y in 2..=4u64 {
        if a1 - d < y * (y - 1) / 2 + 1 {
            continue;
        }
        stats.checked_y += 1;
        if !check_lemma_y(sg, y).expect("grid respects the preconditions") {
            fail("top_class_gap", None, Some(y), None);
        }
        for z in 2..=y {
            match check_lemma_nq(sg, y, z) {
                Ok(true) => stats.checked_nq += 1,
                Ok(false) => {
                    stats.checked_nq += 1;
                    fail("last_window_lower", None, Some(y), Some(z));
                }
                // The floor identity fl(a1 - 1) = fl(z) + fl(1) is a
                // hypothesis, not a conclusion; instances without it are
                // vacuous.
                Err(Error::PreconditionViolated(_)) => {}
                Err(e) => panic!("unexpected checker error: {e}"),
            }
        }
        stats.checked_nq1 += 1;
        if !check_lemma_nq1(sg, y).expect("grid respects the preconditions") {
            fail("penultimate_window_lower", None, Some(y), None);
        }
    }
}

struct LemmaVisitor;

impl TreeVisitor for LemmaVisitor {
    type Acc = LemmaSweepStats;

    fn empty(&self) -> LemmaSweepStats {
        LemmaSweepStats::default()
    }

    fn visit(&self, node: &TreeNode, acc: &mut LemmaSweepStats) {
        if node.genus() == 0 {
            return;
        }
        let sg = node.to_semigroup().expect("tree nodes are valid");
        sweep_one(&sg, acc);
    }

    fn merge(&self, mut a: LemmaSweepStats, b: LemmaSweepStats) -> LemmaSweepStats {
        a.absorb(b);
        a
    }
}

pub fn census_lemma_sweep(g_max: u32, workers: usize) -> Result<LemmaSweepStats> {
    let opts = EnumerateOptions { workers, ..Default::default() };
    let (_, mut stats) = enumerate_tree_with(g_max, &opts, &LemmaVisitor)?;
    stats.sort();
    Ok(stats)
}

pub fn sampled_lemma_sweep(samples: &[NumericalSemigroup]) -> LemmaSweepStats {
    let mut stats = LemmaSweepStats::default();
    for sg in samples {
        sweep_one(sg, &mut stats);
    }
    stats.sort();
    stats
}

/// A spread of odd multiplicities with small prime factors kept rare, so
/// the x grid is not always empty, crossed with embedding dimensions 3
/// through 8. Shapes rotate round robin until `count` draws are made.
pub fn default_lemma_samples(count: usize, seed: u64) -> Result<Vec<NumericalSemigroup>> {
    const MULTS: [u64; 13] = [5, 7, 9, 11, 15, 21, 25, 27, 33, 35, 45, 49, 55];
    let mut shapes = Vec::new();
    for m in MULTS {
        for e in 3..=m.min(8) {
            shapes.push((m, e as usize));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0usize;
    while out.len() < count {
        let (m, e) = shapes[i % shapes.len()];
        i += 1;
        let spec = SampleSpec::new(m, e, rng.next_u64(), 1);
        out.extend(random_semigroups(&spec)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TypeSweepStats {
    pub checked: u64,
    pub failures: Vec<Vec<u64>>,
}

struct TypeVisitor;

impl TreeVisitor for TypeVisitor {
    type Acc = TypeSweepStats;

    fn empty(&self) -> TypeSweepStats {
        TypeSweepStats::default()
    }

    fn visit(&self, node: &TreeNode, acc: &mut TypeSweepStats) {
        if node.genus() == 0 {
            return;
        }
        let sg = node.to_semigroup().expect("tree nodes are valid");
        acc.checked += 1;
        if !sg.check_type_inequality().expect("census scale fits the dense table") {
            acc.failures.push(sg.generators().values().to_vec());
        }
    }

    fn merge(&self, mut a: TypeSweepStats, b: TypeSweepStats) -> TypeSweepStats {
        a.checked += b.checked;
        a.failures.extend(b.failures);
        a
    }
}

pub fn type_inequality_sweep(g_max: u32, workers: usize) -> Result<TypeSweepStats> {
    let opts = EnumerateOptions { workers, ..Default::default() };
    let (_, mut stats) = enumerate_tree_with(g_max, &opts, &TypeVisitor)?;
    stats.failures.sort();
    Ok(stats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFailure {
    pub generators: Vec<u64>,
    pub case: ProofCase,
    /// First unsatisfied step, or "delta <= 0" if every step held but
    /// the conclusion still failed.
    pub label: String,
    pub delta: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceSweepStats {
    pub total: usize,
    pub equality_case: usize,
    pub large_nq: usize,
    pub small_nq: usize,
    pub failures: Vec<TraceFailure>,
}

/// Draws `count` semigroups satisfying the scale hypotheses at the given
/// rho and replays the positivity argument on each.
pub fn theorem_trace_sweep(rho: u64, count: usize, seed: u64) -> Result<TraceSweepStats> {
    let samples = theorem_samples(rho, count, seed)?;
    let mut stats = TraceSweepStats::default();
    for sg in &samples {
        let trace = sg.proof_trace()?;
        stats.total += 1;
        match trace.case() {
            ProofCase::EqualityCase => stats.equality_case += 1,
            ProofCase::LargeNQ => stats.large_nq += 1,
            ProofCase::SmallNQ => stats.small_nq += 1,
        }
        if !trace.all_satisfied() || trace.delta() <= 0 {
            let label = trace
                .steps()
                .iter()
                .find(|s| !s.satisfied)
                .map(|s| s.label.to_string())
                .unwrap_or_else(|| "delta <= 0".to_string());
            stats.failures.push(TraceFailure {
                generators: sg.generators().values().to_vec(),
                case: trace.case(),
                label,
                delta: trace.delta(),
            });
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_sweep_is_clean() {
        let stats = census_lemma_sweep(12, 1).unwrap();
        assert!(stats.failures.is_empty(), "{:?}", stats.failures);
        assert!(stats.checked_x > 0);
        assert!(stats.checked_y > 0);
        assert!(stats.checked_nq > 0);
        assert!(stats.checked_nq1 > 0);
        assert_eq!(stats.total_checked(),
            stats.checked_x + stats.checked_y + stats.checked_nq + stats.checked_nq1);

        let parallel = census_lemma_sweep(12, 4).unwrap();
        assert_eq!(stats, parallel);
    }

    #[test]
    fn guarded_checks_are_not_vacuous() {
        // (5, 6, 7) sits at genus 6 with a1 - d = 2, which admits y = 2,
        // so a census to genus 6 already runs the window lemmas.
        let stats = census_lemma_sweep(6, 1).unwrap();
        assert!(stats.checked_y > 0);
        assert!(stats.checked_nq > 0);
        assert!(stats.checked_nq1 > 0);
    }

    #[test]
    fn type_sweep_is_clean() {
        let stats = type_inequality_sweep(10, 1).unwrap();
        assert!(stats.failures.is_empty(), "{:?}", stats.failures);
        // Census sizes to genus 10, skipping the trivial semigroup.
        assert_eq!(stats.checked, 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204);
    }

    #[test]
    fn trace_sweep_is_clean() {
        let stats = theorem_trace_sweep(3, 5, 20260816).unwrap();
        assert_eq!(stats.total, 5);
        assert_eq!(stats.total, stats.equality_case + stats.large_nq + stats.small_nq);
        assert!(stats.failures.is_empty(), "{:?}", stats.failures);
    }

    #[test]
    fn sampled_sweep_is_clean() {
        let samples = default_lemma_samples(50, 1).unwrap();
        assert_eq!(samples.len(), 50);
        let stats = sampled_lemma_sweep(&samples);
        assert!(stats.failures.is_empty(), "{:?}", stats.failures);
        assert!(stats.checked_y > 0);
    }
}
