//! Exhaustive walk of the genus tree.
//!
//! Every numerical semigroup except N is obtained from its parent by
//! removing one minimal generator larger than the parent's Frobenius
//! number, so the walk from N visits each semigroup of genus <= G
//! exactly once. Nodes carry member and generator bit sets over the
//! fixed span [0, 2G+1]; that window is enough because a genus-g
//! semigroup has F <= 2g-1 and every minimal generator <= 2g+1.
//!
//! The walk doubles as the census engine: each node's Wilf difference
//! comes straight from the generator popcount, and optional scans
//! re-validate anything suspicious through the full Apery machinery
//! before reporting it as a finding.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use rayon::prelude::*;

/// Default ceiling on the estimated node count of one enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 500_000_000;

/// One semigroup in the genus tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    members: BitSet,
    gens: BitSet,
    frobenius: i64,
    genus: u32,
    multiplicity: u32,
}

impl TreeNode {
    /// The root N, with bit sets sized for a walk to genus `g_max`.
    fn root(g_max: u32) -> TreeNode {
        let span = 2 * g_max as usize + 2;
        let mut gens = BitSet::new(span);
        gens.set(1);
        TreeNode {
            members: BitSet::filled(span),
            gens,
            frobenius: -1,
            genus: 0,
            multiplicity: 1,
        }
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Membership for any n; values past the bit span are always in S.
    pub fn is_member(&self, n: u64) -> bool {
        n >= self.members.len() as u64 || self.members.get(n as usize)
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> Vec<u64> {
        self.gens.ones().map(|v| v as u64).collect()
    }

    /// Minimal generators past the Frobenius number: removing any one
    /// of them gives a child semigroup.
    pub fn effective_generators(&self) -> Vec<u64> {
        self.gens
            .ones()
            .map(|v| v as u64)
            .filter(|&v| v as i64 > self.frobenius)
            .collect()
    }

    pub fn is_leaf(&self) -> bool {
        match self.gens.last_one() {
            Some(top) => (top as i64) <= self.frobenius,
            None => true,
        }
    }

    /// Gaps in ascending order; empty for the root.
    pub fn gap_list(&self) -> Vec<u64> {
        (0..=self.frobenius.max(-1))
            .filter(|&v| !self.members.get(v as usize))
            .map(|v| v as u64)
            .collect()
    }

    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::new(&self.generators())
    }

    pub(crate) fn members(&self) -> &BitSet {
        &self.members
    }

    /// Parent in the genus tree: the Frobenius number restored to
    /// membership. Filling the largest gap always leaves a closed set.
    pub(crate) fn parent(&self) -> TreeNode {
        assert!(self.genus > 0, "the root has no parent");
        let mut members = self.members.clone();
        members.set(self.frobenius as usize);
        from_members(members, Some(self.genus - 1)).expect("parent of a valid node is valid")
    }

    /// Child obtained by removing the effective generator `x`. The new
    /// minimal generators of the child are exactly the non-members of
    /// the old generator set of the form x + s with s in S \ {0}: any
    /// other element keeps a decomposition that avoids x.
    fn child(&self, x: usize) -> TreeNode {
        debug_assert!(self.gens.get(x) && x as i64 > self.frobenius);
        let mut members = self.members.clone();
        members.clear(x);
        let mut gens = self.gens.clone();
        gens.clear(x);

        let genus = self.genus + 1;
        let m = if self.multiplicity as usize == x {
            members.first_one_at_or_after(x + 1).expect("span covers 2g + 1") as u32
        } else {
            self.multiplicity
        };

        // Candidates live at or below 2*genus + 1, the generator bound
        // for the child's genus.
        let top = 2 * genus as usize + 1;
        debug_assert!(top < members.len());
        if 2 * x <= top && is_minimal_in(&members, m as usize, 2 * x) {
            gens.set(2 * x);
        }
        for s in members.ones_in(m as usize, top.saturating_sub(x)) {
            let z = x + s;
            if is_minimal_in(&members, m as usize, z) {
                gens.set(z);
            }
        }
        TreeNode { members, gens, frobenius: x as i64, genus, multiplicity: m }
    }
}

/// No way to write z = u + v with both parts nonzero members.
fn is_minimal_in(members: &BitSet, m: usize, z: usize) -> bool {
    if z < 2 * m {
        return true;
    }
    if z < 64 {
        // Pair bits u and z - u in one word: reversing and shifting
        // aligns bit u of the mask with bit z - u of the original.
        let w = members.words()[0];
        let rev = w.reverse_bits() >> (63 - z);
        let lo_mask = !0u64 << m;
        let hi_mask = (1u64 << (z - m + 1)) - 1;
        return w & rev & lo_mask & hi_mask == 0;
    }
    members.ones_in(m, z / 2).all(|u| !members.get(z - u))
}

/// Rebuild a node from a raw member set, validating closure. Spans must
/// match the enumeration the node will join. Used when loading
/// checkpointed frontiers, where the bits are untrusted input.
pub(crate) fn from_members(members: BitSet, expected_genus: Option<u32>) -> Result<TreeNode> {
    let span = members.len();
    if span < 2 || !members.get(0) {
        return Err(Error::Checkpoint("member set must contain 0".into()));
    }
    let multiplicity = match members.first_one_at_or_after(1) {
        Some(m) => m,
        None => return Err(Error::Checkpoint("member set has no nonzero element".into())),
    };
    let mut frobenius = -1i64;
    let mut genus = 0u32;
    for v in 1..span {
        if !members.get(v) {
            frobenius = v as i64;
            genus += 1;
        }
    }
    if let Some(g) = expected_genus {
        if g != genus {
            return Err(Error::Checkpoint(format!("expected genus {g}, member set has {genus}")));
        }
    }
    if frobenius > 2 * genus as i64 - 1 {
        return Err(Error::Checkpoint("largest gap exceeds 2g - 1".into()));
    }
    for u in members.ones_in(multiplicity, span - 1 - multiplicity) {
        for v in members.ones_in(u, span - 1 - u) {
            if !members.get(u + v) {
                return Err(Error::Checkpoint(format!(
                    "member set not closed under addition: {u} + {v} missing"
                )));
            }
        }
    }

    let mut gens = BitSet::new(span);
    let gen_top = (2 * genus as usize + 1).min(span - 1);
    for v in members.ones_in(multiplicity, gen_top) {
        if is_minimal_in(&members, multiplicity, v) {
            gens.set(v);
        }
    }
    Ok(TreeNode { members, gens, frobenius, genus, multiplicity: multiplicity as u32 })
}

/// Per-node callback for census walks. Implementations must be safe to
/// call from worker threads; accumulators from disjoint subtrees are
/// combined with `merge`, and the merged result must not depend on the
/// interleaving.
pub trait TreeVisitor: Sync {
    type Acc: Send;

    fn empty(&self) -> Self::Acc;
    fn visit(&self, node: &TreeNode, acc: &mut Self::Acc);
    fn merge(&self, a: Self::Acc, b: Self::Acc) -> Self::Acc;
}

/// Census-only walks.
pub struct NullVisitor;

impl TreeVisitor for NullVisitor {
    type Acc = ();

    fn empty(&self) {}

    fn visit(&self, _node: &TreeNode, _acc: &mut ()) {}

    fn merge(&self, _a: (), _b: ()) {}
}

/// What the walk reports beyond the census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanKind {
    /// Flag delta = 0 semigroups that match no known equality family.
    Question,
    /// Flag delta < 0.
    Wilf,
    /// Both.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FindingKind {
    UnclassifiedEquality,
    WilfViolation,
}

/// A semigroup flagged by a scan, re-validated through the Apery
/// machinery before being reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub generators: Vec<u64>,
    pub genus: u32,
    pub delta: i64,
    pub kind: FindingKind,
}

/// Census of one enumeration: semigroup and equality-instance counts
/// per genus, plus any scan findings (expected none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusTable {
    pub(crate) counts: Vec<u64>,
    pub(crate) equality_counts: Vec<u64>,
    pub(crate) violations: Vec<Finding>,
}

impl GenusTable {
    pub(crate) fn new(g_max: u32) -> GenusTable {
        GenusTable {
            counts: vec![0; g_max as usize + 1],
            equality_counts: vec![0; g_max as usize + 1],
            violations: Vec::new(),
        }
    }

    /// Semigroups per genus, indexed 0..=G.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// delta = 0 instances per genus.
    pub fn equality_counts(&self) -> &[u64] {
        &self.equality_counts
    }

    pub fn violations(&self) -> &[Finding] {
        &self.violations
    }

    fn merge(&mut self, other: GenusTable) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        for (a, b) in self.equality_counts.iter_mut().zip(other.equality_counts) {
            *a += b;
        }
        self.violations.extend(other.violations);
    }

    fn sort_violations(&mut self) {
        self.violations
            .sort_by(|a, b| (a.genus, &a.generators).cmp(&(b.genus, &b.generators)));
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Worker threads; 1 means a plain sequential walk.
    pub workers: usize,
    /// Refuse walks whose estimated node count exceeds this.
    pub node_budget: u64,
    /// Genus at which parallel runs hand subtrees to the pool.
    pub split_genus: Option<u32>,
    pub scan: Option<ScanKind>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            workers: 1,
            node_budget: DEFAULT_NODE_BUDGET,
            split_genus: None,
            scan: None,
        }
    }
}

/// Cumulative node count through genus G, estimated from the known
/// golden-ratio growth of the census.
pub(crate) fn estimated_nodes(g_max: u32) -> u64 {
    if g_max > 60 {
        return u64::MAX;
    }
    let phi = 1.618_033_988_749_895_f64;
    (8.0 * phi.powi(g_max as i32)).ceil() as u64
}

/// The known equality families, decided from the generator list alone.
fn equality_shape_is_known(gens: &[u64]) -> bool {
    if gens.len() == 2 {
        return true;
    }
    let m = gens[0];
    if gens.len() as u64 != m || (gens[1] - 1) % m != 0 {
        return false;
    }
    let k = (gens[1] - 1) / m;
    gens.iter().enumerate().skip(1).all(|(i, &v)| v == k * m + i as u64)
}

/// Count one node and apply the configured scan to it. Anything a scan
/// flags is recomputed from scratch; a disagreement between the node
/// arithmetic and the Apery route is an internal bug, not a finding.
pub(crate) fn scan_into(
    node: &TreeNode,
    scan: Option<ScanKind>,
    table: &mut GenusTable,
) -> Result<()> {
    table.counts[node.genus as usize] += 1;
    if node.genus == 0 {
        return Ok(());
    }
    let d = node.gens.count_ones() as i64;
    let c = node.frobenius + 1;
    let delta = d * (c - node.genus as i64) - c;
    if delta == 0 {
        table.equality_counts[node.genus as usize] += 1;
    }

    let (question, wilf) = match scan {
        None => return Ok(()),
        Some(ScanKind::Question) => (true, false),
        Some(ScanKind::Wilf) => (false, true),
        Some(ScanKind::All) => (true, true),
    };
    let kind = if question && delta == 0 && !equality_shape_is_known(&node.generators()) {
        Some(FindingKind::UnclassifiedEquality)
    } else if wilf && delta < 0 {
        Some(FindingKind::WilfViolation)
    } else {
        None
    };
    let Some(kind) = kind else { return Ok(()) };

    let generators = node.generators();
    let sg = NumericalSemigroup::new(&generators)?;
    let full_delta = sg.delta()?;
    if full_delta != delta {
        return Err(Error::InternalInconsistency(format!(
            "node delta {delta} for {generators:?} but Apery route gives {full_delta}"
        )));
    }
    if kind == FindingKind::UnclassifiedEquality && sg.classify_equality()?.is_some() {
        return Err(Error::InternalInconsistency(format!(
            "node shape check missed a known equality family for {generators:?}"
        )));
    }
    table.violations.push(Finding { generators, genus: node.genus, delta, kind });
    Ok(())
}

fn dfs<V: TreeVisitor>(
    node: &TreeNode,
    g_max: u32,
    scan: Option<ScanKind>,
    visitor: &V,
    table: &mut GenusTable,
    acc: &mut V::Acc,
) -> Result<()> {
    scan_into(node, scan, table)?;
    visitor.visit(node, acc);
    if node.genus < g_max {
        for x in node.gens.ones() {
            if x as i64 > node.frobenius {
                dfs(&node.child(x), g_max, scan, visitor, table, acc)?;
            }
        }
    }
    Ok(())
}

/// Sequential walk down to the split genus; nodes there are handed back
/// untouched for the parallel phase, shallower ones are censused here.
fn collect_to_split<V: TreeVisitor>(
    node: TreeNode,
    split: u32,
    scan: Option<ScanKind>,
    visitor: &V,
    table: &mut GenusTable,
    acc: &mut V::Acc,
    frontier: &mut Vec<TreeNode>,
) -> Result<()> {
    if node.genus == split {
        frontier.push(node);
        return Ok(());
    }
    scan_into(&node, scan, table)?;
    visitor.visit(&node, acc);
    for x in node.gens.ones() {
        if x as i64 > node.frobenius {
            collect_to_split(node.child(x), split, scan, visitor, table, acc, frontier)?;
        }
    }
    Ok(())
}

/// Walk the subtrees under `roots`, adding to an existing census.
/// Sequential when one worker is asked for; otherwise the roots are
/// distributed over a dedicated pool and partial censuses are merged in
/// root order, so results never depend on scheduling.
pub(crate) fn enumerate_subtrees<V: TreeVisitor>(
    roots: Vec<TreeNode>,
    g_max: u32,
    opts: &EnumerateOptions,
    visitor: &V,
    mut table: GenusTable,
    mut acc: V::Acc,
) -> Result<(GenusTable, V::Acc)> {
    if opts.workers <= 1 {
        for root in &roots {
            dfs(root, g_max, opts.scan, visitor, &mut table, &mut acc)?;
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::WorkerPool(e.to_string()))?;
        let parts: Result<Vec<(GenusTable, V::Acc)>> = pool.install(|| {
            roots
                .par_iter()
                .map(|root| {
                    let mut t = GenusTable::new(g_max);
                    let mut a = visitor.empty();
                    dfs(root, g_max, opts.scan, visitor, &mut t, &mut a)?;
                    Ok((t, a))
                })
                .collect()
        });
        for (t, a) in parts? {
            table.merge(t);
            acc = visitor.merge(acc, a);
        }
    }
    table.sort_violations();
    Ok((table, acc))
}

/// Visit every numerical semigroup of genus <= `g_max` exactly once,
/// preorder, children in ascending removed-generator order.
pub fn enumerate_tree_with<V: TreeVisitor>(
    g_max: u32,
    opts: &EnumerateOptions,
    visitor: &V,
) -> Result<(GenusTable, V::Acc)> {
    let estimated = estimated_nodes(g_max);
    if estimated > opts.node_budget {
        return Err(Error::LimitTooLarge { estimated, budget: opts.node_budget });
    }
    let root = TreeNode::root(g_max);
    let mut table = GenusTable::new(g_max);
    let mut acc = visitor.empty();
    let split = if opts.workers <= 1 {
        0
    } else {
        opts.split_genus.unwrap_or(12).min(g_max.saturating_sub(4))
    };
    let roots = if split == 0 {
        vec![root]
    } else {
        let mut frontier = Vec::new();
        collect_to_split(root, split, opts.scan, visitor, &mut table, &mut acc, &mut frontier)?;
        frontier
    };
    enumerate_subtrees(roots, g_max, opts, visitor, table, acc)
}

pub fn enumerate_tree(g_max: u32, opts: &EnumerateOptions) -> Result<GenusTable> {
    enumerate_tree_with(g_max, opts, &NullVisitor).map(|(table, ())| table)
}

/// All delta = 0 semigroups of genus <= `g_max` outside the known
/// equality families. Expected empty.
pub fn scan_question(g_max: u32) -> Result<Vec<Finding>> {
    let opts = EnumerateOptions { scan: Some(ScanKind::Question), ..Default::default() };
    Ok(enumerate_tree(g_max, &opts)?.violations)
}

/// All delta < 0 semigroups of genus <= `g_max`. Expected empty.
pub fn scan_wilf(g_max: u32) -> Result<Vec<Finding>> {
    let opts = EnumerateOptions { scan: Some(ScanKind::Wilf), ..Default::default() };
    Ok(enumerate_tree(g_max, &opts)?.violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_values() {
        let table = enumerate_tree(10, &EnumerateOptions::default()).unwrap();
        assert_eq!(table.counts(), &[1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]);
        assert!(table.violations().is_empty());
    }

    #[test]
    fn equality_counts_small() {
        // By hand at g <= 4: <2,3>; <2,5>, <3,4,5>; <2,7>, <3,4>,
        // <4,...,7>; <2,9>, <3,5>, <3,7,8>, <5,...,9>.
        let table = enumerate_tree(4, &EnumerateOptions::default()).unwrap();
        assert_eq!(table.counts(), &[1, 1, 2, 4, 7]);
        assert_eq!(table.equality_counts(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn first_children_have_expected_shape() {
        let root = TreeNode::root(4);
        assert_eq!(root.effective_generators(), &[1]);
        let c = root.child(1);
        assert_eq!(c.generators(), &[2, 3]);
        assert_eq!((c.frobenius(), c.genus(), c.multiplicity()), (1, 1, 2));

        // Removing the multiplicity bumps it to the next member.
        let gc = c.child(2);
        assert_eq!(gc.generators(), &[3, 4, 5]);
        assert_eq!((gc.frobenius(), gc.multiplicity()), (2, 3));
        let gc = c.child(3);
        assert_eq!(gc.generators(), &[2, 5]);
        assert_eq!(gc.gap_list(), &[1, 3]);
    }

    #[test]
    fn node_semigroup_agrees() {
        let root = TreeNode::root(6);
        let node = root.child(1).child(3).child(5);
        let sg = node.to_semigroup().unwrap();
        assert_eq!(sg.apery_set().frobenius(), node.frobenius());
        assert_eq!(sg.apery_set().genus(), node.genus() as u64);
        assert_eq!(sg.edim(), node.generators().len());
    }

    #[test]
    fn scans_come_back_empty() {
        assert!(scan_question(10).unwrap().is_empty());
        assert!(scan_wilf(10).unwrap().is_empty());
    }

    #[test]
    fn parallel_census_matches_sequential() {
        let seq = enumerate_tree(9, &EnumerateOptions::default()).unwrap();
        let par = enumerate_tree(
            9,
            &EnumerateOptions {
                workers: 4,
                split_genus: Some(3),
                scan: Some(ScanKind::All),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq.counts(), par.counts());
        assert_eq!(seq.equality_counts(), par.equality_counts());
        assert!(par.violations().is_empty());
    }

    #[test]
    fn budget_refuses_oversized_runs() {
        match enumerate_tree(40, &EnumerateOptions::default()) {
            Err(Error::LimitTooLarge { estimated, budget }) => {
                assert!(estimated > budget);
            }
            other => panic!("expected LimitTooLarge, got {other:?}"),
        }
    }

    #[test]
    fn visitor_sees_every_node() {
        struct Count;
        impl TreeVisitor for Count {
            type Acc = u64;
            fn empty(&self) -> u64 {
                0
            }
            fn visit(&self, _node: &TreeNode, acc: &mut u64) {
                *acc += 1;
            }
            fn merge(&self, a: u64, b: u64) -> u64 {
                a + b
            }
        }
        let (table, seen) = enumerate_tree_with(8, &EnumerateOptions::default(), &Count).unwrap();
        assert_eq!(seen, table.counts().iter().sum::<u64>());
        let (_, seen_par) = enumerate_tree_with(
            8,
            &EnumerateOptions { workers: 3, split_genus: Some(2), ..Default::default() },
            &Count,
        )
        .unwrap();
        assert_eq!(seen, seen_par);
    }

    #[test]
    fn rebuild_from_member_bits() {
        let node = TreeNode::root(5).child(1).child(2).child(4);
        let rebuilt = from_members(node.members.clone(), Some(node.genus())).unwrap();
        assert_eq!(rebuilt, node);

        // Punching out a non-generator breaks closure.
        let mut broken = node.members.clone();
        broken.clear(6);
        assert!(matches!(from_members(broken, None), Err(Error::Checkpoint(_))));

        let mut no_zero = node.members.clone();
        no_zero.clear(0);
        assert!(matches!(from_members(no_zero, None), Err(Error::Checkpoint(_))));
    }
}
