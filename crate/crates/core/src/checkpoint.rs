//! Checkpoint codec for interrupted census walks.
//!
//! A checkpoint stores every node at the capture depth plus every leaf
//! above it. That set tiles the tree: each shallower node is an ancestor
//! of a captured node, so a resumed run can rebuild the shallow part of
//! the census by walking parent chains and then enumerate the subtrees
//! below the frontier.
//!
//! Layout, all little endian:
//!
//! ```text
//! magic "NSGT" (4) | version u16 | depth u16 | node count u64
//! ```
//!
//! followed by one record per node: a `u32` byte length and the gap set
//! of the node as a bit vector over `[0, F]`, bit `x % 8` of byte
//! `x / 8` set when `x` is a gap. The codec is pure bytes; file handling
//! lives with the caller.

use std::collections::HashSet;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::tree::{
    enumerate_subtrees, estimated_nodes, from_members, scan_into, EnumerateOptions, GenusTable,
    NullVisitor, TreeNode,
};

const MAGIC: [u8; 4] = *b"NSGT";
const VERSION: u16 = 1;

pub fn encode_checkpoint(depth: u32, nodes: &[TreeNode]) -> Vec<u8> {
    assert!(depth <= u16::MAX as u32, "capture depth does not fit the header");
    let mut out = Vec::with_capacity(16 + nodes.len() * 8);
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(depth as u16).to_le_bytes());
    out.extend_from_slice(&(nodes.len() as u64).to_le_bytes());
    for node in nodes {
        let f = node.frobenius();
        let nbytes = if f < 0 { 0 } else { (f as usize + 1).div_ceil(8) };
        out.extend_from_slice(&(nbytes as u32).to_le_bytes());
        let start = out.len();
        out.resize(start + nbytes, 0);
        for gap in node.gap_list() {
            let x = gap as usize;
            out[start + x / 8] |= 1 << (x % 8);
        }
    }
    out
}

/// Rebuilds nodes for a walk whose member sets span `span_bits` values,
/// which must be `2 * g_max + 2` for the census the caller plans to run.
pub fn decode_checkpoint(bytes: &[u8], span_bits: usize) -> Result<(u32, Vec<TreeNode>)> {
    if bytes.len() < 16 {
        return Err(Error::Checkpoint("header is truncated".into()));
    }
    if bytes[0..4] != MAGIC {
        return Err(Error::Checkpoint("bad magic, not a checkpoint".into()));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != VERSION {
        return Err(Error::Checkpoint(format!("unsupported version {version}")));
    }
    let depth = u16::from_le_bytes([bytes[6], bytes[7]]) as u32;
    let count = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
    let mut nodes = Vec::with_capacity(count.min(1 << 20) as usize);
    let mut at = 16usize;
    for _ in 0..count {
        if bytes.len() - at < 4 {
            return Err(Error::Checkpoint("node length prefix is truncated".into()));
        }
        let len = u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap()) as usize;
        at += 4;
        if bytes.len() - at < len {
            return Err(Error::Checkpoint("node payload is truncated".into()));
        }
        let mut members = BitSet::filled(span_bits);
        for (i, byte) in bytes[at..at + len].iter().enumerate() {
            let mut b = *byte;
            while b != 0 {
                let x = i * 8 + b.trailing_zeros() as usize;
                b &= b - 1;
                if x >= span_bits {
                    return Err(Error::Checkpoint(format!(
                        "gap {x} does not fit a span of {span_bits} values"
                    )));
                }
                members.clear(x);
            }
        }
        at += len;
        let node = from_members(members, None)?;
        if node.genus() > depth {
            return Err(Error::Checkpoint(format!(
                "node at genus {} exceeds capture depth {depth}",
                node.genus()
            )));
        }
        nodes.push(node);
    }
    if at != bytes.len() {
        return Err(Error::Checkpoint("trailing bytes after the last node".into()));
    }
    Ok((depth, nodes))
}

/// Continues a census from a captured frontier. Shallow counts are
/// recovered by scanning each captured node's ancestor chain once, then
/// the subtrees below the frontier are enumerated as usual. Completeness
/// of the capture is the writer's contract; only structure is validated
/// here.
pub fn resume_from(
    depth: u32,
    nodes: &[TreeNode],
    g_max: u32,
    opts: &EnumerateOptions,
) -> Result<GenusTable> {
    let estimated = estimated_nodes(g_max);
    if estimated > opts.node_budget {
        return Err(Error::LimitTooLarge { estimated, budget: opts.node_budget });
    }
    if depth > g_max {
        return Err(Error::Checkpoint(format!(
            "capture depth {depth} exceeds the requested genus {g_max}"
        )));
    }
    if nodes.is_empty() {
        return Err(Error::Checkpoint("checkpoint contains no nodes".into()));
    }
    let span = 2 * g_max as usize + 2;
    let mut captured: HashSet<BitSet> = HashSet::with_capacity(nodes.len());
    let mut frontier = Vec::new();
    let mut shallow = Vec::new();
    for node in nodes {
        if node.members().len() != span {
            return Err(Error::Checkpoint(format!(
                "node span {} does not match a genus {g_max} walk",
                node.members().len()
            )));
        }
        if !captured.insert(node.members().clone()) {
            return Err(Error::Checkpoint("duplicate node in checkpoint".into()));
        }
        if node.genus() == depth {
            frontier.push(node.clone());
        } else if node.genus() > depth {
            return Err(Error::Checkpoint(format!(
                "node at genus {} exceeds capture depth {depth}",
                node.genus()
            )));
        } else if !node.is_leaf() {
            return Err(Error::Checkpoint(format!(
                "interior node at genus {} was captured below the frontier",
                node.genus()
            )));
        } else {
            shallow.push(node.clone());
        }
    }

    let mut table = GenusTable::new(g_max);
    let mut scanned: HashSet<BitSet> = HashSet::new();
    let mut walk = |start: TreeNode, table: &mut GenusTable| -> Result<()> {
        let mut cur = start;
        while scanned.insert(cur.members().clone()) {
            scan_into(&cur, opts.scan, table)?;
            if cur.genus() == 0 {
                break;
            }
            cur = cur.parent();
        }
        Ok(())
    };
    // Frontier nodes are scanned by the subtree walk below, so ancestor
    // chains start at their parents. Shallow leaves are not, so their
    // chains start at the leaf itself.
    for node in &frontier {
        if node.genus() > 0 {
            walk(node.parent(), &mut table)?;
        }
    }
    for node in shallow {
        walk(node, &mut table)?;
    }

    let (table, ()) = enumerate_subtrees(frontier, g_max, opts, &NullVisitor, table, ())?;
    Ok(table)
}
