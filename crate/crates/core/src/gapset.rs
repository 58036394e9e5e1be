//! Brute-force census by gap-set enumeration.
//!
//! Independent check on the tree walk: genus-g semigroups correspond
//! one-to-one with g-element subsets of [1, 2g-1] whose complement is
//! closed under addition, so every candidate subset is tried directly.
//! Everything runs on raw u64 masks with no shared code beyond the
//! result type, which is what makes the agreement with the tree walk
//! meaningful. Exponential in g; refuses anything past genus 12.

use crate::error::{Error, Result};
use crate::tree::{Finding, FindingKind, GenusTable};

const MASK_BUDGET: u64 = 1 << 23;

/// Same known-family test as the tree scan, redone here on the oracle's
/// own generator lists.
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

pub fn gapset_oracle(g_max: u32) -> Result<GenusTable> {
    if g_max > 12 {
        let estimated = if g_max >= 32 { u64::MAX } else { 1u64 << (2 * g_max - 1) };
        return Err(Error::LimitTooLarge { estimated, budget: MASK_BUDGET });
    }
    let mut table = GenusTable::new(g_max);
    table.counts[0] = 1;

    for g in 1..=g_max as u64 {
        let window = 2 * g; // membership decided by bits [0, 2g-1]
        let full = (1u64 << window) - 1;
        for raw in 0..(1u64 << (window - 1)) {
            if raw.count_ones() as u64 != g {
                continue;
            }
            let gap_mask = raw << 1;
            let member_mask = !gap_mask & full;
            // Closed iff shifting the members by any member hits no gap;
            // sums that leave the window are members automatically.
            let mut closed = true;
            let mut rest = member_mask & !1;
            while rest != 0 {
                let x = rest.trailing_zeros();
                if (member_mask << x) & gap_mask != 0 {
                    closed = false;
                    break;
                }
                rest &= rest - 1;
            }
            if !closed {
                continue;
            }
            table.counts[g as usize] += 1;

            let contains = |n: u64| n >= window || member_mask & (1 << n) != 0;
            let mut gens: Vec<u64> = Vec::new();
            for v in 1..=window + 1 {
                if contains(v) && !(1..=v / 2).any(|u| contains(u) && contains(v - u)) {
                    gens.push(v);
                }
            }
            let f = (63 - gap_mask.leading_zeros()) as i64;
            let d = gens.len() as i64;
            let delta = d * (f + 1 - g as i64) - (f + 1);
            if delta == 0 {
                table.equality_counts[g as usize] += 1;
                if !equality_shape_is_known(&gens) {
                    table.violations.push(Finding {
                        generators: gens,
                        genus: g as u32,
                        delta,
                        kind: FindingKind::UnclassifiedEquality,
                    });
                }
            } else if delta < 0 {
                table.violations.push(Finding {
                    generators: gens,
                    genus: g as u32,
                    delta,
                    kind: FindingKind::WilfViolation,
                });
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate_tree, EnumerateOptions};

    #[test]
    fn small_counts() {
        let table = gapset_oracle(4).unwrap();
        assert_eq!(table.counts(), &[1, 1, 2, 4, 7]);
        assert_eq!(table.equality_counts(), &[0, 1, 2, 3, 4]);
        assert!(table.violations().is_empty());
    }

    #[test]
    fn genus_zero_only() {
        let table = gapset_oracle(0).unwrap();
        assert_eq!(table.counts(), &[1]);
    }

    #[test]
    fn agrees_with_tree_walk() {
        let oracle = gapset_oracle(7).unwrap();
        let tree = enumerate_tree(7, &EnumerateOptions::default()).unwrap();
        assert_eq!(oracle.counts(), tree.counts());
        assert_eq!(oracle.equality_counts(), tree.equality_counts());
    }

    #[test]
    fn refuses_large_genus() {
        assert!(matches!(gapset_oracle(13), Err(Error::LimitTooLarge { .. })));
    }
}
