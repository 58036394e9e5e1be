//! Brute-force reference implementations.
//!
//! Everything here trades speed for obviousness and stays independent of
//! the production code paths (no shortest-path tables, no incremental
//! updates). The test suites and benchmarks compare against these; they
//! are not meant for large inputs.

use std::collections::HashMap;

/// Plain recursion on "n is a nonnegative combination of gens", memoized.
pub fn representable_rec(n: u64, gens: &[u64], memo: &mut HashMap<u64, bool>) -> bool {
    if n == 0 {
        return true;
    }
    if let Some(&hit) = memo.get(&n) {
        return hit;
    }
    let hit = gens
        .iter()
        .filter(|&&g| g <= n)
        .any(|&g| representable_rec(n - g, gens, memo));
    memo.insert(n, hit);
    hit
}

pub fn representable(n: u64, gens: &[u64]) -> bool {
    representable_rec(n, gens, &mut HashMap::new())
}

/// Membership bitmap of `<gens>` over `0..=limit`, by the textbook
/// coin-problem recurrence on a boolean vector.
pub fn membership_vec(gens: &[u64], limit: u64) -> Vec<bool> {
    let limit = limit as usize;
    let mut table = vec![false; limit + 1];
    table[0] = true;
    for n in 1..=limit {
        table[n] = gens
            .iter()
            .filter(|&&g| g as usize <= n)
            .any(|&g| table[n - g as usize]);
    }
    table
}

/// Upper bound for the largest gap: the two smallest coprime generators
/// already represent everything past their Frobenius number.
fn scan_bound(gens: &[u64]) -> u64 {
    let a = gens[0];
    let b = *gens.last().unwrap();
    (a - 1) * (b - 1) + a
}

/// Apery set of `<gens>` with respect to the least generator: the least
/// semigroup element in every residue class, found by scanning upward.
/// Requires gcd 1 and sorted input.
pub fn naive_apery(gens: &[u64]) -> Vec<u64> {
    let a1 = gens[0];
    if a1 == 1 {
        return vec![0];
    }
    let bound = scan_bound(gens) + a1;
    let table = membership_vec(gens, bound);
    let mut least = Vec::with_capacity(a1 as usize);
    for r in 0..a1 {
        let mut n = r;
        while !table[n as usize] {
            n += a1;
            assert!(n <= bound, "class {r} not reached below the Schur bound");
        }
        least.push(n);
    }
    least.sort_unstable();
    least
}

/// All gaps of `<gens>`, ascending.
pub fn gaps_brute(gens: &[u64]) -> Vec<u64> {
    let bound = scan_bound(gens);
    let table = membership_vec(gens, bound);
    (1..=bound).filter(|&n| !table[n as usize]).collect()
}

pub fn frobenius_brute(gens: &[u64]) -> i64 {
    gaps_brute(gens).last().map_or(-1, |&f| f as i64)
}

/// Pseudo-Frobenius numbers by definition: gaps x with x + s in S for
/// every nonzero s in S. Only s <= F - x can fail.
pub fn pseudo_frobenius_brute(gens: &[u64]) -> Vec<u64> {
    let gaps = gaps_brute(gens);
    let Some(&f) = gaps.last() else {
        return Vec::new();
    };
    let table = membership_vec(gens, f);
    gaps.iter()
        .copied()
        .filter(|&x| {
            (1..=f - x).all(|s| !table[s as usize] || table[(x + s) as usize])
        })
        .collect()
}

/// v is a minimal generator of `<gens>`: in the semigroup, but not a sum
/// of two nonzero elements.
pub fn is_minimal_generator_brute(v: u64, gens: &[u64]) -> bool {
    let mut memo = HashMap::new();
    if !representable_rec(v, gens, &mut memo) {
        return false;
    }
    !(1..=v / 2).any(|s| {
        representable_rec(s, gens, &mut memo) && representable_rec(v - s, gens, &mut memo)
    })
}

/// Closed forms for two coprime generators.
pub fn sylvester_frobenius(a: u64, b: u64) -> i64 {
    (a * b - a - b) as i64
}

pub fn sylvester_genus(a: u64, b: u64) -> u64 {
    (a - 1) * (b - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursion_matches_small_cases() {
        assert!(representable(0, &[3, 5]));
        assert!(!representable(7, &[3, 5]));
        assert!(representable(8, &[3, 5]));
        assert!(representable(11, &[3, 5]));
    }

    #[test]
    fn naive_apery_known_values() {
        assert_eq!(naive_apery(&[3, 5]), vec![0, 5, 10]);
        assert_eq!(naive_apery(&[2, 3]), vec![0, 3]);
        assert_eq!(naive_apery(&[4, 6, 9]), vec![0, 6, 9, 15]);
        assert_eq!(naive_apery(&[1]), vec![0]);
    }

    #[test]
    fn gaps_and_frobenius() {
        assert_eq!(gaps_brute(&[3, 5]), vec![1, 2, 4, 7]);
        assert_eq!(frobenius_brute(&[3, 5]), 7);
        assert_eq!(frobenius_brute(&[2, 3]), 1);
        assert_eq!(gaps_brute(&[4, 6, 9]), vec![1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn pseudo_frobenius_small() {
        assert_eq!(pseudo_frobenius_brute(&[2, 3]), vec![1]);
        assert_eq!(pseudo_frobenius_brute(&[3, 5]), vec![7]);
        assert_eq!(pseudo_frobenius_brute(&[3, 7, 8]), vec![4, 5]);
    }

    #[test]
    fn sylvester_forms() {
        assert_eq!(sylvester_frobenius(3, 5), 7);
        assert_eq!(sylvester_genus(3, 5), 4);
        assert_eq!(sylvester_frobenius(2, 3), 1);
        assert_eq!(sylvester_genus(2, 3), 1);
    }
}
