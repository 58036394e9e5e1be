//! Dense membership table for a numerical semigroup, built by the
//! textbook coin-problem recurrence: n is representable iff n = 0 or
//! n - a is representable for some generator a.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, DENSE_TABLE_CAP};

/// Bit-vector over `0..=limit` with position n set iff n is in S.
///
/// When the limit exceeds the Frobenius number, every position past F is
/// set, so the table answers membership for all of N.
#[derive(Clone, Debug)]
pub struct MembershipTable {
    bits: BitSet,
    limit: u64,
}

impl MembershipTable {
    /// Table covering `0..=limit`.
    pub fn with_limit(s: &NumericalSemigroup, limit: u64) -> Result<Self> {
        if limit >= DENSE_TABLE_CAP {
            return Err(Error::ResourceLimit { what: "membership table", value: limit });
        }
        let gens = s.generators().values();
        let mut bits = BitSet::new(limit as usize + 1);
        bits.set(0);
        for n in 1..=limit as usize {
            let member = gens
                .iter()
                .take_while(|&&a| a as usize <= n)
                .any(|&a| bits.get(n - a as usize));
            if member {
                bits.set(n);
            }
        }
        Ok(MembershipTable { bits, limit })
    }

    /// Table up to F + a1, enough for every Apery and poset query.
    pub fn covering(s: &NumericalSemigroup) -> Result<Self> {
        let f = s.apery_set().frobenius();
        let limit = (f + s.multiplicity() as i64) as u64;
        Self::with_limit(s, limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Whether n is in S. Panics past the table limit.
    pub fn contains(&self, n: u64) -> bool {
        assert!(n <= self.limit, "membership query {n} beyond table limit {}", self.limit);
        self.bits.get(n as usize)
    }

    /// The gaps recorded in the table, ascending. Complete when the
    /// limit is at least F.
    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.limit).filter(|&n| !self.bits.get(n as usize)).collect()
    }
}
