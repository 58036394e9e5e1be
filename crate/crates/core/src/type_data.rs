//! Pseudo-Frobenius numbers and the type of a semigroup.
//!
//! x is pseudo-Frobenius when x is a gap but x + s lands in S for every
//! nonzero s in S. Only s <= F - x can fail (past that, x + s > F), so
//! the scan is finite.

use crate::error::{Error, Result};
use crate::membership::MembershipTable;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeData {
    pseudo_frobenius: Vec<u64>,
    type_t: u64,
}

impl NumericalSemigroup {
    pub fn type_data(&self) -> Result<TypeData> {
        if self.is_natural() {
            return Err(Error::TrivialSemigroup);
        }
        let f = self.apery_set().frobenius() as u64;
        let table = MembershipTable::with_limit(self, f)?;
        let mut pseudo_frobenius = Vec::new();
        for x in 1..=f {
            if table.contains(x) {
                continue;
            }
            let pf = (1..=f - x).all(|s| !table.contains(s) || table.contains(x + s));
            if pf {
                pseudo_frobenius.push(x);
            }
        }
        assert_eq!(pseudo_frobenius.last(), Some(&f), "F is always pseudo-Frobenius");
        let type_t = pseudo_frobenius.len() as u64;
        Ok(TypeData { pseudo_frobenius, type_t })
    }
}

impl TypeData {
    pub fn pseudo_frobenius(&self) -> &[u64] {
        &self.pseudo_frobenius
    }

    pub fn type_t(&self) -> u64 {
        self.type_t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn t(gens: &[u64]) -> TypeData {
        NumericalSemigroup::new(gens).unwrap().type_data().unwrap()
    }

    #[test]
    fn symmetric_semigroups_have_type_one() {
        // Two-generator semigroups are symmetric, so F is the only
        // pseudo-Frobenius number.
        assert_eq!(t(&[2, 3]).pseudo_frobenius(), &[1]);
        assert_eq!(t(&[3, 5]).pseudo_frobenius(), &[7]);
        assert_eq!(t(&[3, 5]).type_t(), 1);
        // <4,6,9> is symmetric too: g = 6 = (F+1)/2.
        assert_eq!(t(&[4, 6, 9]).pseudo_frobenius(), &[11]);
    }

    #[test]
    fn type_two_examples() {
        assert_eq!(t(&[3, 7, 8]).pseudo_frobenius(), &[4, 5]);
        assert_eq!(t(&[3, 7, 8]).type_t(), 2);
        assert_eq!(t(&[4, 5, 11]).pseudo_frobenius(), &[6, 7]);
        assert_eq!(t(&[4, 5, 11]).type_t(), 2);
    }

    #[test]
    fn matches_brute_force() {
        for gens in [&[3, 5][..], &[4, 6, 9], &[3, 7, 8], &[7, 9, 11, 12], &[6, 10, 15]] {
            assert_eq!(t(gens).pseudo_frobenius(), oracle::pseudo_frobenius_brute(gens), "{gens:?}");
        }
    }

    #[test]
    fn natural_numbers_rejected() {
        let s = NumericalSemigroup::new(&[1]).unwrap();
        assert!(matches!(s.type_data(), Err(Error::TrivialSemigroup)));
    }
}
