use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Generator values are capped so that every quantity appearing in the
/// delta identity (products like `j*d - a1` scaled by interval counts)
/// stays inside a 64-bit signed integer.
pub const VALUE_CAP: u64 = 1 << 62;
pub const MULTIPLICITY_CAP: u64 = (1 << 31) - 1;

/// Dense closure tables are 1 bit per integer up to the largest
/// generator; 2^28 bits is 32 MB, a sane ceiling for a CLI process.
pub(crate) const DENSE_TABLE_CAP: u64 = 1 << 28;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A validated generator list: nonempty, strictly increasing, coprime,
/// within the value caps. Not necessarily minimal; see
/// [`minimal_generators`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    values: Vec<u64>,
}

impl GeneratorSet {
    pub fn new(values: &[u64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if values.contains(&0) {
            return Err(Error::ZeroValue);
        }
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v > VALUE_CAP) {
            return Err(Error::ValueTooLarge { value: v });
        }
        if sorted[0] > MULTIPLICITY_CAP {
            return Err(Error::MultiplicityTooLarge { value: sorted[0] });
        }
        // Every Apery element is a sum of at most a1 - 1 generators, so
        // capping a1 * max keeps all derived quantities inside u64.
        let top = *sorted.last().unwrap();
        if sorted[0] as u128 * top as u128 > VALUE_CAP as u128 {
            return Err(Error::ValueTooLarge { value: top });
        }
        let g = sorted.iter().fold(0, |acc, &v| gcd(acc, v));
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        Ok(GeneratorSet { values: sorted })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn multiplicity(&self) -> u64 {
        self.values[0]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Inclusion-minimal generating subset of `<values>`.
///
/// Input must be sorted, deduplicated, and positive. A value is dropped
/// exactly when the smaller kept values already represent it; sums of
/// positive numbers cannot reach down, so scanning in ascending order
/// with an incrementally extended closure table is exact. No coprimality
/// is assumed (the sampler calls this on partial draws).
pub(crate) fn minimal_subset(sorted: &[u64]) -> Vec<u64> {
    debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    if sorted.first() == Some(&1) {
        return vec![1];
    }
    let max = *sorted.last().expect("nonempty") as usize;
    let mut closure = BitSet::new(max + 1);
    closure.set(0);
    let mut kept = Vec::new();
    for &v in sorted {
        let v = v as usize;
        if closure.get(v) {
            continue;
        }
        kept.push(v as u64);
        // One ascending pass with v alone extends the closure exactly:
        // every new element is (old element) + k*v, and its predecessor
        // at distance v is set before we reach it.
        for n in v..=max {
            if closure.get(n - v) {
                closure.set(n);
            }
        }
    }
    kept
}

/// Minimal generating set of the numerical semigroup spanned by `values`.
pub fn minimal_generators(values: &[u64]) -> Result<GeneratorSet> {
    let set = GeneratorSet::new(values)?;
    if set.multiplicity() == 1 {
        return Ok(GeneratorSet { values: vec![1] });
    }
    if set.len() == 2 {
        // <a, b> with gcd 1: b is redundant exactly when a divides it,
        // which coprimality already rules out. Handles the full value
        // range without a closure table.
        return Ok(set);
    }
    if let Some(&v) = set.values().iter().find(|&&v| v > DENSE_TABLE_CAP) {
        return Err(Error::ResourceLimit { what: "generator minimalization", value: v });
    }
    let minimal = minimal_subset(set.values());
    debug_assert!(minimal.len() as u64 <= minimal[0]);
    Ok(GeneratorSet { values: minimal })
}

/// A numerical semigroup, held by its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: GeneratorSet,
}

impl NumericalSemigroup {
    pub fn new(values: &[u64]) -> Result<Self> {
        Ok(NumericalSemigroup { generators: minimal_generators(values)? })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators.multiplicity()
    }

    /// Embedding dimension: the number of minimal generators.
    pub fn edim(&self) -> usize {
        self.generators.len()
    }

    /// True exactly for S = N, the only semigroup with multiplicity 1.
    pub fn is_natural(&self) -> bool {
        self.multiplicity() == 1
    }
}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, v) in self.generators.values().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn minimalization_drops_representable_values() {
        assert_eq!(minimal_generators(&[3, 5, 8]).unwrap().values(), &[3, 5]);
        assert_eq!(minimal_generators(&[4, 6, 9]).unwrap().values(), &[4, 6, 9]);
        assert_eq!(minimal_generators(&[5, 3]).unwrap().values(), &[3, 5]);
        assert_eq!(minimal_generators(&[2, 3, 4, 5]).unwrap().values(), &[2, 3]);
        assert_eq!(minimal_generators(&[1, 7, 9]).unwrap().values(), &[1]);
        assert_eq!(minimal_generators(&[6, 9, 20]).unwrap().values(), &[6, 9, 20]);
    }

    #[test]
    fn minimalization_is_idempotent() {
        let first = minimal_generators(&[14, 21, 35, 49, 56, 30]).unwrap();
        let again = minimal_generators(first.values()).unwrap();
        assert_eq!(first, again);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(minimal_generators(&[]), Err(Error::EmptyInput)));
        assert!(matches!(minimal_generators(&[0, 3]), Err(Error::ZeroValue)));
        assert!(matches!(
            minimal_generators(&[2, 4]),
            Err(Error::NotCoprime { gcd: 2 })
        ));
        assert!(matches!(
            minimal_generators(&[6, 10, 14, 4]),
            Err(Error::NotCoprime { gcd: 2 })
        ));
        assert!(matches!(
            GeneratorSet::new(&[(1 << 62) + 1]),
            Err(Error::ValueTooLarge { .. })
        ));
        assert!(matches!(
            GeneratorSet::new(&[1 << 32, (1 << 62) - 1]),
            Err(Error::MultiplicityTooLarge { .. })
        ));
    }

    #[test]
    fn coprime_only_after_minimalization_still_accepted() {
        // gcd(2,3,4) = 1 although no pair is enough on its own
        let s = NumericalSemigroup::new(&[6, 10, 15]).unwrap();
        assert_eq!(s.generators().values(), &[6, 10, 15]);
        assert_eq!(s.multiplicity(), 6);
        assert_eq!(s.edim(), 3);
        assert!(!s.is_natural());
        assert_eq!(s.to_string(), "<6,10,15>");
    }

    #[test]
    fn natural_numbers() {
        let s = NumericalSemigroup::new(&[1]).unwrap();
        assert!(s.is_natural());
        assert_eq!(s.edim(), 1);
    }

    #[test]
    fn kept_values_match_brute_force_minimality() {
        for gens in [
            vec![3u64, 5, 7],
            vec![4, 6, 9, 11],
            vec![8, 12, 14, 15, 17, 21],
            vec![12, 13, 25, 26, 27, 38],
        ] {
            let min = minimal_generators(&gens).unwrap();
            // every kept value is irreducible, every dropped one reducible
            for &v in &gens {
                let kept = min.values().contains(&v);
                assert_eq!(
                    oracle::is_minimal_generator_brute(v, &gens),
                    kept,
                    "value {v} of {gens:?}"
                );
            }
        }
    }
}
