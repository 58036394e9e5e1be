//! Seeded random construction of semigroups with prescribed shape.
//!
//! Generator values are drawn uniformly from (a1, beta*a1] and accepted
//! only when they fall outside the closure of what is already kept, so
//! every accepted value really is a generator at that moment. Accepted
//! draws can still knock earlier ones out of the minimal set, so the
//! kept list is re-minimalized after every accept and the loop runs
//! until the minimal count hits the requested embedding dimension. One
//! ChaCha8 stream per call keeps runs reproducible from the seed alone.

use crate::error::{Error, Result};
use crate::semigroup::{gcd, minimal_subset, NumericalSemigroup, MULTIPLICITY_CAP};
use crate::theorem::{a1_bound_for, smallest_prime_factor};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Closure tables grow with beta * multiplicity; past this the request is
/// asking for a different tool.
const WINDOW_CAP: u64 = 1 << 24;

const MAX_ATTEMPTS: u64 = 1_000;

/// Shape request for `random_semigroups`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub multiplicity: u64,
    pub edim: usize,
    pub seed: u64,
    pub count: usize,
    /// Draw window factor: candidate generators come from
    /// (multiplicity, beta * multiplicity].
    pub beta: u64,
}

impl SampleSpec {
    pub fn new(multiplicity: u64, edim: usize, seed: u64, count: usize) -> SampleSpec {
        SampleSpec { multiplicity, edim, seed, count, beta: 4 }
    }

    pub fn with_beta(mut self, beta: u64) -> SampleSpec {
        self.beta = beta;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.multiplicity < 2 {
            return Err(Error::InvalidSampleSpec("multiplicity must be at least 2".into()));
        }
        if self.multiplicity > MULTIPLICITY_CAP {
            return Err(Error::InvalidSampleSpec("multiplicity exceeds the construction cap".into()));
        }
        if self.edim < 2 {
            return Err(Error::InvalidSampleSpec("edim must be at least 2".into()));
        }
        if self.edim as u64 > self.multiplicity {
            return Err(Error::InvalidSampleSpec("edim cannot exceed the multiplicity".into()));
        }
        if self.beta < 2 {
            return Err(Error::InvalidSampleSpec("beta must be at least 2".into()));
        }
        if self.count == 0 {
            return Err(Error::InvalidSampleSpec("count must be positive".into()));
        }
        match self.beta.checked_mul(self.multiplicity) {
            Some(w) if w <= WINDOW_CAP => Ok(()),
            _ => Err(Error::InvalidSampleSpec(
                "beta * multiplicity exceeds the sampling window cap".into(),
            )),
        }
    }
}

/// One attempt at a single semigroup; None when the draw budget runs
/// out or the result is not coprime.
fn try_build(rng: &mut ChaCha8Rng, spec: &SampleSpec) -> Option<Vec<u64>> {
    let m = spec.multiplicity;
    let window = spec.beta * m;
    // closure[v] <=> v is a sum of kept values, v <= window
    let mut closure = vec![false; window as usize + 1];
    let mut v = 0;
    while v <= window {
        closure[v as usize] = true;
        v += m;
    }
    let mut kept = vec![m];
    let mut draws = 0u64;
    let draw_budget = 64 * (window - m);

    while kept.len() < spec.edim {
        if draws >= draw_budget {
            return None;
        }
        draws += 1;
        let v = rng.random_range(m + 1..=window);
        if closure[v as usize] {
            continue;
        }
        // Single ascending pass folds v into the closure, repeats
        // included.
        for u in v..=window {
            if closure[(u - v) as usize] {
                closure[u as usize] = true;
            }
        }
        let pos = kept.binary_search(&v).unwrap_err();
        kept.insert(pos, v);
        kept = minimal_subset(&kept);
    }
    if kept.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
        return None;
    }
    Some(kept)
}

/// `spec.count` semigroups, each with exactly the requested
/// multiplicity and embedding dimension. Deterministic per seed.
pub fn random_semigroups(spec: &SampleSpec) -> Result<Vec<NumericalSemigroup>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        let mut attempts = 0;
        let generators = loop {
            if attempts >= MAX_ATTEMPTS {
                return Err(Error::ExhaustedRetries { attempts });
            }
            attempts += 1;
            if let Some(kept) = try_build(&mut rng, spec) {
                break kept;
            }
        };
        let sg = NumericalSemigroup::new(&generators)?;
        debug_assert_eq!(sg.multiplicity(), spec.multiplicity);
        debug_assert_eq!(sg.edim(), spec.edim);
        out.push(sg);
    }
    Ok(out)
}

/// Samples meeting the positivity hypotheses for a given rho >= 3:
/// multiplicity uniform in [threshold, 2*threshold] rejected until its
/// prime factors reach rho, embedding dimension uniform over exactly
/// the values with ceil(a1/d) = rho.
pub fn theorem_samples(rho: u64, count: usize, seed: u64) -> Result<Vec<NumericalSemigroup>> {
    if rho < 3 {
        return Err(Error::PreconditionViolated("rho must be at least 3"));
    }
    let bound = a1_bound_for(rho);
    if bound.checked_mul(2).is_none_or(|w| w > MULTIPLICITY_CAP) {
        return Err(Error::ResourceLimit { what: "theorem sample multiplicity", value: bound });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut attempts = 0;
        let a1 = loop {
            if attempts >= MAX_ATTEMPTS {
                return Err(Error::ExhaustedRetries { attempts });
            }
            attempts += 1;
            let a1 = rng.random_range(bound..=2 * bound);
            if smallest_prime_factor(a1).is_some_and(|p| p >= rho) {
                break a1;
            }
        };
        // spf(a1) >= rho makes a1 coprime to rho - 1, so the division
        // below is never exact and the endpoints really give rho.
        let d_lo = (a1 + rho - 1) / rho;
        let d_hi = (a1 - 1) / (rho - 1);
        let d = rng.random_range(d_lo..=d_hi);
        debug_assert_eq!((a1 + d - 1) / d, rho);

        let sub = SampleSpec::new(a1, d as usize, rng.next_u64(), 1);
        let sg = random_semigroups(&sub)?.pop().expect("count was 1");
        debug_assert!(sg.theorem_params().hypotheses_met());
        out.push(sg);
    }
    Ok(out)
}
