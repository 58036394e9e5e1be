//! The interval decomposition behind the Wilf difference.
//!
//! Write F + 1 = Q*a1 + R with 2 <= R <= a1 and cut [0, F] into the
//! windows I_k = [k*a1, (k+1)*a1 - 1]. Counting semigroup elements per
//! window turns d*(F+1-g) - (F+1) into a sum of per-window terms, which
//! is the identity everything here is built on. The counts come straight
//! from the Apery class minima: the window-k representative of a class
//! is in S exactly when floor(omega/a1) <= k, so no dense table and no
//! interval scan is needed.

use crate::apery::AperySet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Profiles with more than this many windows are refused; Q grows with
/// F/a1, and past 2^24 windows the n-vector stops being a sane object.
const WINDOW_CAP: u64 = 1 << 24;

/// Element counts of S over the windows I_0 .. I_Q.
///
/// `n[k]` counts S inside I_k intersected with [0, F]. `eta` and `eps`
/// are histograms over the full window counts |I_k ∩ S|: entry j-1 says
/// how many windows contain exactly j elements, `eps` restricted to
/// k <= Q-1. The last window I_Q sticks out past F, so its full count
/// `j_q` exceeds n[Q] by the a1 - R elements of S in (F, (Q+1)*a1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalProfile {
    q: u64,
    r: u64,
    n: Vec<u64>,
    eta: Vec<u32>,
    eps: Vec<u32>,
    j_q: u64,
}

/// Q and R with F + 1 = Q*a1 + R and 2 <= R <= a1. The usual remainder
/// is shifted so that R = a1 stands in for R = 0; R = 1 cannot occur
/// because F is never a multiple of a1.
pub(crate) fn conductor_split(f: i64, a1: u64) -> (u64, u64) {
    debug_assert!(f >= 1 && a1 >= 2);
    let c = f as u64 + 1;
    let (q, r) = if c % a1 == 0 { (c / a1 - 1, a1) } else { (c / a1, c % a1) };
    assert!(r >= 2, "remainder 1 would put F into S");
    (q, r)
}

/// How many Apery floors are <= k, i.e. how many residue classes have a
/// member in window k already.
pub(crate) fn floors_at_most(ap: &AperySet, k: u64) -> u64 {
    let limit = (k + 1) * ap.multiplicity();
    ap.omegas().partition_point(|&w| w < limit) as u64
}

/// |S ∩ I_Q ∩ [0, F]|: residue r sits in the last window at Q*a1 + r,
/// which is below the conductor exactly when r <= R - 1.
pub(crate) fn last_window_count(ap: &AperySet, q: u64, r: u64) -> u64 {
    let a1 = ap.multiplicity();
    ap.by_class()
        .iter()
        .take(r as usize)
        .filter(|&&w| w / a1 <= q)
        .count() as u64
}

pub(crate) fn profile_from_apery(ap: &AperySet) -> Result<IntervalProfile> {
    let a1 = ap.multiplicity();
    let (q, r) = conductor_split(ap.frobenius(), a1);
    if q + 1 > WINDOW_CAP {
        return Err(Error::ResourceLimit { what: "interval profile windows", value: q + 1 });
    }

    let omegas = ap.omegas();
    let mut n = Vec::with_capacity(q as usize + 1);
    let mut eps = vec![0u32; a1 as usize - 1];
    let mut idx = 0usize;
    for k in 0..q {
        // Windows below I_Q lie entirely under F, so the [0, F] cut is
        // vacuous and the count is a plain floor prefix.
        let limit = (k + 1) * a1;
        while idx < omegas.len() && omegas[idx] < limit {
            idx += 1;
        }
        let nk = idx as u64;
        assert!(nk >= 1 && nk < a1, "full or empty window below the conductor");
        eps[nk as usize - 1] += 1;
        n.push(nk);
    }
    let n_q = last_window_count(ap, q, r);
    assert!(n_q >= 1 && n_q <= r - 1, "window I_Q must contain Q*a1 but not F");
    n.push(n_q);

    let j_q = n_q + a1 - r;
    debug_assert!(j_q >= 1 && j_q <= a1 - 1);
    let mut eta = eps.clone();
    eta[j_q as usize - 1] += 1;
    debug_assert_eq!(eta.iter().map(|&e| e as u64).sum::<u64>(), q + 1);

    Ok(IntervalProfile { q, r, n, eta, eps, j_q })
}

impl IntervalProfile {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Counts of S ∩ [0, F] per window, indexed by k = 0..=Q.
    pub fn n(&self) -> &[u64] {
        &self.n
    }

    /// n[Q], the truncated count in the window holding F.
    pub fn n_q(&self) -> u64 {
        *self.n.last().unwrap()
    }

    /// Histogram of full window counts; entry j-1 is the number of
    /// windows with exactly j semigroup elements.
    pub fn eta(&self) -> &[u32] {
        &self.eta
    }

    /// Same histogram restricted to the windows before I_Q.
    pub fn eps(&self) -> &[u32] {
        &self.eps
    }

    /// eta[j] for 1-based j.
    pub fn eta_at(&self, j: u64) -> u64 {
        self.eta[j as usize - 1] as u64
    }

    /// eps[j] for 1-based j.
    pub fn eps_at(&self, j: u64) -> u64 {
        self.eps[j as usize - 1] as u64
    }

    /// |I_Q ∩ S| with no conductor cut: n[Q] plus the a1 - R elements
    /// past F.
    pub fn j_q(&self) -> u64 {
        self.j_q
    }
}

/// The Wilf difference evaluated per window, cross-checked against the
/// direct formula, plus a genus recount from the window sums. Both
/// mismatches are implementation bugs, never data-dependent.
pub(crate) fn delta_from_parts(
    profile: &IntervalProfile,
    d: u64,
    a1: u64,
    f: i64,
    g: u64,
) -> Result<i64> {
    let mut sum: i128 = 0;
    for (j0, &e) in profile.eps.iter().enumerate() {
        if e != 0 {
            sum += e as i128 * ((j0 as i128 + 1) * d as i128 - a1 as i128);
        }
    }
    sum += profile.n_q() as i128 * d as i128 - profile.r as i128;

    let c = f as i128 + 1;
    let direct = d as i128 * (c - g as i128) - c;
    if sum != direct {
        return Err(Error::InternalInconsistency(format!(
            "window sum {sum} disagrees with d(F+1-g)-(F+1) = {direct}"
        )));
    }
    let members: u64 = profile.n.iter().sum();
    if profile.q * a1 + profile.r - members != g {
        return Err(Error::InternalInconsistency(format!(
            "window counts give genus {}, apery floors give {g}",
            profile.q * a1 + profile.r - members
        )));
    }
    i64::try_from(sum).map_err(|_| Error::Overflow("delta"))
}

/// How an equality instance d*(F+1-g) = F+1 is accounted for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityWitness {
    /// d = 2: equality always holds, after Sylvester.
    TwoGenerators,
    /// d = a1 and the generators are a1 together with
    /// K*a1 + 1, ..., K*a1 + (a1 - 1).
    ArithmeticForm { k: u64 },
}

/// Wilf's inequality evaluated for one semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilfReport {
    frobenius: i64,
    genus: u64,
    edim: u64,
    multiplicity: u64,
    delta: i64,
    holds: bool,
    equality: bool,
    witness: Option<EqualityWitness>,
}

impl WilfReport {
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn edim(&self) -> u64 {
        self.edim
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn equality(&self) -> bool {
        self.equality
    }

    pub fn witness(&self) -> Option<EqualityWitness> {
        self.witness
    }
}

impl NumericalSemigroup {
    pub fn interval_profile(&self) -> Result<IntervalProfile> {
        if self.is_natural() {
            return Err(Error::TrivialSemigroup);
        }
        profile_from_apery(&self.apery_set())
    }

    /// d*(F+1-g) - (F+1), evaluated through the window sum and verified
    /// against the direct formula. Non-negative iff Wilf's inequality
    /// holds for this semigroup.
    pub fn delta(&self) -> Result<i64> {
        if self.is_natural() {
            return Err(Error::TrivialSemigroup);
        }
        let ap = self.apery_set();
        let profile = profile_from_apery(&ap)?;
        delta_from_parts(&profile, self.edim() as u64, self.multiplicity(), ap.frobenius(), ap.genus())
    }

    /// For an equality instance, the known account of why equality
    /// holds: two generators, or the maximal-edim arithmetic form. `None`
    /// means equality holds and neither form applies, i.e. a shape no
    /// known family explains.
    pub fn classify_equality(&self) -> Result<Option<EqualityWitness>> {
        let delta = self.delta()?;
        if delta != 0 {
            return Err(Error::NotEqualityInstance { delta });
        }
        if self.edim() == 2 {
            return Ok(Some(EqualityWitness::TwoGenerators));
        }
        let a1 = self.multiplicity();
        let gens = self.generators().values();
        if gens.len() as u64 == a1 && (gens[1] - 1) % a1 == 0 {
            let k = (gens[1] - 1) / a1;
            debug_assert!(k >= 1, "generators are sorted above a1");
            if gens.iter().enumerate().skip(1).all(|(i, &v)| v == k * a1 + i as u64) {
                return Ok(Some(EqualityWitness::ArithmeticForm { k }));
            }
        }
        Ok(None)
    }

    pub fn wilf_report(&self) -> Result<WilfReport> {
        let delta = self.delta()?;
        let witness = if delta == 0 { self.classify_equality()? } else { None };
        let ap = self.apery_set();
        Ok(WilfReport {
            frobenius: ap.frobenius(),
            genus: ap.genus(),
            edim: self.edim() as u64,
            multiplicity: self.multiplicity(),
            delta,
            holds: delta >= 0,
            equality: delta == 0,
            witness,
        })
    }

    /// F+1 <= (t+1)*(F+1-g), the length inequality specialized to
    /// semigroup invariants via the pseudo-Frobenius type.
    pub fn check_type_inequality(&self) -> Result<bool> {
        let t = self.type_data()?.type_t();
        let ap = self.apery_set();
        let c = ap.frobenius() as i128 + 1;
        Ok(c <= (t as i128 + 1) * (c - ap.genus() as i128))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::membership::MembershipTable;

    fn s(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn profile_small_cases() {
        let p = s(&[3, 5]).interval_profile().unwrap();
        assert_eq!((p.q(), p.r()), (2, 2));
        assert_eq!(p.n(), &[1, 2, 1]);
        assert_eq!(p.eta(), &[1, 2]);
        assert_eq!(p.eps(), &[1, 1]);
        assert_eq!(p.j_q(), 2);

        let p = s(&[2, 3]).interval_profile().unwrap();
        assert_eq!((p.q(), p.r()), (0, 2));
        assert_eq!(p.n(), &[1]);
        assert_eq!(p.eta(), &[1]);
        assert_eq!(p.eps(), &[0]);
        assert_eq!(p.j_q(), 1);

        let p = s(&[3, 7, 8]).interval_profile().unwrap();
        assert_eq!((p.q(), p.r()), (1, 3));
        assert_eq!(p.n(), &[1, 1]);
        assert_eq!(p.j_q(), 1);
    }

    // Recount every window through a dense table. eta needs the full
    // window contents, so the table runs to (Q+1)*a1 - 1 = F + a1 - R.
    fn check_against_window_scan(gens: &[u64]) {
        let sg = s(gens);
        let p = sg.interval_profile().unwrap();
        let a1 = sg.multiplicity();
        let f = sg.frobenius() as u64;
        let table = MembershipTable::covering(&sg).unwrap();
        for k in 0..=p.q() {
            let full = (k * a1..(k + 1) * a1).filter(|&v| table.contains(v)).count() as u64;
            let cut = (k * a1..(k + 1) * a1)
                .filter(|&v| v <= f && table.contains(v))
                .count() as u64;
            assert_eq!(p.n()[k as usize], cut, "n[{k}] of {gens:?}");
            if k < p.q() {
                assert_eq!(full, cut);
            } else {
                assert_eq!(full, p.j_q(), "j_q of {gens:?}");
            }
        }
        // The histogram matches the window counts it summarizes.
        for j in 1..a1 {
            let full_eta = (0..=p.q())
                .filter(|&k| {
                    (k * a1..(k + 1) * a1).filter(|&v| table.contains(v)).count() as u64 == j
                })
                .count() as u64;
            assert_eq!(p.eta_at(j), full_eta, "eta[{j}] of {gens:?}");
        }
    }

    #[test]
    fn profile_matches_window_scan() {
        for gens in [&[3, 5][..], &[2, 3], &[3, 7, 8], &[4, 6, 9], &[5, 6, 7], &[7, 9, 11, 12], &[6, 10, 15], &[4, 5, 11]] {
            check_against_window_scan(gens);
        }
    }

    #[test]
    fn delta_frozen_values() {
        assert_eq!(s(&[3, 5]).delta().unwrap(), 0);
        assert_eq!(s(&[2, 3]).delta().unwrap(), 0);
        assert_eq!(s(&[4, 6, 9]).delta().unwrap(), 6);
        assert_eq!(s(&[3, 7, 8]).delta().unwrap(), 0);
    }

    #[test]
    fn two_generator_delta_vanishes() {
        // d = 2 always sits on the equality boundary.
        for (a, b) in [(2u64, 7u64), (3, 8), (5, 7), (9, 14), (11, 13)] {
            assert_eq!(s(&[a, b]).delta().unwrap(), 0, "<{a},{b}>");
        }
    }

    #[test]
    fn equality_classification() {
        assert_eq!(s(&[3, 5]).classify_equality().unwrap(), Some(EqualityWitness::TwoGenerators));
        assert_eq!(s(&[2, 7]).classify_equality().unwrap(), Some(EqualityWitness::TwoGenerators));
        assert_eq!(
            s(&[3, 7, 8]).classify_equality().unwrap(),
            Some(EqualityWitness::ArithmeticForm { k: 2 })
        );
        assert_eq!(
            s(&[4, 5, 6, 7]).classify_equality().unwrap(),
            Some(EqualityWitness::ArithmeticForm { k: 1 })
        );
        assert!(matches!(
            s(&[4, 6, 9]).classify_equality(),
            Err(Error::NotEqualityInstance { delta: 6 })
        ));
    }

    #[test]
    fn report_fields() {
        let r = s(&[4, 6, 9]).wilf_report().unwrap();
        assert_eq!(r.frobenius(), 11);
        assert_eq!(r.genus(), 6);
        assert_eq!(r.delta(), 6);
        assert!(r.holds() && !r.equality());
        assert_eq!(r.witness(), None);

        let r = s(&[3, 5]).wilf_report().unwrap();
        assert!(r.holds() && r.equality());
        assert_eq!(r.witness(), Some(EqualityWitness::TwoGenerators));
    }

    #[test]
    fn type_inequality_holds_on_samples() {
        for gens in [&[3, 5][..], &[2, 3], &[4, 6, 9], &[3, 7, 8], &[4, 5, 11], &[7, 9, 11, 12]] {
            assert!(s(gens).check_type_inequality().unwrap(), "{gens:?}");
        }
    }

    #[test]
    fn natural_numbers_rejected() {
        let n = s(&[1]);
        assert!(matches!(n.interval_profile(), Err(Error::TrivialSemigroup)));
        assert!(matches!(n.delta(), Err(Error::TrivialSemigroup)));
        assert!(matches!(n.classify_equality(), Err(Error::TrivialSemigroup)));
    }
}
