//! Positivity of the Wilf difference for low-density semigroups.
//!
//! Everything here is parametrized by rho = ceil(a1/d). The cases
//! rho <= 2 are known unconditionally; for rho >= 3 positivity is known
//! when a1 is large enough and every prime factor of a1 is at least
//! rho. `theorem_params` evaluates those hypotheses, the `check_lemma_*`
//! functions test the four supporting bounds on individual semigroups,
//! and `proof_trace` replays the positivity argument step by step with
//! exact integers, reporting which inequalities held rather than
//! asserting them.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::wilf::{conductor_split, floors_at_most, last_window_count};

/// None for n <= 1. Trial division; n is capped at 2^31 so the scan is
/// at most ~46k candidates.
pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n <= 1 {
        return None;
    }
    if n % 2 == 0 {
        return Some(2);
    }
    let mut p = 3;
    while p * p <= n {
        if n % p == 0 {
            return Some(p);
        }
        p += 2;
    }
    Some(n)
}

fn binom2(y: u64) -> u64 {
    y * (y - 1) / 2
}

/// ceil(rho(3rho^2-rho-4)(3rho^2-rho-2) / (8(rho-2))) for rho >= 3,
/// saturating at u64::MAX when the exact value does not fit. Saturation
/// only happens far past any admissible multiplicity, where the
/// hypotheses are unreachable anyway.
pub(crate) fn a1_bound_for(rho: u64) -> u64 {
    debug_assert!(rho >= 3);
    let r = rho as u128;
    let f1 = 3 * r * r - r - 4;
    let f2 = f1 + 2;
    let num = match r.checked_mul(f1).and_then(|v| v.checked_mul(f2)) {
        Some(n) => n,
        None => return u64::MAX,
    };
    let den = 8 * (r - 2);
    u64::try_from((num + den - 1) / den).unwrap_or(u64::MAX)
}

/// The quantities steering the positivity argument for one semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremParams {
    rho: u64,
    y: i64,
    z: i64,
    a1_bound: Option<u64>,
    spf: Option<u64>,
    hypotheses_met: bool,
}

impl TheoremParams {
    /// ceil(a1 / d).
    pub fn rho(&self) -> u64 {
        self.rho
    }

    /// (3 rho^2 - rho - 4) / 2; negative only for rho = 1.
    pub fn y(&self) -> i64 {
        self.y
    }

    /// (rho^2 + rho - 2) / 2.
    pub fn z(&self) -> i64 {
        self.z
    }

    /// The multiplicity threshold for rho >= 3; None below that.
    pub fn a1_bound(&self) -> Option<u64> {
        self.a1_bound
    }

    /// Smallest prime factor of a1; None for a1 = 1.
    pub fn spf(&self) -> Option<u64> {
        self.spf
    }

    /// True when positivity is covered: rho <= 2 unconditionally, or
    /// a1 past the threshold with all prime factors >= rho.
    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses_met
    }
}

impl NumericalSemigroup {
    pub fn theorem_params(&self) -> TheoremParams {
        let a1 = self.multiplicity();
        let d = self.edim() as u64;
        let rho = (a1 + d - 1) / d;
        // rho <= a1 <= 2^31, so 3 rho^2 needs more than 64 bits but the
        // halved results fit i64.
        let r = rho as i128;
        let y = ((3 * r * r - r - 4) / 2) as i64;
        let z = ((r * r + r - 2) / 2) as i64;
        let a1_bound = if rho >= 3 { Some(a1_bound_for(rho)) } else { None };
        let spf = smallest_prime_factor(a1);
        let hypotheses_met = match a1_bound {
            None => true,
            Some(bound) => a1 >= bound && spf.is_some_and(|p| p >= rho),
        };
        if rho >= 3 {
            debug_assert!(y >= z && z >= rho as i64 + 2);
        }
        TheoremParams { rho, y, z, a1_bound, spf, hypotheses_met }
    }
}

/// Floor growth along the first Apery values: for x below every prime
/// factor of a1, fl(x) <= x*fl(1) + x - 1. Returns the verdict; a false
/// return is a reportable finding, not an error.
pub fn check_lemma_x(s: &NumericalSemigroup, x: u64) -> Result<bool> {
    if x == 0 {
        return Err(Error::PreconditionViolated("x must be positive"));
    }
    let spf = smallest_prime_factor(s.multiplicity());
    if !spf.is_some_and(|p| x < p) {
        return Err(Error::PreconditionViolated(
            "x must be smaller than every prime factor of a1",
        ));
    }
    debug_assert!(x < s.multiplicity());
    let ap = s.apery_set();
    Ok(ap.floor(x as usize) <= x * ap.floor(1) + x - 1)
}

/// Guard shared by the y-parametrized bounds: y >= 2 and
/// a1 - d >= C(y, 2) + 1.
fn check_y_guard(s: &NumericalSemigroup, y: u64) -> Result<()> {
    if y < 2 {
        return Err(Error::PreconditionViolated("y must be at least 2"));
    }
    if s.multiplicity() - (s.edim() as u64) < binom2(y) + 1 {
        return Err(Error::PreconditionViolated("a1 - d must be at least C(y, 2) + 1"));
    }
    Ok(())
}

/// Top-of-Apery slack: omega_{a1-1} >= omega_y + omega_1, and the
/// Frobenius number exceeds omega_y.
pub fn check_lemma_y(s: &NumericalSemigroup, y: u64) -> Result<bool> {
    check_y_guard(s, y)?;
    // C(y, 2) + 1 <= a1 - d forces y <= a1 - 2, so indexing is safe.
    debug_assert!(y < s.multiplicity() - 1);
    let ap = s.apery_set();
    let omegas = ap.omegas();
    let top = omegas[omegas.len() - 1];
    let slack = top >= omegas[y as usize] + omegas[1];
    let below_f = top > omegas[y as usize] + ap.multiplicity();
    Ok(slack && below_f)
}

/// Lower bound on the element count of the window holding F, under the
/// floor identity fl(a1 - 1) = fl(z) + fl(1): n_Q >= y - z + 3.
pub fn check_lemma_nq(s: &NumericalSemigroup, y: u64, z: u64) -> Result<bool> {
    check_y_guard(s, y)?;
    if y < z {
        return Err(Error::PreconditionViolated("y must be at least z"));
    }
    let ap = s.apery_set();
    let a1 = ap.multiplicity();
    if ap.floor(a1 as usize - 1) != ap.floor(z as usize) + ap.floor(1) {
        return Err(Error::PreconditionViolated(
            "floor identity fl(a1 - 1) = fl(z) + fl(1) does not hold",
        ));
    }
    let (q, r) = conductor_split(ap.frobenius(), a1);
    Ok(last_window_count(&ap, q, r) >= y - z + 3)
}

/// Companion bound on the window before the one holding F:
/// n_{Q-1} >= y + 2 - n_Q.
pub fn check_lemma_nq1(s: &NumericalSemigroup, y: u64) -> Result<bool> {
    check_y_guard(s, y)?;
    let ap = s.apery_set();
    let (q, r) = conductor_split(ap.frobenius(), ap.multiplicity());
    // The guard rules out S = {0} u [a1, oo), the only shape with Q = 0.
    assert!(q >= 1, "guarded semigroup has its conductor past a1");
    let n_q = last_window_count(&ap, q, r) as i128;
    let n_q1 = floors_at_most(&ap, q - 1) as i128;
    Ok(n_q1 >= y as i128 + 2 - n_q)
}

/// Which branch of the positivity argument applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofCase {
    /// fl(a1 - 1) = fl(z) + fl(1).
    EqualityCase,
    /// Strict floor inequality with n_Q >= (rho^2 - rho + 4) / 2.
    LargeNQ,
    /// Strict floor inequality with n_Q <= (rho^2 - rho + 2) / 2.
    SmallNQ,
}

/// One inequality in the argument, evaluated with exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub label: &'static str,
    pub lhs: i128,
    pub rhs: i128,
    pub relation: &'static str,
    pub satisfied: bool,
}

fn step(label: &'static str, lhs: i128, relation: &'static str, rhs: i128) -> TraceStep {
    let satisfied = match relation {
        "==" => lhs == rhs,
        ">=" => lhs >= rhs,
        ">" => lhs > rhs,
        "<=" => lhs <= rhs,
        _ => unreachable!("unknown relation {relation}"),
    };
    TraceStep { label, lhs, rhs, relation, satisfied }
}

/// Replay of the positivity argument for one semigroup.
#[derive(Clone, Debug)]
pub struct ProofTrace {
    case: ProofCase,
    pi_bound: i128,
    delta: i64,
    steps: Vec<TraceStep>,
}

impl ProofTrace {
    pub fn case(&self) -> ProofCase {
        self.case
    }

    /// The window-sum lower bound Pi that delta is compared against.
    pub fn pi_bound(&self) -> i128 {
        self.pi_bound
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn all_satisfied(&self) -> bool {
        self.steps.iter().all(|s| s.satisfied)
    }
}

impl NumericalSemigroup {
    /// Replays the positivity argument: picks the case from the floor
    /// identity and the n_Q threshold, then records every inequality in
    /// that case's chain. Steps that fail are recorded, not panicked on;
    /// `all_satisfied` plus `delta > 0` is the expected outcome whenever
    /// the hypotheses hold.
    pub fn proof_trace(&self) -> Result<ProofTrace> {
        let params = self.theorem_params();
        if !params.hypotheses_met() || params.rho() < 3 {
            return Err(Error::HypothesesNotMet { rho: params.rho() });
        }
        let delta = self.delta()?;

        let ap = self.apery_set();
        let a1 = ap.multiplicity() as i128;
        let d = self.edim() as i128;
        let rho = params.rho() as i128;
        let y = params.y() as i128;
        let z = params.z() as i128;
        let (q, r) = conductor_split(ap.frobenius(), ap.multiplicity());
        let n_q = last_window_count(&ap, q, r) as i128;
        let r = r as i128;

        assert!((params.z() as u64) < ap.multiplicity(), "z stays below a1 under the hypotheses");
        let fl_top = ap.floor(ap.multiplicity() as usize - 1) as i128;
        assert_eq!(fl_top, q as i128 + 1, "omega_{{a1-1}} = F + a1 pins the top floor");
        let fl_z = ap.floor(params.z() as usize) as i128;
        let fl_1 = ap.floor(1) as i128;

        let mut steps = vec![
            step("y >= z", y, ">=", z),
            step("z >= rho + 2", z, ">=", rho + 2),
            // Working form of the multiplicity hypothesis; the gate
            // itself uses the slightly stronger explicit threshold.
            step("(rho - 2) * a1 >= rho * C(y, 2)", (rho - 2) * a1, ">=", rho * (y * (y - 1) / 2)),
            step("a1 - d >= C(y, 2) + 1", a1 - d, ">=", y * (y - 1) / 2 + 1),
        ];

        let pi = (fl_top - fl_z - fl_1 - 1) * ((z + 1) * d - a1) - d * (rho * rho - 3 * rho + 2) / 2
            + (n_q * d - r);
        steps.push(step("delta >= pi", delta as i128, ">=", pi));

        let hi = (rho * rho - rho + 4) / 2;
        let lo = (rho * rho - rho + 2) / 2;
        assert_eq!(hi, lo + 1, "the two n_Q thresholds are adjacent integers");

        let case = if fl_top == fl_z + fl_1 {
            steps.push(step("fl(top) == fl(z) + fl(1)", fl_top, "==", fl_z + fl_1));
            steps.push(step("nQ >= y - z + 3", n_q, ">=", y - z + 3));
            steps.push(step("pi >= d + (a1 - R)", pi, ">=", d + (a1 - r)));
            ProofCase::EqualityCase
        } else if n_q >= hi {
            steps.push(step("fl(top) >= fl(z) + fl(1) + 1", fl_top, ">=", fl_z + fl_1 + 1));
            steps.push(step("(z + 1) * d >= a1", (z + 1) * d, ">=", a1));
            steps.push(step("nQ >= (rho^2 - rho + 4) / 2", n_q, ">=", hi));
            steps.push(step("pi >= (rho + 1) * d - R", pi, ">=", (rho + 1) * d - r));
            steps.push(step("(rho + 1) * d - R > 0", (rho + 1) * d - r, ">", 0));
            ProofCase::LargeNQ
        } else {
            assert!(n_q <= lo, "n_Q falls on one side of the adjacent thresholds");
            assert!(q >= 1, "rho >= 3 forces a1 > 2d, so the conductor passes a1");
            let n_q1 = floors_at_most(&ap, q - 1) as i128;
            steps.push(step("fl(top) >= fl(z) + fl(1) + 1", fl_top, ">=", fl_z + fl_1 + 1));
            steps.push(step("(z + 1) * d >= a1", (z + 1) * d, ">=", a1));
            steps.push(step("nQ <= (rho^2 - rho + 2) / 2", n_q, "<=", lo));
            steps.push(step("nQ1 >= y + 2 - nQ", n_q1, ">=", y + 2 - n_q));
            steps.push(step("y + 2 - nQ >= z + 3", y + 2 - n_q, ">=", z + 3));
            steps.push(step(
                "delta >= pi + (y + 1 - nQ - z) * d",
                delta as i128,
                ">=",
                pi + (y + 1 - n_q - z) * d,
            ));
            steps.push(step("delta >= z * d - R", delta as i128, ">=", z * d - r));
            steps.push(step("z * d - R > 0", z * d - r, ">", 0));
            ProofCase::SmallNQ
        };
        steps.push(step("delta > 0", delta as i128, ">", 0));

        Ok(ProofTrace { case, pi_bound: pi, delta, steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn prime_factors() {
        assert_eq!(smallest_prime_factor(0), None);
        assert_eq!(smallest_prime_factor(1), None);
        assert_eq!(smallest_prime_factor(2), Some(2));
        assert_eq!(smallest_prime_factor(9), Some(3));
        assert_eq!(smallest_prime_factor(91), Some(7));
        assert_eq!(smallest_prime_factor(97), Some(97));
        assert_eq!(smallest_prime_factor(165), Some(3));
        assert_eq!(smallest_prime_factor(2147483647), Some(2147483647));
    }

    #[test]
    fn multiplicity_thresholds() {
        assert_eq!(a1_bound_for(3), 165);
        assert_eq!(a1_bound_for(4), 420);
        assert_eq!(a1_bound_for(5), 935);
        // 6*98*100 / 32 = 1837.5, rounded up.
        assert_eq!(a1_bound_for(6), 1838);
    }

    #[test]
    fn params_small_rho() {
        let p = s(&[3, 5]).theorem_params();
        assert_eq!(p.rho(), 2);
        assert!(p.hypotheses_met());
        assert_eq!(p.a1_bound(), None);

        let p = s(&[1]).theorem_params();
        assert_eq!((p.rho(), p.y(), p.z()), (1, -1, 0));
        assert!(p.hypotheses_met());
        assert_eq!(p.spf(), None);
    }

    #[test]
    fn params_rho_three_and_four() {
        // rho = 3 via <6, 7>: threshold 165 and spf 2 both fail.
        let p = s(&[6, 7]).theorem_params();
        assert_eq!((p.rho(), p.y(), p.z()), (3, 10, 5));
        assert_eq!(p.a1_bound(), Some(165));
        assert_eq!(p.spf(), Some(2));
        assert!(!p.hypotheses_met());

        // rho = 4 via <7, 9>: spf passes, the threshold does not.
        let p = s(&[7, 9]).theorem_params();
        assert_eq!((p.rho(), p.y(), p.z()), (4, 20, 9));
        assert_eq!(p.a1_bound(), Some(420));
        assert_eq!(p.spf(), Some(7));
        assert!(!p.hypotheses_met());
    }

    #[test]
    fn lemma_x_examples() {
        assert!(check_lemma_x(&s(&[3, 5]), 1).unwrap());
        // fl(omega_2) = fl(10) = 3 against 2*1 + 1.
        assert!(check_lemma_x(&s(&[3, 5]), 2).unwrap());
        assert!(matches!(
            check_lemma_x(&s(&[3, 5]), 3),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_lemma_x(&s(&[3, 5]), 0),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(check_lemma_x(&s(&[25, 33, 41]), 4).unwrap());
        assert!(matches!(
            check_lemma_x(&s(&[1]), 1),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn lemma_y_examples() {
        // a1 - d = 1 cannot reach C(2, 2) + 1 = 2.
        assert!(matches!(
            check_lemma_y(&s(&[4, 6, 9]), 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_lemma_y(&s(&[5, 6, 7]), 1),
            Err(Error::PreconditionViolated(_))
        ));
        // omegas 0, 6, 7, 13, 14: top = 14 >= 7 + 6 and F = 9 > 7.
        assert!(check_lemma_y(&s(&[5, 6, 7]), 2).unwrap());
    }

    #[test]
    fn lemma_nq_examples() {
        // fl(14) = 2 = fl(7) + fl(6); window [5, 9] holds {5, 6, 7}.
        assert!(check_lemma_nq(&s(&[5, 6, 7]), 2, 2).unwrap());
        assert!(matches!(
            check_lemma_nq(&s(&[3, 5]), 2, 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_lemma_nq(&s(&[5, 6, 7]), 2, 3),
            Err(Error::PreconditionViolated(_))
        ));
        // <5, 6, 9>: fl(18) = 3 but fl(9) + fl(6) = 2.
        assert!(matches!(
            check_lemma_nq(&s(&[5, 6, 9]), 2, 2),
            Err(Error::PreconditionViolated(
                "floor identity fl(a1 - 1) = fl(z) + fl(1) does not hold"
            ))
        ));
    }

    #[test]
    fn lemma_nq1_examples() {
        // n_0 = 1 against y + 2 - n_Q = 4 - 3.
        assert!(check_lemma_nq1(&s(&[5, 6, 7]), 2).unwrap());
        assert!(matches!(
            check_lemma_nq1(&s(&[3, 5]), 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn trace_requires_hypotheses() {
        assert!(matches!(
            s(&[3, 5]).proof_trace(),
            Err(Error::HypothesesNotMet { rho: 2 })
        ));
        // rho = 3 but spf(6) = 2.
        assert!(matches!(
            s(&[6, 7]).proof_trace(),
            Err(Error::HypothesesNotMet { rho: 3 })
        ));
    }

    #[test]
    fn trace_on_handcrafted_instance() {
        // <165, 166, ..., 220>: a1 = 165 = 3*5*11, d = 56, rho = 3,
        // right at the threshold. F = 494, g = 327, delta = 8913.
        let gens: Vec<u64> = (165..=220).collect();
        let sg = s(&gens);
        assert_eq!(sg.edim(), 56);
        let params = sg.theorem_params();
        assert!(params.hypotheses_met() && params.rho() == 3);

        let trace = sg.proof_trace().unwrap();
        assert_eq!(trace.case(), ProofCase::LargeNQ);
        assert_eq!(trace.delta(), 8913);
        assert_eq!(trace.pi_bound(), 5995);
        assert!(trace.all_satisfied());
        assert!(trace.steps().iter().any(|st| st.label == "nQ >= (rho^2 - rho + 4) / 2"));
    }
}
