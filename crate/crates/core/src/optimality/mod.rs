//! The optimality score and the per-distribution report.

mod bounds;
mod extremes;
mod measures;

pub use bounds::{bounds, z_term};
pub use extremes::{
    arrangements, max_bruteforce, min_bruteforce, min_by_sorted_assignment, min_closed_form_n3,
    omega_min_m2, shuffle_extremes, sorted_assignments, MinimizerSet, DEFAULT_ENUM_CAP,
    OPTIMAL_SCHEME, OPTIMAL_SCHEME_MIRROR, WITNESS_CAP,
};
pub use measures::{
    average_swap_distance, distance_mass, expected_die_roll, expected_random_shuffle,
    local_average_swap_distance, local_bounds,
};

use std::fmt;

use crate::distribution::OrderDistribution;
use crate::error::{Error, Result};
use crate::permutohedron::Permutohedron;
use crate::rational::{int, ratio, Rational};
use crate::stats::chance;
use crate::structure::{self, StructureFlags};

/// Why the optimality score has no value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UndefinedReason {
    /// Only one order has non-zero probability.
    PointMass,
    /// All orders are equally likely.
    Uniform,
    /// `n = 2`: both shufflings give the same `⟨d⟩`.
    AllShufflingsEqual,
}

impl fmt::Display for UndefinedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UndefinedReason::PointMass => "point mass",
            UndefinedReason::Uniform => "uniform distribution",
            UndefinedReason::AllShufflingsEqual => "all shufflings equal",
        })
    }
}

/// `Ω = (⟨d⟩_r - ⟨d⟩) / (⟨d⟩_r - ⟨d⟩_min)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Omega {
    Value(Rational),
    Undefined(UndefinedReason),
}

impl Omega {
    pub fn value(&self) -> Option<Rational> {
        match self {
            Omega::Value(v) => Some(*v),
            Omega::Undefined(_) => None,
        }
    }
}

/// Computes `Ω` from its three ingredients, all belonging to `d`.
pub fn omega(
    d: &OrderDistribution,
    avg_d: Rational,
    avg_d_random: Rational,
    avg_d_min: Rational,
) -> Result<Omega> {
    if d.is_point_mass() {
        return Ok(Omega::Undefined(UndefinedReason::PointMass));
    }
    if d.is_uniform() {
        return Ok(Omega::Undefined(UndefinedReason::Uniform));
    }
    let den = avg_d_random - avg_d_min;
    if den == int(0) {
        if d.n() == 2 {
            return Ok(Omega::Undefined(UndefinedReason::AllShufflingsEqual));
        }
        return Err(Error::Internal(format!(
            "random baseline equals the minimum ({avg_d_min}) for a distribution that is neither a point mass nor uniform"
        )));
    }
    Ok(Omega::Value((avg_d_random - avg_d) / den))
}

/// How `⟨d⟩_min` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinMethod {
    /// Closed form, confirmed by exhaustive search.
    ClosedFormVerified,
    ClosedForm,
    BruteForce,
}

/// Whether the reported global maximum of `⟨d⟩` is a theorem for this `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxProvenance {
    Proven,
    /// `d_max/2`, attained by the uniform distribution; not proven to be
    /// the maximum for this `n`.
    Conjectured,
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    /// Limit on placements visited by exhaustive search.
    pub enum_cap: u64,
    /// For `n = 3`, run the exhaustive search alongside the closed form.
    pub verify_bruteforce: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            enum_cap: DEFAULT_ENUM_CAP,
            verify_bruteforce: true,
        }
    }
}

/// Everything known about one distribution.
#[derive(Clone, Debug)]
pub struct SwapReport {
    pub n: usize,
    pub d_max: usize,
    pub total_frequency: Option<u64>,
    pub m: usize,
    pub simpson: Rational,
    pub dominance: Rational,
    pub avg_d: Rational,
    pub avg_d_random: Rational,
    pub avg_d_min: Rational,
    pub min_method: MinMethod,
    pub avg_d_max_global: Rational,
    pub max_provenance: MaxProvenance,
    /// Largest `⟨d⟩` over shufflings of these probabilities.
    pub avg_d_max_shuffle: Option<Rational>,
    pub omega: Omega,
    /// `Ω` of the worst shuffling, the smallest value `Ω` can take for
    /// this probability multiset.
    pub omega_lower: Option<Rational>,
    pub is_optimal: bool,
    pub distance_mass: Vec<Rational>,
    pub z: Option<Rational>,
    pub bounds: (Rational, Rational),
    /// Fraction of shufflings that are optimal.
    pub pi_o: Option<Rational>,
    /// Chance that a shuffling is optimal, assuming no ties (`n = 3`).
    pub p_o: Option<Rational>,
    /// Chance that a shuffling is contiguous (`n = 3`).
    pub p_c: Option<Rational>,
    pub structure: StructureFlags,
}

pub fn analyze(
    p: &Permutohedron,
    d: &OrderDistribution,
    opts: &AnalyzeOptions,
) -> Result<SwapReport> {
    measures::check_dims(p, d)?;
    let n = d.n();
    let avg_d = average_swap_distance(p, d)?;
    let avg_d_random = expected_random_shuffle(d);

    let search = if n != 3 || opts.verify_bruteforce {
        Some(shuffle_extremes(p, d, opts.enum_cap)?)
    } else {
        None
    };

    let (avg_d_min, min_method) = if n == 3 {
        let closed = min_closed_form_n3(d)?;
        match &search {
            Some((lo, _)) if lo.value != closed => {
                return Err(Error::Internal(format!(
                    "closed-form minimum {closed} differs from exhaustive minimum {}",
                    lo.value
                )))
            }
            Some(_) => (closed, MinMethod::ClosedFormVerified),
            None => (closed, MinMethod::ClosedForm),
        }
    } else {
        (search.as_ref().unwrap().0.value, MinMethod::BruteForce)
    };

    let d_max = p.d_max();
    let half = ratio(d_max as i128, 2);
    let avg_d_max_shuffle = search.as_ref().map(|(_, hi)| hi.value);
    let (avg_d_max_global, max_provenance) = if n <= 3 {
        (half, MaxProvenance::Proven)
    } else {
        (
            avg_d_max_shuffle.map_or(half, |v| v.max(half)),
            MaxProvenance::Conjectured,
        )
    };

    let omega = omega(d, avg_d, avg_d_random, avg_d_min)?;
    let omega_lower = match (omega, avg_d_max_shuffle) {
        (Omega::Value(_), Some(hi)) => Some((avg_d_random - hi) / (avg_d_random - avg_d_min)),
        _ => None,
    };

    let m = d.m();
    Ok(SwapReport {
        n,
        d_max,
        total_frequency: d.total_frequency(),
        m,
        simpson: d.simpson(),
        dominance: d.dominance(),
        avg_d,
        avg_d_random,
        avg_d_min,
        min_method,
        avg_d_max_global,
        max_provenance,
        avg_d_max_shuffle,
        omega,
        omega_lower,
        is_optimal: avg_d == avg_d_min,
        distance_mass: distance_mass(p, d)?,
        z: z_term(d),
        bounds: bounds(d),
        pi_o: search.as_ref().and_then(|(lo, _)| lo.fraction()),
        p_o: if n == 3 {
            chance::p_optimal_given_m(m).ok()
        } else {
            None
        },
        p_c: if n == 3 {
            chance::p_contiguous_given_m(m).ok()
        } else {
            None
        },
        structure: structure::flags(p, d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::Alphabet;

    fn report(counts: &[(&str, u64)]) -> SwapReport {
        let p = Permutohedron::build(3).unwrap();
        let d = OrderDistribution::from_counts(&Alphabet::default(), counts).unwrap();
        analyze(&p, &d, &AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn point_mass_report() {
        let r = report(&[("SOV", 5)]);
        assert_eq!(r.omega, Omega::Undefined(UndefinedReason::PointMass));
        assert_eq!(r.avg_d, int(0));
        assert_eq!(r.avg_d_min, int(0));
        assert_eq!(r.avg_d_random, int(0));
        assert_eq!(r.pi_o, Some(int(1)));
        assert!(r.is_optimal);
    }

    #[test]
    fn uniform_report() {
        let all: Vec<(&str, u64)> = ["SOV", "SVO", "OSV", "OVS", "VSO", "VOS"]
            .iter()
            .map(|&l| (l, 3))
            .collect();
        let r = report(&all);
        assert_eq!(r.omega, Omega::Undefined(UndefinedReason::Uniform));
        assert_eq!(r.avg_d, ratio(3, 2));
        assert_eq!(r.avg_d_random, ratio(3, 2));
    }

    #[test]
    fn optimal_arrangement_scores_one() {
        // Contiguous, decreasing away from SVO.
        let r = report(&[("SVO", 40), ("SOV", 30), ("VSO", 20), ("OSV", 10)]);
        assert_eq!(r.min_method, MinMethod::ClosedFormVerified);
        assert_eq!(r.omega, Omega::Value(int(1)));
        assert_eq!(r.pi_o, Some(ratio(1, 30)));
        assert_eq!(r.p_o, Some(ratio(1, 30)));
        assert!(r.omega_lower.unwrap() < int(0));
    }

    #[test]
    fn two_orders_on_a_line() {
        let p = Permutohedron::build(2).unwrap();
        let d = OrderDistribution::from_count_vector(2, vec![3, 1]).unwrap();
        let r = analyze(&p, &d, &AnalyzeOptions::default()).unwrap();
        assert_eq!(
            r.omega,
            Omega::Undefined(UndefinedReason::AllShufflingsEqual)
        );
        assert_eq!(r.avg_d, ratio(3, 8));
    }

    #[test]
    fn larger_orders_use_search() {
        let p = Permutohedron::build(4).unwrap();
        let mut w = vec![0u64; 24];
        w[0] = 5;
        w[1] = 3;
        w[7] = 2;
        let d = OrderDistribution::from_count_vector(4, w).unwrap();
        let r = analyze(&p, &d, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.min_method, MinMethod::BruteForce);
        assert_eq!(r.max_provenance, MaxProvenance::Conjectured);
        assert_eq!(r.avg_d_max_global, int(3));
        assert!(r.avg_d_min <= r.avg_d);
    }
}
