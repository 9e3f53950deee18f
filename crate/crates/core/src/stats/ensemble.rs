//! Aggregating per-distribution results into ensemble tests.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::optimality::SwapReport;
use crate::permutohedron::Permutohedron;
use crate::rational::{to_big, Rational};
use crate::stats::chance::p_contiguous_numeric;
use crate::stats::poisson_binomial::poisson_binomial_right_tail;
use crate::stats::wilcoxon::{wilcoxon_signed_rank, Alternative, WilcoxonResult};

/// One distribution's contribution to an ensemble.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub label: String,
    pub m: usize,
    /// Chance that a random shuffling is optimal.
    pub pi_o: Rational,
    /// Chance that a random shuffling is contiguous.
    pub p_contiguous: Rational,
    pub is_optimal: bool,
    pub is_contiguous: bool,
    pub avg_d: Rational,
    pub avg_d_random: Rational,
}

impl TrialRecord {
    /// Requires a report produced with exhaustive search enabled.
    pub fn from_report(
        label: impl Into<String>,
        report: &SwapReport,
        p: &Permutohedron,
    ) -> Result<Self> {
        let pi_o = report.pi_o.ok_or_else(|| {
            Error::invalid("the fraction of optimal shufflings needs exhaustive search")
        })?;
        let p_contiguous = match report.p_c {
            Some(pc) => pc,
            None => p_contiguous_numeric(p, report.m)?,
        };
        Ok(TrialRecord {
            label: label.into(),
            m: report.m,
            pi_o,
            p_contiguous,
            is_optimal: report.is_optimal,
            is_contiguous: report.structure.contiguous,
            avg_d: report.avg_d,
            avg_d_random: report.avg_d_random,
        })
    }
}

/// The ensemble's signed-rank test, or why it was not run.
#[derive(Clone, Debug, PartialEq)]
pub enum WilcoxonOutcome {
    Tested(WilcoxonResult),
    Undefined(String),
}

impl WilcoxonOutcome {
    pub fn result(&self) -> Option<&WilcoxonResult> {
        match self {
            WilcoxonOutcome::Tested(w) => Some(w),
            WilcoxonOutcome::Undefined(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleResult {
    pub t: usize,
    /// Trials at the minimum.
    pub b: usize,
    /// Trials with contiguous support.
    pub c: usize,
    /// `P(B' ≥ B)` under independent shufflings.
    pub p_optimal: BigRational,
    /// `P(C' ≥ C)` under independent shufflings.
    pub p_contiguous: BigRational,
    /// `p_contiguous` was computed as a plain product because every trial
    /// is contiguous.
    pub contiguity_by_product: bool,
    /// One-sided test of `⟨d⟩ < ⟨d⟩_r`.
    pub wilcoxon: WilcoxonOutcome,
    /// Number of trials per value of `m`.
    pub t_of_m: BTreeMap<usize, usize>,
}

pub fn run_ensemble(trials: &[TrialRecord]) -> Result<EnsembleResult> {
    if trials.is_empty() {
        return Err(Error::invalid("an ensemble needs at least one trial"));
    }
    let t = trials.len();
    let b = trials.iter().filter(|r| r.is_optimal).count();
    let c = trials.iter().filter(|r| r.is_contiguous).count();
    let mut t_of_m = BTreeMap::new();
    for r in trials {
        *t_of_m.entry(r.m).or_insert(0) += 1;
    }

    let pi_o: Vec<Rational> = trials.iter().map(|r| r.pi_o).collect();
    let p_optimal = poisson_binomial_right_tail(&pi_o, b)?;

    let contiguity_by_product = c == t;
    let p_contiguous = if contiguity_by_product {
        trials
            .iter()
            .fold(BigRational::from_integer(1.into()), |acc, r| {
                acc * to_big(&r.p_contiguous)
            })
    } else {
        let pc: Vec<Rational> = trials.iter().map(|r| r.p_contiguous).collect();
        poisson_binomial_right_tail(&pc, c)?
    };

    let pairs: Vec<(Rational, Rational)> =
        trials.iter().map(|r| (r.avg_d, r.avg_d_random)).collect();
    // A single nonzero difference cannot reach any conventional level, so
    // the test is reported as undefined rather than as p = 1/2.
    let nonzero = pairs.iter().filter(|(x, y)| x != y).count();
    let wilcoxon = if nonzero < 2 {
        WilcoxonOutcome::Undefined(match nonzero {
            0 => "all differences are zero".into(),
            _ => "fewer than two nonzero differences".into(),
        })
    } else {
        WilcoxonOutcome::Tested(wilcoxon_signed_rank(&pairs, Alternative::Less)?)
    };

    Ok(EnsembleResult {
        t,
        b,
        c,
        p_optimal,
        p_contiguous,
        contiguity_by_product,
        wilcoxon,
        t_of_m,
    })
}
