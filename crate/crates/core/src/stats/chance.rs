//! Probability that a random shuffling is optimal or contiguous.

use std::collections::BTreeMap;

use crate::distribution::OrderDistribution;
use crate::enumerate::for_each_subset;
use crate::error::{Error, Result};
use crate::optimality::min_bruteforce;
use crate::permutohedron::Permutohedron;
use crate::rational::{factorial_u64, int, ratio, Rational};
use crate::structure::induces_path;

/// `p_o(m)` for `n = 3`: `(6-m)!/60` for `1 < m ≤ 6`, and 1 for `m = 1`.
pub fn p_optimal_given_m(m: usize) -> Result<Rational> {
    match m {
        1 => Ok(int(1)),
        2..=6 => Ok(ratio(fact(6 - m), 60)),
        _ => Err(Error::invalid(format!("m must be in 1..=6, got {m}"))),
    }
}

/// `p_c(m)` for `n = 3`: `m!(6-m)!/120` for `1 ≤ m ≤ 5`, and 1 for
/// `m ∈ {0, 6}`.
pub fn p_contiguous_given_m(m: usize) -> Result<Rational> {
    match m {
        0 | 6 => Ok(int(1)),
        1..=5 => Ok(ratio(fact(m) * fact(6 - m), 120)),
        _ => Err(Error::invalid(format!("m must be in 0..=6, got {m}"))),
    }
}

fn fact(k: usize) -> i128 {
    factorial_u64(k).unwrap() as i128
}

/// Fraction of all shufflings of `d` that attain `⟨d⟩_min`.
pub fn pi_optimal_numeric(p: &Permutohedron, d: &OrderDistribution, cap: u64) -> Result<Rational> {
    min_bruteforce(p, d, cap)?
        .fraction()
        .ok_or_else(|| Error::Internal("exhaustive search reported no counts".into()))
}

/// Fraction of the `m`-subsets of vertices that induce a path, i.e. the
/// chance that a shuffling with `m` non-zero probabilities is contiguous.
pub fn p_contiguous_numeric(p: &Permutohedron, m: usize) -> Result<Rational> {
    if m > p.len() {
        return Err(Error::invalid(format!(
            "m = {m} exceeds {} vertices",
            p.len()
        )));
    }
    if m == 0 || m == p.len() {
        return Ok(int(1));
    }
    let mut hits: i128 = 0;
    let mut all: i128 = 0;
    for_each_subset(p.len(), m, |s| {
        all += 1;
        if induces_path(p, s) {
            hits += 1;
        }
    });
    Ok(ratio(hits, all))
}

/// `Π_m p_c(m)^{T(m)}`: chance that every trial is contiguous.
pub fn contiguity_product(t_of_m: &BTreeMap<usize, usize>) -> Result<Rational> {
    let mut acc = int(1);
    for (&m, &t) in t_of_m {
        let pc = p_contiguous_given_m(m)?;
        for _ in 0..t {
            acc *= pc;
        }
    }
    Ok(acc)
}
