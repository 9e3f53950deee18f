//! Exact Poisson binomial distribution by dynamic programming.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_big, Rational};

/// `P(B = k)` for `k = 0..=T`, where `B` counts successes of independent
/// trials with the given success probabilities.
pub fn poisson_binomial_pmf(probs: &[Rational]) -> Result<Vec<BigRational>> {
    let mut pmf = vec![BigRational::one()];
    for (i, p) in probs.iter().enumerate() {
        if *p < Rational::zero() || *p > Rational::one() {
            return Err(Error::invalid(format!(
                "success probability {p} of trial {i} is outside [0, 1]"
            )));
        }
        let p = to_big(p);
        let q = BigRational::one() - &p;
        let mut next = vec![BigRational::zero(); pmf.len() + 1];
        for (k, mass) in pmf.iter().enumerate() {
            next[k] += mass * &q;
            next[k + 1] += mass * &p;
        }
        pmf = next;
    }
    Ok(pmf)
}

/// `P(B ≥ k)`.
pub fn poisson_binomial_right_tail(probs: &[Rational], k: usize) -> Result<BigRational> {
    if k > probs.len() {
        return Err(Error::invalid(format!(
            "k = {k} exceeds the number of trials {}",
            probs.len()
        )));
    }
    let pmf = poisson_binomial_pmf(probs)?;
    Ok(pmf[k..]
        .iter()
        .fold(BigRational::from_integer(BigInt::zero()), |acc, x| acc + x))
}
