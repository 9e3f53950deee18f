//! Probability distributions over the vertices of a permutohedron.
//!
//! A distribution is stored as integer weights over a common total `F`, so
//! `p_i = w_i / F` exactly. Distributions built from counts keep the counts;
//! distributions built from rationals use the least common denominator.

use crate::error::{Error, Result};
use crate::permutation::Alphabet;
use crate::rational::{self, factorial_u64, ratio, Rational, MAX_TOTAL};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderDistribution {
    n: usize,
    weights: Vec<u64>,
    total: u64,
    from_counts: bool,
}

impl OrderDistribution {
    /// Distribution from a count per vertex (canonical lexicographic order).
    pub fn from_count_vector(n: usize, counts: Vec<u64>) -> Result<Self> {
        Self::from_weights(n, counts, true)
    }

    /// Distribution from `(order label, count)` pairs. Unlisted orders get 0.
    pub fn from_counts<S: AsRef<str>>(alphabet: &Alphabet, counts: &[(S, u64)]) -> Result<Self> {
        let n = alphabet.len();
        let size = vertex_count(n)?;
        let mut weights = vec![0u64; size];
        let mut seen = vec![false; size];
        for (label, c) in counts {
            let idx = alphabet.parse(label.as_ref())?.lex_rank();
            if seen[idx] {
                return Err(Error::invalid(format!(
                    "order '{}' listed more than once",
                    label.as_ref()
                )));
            }
            seen[idx] = true;
            weights[idx] = *c;
        }
        Self::from_weights(n, weights, true)
    }

    /// Distribution from exact probabilities per vertex; they must be
    /// non-negative and sum to exactly 1.
    pub fn from_probabilities(n: usize, probs: &[Rational]) -> Result<Self> {
        let size = vertex_count(n)?;
        if probs.len() != size {
            return Err(Error::invalid(format!(
                "expected {size} probabilities for n = {n}, got {}",
                probs.len()
            )));
        }
        if probs.iter().any(|p| !rational::is_nonnegative(p)) {
            return Err(Error::invalid("negative probability"));
        }
        if rational::sum(probs) != rational::int(1) {
            return Err(Error::invalid("probabilities do not sum to 1"));
        }
        let total = rational::common_denominator(probs)
            .filter(|&t| t <= MAX_TOTAL)
            .ok_or_else(|| {
                Error::capacity(format!(
                    "common denominator of the probabilities exceeds {MAX_TOTAL}"
                ))
            })?;
        let weights = probs
            .iter()
            .map(|p| (*p.numer() as u64) * (total / *p.denom() as u64))
            .collect();
        Self::from_weights(n, weights, false)
    }

    pub(crate) fn from_weights(n: usize, weights: Vec<u64>, from_counts: bool) -> Result<Self> {
        let size = vertex_count(n)?;
        if weights.len() != size {
            return Err(Error::invalid(format!(
                "expected {size} entries for n = {n}, got {}",
                weights.len()
            )));
        }
        let total = weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .filter(|&t| t <= MAX_TOTAL)
            .ok_or_else(|| Error::capacity(format!("total frequency exceeds {MAX_TOTAL}")))?;
        if total == 0 {
            return Err(Error::invalid("all counts are zero"));
        }
        Ok(OrderDistribution {
            n,
            weights,
            total,
            from_counts,
        })
    }

    /// Same total, weights moved: vertex `i` of the result carries `weights[i]`.
    pub(crate) fn with_weights(&self, weights: Vec<u64>) -> Self {
        debug_assert_eq!(weights.iter().sum::<u64>(), self.total);
        OrderDistribution {
            n: self.n,
            weights,
            total: self.total,
            from_counts: self.from_counts,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices `N = n!`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn prob(&self, i: usize) -> Rational {
        ratio(self.weights[i] as i128, self.total as i128)
    }

    pub fn probs(&self) -> Vec<Rational> {
        (0..self.len()).map(|i| self.prob(i)).collect()
    }

    /// Integer weights over the common total [`Self::total`].
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn counts(&self) -> Option<&[u64]> {
        self.from_counts.then_some(self.weights.as_slice())
    }

    /// Total frequency `F`, when the distribution was built from counts.
    pub fn total_frequency(&self) -> Option<u64> {
        self.from_counts.then_some(self.total)
    }

    /// Simpson index `S = Σ p_i²`.
    pub fn simpson(&self) -> Rational {
        let sq: u128 = self
            .weights
            .iter()
            .map(|&w| (w as u128) * (w as u128))
            .sum();
        let t = self.total as i128;
        ratio(sq as i128, t * t)
    }

    /// Dominance index `1 - S`.
    pub fn dominance(&self) -> Rational {
        rational::int(1) - self.simpson()
    }

    /// `m` and the ascending indices of the vertices with non-zero probability.
    pub fn nonzero_support(&self) -> (usize, Vec<usize>) {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| self.weights[i] > 0).collect();
        (idx.len(), idx)
    }

    pub fn m(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0).count()
    }

    pub fn is_point_mass(&self) -> bool {
        self.m() == 1
    }

    pub fn is_uniform(&self) -> bool {
        self.weights.iter().all(|&w| w == self.weights[0])
    }

    pub fn ranked(&self) -> RankedProbs {
        let mut order: Vec<usize> = (0..self.len()).collect();
        // Stable: equal probabilities keep ascending vertex order.
        order.sort_by(|&a, &b| self.weights[b].cmp(&self.weights[a]));
        let mut rank_of_vertex = vec![0; self.len()];
        for (r, &v) in order.iter().enumerate() {
            rank_of_vertex[v] = r;
        }
        let pi: Vec<Rational> = order.iter().map(|&v| self.prob(v)).collect();
        let mut tie_groups: Vec<Vec<usize>> = Vec::new();
        for r in 0..pi.len() {
            match tie_groups.last_mut() {
                Some(g) if pi[g[0]] == pi[r] => g.push(r),
                _ => tie_groups.push(vec![r]),
            }
        }
        RankedProbs {
            pi,
            order,
            rank_of_vertex,
            tie_groups,
        }
    }
}

fn vertex_count(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be at least 2, got {n}")));
    }
    factorial_u64(n)
        .filter(|&f| f <= 40320)
        .map(|f| f as usize)
        .ok_or_else(|| Error::capacity(format!("{n}! vertices is too many")))
}

/// Probabilities sorted non-increasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedProbs {
    /// `pi[k]` is the `(k+1)`-th largest probability.
    pub pi: Vec<Rational>,
    /// `order[k]` is the vertex carrying `pi[k]`.
    pub order: Vec<usize>,
    /// Inverse of `order`.
    pub rank_of_vertex: Vec<usize>,
    /// Runs of equal `pi` values, as rank indices.
    pub tie_groups: Vec<Vec<usize>>,
}

impl RankedProbs {
    pub fn has_ties_among_nonzero(&self) -> bool {
        self.tie_groups
            .iter()
            .any(|g| g.len() > 1 && self.pi[g[0]] > rational::int(0))
    }
}
