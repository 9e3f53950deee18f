//! Extremes of `⟨d⟩` over all shufflings of a fixed probability multiset.
//!
//! A shuffling permutes the `N` probabilities over the `N` vertices. Only
//! where the `m` non-zero probabilities land matters, so the solvers
//! enumerate the `N!/(N-m)!` injective placements of the non-zero weights;
//! each placement stands for `(N-m)!` shufflings.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::distribution::OrderDistribution;
use crate::enumerate::falling_factorial;
use crate::error::{Error, Result};
use crate::optimality::measures::{check_dims, over_total_sq, weighted_distance_sum};
use crate::permutohedron::Permutohedron;
use crate::rational::{factorial, int, ratio, Rational};

/// Default limit on the number of placements a brute-force solver visits.
pub const DEFAULT_ENUM_CAP: u64 = 40320;

/// Largest number of distinct witness arrangements kept.
pub const WITNESS_CAP: usize = 1024;

/// An extremal value of `⟨d⟩` together with the arrangements attaining it.
#[derive(Clone, Debug)]
pub struct MinimizerSet {
    pub value: Rational,
    /// Distinct arrangements attaining `value`, at most [`WITNESS_CAP`].
    pub witnesses: Vec<OrderDistribution>,
    /// Number of the `N!` shufflings attaining `value`, when enumerated.
    pub shufflings: Option<BigUint>,
    /// Number of the `N!/(N-m)!` placements of the non-zero probabilities
    /// attaining `value`, when enumerated.
    pub placements: Option<(u64, u64)>,
}

impl MinimizerSet {
    /// Fraction of all shufflings attaining the value.
    pub fn fraction(&self) -> Option<Rational> {
        self.placements
            .map(|(hit, all)| ratio(hit as i128, all as i128))
    }

    pub fn fraction_big(&self, vertex_count: usize) -> Option<BigRational> {
        self.shufflings
            .as_ref()
            .map(|s| BigRational::new(s.clone().into(), factorial(vertex_count).into()))
    }
}

/// Visits every placement of the non-zero weights of `d` with the numerator
/// `Σ_i Σ_j d_ij w_i w_j` of the resulting arrangement. `slots[k]` is the
/// vertex receiving the `k`-th non-zero weight (in vertex order of `d`).
pub(crate) fn for_each_placement(
    p: &Permutohedron,
    d: &OrderDistribution,
    cap: u64,
    mut visit: impl FnMut(&[usize], u128),
) -> Result<u64> {
    check_dims(p, d)?;
    let items: Vec<u64> = d.weights().iter().copied().filter(|&w| w > 0).collect();
    let count = falling_factorial(p.len(), items.len())
        .filter(|&c| c <= cap)
        .ok_or_else(|| {
            Error::capacity(format!(
                "{} placements of {} non-zero probabilities over {} vertices exceed the cap of {cap}",
                falling_factorial(p.len(), items.len())
                    .map_or_else(|| "too many".to_string(), |c| c.to_string()),
                items.len(),
                p.len()
            ))
        })?;
    let mut slots = Vec::with_capacity(items.len());
    let mut used = vec![false; p.len()];
    place(p, &items, &mut slots, &mut used, 0, &mut visit);
    Ok(count)
}

fn place(
    p: &Permutohedron,
    items: &[u64],
    slots: &mut Vec<usize>,
    used: &mut [bool],
    acc: u128,
    visit: &mut impl FnMut(&[usize], u128),
) {
    let k = slots.len();
    if k == items.len() {
        visit(slots, acc);
        return;
    }
    let w = items[k] as u128;
    for v in 0..p.len() {
        if used[v] {
            continue;
        }
        let row = &p.distance_matrix()[v];
        let extra: u128 = slots
            .iter()
            .zip(items)
            .map(|(&s, &wj)| row[s] as u128 * wj as u128)
            .sum();
        used[v] = true;
        slots.push(v);
        place(p, items, slots, used, acc + 2 * w * extra, visit);
        slots.pop();
        used[v] = false;
    }
}

fn arrangement(d: &OrderDistribution, slots: &[usize]) -> Vec<u64> {
    let mut w = vec![0u64; d.len()];
    for (slot, weight) in slots.iter().zip(d.weights().iter().filter(|&&x| x > 0)) {
        w[*slot] = *weight;
    }
    w
}

struct Tracker {
    best: Option<u128>,
    hits: u64,
    seen: BTreeSet<Vec<u64>>,
}

impl Tracker {
    fn new() -> Self {
        Tracker {
            best: None,
            hits: 0,
            seen: BTreeSet::new(),
        }
    }

    fn offer(&mut self, d: &OrderDistribution, slots: &[usize], value: u128, better: bool) {
        match self.best {
            Some(b) if b == value => {}
            Some(_) if !better => return,
            _ => {
                self.best = Some(value);
                self.hits = 0;
                self.seen.clear();
            }
        }
        self.hits += 1;
        if self.seen.len() < WITNESS_CAP {
            self.seen.insert(arrangement(d, slots));
        }
    }

    fn finish(self, d: &OrderDistribution, placements: u64) -> MinimizerSet {
        let free = d.len() - d.m();
        MinimizerSet {
            value: over_total_sq(self.best.unwrap_or(0), d.total()),
            witnesses: self.seen.into_iter().map(|w| d.with_weights(w)).collect(),
            shufflings: Some(BigUint::from(self.hits) * factorial(free)),
            placements: Some((self.hits, placements)),
        }
    }
}

/// Minimum and maximum of `⟨d⟩` over all shufflings, in one enumeration.
pub fn shuffle_extremes(
    p: &Permutohedron,
    d: &OrderDistribution,
    cap: u64,
) -> Result<(MinimizerSet, MinimizerSet)> {
    let mut lo = Tracker::new();
    let mut hi = Tracker::new();
    let total = for_each_placement(p, d, cap, |slots, v| {
        let below = lo.best.is_none_or(|b| v < b);
        lo.offer(d, slots, v, below);
        let above = hi.best.is_none_or(|b| v > b);
        hi.offer(d, slots, v, above);
    })?;
    Ok((lo.finish(d, total), hi.finish(d, total)))
}

/// `⟨d⟩_min` by exhaustive search over shufflings.
pub fn min_bruteforce(p: &Permutohedron, d: &OrderDistribution, cap: u64) -> Result<MinimizerSet> {
    Ok(shuffle_extremes(p, d, cap)?.0)
}

/// Largest `⟨d⟩` over shufflings of the probabilities of `d`.
pub fn max_bruteforce(p: &Permutohedron, d: &OrderDistribution, cap: u64) -> Result<Rational> {
    Ok(shuffle_extremes(p, d, cap)?.1.value)
}

/// Every distinct placement of the non-zero probabilities with its `⟨d⟩`.
/// Shufflings that only move zero probabilities are not repeated.
pub fn arrangements(
    p: &Permutohedron,
    d: &OrderDistribution,
    cap: u64,
) -> Result<Vec<(OrderDistribution, Rational)>> {
    let mut out = Vec::new();
    for_each_placement(p, d, cap, |slots, v| {
        out.push((
            d.with_weights(arrangement(d, slots)),
            over_total_sq(v, d.total()),
        ));
    })?;
    Ok(out)
}

/// Closed form of `⟨d⟩_min` for `n = 3` in terms of the sorted
/// probabilities `π_1 ≥ ... ≥ π_6`.
pub fn min_closed_form_n3(d: &OrderDistribution) -> Result<Rational> {
    if d.n() != 3 {
        return Err(Error::unsupported(format!(
            "the closed form needs n = 3, got n = {}",
            d.n()
        )));
    }
    let r = d.ranked();
    let p = |k: usize| r.pi[k - 1];
    let two = int(2);
    let bracket = p(1) * (two * p(2) + p(4))
        + p(2) * (two * p(4) + p(6))
        + p(3) * (two * p(1) + p(2))
        + p(4) * (two * p(6) + p(5))
        + p(5) * (two * p(3) + p(1))
        + p(6) * (two * p(5) + p(3));
    Ok(int(3) * d.dominance() - two * bracket)
}

/// Hexagon positions (1-based) receiving `π_1, ..., π_6` in the two optimal
/// total orders: `p1 ≥ p2 ≥ p6 ≥ p3 ≥ p5 ≥ p4` and its mirror image.
pub const OPTIMAL_SCHEME: [usize; 6] = [1, 2, 6, 3, 5, 4];
pub const OPTIMAL_SCHEME_MIRROR: [usize; 6] = [1, 6, 2, 5, 3, 4];

/// Arranges the sorted probabilities on the hexagon by the two optimal
/// schemes, with `π_1` at hexagon position 1.
pub fn sorted_assignments(
    p: &Permutohedron,
    d: &OrderDistribution,
) -> Result<[OrderDistribution; 2]> {
    check_dims(p, d)?;
    let hex = p.hexagon()?;
    let r = d.ranked();
    let build = |scheme: &[usize; 6]| {
        let mut w = vec![0u64; 6];
        for (rank, &pos) in scheme.iter().enumerate() {
            w[hex[pos - 1]] = d.weights()[r.order[rank]];
        }
        d.with_weights(w)
    };
    Ok([build(&OPTIMAL_SCHEME), build(&OPTIMAL_SCHEME_MIRROR)])
}

/// `⟨d⟩_min` for `n = 3` by placing the sorted probabilities on the hexagon
/// following the two optimal schemes.
pub fn min_by_sorted_assignment(p: &Permutohedron, d: &OrderDistribution) -> Result<MinimizerSet> {
    let [a, b] = sorted_assignments(p, d)?;
    let va = over_total_sq(weighted_distance_sum(p, a.weights()), d.total());
    let vb = over_total_sq(weighted_distance_sum(p, b.weights()), d.total());
    if va != vb {
        return Err(Error::Internal(format!(
            "mirror-image arrangements disagree: {va} vs {vb}"
        )));
    }
    let mut witnesses = vec![a];
    if b != witnesses[0] {
        witnesses.push(b);
    }
    Ok(MinimizerSet {
        value: va,
        witnesses,
        shufflings: None,
        placements: None,
    })
}

/// Tight lower bound of the optimality score when exactly two orders have
/// non-zero probability: `((c-2) d_max) / (c d_max - 2)` with `c = N/(N-1)`.
pub fn omega_min_m2(n: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::invalid(format!("needs n >= 3, got n = {n}")));
    }
    let big_n = crate::rational::factorial_u64(n)
        .filter(|&f| f < 1 << 60)
        .ok_or_else(|| Error::capacity(format!("{n}! is too large")))? as i128;
    let c = ratio(big_n, big_n - 1);
    let d_max = int((n * (n - 1) / 2) as i128);
    Ok(((c - int(2)) * d_max) / (c * d_max - int(2)))
}
