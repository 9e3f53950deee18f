//! Fixed workloads for the solver benchmarks in `benches/`.

use swapdist_core::qap::{CodingInstance, GraphInstance, QapInstance};
use swapdist_core::rational::{int, ratio};
use swapdist_core::{OrderDistribution, Permutohedron, Result};

/// Distinct counts on `m` orders of length `n`; the rest are zero.
pub fn distribution(n: usize, m: usize) -> Result<OrderDistribution> {
    let size: usize = (1..=n).product();
    let counts = (0..size)
        .map(|i| {
            if i < m {
                (2 * m - i) as u64 * 3 + i as u64
            } else {
                0
            }
        })
        .collect();
    OrderDistribution::from_count_vector(n, counts)
}

/// The swap-distance assignment problem for `distribution(3, m)`.
pub fn swap_instance(m: usize) -> Result<QapInstance> {
    let p = Permutohedron::build(3)?;
    QapInstance::swap_distance(&p, &distribution(3, m)?)
}

/// A caterpillar: a path with one pendant leaf per spine vertex.
pub fn caterpillar(spine: usize) -> Result<GraphInstance> {
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((0..spine).map(|i| (i, spine + i)));
    GraphInstance::new(2 * spine, edges)
}

/// `k` decreasing probabilities paired with lengths `1..=k`.
pub fn coding(k: usize) -> Result<CodingInstance> {
    let weights: Vec<u64> = (1..=k as u64).rev().collect();
    let total: u64 = weights.iter().sum();
    let probs = weights
        .iter()
        .map(|&w| ratio(w as i128, total as i128))
        .collect();
    let lengths = (1..=k as i128).map(int).collect();
    CodingInstance::new(probs, lengths)
}
