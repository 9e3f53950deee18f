//! Average swap distance, its per-vertex and per-distance decompositions,
//! and the random baselines.

use crate::distribution::OrderDistribution;
use crate::error::{Error, Result};
use crate::permutohedron::Permutohedron;
use crate::rational::{int, ratio, Rational};

pub(crate) fn check_dims(p: &Permutohedron, d: &OrderDistribution) -> Result<()> {
    if p.n() != d.n() {
        return Err(Error::invalid(format!(
            "distribution over n = {} orders on a permutohedron of order {}",
            d.n(),
            p.n()
        )));
    }
    Ok(())
}

/// `Σ_i Σ_j d_ij w_i w_j` over the integer weights of `d`.
pub(crate) fn weighted_distance_sum(p: &Permutohedron, weights: &[u64]) -> u128 {
    let mut acc: u128 = 0;
    for (i, &wi) in weights.iter().enumerate() {
        if wi == 0 {
            continue;
        }
        let row = &p.distance_matrix()[i];
        let inner: u128 = weights
            .iter()
            .zip(row)
            .map(|(&wj, &dij)| wj as u128 * dij as u128)
            .sum();
        acc += wi as u128 * inner;
    }
    acc
}

pub(crate) fn over_total_sq(num: u128, total: u64) -> Rational {
    let t = total as i128;
    ratio(num as i128, t * t)
}

/// `⟨d⟩ = Σ_i Σ_j d_ij p_i p_j`.
pub fn average_swap_distance(p: &Permutohedron, d: &OrderDistribution) -> Result<Rational> {
    check_dims(p, d)?;
    Ok(over_total_sq(
        weighted_distance_sum(p, d.weights()),
        d.total(),
    ))
}

/// `⟨d⟩_i = Σ_j p_j d_ij`.
pub fn local_average_swap_distance(
    p: &Permutohedron,
    d: &OrderDistribution,
    i: usize,
) -> Result<Rational> {
    check_dims(p, d)?;
    check_vertex(p, i)?;
    let num: u128 = d
        .weights()
        .iter()
        .zip(&p.distance_matrix()[i])
        .map(|(&w, &dij)| w as u128 * dij as u128)
        .sum();
    Ok(ratio(num as i128, d.total() as i128))
}

/// Smallest and largest `⟨d⟩_i` over all rearrangements of the
/// probabilities, with `i` fixed.
pub fn local_bounds(
    p: &Permutohedron,
    d: &OrderDistribution,
    i: usize,
) -> Result<(Rational, Rational)> {
    check_dims(p, d)?;
    check_vertex(p, i)?;
    let mut dists: Vec<u32> = p.distance_matrix()[i].clone();
    dists.sort_unstable();
    let pi = d.ranked().pi;
    let lo = pi
        .iter()
        .zip(&dists)
        .map(|(x, &k)| x * int(k as i128))
        .sum();
    let hi = pi
        .iter()
        .zip(dists.iter().rev())
        .map(|(x, &k)| x * int(k as i128))
        .sum();
    Ok((lo, hi))
}

fn check_vertex(p: &Permutohedron, i: usize) -> Result<()> {
    if i >= p.len() {
        return Err(Error::invalid(format!(
            "vertex {i} out of range for {} vertices",
            p.len()
        )));
    }
    Ok(())
}

/// `P(c)`: probability that two independent draws are at distance `c`,
/// for `c = 0..=d_max`.
pub fn distance_mass(p: &Permutohedron, d: &OrderDistribution) -> Result<Vec<Rational>> {
    check_dims(p, d)?;
    let mut acc = vec![0u128; p.d_max() + 1];
    let w = d.weights();
    for i in 0..p.len() {
        if w[i] == 0 {
            continue;
        }
        for j in 0..p.len() {
            acc[p.dist(i, j)] += w[i] as u128 * w[j] as u128;
        }
    }
    Ok(acc
        .into_iter()
        .map(|x| over_total_sq(x, d.total()))
        .collect())
}

/// Expected `⟨d⟩` when the probabilities are shuffled uniformly at random
/// over the vertices: `S̄ · N/(N-1) · d_max/2`.
pub fn expected_random_shuffle(d: &OrderDistribution) -> Rational {
    let big_n = d.len() as i128;
    let d_max = (d.n() * (d.n() - 1) / 2) as i128;
    d.dominance() * ratio(big_n * d_max, 2 * (big_n - 1))
}

/// Expected `⟨d⟩` when each of `f` productions picks an order by a fair
/// die roll: `(f-1)/f · d_max/2`.
pub fn expected_die_roll(d: &OrderDistribution, f: u64) -> Result<Rational> {
    if f < 2 {
        return Err(Error::invalid(format!(
            "die-roll baseline needs at least 2 productions, got {f}"
        )));
    }
    let d_max = (d.n() * (d.n() - 1) / 2) as i128;
    let f = f as i128;
    Ok(ratio(f - 1, f) * ratio(d_max, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> Permutohedron {
        Permutohedron::build(3).unwrap()
    }

    fn uniform() -> OrderDistribution {
        OrderDistribution::from_count_vector(3, vec![1; 6]).unwrap()
    }

    #[test]
    fn point_mass_is_zero() {
        let p = hexagon();
        let d = OrderDistribution::from_count_vector(3, vec![0, 0, 7, 0, 0, 0]).unwrap();
        assert_eq!(average_swap_distance(&p, &d).unwrap(), int(0));
        assert_eq!(local_average_swap_distance(&p, &d, 2).unwrap(), int(0));
        assert_eq!(
            distance_mass(&p, &d).unwrap(),
            vec![int(1), int(0), int(0), int(0)]
        );
        assert_eq!(expected_random_shuffle(&d), int(0));
        assert_eq!(local_bounds(&p, &d, 0).unwrap(), (int(0), int(3)));
    }

    #[test]
    fn antipodal_halves() {
        let p = hexagon();
        // SOV (0) and VOS (5) are antipodal.
        let d = OrderDistribution::from_count_vector(3, vec![1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(average_swap_distance(&p, &d).unwrap(), ratio(3, 2));
    }

    #[test]
    fn uniform_values() {
        let p = hexagon();
        let d = uniform();
        assert_eq!(average_swap_distance(&p, &d).unwrap(), ratio(3, 2));
        assert_eq!(
            distance_mass(&p, &d).unwrap(),
            vec![ratio(1, 6), ratio(1, 3), ratio(1, 3), ratio(1, 6)]
        );
        for i in 0..6 {
            assert_eq!(local_average_swap_distance(&p, &d, i).unwrap(), ratio(3, 2));
            assert_eq!(local_bounds(&p, &d, i).unwrap(), (ratio(3, 2), ratio(3, 2)));
        }
        assert_eq!(expected_random_shuffle(&d), ratio(3, 2));
    }

    #[test]
    fn die_roll() {
        let d = uniform();
        assert_eq!(expected_die_roll(&d, 2).unwrap(), ratio(3, 4));
        assert_eq!(expected_die_roll(&d, 6).unwrap(), ratio(5, 4));
        assert!(expected_die_roll(&d, 1).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let p = Permutohedron::build(4).unwrap();
        assert!(average_swap_distance(&p, &uniform()).is_err());
        assert!(local_average_swap_distance(&hexagon(), &uniform(), 6).is_err());
    }
}
