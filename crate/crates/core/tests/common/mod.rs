//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls into the algorithms under test: permutations come from
//! itertools, distances from pair counting, and shuffles are enumerated over
//! all `N!` permutations of the probability vector.

#![allow(dead_code)]

use itertools::Itertools;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Q = Ratio<i128>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All permutations of `0..n` in lexicographic order.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Number of label pairs in opposite relative order.
pub fn kendall(a: &[usize], b: &[usize]) -> usize {
    let pos = |s: &[usize], x: usize| s.iter().position(|&y| y == x).unwrap();
    let mut k = 0;
    for x in 0..a.len() {
        for y in x + 1..a.len() {
            let ab = pos(a, x) < pos(a, y);
            let bb = pos(b, x) < pos(b, y);
            if ab != bb {
                k += 1;
            }
        }
    }
    k
}

pub fn distance_table(n: usize) -> Vec<Vec<i128>> {
    let ps = perms(n);
    ps.iter()
        .map(|a| ps.iter().map(|b| kendall(a, b) as i128).collect())
        .collect()
}

/// `Σ_ij d_ij w_i w_j` over integer weights.
pub fn weighted_sum(dist: &[Vec<i128>], w: &[i128]) -> i128 {
    let mut acc = 0;
    for i in 0..w.len() {
        for j in 0..w.len() {
            acc += dist[i][j] * w[i] * w[j];
        }
    }
    acc
}

pub fn avg_d(dist: &[Vec<i128>], w: &[i128]) -> Q {
    let t: i128 = w.iter().sum();
    Q::new(weighted_sum(dist, w), t * t)
}

/// `⟨d⟩` (as numerators over `F²`) for every one of the `N!` shufflings.
pub fn all_shuffles(dist: &[Vec<i128>], w: &[i128]) -> Vec<(Vec<i128>, i128)> {
    let n = w.len();
    (0..n)
        .permutations(n)
        .map(|sigma| {
            let mut v = vec![0; n];
            for i in 0..n {
                v[sigma[i]] = w[i];
            }
            let s = weighted_sum(dist, &v);
            (v, s)
        })
        .collect()
}

/// The hexagon of orders over S, O, V, as lexicographic indices in cyclic
/// order: SOV, SVO, VSO, VOS, OVS, OSV.
pub const HEXAGON: [usize; 6] = [0, 1, 4, 5, 3, 2];

/// Whether the non-zero vertices of an `n = 3` arrangement occupy one
/// run of consecutive hexagon positions (all six counts).
pub fn hexagon_contiguous(w: &[i128]) -> bool {
    let on: Vec<bool> = HEXAGON.iter().map(|&v| w[v] > 0).collect();
    let m = on.iter().filter(|&&b| b).count();
    if m == 6 {
        return true;
    }
    // Count runs of `true` around the cycle.
    let starts = (0..6).filter(|&k| on[k] && !on[(k + 5) % 6]).count();
    starts == 1
}

/// Random count vector over 6 vertices with `m` non-zero entries.
pub fn random_counts(rng: &mut ChaCha8Rng, m: usize, distinct: bool) -> Vec<i128> {
    let mut values: Vec<i128> = if distinct {
        let mut pool: Vec<i128> = (1..=40).collect();
        pool.shuffle(rng);
        pool[..m].to_vec()
    } else {
        (0..m).map(|_| rng.gen_range(1..=12)).collect()
    };
    values.extend(std::iter::repeat_n(0, 6 - m));
    values.shuffle(rng);
    values
}

pub fn dominance(w: &[i128]) -> Q {
    let t: i128 = w.iter().sum();
    let sq: i128 = w.iter().map(|x| x * x).sum();
    Q::from_integer(1) - Q::new(sq, t * t)
}

pub fn as_u64(w: &[i128]) -> Vec<u64> {
    w.iter().map(|&x| x as u64).collect()
}
