mod common;

use std::collections::BTreeSet;

use common::*;
use rand::Rng;
use swapdist_core::optimality::{min_bruteforce, DEFAULT_ENUM_CAP};
use swapdist_core::structure::*;
use swapdist_core::{OrderDistribution, Permutohedron};

fn hexagon() -> Permutohedron {
    Permutohedron::build(3).unwrap()
}

fn dist(w: &[i128]) -> OrderDistribution {
    OrderDistribution::from_count_vector(3, as_u64(w)).unwrap()
}

/// Position (0..6) of each vertex around the hexagon.
fn position(v: usize) -> usize {
    HEXAGON.iter().position(|&h| h == v).unwrap()
}

#[test]
fn local_minimizers_radiate() {
    let table = distance_table(3);
    let p = hexagon();
    let mut r = rng(21);
    for _ in 0..100 {
        let m = r.gen_range(1..=6);
        let w = random_counts(&mut r, m, true);
        let i = r.gen_range(0..6);
        let shuffles = all_shuffles(&table, &w);
        let local = |v: &[i128]| (0..6).map(|j| v[j] * table[i][j]).sum::<i128>();
        let best = shuffles.iter().map(|(v, _)| local(v)).min().unwrap();
        for (v, _) in shuffles.iter().filter(|(v, _)| local(v) == best) {
            // Partial order around i: along each arc, never increasing.
            for a in 0..6 {
                for &b in p.neighbors(a) {
                    if table[i][b] == table[i][a] + 1 {
                        assert!(v[a] >= v[b], "{v:?} around {i}");
                    }
                }
            }
            assert!(detect_radiation(&p, &dist(v)).unwrap());
        }
    }
}

#[test]
fn contiguity_and_optimality_for_small_support() {
    let table = distance_table(3);
    let p = hexagon();
    let mut r = rng(22);
    for m in 1..=2 {
        for _ in 0..10 {
            let w = random_counts(&mut r, m, true);
            let shuffles = all_shuffles(&table, &w);
            let min = shuffles.iter().map(|s| s.1).min().unwrap();
            for (v, s) in &shuffles {
                assert_eq!(detect_contiguity(&p, &dist(v)).unwrap(), *s == min, "{v:?}");
            }
        }
    }
    // Three orders on a path with the smallest in the middle: contiguous,
    // not optimal.
    let mut v = vec![0i128; 6];
    v[HEXAGON[0]] = 5;
    v[HEXAGON[1]] = 1;
    v[HEXAGON[2]] = 3;
    let d = dist(&v);
    assert!(detect_contiguity(&p, &d).unwrap());
    let min = min_bruteforce(&p, &d, DEFAULT_ENUM_CAP).unwrap().value;
    let value = avg_d(&table, &v);
    assert!(value > min);
}

#[test]
fn witness_hasse_diagrams_are_canonical() {
    let p = hexagon();
    let mut r = rng(23);
    let forward = [0i64, 1, -1, 2, -2, 3];
    let mirror = [0i64, -1, 1, -2, 2, 3];
    for _ in 0..50 {
        let w = random_counts(&mut r, 6, true);
        let min = min_bruteforce(&p, &dist(&w), DEFAULT_ENUM_CAP).unwrap();
        for witness in &min.witnesses {
            let full = hasse(&witness.probs(), &p, HasseMode::Full).unwrap();
            // Walk the chain from its top.
            let arcs: Vec<(usize, usize)> = full.strict_arcs().collect();
            assert_eq!(arcs.len(), 5);
            let targets: BTreeSet<usize> = arcs.iter().map(|a| a.1).collect();
            let mut cur = (0..6).find(|v| !targets.contains(v)).unwrap();
            let mut chain = vec![cur];
            while let Some(&(_, next)) = arcs.iter().find(|a| a.0 == cur) {
                chain.push(next);
                cur = next;
            }
            let top = position(chain[0]) as i64;
            let offsets: Vec<i64> = chain
                .iter()
                .map(|&v| {
                    let o = (position(v) as i64 - top).rem_euclid(6);
                    if o > 3 {
                        o - 6
                    } else {
                        o
                    }
                })
                .collect();
            assert!(offsets == forward || offsets == mirror, "{offsets:?}");

            let edge = hasse(&witness.probs(), &p, HasseMode::EdgeRestricted).unwrap();
            assert_eq!(edge.strict_arcs().count(), 6);
            assert!(edge.tie_groups.is_empty());
        }
    }
}

#[test]
fn ties_in_hasse_diagrams() {
    let p = hexagon();
    let mut v = vec![0i128; 6];
    v[HEXAGON[0]] = 3;
    v[HEXAGON[1]] = 3;
    v[HEXAGON[2]] = 1;
    v[HEXAGON[5]] = 1;
    let h = hasse(&dist(&v).probs(), &p, HasseMode::EdgeRestricted).unwrap();
    let ties: Vec<(usize, usize)> = h
        .arcs
        .iter()
        .filter(|a| a.tie)
        .map(|a| (a.from, a.to))
        .collect();
    assert!(ties.contains(&(HEXAGON[0], HEXAGON[1])) && ties.contains(&(HEXAGON[1], HEXAGON[0])));
    assert!(h.tie_groups.contains(&{
        let mut g = vec![HEXAGON[0], HEXAGON[1]];
        g.sort();
        g
    }));
}

#[test]
fn flags_for_point_mass() {
    let p = hexagon();
    let f = flags(&p, &dist(&[0, 0, 0, 9, 0, 0])).unwrap();
    assert!(f.contiguous);
    assert_eq!(f.adjacency_top2, None);
    assert!(f.radiation);
    assert_eq!(f.wedge_triples.unwrap().len(), 4);
}

#[test]
fn general_contiguity_is_an_induced_path() {
    let p = Permutohedron::build(4).unwrap();
    // 0123 -> 1023 -> 1203 is a path of adjacent swaps.
    let idx = |labels: [usize; 4]| {
        p.vertex_index(&swapdist_core::Permutation::new(labels.to_vec()).unwrap())
            .unwrap()
    };
    let path = [idx([0, 1, 2, 3]), idx([1, 0, 2, 3]), idx([1, 2, 0, 3])];
    assert!(induces_path(&p, &path));
    let spread = [idx([0, 1, 2, 3]), idx([3, 2, 1, 0])];
    assert!(!induces_path(&p, &spread));
    let star = [
        idx([0, 1, 2, 3]),
        idx([1, 0, 2, 3]),
        idx([0, 2, 1, 3]),
        idx([0, 1, 3, 2]),
    ];
    assert!(!induces_path(&p, &star));
}
