mod common;

use common::rng;
use proptest::prelude::*;
use rand::Rng;
use swapdist_core::qap::*;
use swapdist_core::rational::{int, ratio};
use swapdist_core::Rational;

fn matrix(r: &mut impl Rng, n: usize, zero_diag: bool) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if zero_diag && i == j {
                        int(0)
                    } else {
                        ratio(r.gen_range(-5..=9), r.gen_range(1..=3))
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn small_instances_match_enumeration() {
    let mut r = rng(41);
    for _ in 0..50 {
        let w = matrix(&mut r, 3, false);
        let d = matrix(&mut r, 3, true);
        let inst = QapInstance::new(w.clone(), d.clone()).unwrap();
        let mut best: Option<Rational> = None;
        let mut count = 0;
        for s in itertools::Itertools::permutations(0..3usize, 3) {
            let mut c = int(0);
            for i in 0..3 {
                for j in 0..3 {
                    c += w[i][j] * d[s[i]][s[j]];
                }
            }
            match best {
                Some(b) if c > b => {}
                Some(b) if c == b => count += 1,
                _ => {
                    best = Some(c);
                    count = 1;
                }
            }
        }
        let sol = qap_min(&inst, DEFAULT_QAP_CAP).unwrap();
        assert_eq!(Some(sol.value), best);
        assert_eq!(sol.count, count);
        for wit in &sol.witnesses {
            assert_eq!(inst.cost(wit), sol.value);
        }
    }
}

#[test]
fn random_layout_cost_is_the_mean() {
    let mut r = rng(42);
    for _ in 0..30 {
        let n = r.gen_range(2..=6);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if r.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let g = GraphInstance::new(n, edges).unwrap();
        let layouts: Vec<u64> = itertools::Itertools::permutations(0..n, n)
            .map(|s| g.layout_cost(&s))
            .collect();
        let mean = ratio(layouts.iter().sum::<u64>() as i128, layouts.len() as i128);
        assert_eq!(mla_random(&g), mean);
    }
}

proptest! {
    #[test]
    fn rearrangement_bounds_hold(a in prop::collection::vec(-9i128..10, 1..=6), seed in any::<u64>()) {
        let mut r = rng(seed);
        let b: Vec<Rational> = (0..a.len()).map(|_| int(r.gen_range(-9..10))).collect();
        let a: Vec<Rational> = a.into_iter().map(int).collect();
        let (lo, hi) = rearrangement_bounds(&a, &b).unwrap();
        let mut seen_lo = false;
        let mut seen_hi = false;
        for s in itertools::Itertools::permutations(0..a.len(), a.len()) {
            let v: Rational = (0..a.len()).map(|i| a[i] * b[s[i]]).sum();
            prop_assert!(lo <= v && v <= hi);
            seen_lo |= v == lo;
            seen_hi |= v == hi;
        }
        prop_assert!(seen_lo && seen_hi);
    }
}

#[test]
fn uniform_coding_costs_the_mean_length() {
    let p = vec![ratio(1, 4); 4];
    let l = vec![int(1), int(2), int(2), int(7)];
    let c = CodingInstance::new(p, l).unwrap();
    assert_eq!(compression_min(&c), int(3));
    assert_eq!(compression_random(&c), int(3));
    assert!(CodingInstance::new(vec![int(1)], vec![int(0)]).is_err());
}
