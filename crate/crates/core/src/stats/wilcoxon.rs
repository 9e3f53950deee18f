//! Exact Wilcoxon signed-rank test.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{ratio, Rational};

/// Direction of the alternative hypothesis for the differences `x - y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Alternative {
    /// `x` tends to be smaller than `y`.
    #[default]
    Less,
    Greater,
    TwoSided,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WilcoxonResult {
    /// Sum of the ranks of the positive differences.
    pub v: Rational,
    pub p: BigRational,
    /// Number of non-zero differences that were ranked.
    pub n_used: usize,
    pub alternative: Alternative,
}

/// Largest sample for which the null distribution is built by listing all
/// sign assignments; larger samples use a convolution over rank sums.
pub const ENUMERATION_LIMIT: usize = 20;

/// Exact signed-rank test on the differences `x - y` of `pairs`.
///
/// Zero differences are dropped; tied absolute differences share their
/// average rank.
pub fn wilcoxon_signed_rank(
    pairs: &[(Rational, Rational)],
    alternative: Alternative,
) -> Result<WilcoxonResult> {
    if pairs.is_empty() {
        return Err(Error::invalid(
            "the signed-rank test needs at least one pair",
        ));
    }
    let mut diffs: Vec<Rational> = pairs
        .iter()
        .map(|(x, y)| x - y)
        .filter(|d| !d.is_zero())
        .collect();
    if diffs.is_empty() {
        return Err(Error::Undefined("all differences are zero".into()));
    }
    diffs.sort_by_key(|d| d.abs());
    let t = diffs.len();

    // Ranks doubled so average ranks stay integral.
    let mut ranks2 = vec![0u64; t];
    let mut i = 0;
    while i < t {
        let mut j = i;
        while j + 1 < t && diffs[j + 1].abs() == diffs[i].abs() {
            j += 1;
        }
        for r in &mut ranks2[i..=j] {
            *r = (i + 1 + j + 1) as u64;
        }
        i = j + 1;
    }
    let v2: u64 = diffs
        .iter()
        .zip(&ranks2)
        .filter(|(d, _)| d.is_positive())
        .map(|(_, r)| r)
        .sum();

    let counts = if t <= ENUMERATION_LIMIT {
        null_by_enumeration(&ranks2)
    } else {
        null_by_convolution(&ranks2)
    };
    let total = BigUint::one() << t;
    let below: BigUint = counts[..=v2 as usize].iter().sum();
    let above: BigUint = counts[v2 as usize..].iter().sum();
    let frac = |c: BigUint| BigRational::new(BigInt::from(c), BigInt::from(total.clone()));
    let p = match alternative {
        Alternative::Less => frac(below),
        Alternative::Greater => frac(above),
        Alternative::TwoSided => {
            let two = frac(below.min(above) * 2u32);
            two.min(BigRational::one())
        }
    };
    Ok(WilcoxonResult {
        v: ratio(v2 as i128, 2),
        p,
        n_used: t,
        alternative,
    })
}

/// Number of sign assignments giving each doubled positive-rank sum.
fn null_by_enumeration(ranks2: &[u64]) -> Vec<BigUint> {
    let max: u64 = ranks2.iter().sum();
    let mut counts = vec![0u64; max as usize + 1];
    for mask in 0u64..(1 << ranks2.len()) {
        let s: u64 = ranks2
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, r)| r)
            .sum();
        counts[s as usize] += 1;
    }
    counts.into_iter().map(BigUint::from).collect()
}

fn null_by_convolution(ranks2: &[u64]) -> Vec<BigUint> {
    let max: u64 = ranks2.iter().sum();
    let mut counts = vec![BigUint::zero(); max as usize + 1];
    counts[0] = BigUint::one();
    let mut reach = 0usize;
    for &r in ranks2 {
        let r = r as usize;
        for s in (0..=reach).rev() {
            if !counts[s].is_zero() {
                let c = counts[s].clone();
                counts[s + r] += c;
            }
        }
        reach += r;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn negatives(t: usize) -> Vec<(Rational, Rational)> {
        (0..t)
            .map(|k| (int(k as i128), int(k as i128 + 1 + k as i128)))
            .collect()
    }

    #[test]
    fn all_negative_differences() {
        let r = wilcoxon_signed_rank(&negatives(8), Alternative::Less).unwrap();
        assert_eq!(r.v, int(0));
        assert_eq!(r.p, BigRational::new(1.into(), 256.into()));
        let r = wilcoxon_signed_rank(&negatives(4), Alternative::Less).unwrap();
        assert_eq!(r.p, BigRational::new(1.into(), 16.into()));
        let r = wilcoxon_signed_rank(&negatives(4), Alternative::TwoSided).unwrap();
        assert_eq!(r.p, BigRational::new(1.into(), 8.into()));
        let r = wilcoxon_signed_rank(&negatives(4), Alternative::Greater).unwrap();
        assert_eq!(r.p, BigRational::one());
    }

    #[test]
    fn zero_differences() {
        assert!(matches!(
            wilcoxon_signed_rank(&[(int(1), int(1))], Alternative::Less),
            Err(Error::Undefined(_))
        ));
        let mut pairs = negatives(3);
        pairs.push((int(5), int(5)));
        assert_eq!(
            wilcoxon_signed_rank(&pairs, Alternative::Less)
                .unwrap()
                .n_used,
            3
        );
    }

    #[test]
    fn ties_get_average_ranks() {
        // |d| = 1, 1, 2 with the 2 positive: ranks 1.5, 1.5, 3.
        let pairs = [(int(0), int(1)), (int(0), int(1)), (int(2), int(0))];
        let r = wilcoxon_signed_rank(&pairs, Alternative::Less).unwrap();
        assert_eq!(r.v, int(3));
    }

    #[test]
    fn enumeration_and_convolution_agree() {
        let ranks2: Vec<u64> = vec![2, 4, 7, 7, 10, 12, 14, 16, 18, 20];
        assert_eq!(null_by_enumeration(&ranks2), null_by_convolution(&ranks2));
    }
}
