//! Analytic bounds on `⟨d⟩` and on the distance mass `P(d)`.

use crate::distribution::OrderDistribution;
use crate::rational::{int, ratio, Rational};

/// Lower and upper bounds of `⟨d⟩` that depend only on `S̄` (and `n`).
///
/// For `n = 3`: `max(S̄, 2S̄ - 2/3) ≤ ⟨d⟩ ≤ min(S̄ + 1, 2S̄ + 1/2, 3/2)`,
/// with the upper end also capped by the general `3 S̄`.
/// Otherwise `S̄ ≤ ⟨d⟩ ≤ min(max_global, d_max S̄)`, where `max_global` is the
/// largest `⟨d⟩` attainable for this `n` (`d_max/2` as computed by
/// [`crate::optimality::analyze`]).
pub fn bounds(d: &OrderDistribution) -> (Rational, Rational) {
    let dominance = d.dominance();
    if d.n() == 3 {
        let lower = dominance.max(int(2) * dominance - ratio(2, 3));
        let upper = (dominance + int(1))
            .min(int(2) * dominance + ratio(1, 2))
            .min(ratio(3, 2))
            .min(int(3) * dominance);
        return (lower, upper);
    }
    let d_max = (d.n() * (d.n() - 1) / 2) as i128;
    let upper = (int(d_max) * dominance).min(ratio(d_max, 2));
    (dominance, upper)
}

/// `Z = π_1 π_6 + π_2 π_5 + π_3 π_4`, for `n = 3`.
pub fn z_term(d: &OrderDistribution) -> Option<Rational> {
    if d.n() != 3 {
        return None;
    }
    let pi = d.ranked().pi;
    Some(pi[0] * pi[5] + pi[1] * pi[4] + pi[2] * pi[3])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_cases() {
        let point = OrderDistribution::from_count_vector(3, vec![0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(bounds(&point), (int(0), int(0)));
        let uniform = OrderDistribution::from_count_vector(3, vec![1; 6]).unwrap();
        assert_eq!(bounds(&uniform), (int(1), ratio(3, 2)));
        assert_eq!(z_term(&uniform), Some(ratio(1, 12)));
    }
}
