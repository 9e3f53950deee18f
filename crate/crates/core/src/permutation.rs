//! Orderings of `n` labelled constituents and the swap distance between them.

use std::fmt;

use crate::error::{Error, Result};

/// An ordering of the labels `0..n`.
///
/// `labels()[k]` is the constituent placed at position `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n < 2 {
            return Err(Error::invalid(format!(
                "a permutation needs at least 2 labels, got {n}"
            )));
        }
        let mut seen = vec![false; n];
        for &l in &labels {
            if l >= n || seen[l] {
                return Err(Error::invalid(format!(
                    "{labels:?} is not a permutation of 0..{n}"
                )));
            }
            seen[l] = true;
        }
        Ok(Permutation(labels))
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    /// The same constituents in reverse order (the antipode on the
    /// permutohedron).
    pub fn reversed(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Number of pairs `(i, j)`, `i < j`, with `labels[i] > labels[j]`.
    pub fn inversions(&self) -> usize {
        count_inversions(&self.0)
    }

    /// Rank of this permutation in lexicographic order of label sequences
    /// (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.0.len();
        let mut rank = 0usize;
        let mut fact = 1usize;
        // Walk from the right so the factorial can be built incrementally.
        for i in (0..n).rev() {
            let smaller_right = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            rank += smaller_right * fact;
            fact *= n - i;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Result<Self> {
        let total = crate::rational::factorial_u64(n)
            .ok_or_else(|| Error::capacity(format!("{n}! does not fit in u64")))?;
        if rank as u64 >= total {
            return Err(Error::invalid(format!(
                "rank {rank} out of range for n = {n}"
            )));
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let mut out = Vec::with_capacity(n);
        let mut fact = (total / n as u64) as usize;
        for k in (1..=n).rev() {
            let idx = rank / fact;
            rank %= fact;
            out.push(pool.remove(idx));
            if k > 1 {
                fact /= k - 1;
            }
        }
        Permutation::new(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

fn count_inversions(seq: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// Minimum number of adjacent swaps turning `a` into `b`.
///
/// Equals the Kendall tau distance: the number of label pairs that appear
/// in opposite relative order in `a` and `b`.
pub fn swap_distance(a: &Permutation, b: &Permutation) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    let mut pos_in_b = vec![0usize; b.len()];
    for (i, &l) in b.labels().iter().enumerate() {
        pos_in_b[l] = i;
    }
    let relative: Vec<usize> = a.labels().iter().map(|&l| pos_in_b[l]).collect();
    Ok(count_inversions(&relative))
}

/// Symbols naming the constituents, e.g. `S`, `O`, `V`.
///
/// Symbol `k` names label `k`, so with the alphabet `"SOV"` the identity
/// permutation renders as `SOV`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.len() < 2 {
            return Err(Error::invalid("alphabet needs at least 2 symbols"));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::invalid(format!("alphabet repeats symbol '{c}'")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Alphabet `A, B, C, ...` for `n` constituents.
    pub fn letters(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::invalid("at most 26 letters"));
        }
        Self::new(&(0..n).map(|i| (b'A' + i as u8) as char).collect::<String>())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn parse(&self, label: &str) -> Result<Permutation> {
        let chars: Vec<char> = label.trim().chars().collect();
        if chars.len() != self.symbols.len() {
            return Err(Error::invalid(format!(
                "order '{label}' does not have {} constituents",
                self.symbols.len()
            )));
        }
        let labels = chars
            .iter()
            .map(|c| {
                self.symbols
                    .iter()
                    .position(|s| s == c)
                    .ok_or_else(|| Error::invalid(format!("'{c}' is not in the alphabet")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(labels)
            .map_err(|_| Error::invalid(format!("order '{label}' repeats a constituent")))
    }

    pub fn render(&self, p: &Permutation) -> String {
        p.labels().iter().map(|&l| self.symbols[l]).collect()
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet {
            symbols: vec!['S', 'O', 'V'],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sov(label: &str) -> Permutation {
        Alphabet::default().parse(label).unwrap()
    }

    #[test]
    fn swap_distances_from_sov() {
        assert_eq!(swap_distance(&sov("SOV"), &sov("SOV")).unwrap(), 0);
        assert_eq!(swap_distance(&sov("SOV"), &sov("SVO")).unwrap(), 1);
        assert_eq!(swap_distance(&sov("SOV"), &sov("VSO")).unwrap(), 2);
        assert_eq!(swap_distance(&sov("SOV"), &sov("VOS")).unwrap(), 3);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let a = Permutation::identity(3).unwrap();
        let b = Permutation::identity(4).unwrap();
        assert!(matches!(
            swap_distance(&a, &b),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn malformed_permutations() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert!(Alphabet::default().parse("SSV").is_err());
        assert!(Alphabet::default().parse("SOX").is_err());
        assert!(Alphabet::default().parse("SO").is_err());
        assert!(Alphabet::new("SS").is_err());
    }

    #[test]
    fn lex_rank_round_trip() {
        for n in 2..=5 {
            let total = crate::rational::factorial_u64(n).unwrap() as usize;
            for r in 0..total {
                let p = Permutation::from_lex_rank(n, r).unwrap();
                assert_eq!(p.lex_rank(), r);
            }
        }
        assert_eq!(sov("SOV").lex_rank(), 0);
        assert_eq!(sov("VOS").lex_rank(), 5);
    }

    #[test]
    fn render_round_trip() {
        let a = Alphabet::default();
        for l in ["SOV", "SVO", "OSV", "OVS", "VSO", "VOS"] {
            assert_eq!(a.render(&a.parse(l).unwrap()), l);
        }
    }
}
