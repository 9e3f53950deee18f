//! Koopmans–Beckmann quadratic assignment by exhaustive search, and the
//! problems it specializes to: swap distance minimization, minimum linear
//! arrangement and compression with prescribed lengths.

use crate::distribution::OrderDistribution;
use crate::enumerate::for_each_permutation;
use crate::error::{Error, Result};
use crate::optimality::WITNESS_CAP;
use crate::permutohedron::Permutohedron;
use crate::rational::{factorial_u64, int, ratio, Rational};

/// Default limit on `N!` for the exhaustive solvers (`N ≤ 8`).
pub const DEFAULT_QAP_CAP: u64 = 40320;

/// Minimize `Σ_ij w_ij d_{σ(i) σ(j)}` over bijections `σ` from facilities to
/// locations.
#[derive(Clone, Debug, PartialEq)]
pub struct QapInstance {
    w: Vec<Vec<Rational>>,
    d: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QapSolution {
    pub value: Rational,
    /// Optimal `σ`, `σ[i]` being the location of facility `i`; at most
    /// [`WITNESS_CAP`] are kept.
    pub witnesses: Vec<Vec<usize>>,
    /// Number of optimal `σ`.
    pub count: u64,
}

impl QapInstance {
    pub fn new(w: Vec<Vec<Rational>>, d: Vec<Vec<Rational>>) -> Result<Self> {
        let n = w.len();
        if n == 0 || d.len() != n || w.iter().chain(&d).any(|row| row.len() != n) {
            return Err(Error::invalid(
                "flow and distance matrices must be square of equal size",
            ));
        }
        if (0..n).any(|i| d[i][i] != int(0)) {
            return Err(Error::invalid("distance matrix must have a zero diagonal"));
        }
        Ok(QapInstance { w, d })
    }

    /// Flows `p_i p_j` on permutohedron distances; the optimum is `⟨d⟩_min`.
    pub fn swap_distance(p: &Permutohedron, dist: &OrderDistribution) -> Result<Self> {
        if p.n() != dist.n() {
            return Err(Error::invalid("distribution and permutohedron differ in n"));
        }
        let probs = dist.probs();
        let w = probs
            .iter()
            .map(|a| probs.iter().map(|b| a * b).collect())
            .collect();
        let d = (0..p.len())
            .map(|i| (0..p.len()).map(|j| int(p.dist(i, j) as i128)).collect())
            .collect();
        Self::new(w, d)
    }

    /// Half the adjacency matrix on line distances `|a - b|`; the optimum is
    /// the minimum linear arrangement cost.
    pub fn linear_arrangement(g: &GraphInstance) -> Result<Self> {
        let n = g.n;
        let mut w = vec![vec![int(0); n]; n];
        for &(a, b) in &g.edges {
            w[a][b] = ratio(1, 2);
            w[b][a] = ratio(1, 2);
        }
        let d = (0..n)
            .map(|i| (0..n).map(|j| int(i.abs_diff(j) as i128)).collect())
            .collect();
        Self::new(w, d)
    }

    /// Flows `p_i/(N-1)` off the diagonal on "distances" `l_a` off the
    /// diagonal, so that `Σ_ij w_ij d_{σ(i)σ(j)} = Σ_i p_i l_{σ(i)}`.
    pub fn compression(c: &CodingInstance) -> Result<Self> {
        let n = c.p.len();
        if n < 2 {
            return Err(Error::invalid(
                "compression as an assignment needs at least 2 items",
            ));
        }
        let scale = ratio(1, n as i128 - 1);
        let w = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { int(0) } else { c.p[i] * scale })
                    .collect()
            })
            .collect();
        let d = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| if a == b { int(0) } else { c.l[a] })
                    .collect()
            })
            .collect();
        Self::new(w, d)
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn cost(&self, sigma: &[usize]) -> Rational {
        let mut acc = int(0);
        for (i, row) in self.w.iter().enumerate() {
            for (j, wij) in row.iter().enumerate() {
                if *wij != int(0) {
                    acc += wij * self.d[sigma[i]][sigma[j]];
                }
            }
        }
        acc
    }
}

fn check_cap(n: usize, cap: u64) -> Result<()> {
    match factorial_u64(n) {
        Some(f) if f <= cap => Ok(()),
        _ => Err(Error::capacity(format!(
            "{n}! assignments exceed the enumeration cap of {cap}"
        ))),
    }
}

pub fn qap_min(inst: &QapInstance, cap: u64) -> Result<QapSolution> {
    check_cap(inst.len(), cap)?;
    let mut best: Option<Rational> = None;
    let mut witnesses = Vec::new();
    let mut count = 0u64;
    for_each_permutation(inst.len(), |sigma| {
        let v = inst.cost(sigma);
        match best {
            Some(b) if v > b => return,
            Some(b) if v == b => {}
            _ => {
                best = Some(v);
                witnesses.clear();
                count = 0;
            }
        }
        count += 1;
        if witnesses.len() < WITNESS_CAP {
            witnesses.push(sigma.to_vec());
        }
    });
    Ok(QapSolution {
        value: best.unwrap(),
        witnesses,
        count,
    })
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphInstance {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::invalid(format!("edge ({a}, {b}) outside 0..{n}")));
            }
            if a == b {
                return Err(Error::invalid(format!("self-loop at {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::invalid(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(GraphInstance { n, edges })
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn star(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (0, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `Σ_edges |σ(a) - σ(b)|`.
    pub fn layout_cost(&self, sigma: &[usize]) -> u64 {
        self.edges
            .iter()
            .map(|&(a, b)| sigma[a].abs_diff(sigma[b]) as u64)
            .sum()
    }
}

/// Minimum total edge length over all layouts of `g` on a line, with one
/// optimal layout.
pub fn mla_min(g: &GraphInstance, cap: u64) -> Result<(u64, Vec<usize>)> {
    check_cap(g.n, cap)?;
    let mut best: Option<(u64, Vec<usize>)> = None;
    for_each_permutation(g.n, |sigma| {
        let c = g.layout_cost(sigma);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, sigma.to_vec()));
        }
    });
    Ok(best.unwrap_or((0, Vec::new())))
}

/// Expected total edge length of a uniformly random layout, `m (N+1)/3`.
pub fn mla_random(g: &GraphInstance) -> Rational {
    ratio(g.edges.len() as i128 * (g.n as i128 + 1), 3)
}

/// Probabilities to be paired one-to-one with prescribed lengths.
#[derive(Clone, Debug, PartialEq)]
pub struct CodingInstance {
    p: Vec<Rational>,
    l: Vec<Rational>,
}

impl CodingInstance {
    pub fn new(p: Vec<Rational>, l: Vec<Rational>) -> Result<Self> {
        if p.len() != l.len() || p.is_empty() {
            return Err(Error::invalid(
                "probabilities and lengths must have equal, non-zero size",
            ));
        }
        if p.iter().any(|x| *x < int(0)) || crate::rational::sum(&p) != int(1) {
            return Err(Error::invalid(
                "probabilities must be non-negative and sum to 1",
            ));
        }
        if l.iter().any(|x| *x <= int(0)) {
            return Err(Error::invalid("lengths must be positive"));
        }
        Ok(CodingInstance { p, l })
    }

    pub fn probs(&self) -> &[Rational] {
        &self.p
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.l
    }
}

/// `L_min`: probabilities sorted decreasingly against lengths sorted
/// increasingly.
pub fn compression_min(c: &CodingInstance) -> Rational {
    rearrangement_bounds(&c.p, &c.l).unwrap().0
}

/// `L_r`: expected `L` under a random pairing, the plain mean of the lengths.
pub fn compression_random(c: &CodingInstance) -> Rational {
    crate::rational::sum(&c.l) / int(c.l.len() as i128)
}

/// Smallest and largest `Σ a_i b_{τ(i)}` over pairings `τ`.
pub fn rearrangement_bounds(a: &[Rational], b: &[Rational]) -> Result<(Rational, Rational)> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    let max = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    let min = a.iter().zip(b.iter().rev()).map(|(x, y)| x * y).sum();
    Ok((min, max))
}
