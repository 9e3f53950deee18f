//! Structural signatures of swap distance minimization on the
//! permutohedron, and Hasse diagrams of the orders induced by values on
//! its vertices.

use std::collections::BTreeSet;

use crate::distribution::OrderDistribution;
use crate::error::{Error, Result};
use crate::optimality::{OPTIMAL_SCHEME, OPTIMAL_SCHEME_MIRROR};
use crate::permutation::Alphabet;
use crate::permutohedron::Permutohedron;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub contiguous: bool,
    /// `None` when fewer than two orders have non-zero probability.
    pub adjacency_top2: Option<bool>,
    pub radiation: bool,
    /// `/`-structures; `None` unless `n = 3`.
    pub slash_pairs: Option<Vec<(usize, usize)>>,
    /// `∧`-structures `(t, u, v)` with `u` in the middle; `None` unless `n = 3`.
    pub wedge_triples: Option<Vec<(usize, usize, usize)>>,
}

pub fn flags(p: &Permutohedron, d: &OrderDistribution) -> Result<StructureFlags> {
    check(p, d)?;
    let n3 = p.n() == 3;
    Ok(StructureFlags {
        contiguous: detect_contiguity(p, d)?,
        adjacency_top2: match detect_adjacency_top2(p, d) {
            Ok(b) => Some(b),
            Err(Error::Undefined(_)) => None,
            Err(e) => return Err(e),
        },
        radiation: detect_radiation(p, d)?,
        slash_pairs: if n3 { Some(detect_slash(p, d)?) } else { None },
        wedge_triples: if n3 { Some(detect_wedge(p, d)?) } else { None },
    })
}

fn check(p: &Permutohedron, d: &OrderDistribution) -> Result<()> {
    if p.n() != d.n() {
        return Err(Error::invalid(format!(
            "distribution over n = {} orders on a permutohedron of order {}",
            d.n(),
            p.n()
        )));
    }
    Ok(())
}

/// True when the non-zero probability vertices induce a path. A support
/// covering every vertex counts as contiguous.
pub fn detect_contiguity(p: &Permutohedron, d: &OrderDistribution) -> Result<bool> {
    check(p, d)?;
    let (m, support) = d.nonzero_support();
    Ok(induces_path(p, &support) || m == p.len())
}

/// Whether `set` induces a simple path (a single vertex is a path).
pub fn induces_path(p: &Permutohedron, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let inside: BTreeSet<usize> = set.iter().copied().collect();
    let mut edges = 0;
    for &v in set {
        let deg = p.neighbors(v).iter().filter(|w| inside.contains(w)).count();
        if deg > 2 {
            return false;
        }
        edges += deg;
    }
    if edges / 2 != set.len() - 1 {
        return false;
    }
    // m - 1 edges and connected means a tree; degree <= 2 makes it a path.
    let mut seen = BTreeSet::from([set[0]]);
    let mut stack = vec![set[0]];
    while let Some(v) = stack.pop() {
        for &w in p.neighbors(v) {
            if inside.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// True when some vertex carrying `π_1` is adjacent to some other vertex
/// carrying `π_2`.
pub fn detect_adjacency_top2(p: &Permutohedron, d: &OrderDistribution) -> Result<bool> {
    check(p, d)?;
    if d.m() < 2 {
        return Err(Error::Undefined(
            "adjacency of the two most likely orders needs two non-zero probabilities".into(),
        ));
    }
    let w = d.weights();
    let r = d.ranked();
    let (w1, w2) = (w[r.order[0]], w[r.order[1]]);
    for a in 0..p.len() {
        if w[a] != w1 {
            continue;
        }
        if p.neighbors(a).iter().any(|&b| w[b] == w2) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True when, from some most likely vertex `u`, probability never increases
/// along a geodesic leaving `u`: every edge `(a, b)` with
/// `d(u, b) = d(u, a) + 1` has `p_a ≥ p_b`.
pub fn detect_radiation(p: &Permutohedron, d: &OrderDistribution) -> Result<bool> {
    check(p, d)?;
    let w = d.weights();
    let top = *w.iter().max().unwrap();
    Ok((0..p.len())
        .filter(|&u| w[u] == top)
        .any(|u| radiates_from(p, w, u)))
}

pub(crate) fn radiates_from(p: &Permutohedron, w: &[u64], u: usize) -> bool {
    (0..p.len()).all(|a| {
        p.neighbors(a)
            .iter()
            .all(|&b| p.dist(u, b) != p.dist(u, a) + 1 || w[a] >= w[b])
    })
}

/// Hexagon edges whose endpoints both carry at least `π_2`, as vertex
/// pairs in cyclic order.
pub fn detect_slash(p: &Permutohedron, d: &OrderDistribution) -> Result<Vec<(usize, usize)>> {
    check(p, d)?;
    let hex = p.hexagon()?;
    let w = d.weights();
    let w2 = w[d.ranked().order[1]];
    Ok((0..6)
        .map(|k| (hex[k], hex[(k + 1) % 6]))
        .filter(|&(a, b)| w[a] >= w2 && w[b] >= w2)
        .collect())
}

/// Consecutive hexagon triples `(t, u, v)` with `p_u ≥ p_t`, `p_u ≥ p_v`
/// and all three at least `π_3`.
pub fn detect_wedge(
    p: &Permutohedron,
    d: &OrderDistribution,
) -> Result<Vec<(usize, usize, usize)>> {
    check(p, d)?;
    let hex = p.hexagon()?;
    let w = d.weights();
    let w3 = w[d.ranked().order[2]];
    Ok((0..6)
        .map(|k| (hex[(k + 5) % 6], hex[k], hex[(k + 1) % 6]))
        .filter(|&(t, u, v)| w[t].min(w[u]).min(w[v]) >= w3 && w[u] >= w[t] && w[u] >= w[v])
        .collect())
}

/// Which vertex pairs are compared when building a Hasse diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HasseMode {
    /// Only permutohedron neighbors are compared.
    #[default]
    EdgeRestricted,
    /// Every pair is compared, giving the total preorder of the values.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HasseArc {
    pub from: usize,
    pub to: usize,
    /// Both ends carry the same value; the reverse arc is also present.
    pub tie: bool,
}

/// Transitive reduction of `value(u) ≥ value(v)` over the compared pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub mode: HasseMode,
    pub values: Vec<Rational>,
    /// Sorted by `(from, to)`.
    pub arcs: Vec<HasseArc>,
    /// Classes of vertices joined by ties (only classes of size ≥ 2).
    pub tie_groups: Vec<Vec<usize>>,
}

impl HasseDiagram {
    pub fn strict_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().filter(|a| !a.tie).map(|a| (a.from, a.to))
    }
}

pub fn hasse(values: &[Rational], p: &Permutohedron, mode: HasseMode) -> Result<HasseDiagram> {
    let n = p.len();
    if values.len() != n {
        return Err(Error::invalid(format!(
            "expected {n} values, got {}",
            values.len()
        )));
    }
    let compared = |a: usize, b: usize| a != b && (mode == HasseMode::Full || p.are_adjacent(a, b));

    // Tie classes: connected components of equal compared pairs.
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if class[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![s];
        class[s] = id;
        let mut k = 0;
        while k < members.len() {
            let a = members[k];
            for b in 0..n {
                if class[b] == usize::MAX && compared(a, b) && values[a] == values[b] {
                    class[b] = id;
                    members.push(b);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        classes.push(members);
    }

    // Strict relation between classes; acyclic because values strictly drop.
    let c = classes.len();
    let mut above = vec![vec![false; c]; c];
    for a in 0..n {
        for b in 0..n {
            if compared(a, b) && values[a] > values[b] {
                above[class[a]][class[b]] = true;
            }
        }
    }
    let mut reach = above.clone();
    for k in 0..c {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (r, &v) in row.iter_mut().zip(&via) {
                *r |= v;
            }
        }
    }
    let mut kept = vec![vec![false; c]; c];
    for i in 0..c {
        for j in 0..c {
            kept[i][j] =
                above[i][j] && !(0..c).any(|k| k != i && k != j && reach[i][k] && reach[k][j]);
        }
    }

    let mut arcs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !compared(a, b) {
                continue;
            }
            let (ca, cb) = (class[a], class[b]);
            if ca == cb {
                let chained =
                    mode == HasseMode::EdgeRestricted || tie_chain_neighbors(&classes[ca], a, b);
                if chained {
                    arcs.push(HasseArc {
                        from: a,
                        to: b,
                        tie: true,
                    });
                }
            } else if kept[ca][cb] && values[a] > values[b] {
                arcs.push(HasseArc {
                    from: a,
                    to: b,
                    tie: false,
                });
            }
        }
    }
    Ok(HasseDiagram {
        mode,
        values: values.to_vec(),
        arcs,
        tie_groups: classes.into_iter().filter(|g| g.len() > 1).collect(),
    })
}

// In full mode a tie class is a clique; keep only a chain through it.
fn tie_chain_neighbors(members: &[usize], a: usize, b: usize) -> bool {
    let pa = members.iter().position(|&x| x == a).unwrap();
    let pb = members.iter().position(|&x| x == b).unwrap();
    pa.abs_diff(pb) == 1
}

/// The two probability rankings predicted for `n = 3` when `most_likely`
/// is the most likely order, as chains of vertex indices.
pub fn predicted_rankings(
    p: &Permutohedron,
    alphabet: &Alphabet,
    most_likely: &str,
) -> Result<[Vec<usize>; 2]> {
    let hex = p.hexagon()?;
    let source = p.index_of_label(alphabet, most_likely)?;
    let start = hex.iter().position(|&v| v == source).unwrap();
    let at = |pos: usize| hex[(start + pos - 1) % 6];
    Ok([
        OPTIMAL_SCHEME.iter().map(|&k| at(k)).collect(),
        OPTIMAL_SCHEME_MIRROR.iter().map(|&k| at(k)).collect(),
    ])
}

/// Renders a chain of vertices as `A ≥ B ≥ ...`.
pub fn render_chain(p: &Permutohedron, alphabet: &Alphabet, chain: &[usize]) -> String {
    chain
        .iter()
        .map(|&v| alphabet.render(p.vertex(v)))
        .collect::<Vec<_>>()
        .join("≥")
}
