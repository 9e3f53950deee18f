//! The permutohedron: orderings joined by single adjacent swaps.

use std::collections::{HashMap, VecDeque};

use crate::enumerate::for_each_permutation;
use crate::error::{Error, Result};
use crate::permutation::{swap_distance, Alphabet, Permutation};

/// Default largest `n` accepted by [`Permutohedron::build`].
pub const DEFAULT_N_CAP: usize = 5;

#[derive(Clone, Debug)]
pub struct Permutohedron {
    n: usize,
    vertices: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
    adjacency: Vec<Vec<usize>>,
    dist: Vec<Vec<u32>>,
}

impl Permutohedron {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with_cap(n, DEFAULT_N_CAP)
    }

    pub fn build_with_cap(n: usize, n_cap: usize) -> Result<Self> {
        if n < 2 || n > n_cap {
            return Err(Error::capacity(format!(
                "permutohedron size n = {n} outside 2..={n_cap}"
            )));
        }
        let mut vertices = Vec::new();
        for_each_permutation(n, |p| vertices.push(Permutation::new(p.to_vec()).unwrap()));
        let index: HashMap<Vec<usize>, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.labels().to_vec(), i))
            .collect();

        let adjacency: Vec<Vec<usize>> = vertices
            .iter()
            .map(|v| {
                let mut nb: Vec<usize> = (0..n - 1)
                    .map(|k| {
                        let mut w = v.labels().to_vec();
                        w.swap(k, k + 1);
                        index[&w]
                    })
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();

        let count = vertices.len();
        let mut dist = vec![vec![u32::MAX; count]; count];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adjacency[u] {
                    if row[w] == u32::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }

        for i in 0..count {
            for j in 0..count {
                let inv = swap_distance(&vertices[i], &vertices[j])?;
                if dist[i][j] as usize != inv {
                    return Err(Error::Internal(format!(
                        "BFS distance {} between vertices {i} and {j} differs from inversion count {inv}",
                        dist[i][j]
                    )));
                }
            }
        }

        Ok(Permutohedron {
            n,
            vertices,
            index,
            adjacency,
            dist,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices, `N = n!`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Diameter `n (n - 1) / 2`.
    pub fn d_max(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Permutation {
        &self.vertices[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn dist(&self, i: usize, j: usize) -> usize {
        self.dist[i][j] as usize
    }

    pub fn distance_matrix(&self) -> &[Vec<u32>] {
        &self.dist
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.dist[i][j] == 1
    }

    /// Undirected edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nb) in self.adjacency.iter().enumerate() {
            for &j in nb {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn vertex_index(&self, perm: &Permutation) -> Result<usize> {
        if perm.len() != self.n {
            return Err(Error::invalid(format!(
                "permutation of length {} on a permutohedron of order {}",
                perm.len(),
                self.n
            )));
        }
        Ok(self.index[perm.labels()])
    }

    pub fn index_of_label(&self, alphabet: &Alphabet, label: &str) -> Result<usize> {
        if alphabet.len() != self.n {
            return Err(Error::invalid(format!(
                "alphabet has {} symbols, expected {}",
                alphabet.len(),
                self.n
            )));
        }
        self.vertex_index(&alphabet.parse(label)?)
    }

    /// Vertex indices in cyclic order around the hexagon (`n = 3` only).
    ///
    /// Starts at vertex 0 and steps to its smaller-indexed neighbor first, so
    /// with the alphabet `SOV` the cycle reads SOV, SVO, VSO, VOS, OVS, OSV.
    pub fn hexagon(&self) -> Result<[usize; 6]> {
        if self.n != 3 {
            return Err(Error::unsupported(format!(
                "the hexagon layout needs n = 3, got n = {}",
                self.n
            )));
        }
        let mut cycle = [0usize; 6];
        let mut prev = 0;
        let mut cur = self.adjacency[0][0];
        cycle[1] = cur;
        for slot in cycle.iter_mut().skip(2) {
            let next = *self.adjacency[cur].iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            *slot = cur;
        }
        Ok(cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let p2 = Permutohedron::build(2).unwrap();
        assert_eq!(p2.len(), 2);
        assert_eq!(p2.edges(), vec![(0, 1)]);
        let p3 = Permutohedron::build(3).unwrap();
        assert_eq!(p3.len(), 6);
        assert_eq!(p3.edges().len(), 6);
        assert_eq!(p3.d_max(), 3);
        let p4 = Permutohedron::build(4).unwrap();
        assert_eq!(p4.len(), 24);
        assert!(p4.adjacency().iter().all(|nb| nb.len() == 3));
        let diam = p4.distance_matrix().iter().flatten().max().copied();
        assert_eq!(diam, Some(6));
    }

    #[test]
    fn out_of_range_orders() {
        assert!(matches!(Permutohedron::build(1), Err(Error::Capacity(_))));
        assert!(matches!(Permutohedron::build(6), Err(Error::Capacity(_))));
        assert!(Permutohedron::build_with_cap(6, 6).is_ok());
    }

    #[test]
    fn hexagon_matches_the_familiar_cycle() {
        let p = Permutohedron::build(3).unwrap();
        let a = Alphabet::default();
        let labels: Vec<String> = p
            .hexagon()
            .unwrap()
            .iter()
            .map(|&i| a.render(p.vertex(i)))
            .collect();
        assert_eq!(labels, ["SOV", "SVO", "VSO", "VOS", "OVS", "OSV"]);
        assert!(Permutohedron::build(4).unwrap().hexagon().is_err());
    }

    #[test]
    fn vertex_index_round_trip() {
        let p = Permutohedron::build(3).unwrap();
        for k in 0..p.len() {
            assert_eq!(p.vertex_index(p.vertex(k)).unwrap(), k);
        }
        let wrong = Permutation::identity(4).unwrap();
        assert!(p.vertex_index(&wrong).is_err());
    }
}
