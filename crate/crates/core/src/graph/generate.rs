//! Labeled-tree enumeration (Prüfer codes) and seeded random generators.

use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;

use crate::error::{Error, Result};

use super::{Graph, NodeId};

/// Largest `n` accepted by [`enumerate_trees`] unless a caller raises it.
pub const DEFAULT_TREE_CAP: usize = 9;

/// Number of labeled trees on `n` nodes (`n^(n-2)`, and 1 for `n <= 2`).
pub fn tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// The Prüfer sequence with the given rank in base-`n` order.
pub fn prufer_sequence_at(n: usize, mut index: u64) -> Vec<NodeId> {
    let len = n.saturating_sub(2);
    let mut seq = vec![0; len];
    for slot in seq.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    seq
}

/// Decodes a Prüfer sequence of length `n - 2` into a tree on `n` nodes.
pub fn tree_from_prufer(n: usize, seq: &[NodeId]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { min: 1, n });
    }
    if seq.len() != n.saturating_sub(2) || seq.iter().any(|&s| s >= n) {
        return Err(Error::InvalidParameter(format!(
            "{seq:?} is not a Prüfer sequence for n = {n}"
        )));
    }
    let mut g = Graph::empty(n);
    if n == 1 {
        return Ok(g);
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    // Smallest current leaf, advanced with the linear-time pointer trick.
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for &s in seq {
        g.add_edge(leaf, s)?;
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // Two nodes of degree one remain: `leaf` and n - 1.
    g.add_edge(leaf, n - 1)?;
    Ok(g)
}

/// Iterator over every labeled tree on `n` nodes, in Prüfer rank order.
#[derive(Debug, Clone)]
pub struct TreeEnumerator {
    n: usize,
    next: u64,
    total: u64,
}

impl TreeEnumerator {
    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewNodes { min: 1, n });
        }
        if n > cap {
            return Err(Error::TreeCapExceeded { n, cap });
        }
        Ok(TreeEnumerator {
            n,
            next: 0,
            total: tree_count(n),
        })
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for TreeEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.total {
            return None;
        }
        let seq = prufer_sequence_at(self.n, self.next);
        self.next += 1;
        Some(tree_from_prufer(self.n, &seq).expect("rank decodes to a valid sequence"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for TreeEnumerator {}

pub fn enumerate_trees(n: usize) -> Result<TreeEnumerator> {
    TreeEnumerator::with_cap(n, DEFAULT_TREE_CAP)
}

pub(crate) fn random_tree_with(rng: &mut impl Rng, n: usize) -> Graph {
    let seq: Vec<NodeId> = (0..n.saturating_sub(2)).map(|_| rng.random_range(0..n)).collect();
    tree_from_prufer(n, &seq).expect("random sequence is valid")
}

/// Uniformly random labeled tree.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { min: 1, n });
    }
    Ok(random_tree_with(&mut XorShiftRng::seed_from_u64(seed), n))
}

pub(crate) fn random_connected_graph_with(rng: &mut impl Rng, n: usize, edge_prob: f64) -> Graph {
    let mut g = random_tree_with(rng, n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(edge_prob) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// A random spanning tree plus every other pair independently with
/// probability `edge_prob`. Deterministic in `(n, edge_prob, seed)`.
pub fn random_connected_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { min: 1, n });
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::InvalidProbability(edge_prob));
    }
    Ok(random_connected_graph_with(
        &mut XorShiftRng::seed_from_u64(seed),
        n,
        edge_prob,
    ))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::graph::is_tree;

    #[test]
    fn cayley_counts() {
        assert_eq!(enumerate_trees(1).unwrap().count(), 1);
        assert_eq!(enumerate_trees(2).unwrap().count(), 1);
        assert_eq!(enumerate_trees(3).unwrap().count(), 3);
        assert_eq!(enumerate_trees(4).unwrap().count(), 16);
    }

    #[test]
    fn singleton_tree() {
        let trees: Vec<_> = enumerate_trees(1).unwrap().collect();
        assert_eq!(trees, vec![Graph::empty(1)]);
    }

    #[test]
    fn distinct_and_all_trees_up_to_seven() {
        for n in 2..=7 {
            let trees: Vec<_> = enumerate_trees(n).unwrap().collect();
            assert_eq!(trees.len() as u64, tree_count(n));
            assert!(trees.iter().all(is_tree));
            let distinct: HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len(), "duplicates at n = {n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_trees(10).unwrap_err(),
            Error::TreeCapExceeded { n: 10, cap: 9 }
        );
        assert!(TreeEnumerator::with_cap(10, 10).is_ok());
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn known_decoding() {
        // Textbook example: (3, 3, 3, 4) on six nodes.
        let g = tree_from_prufer(6, &[3, 3, 3, 4]).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]
        );
    }

    #[test]
    fn random_graph_edge_cases() {
        let g = random_connected_graph(2, 1.0, 7).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let k5 = random_connected_graph(5, 1.0, 99).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!(random_connected_graph(0, 0.5, 1).is_err());
        assert!(random_connected_graph(4, 0.0, 1).is_err());
        assert!(random_connected_graph(4, 1.5, 1).is_err());
    }

    #[test]
    fn random_graph_is_deterministic_and_connected() {
        for seed in 0..50 {
            let a = random_connected_graph(12, 0.2, seed).unwrap();
            let b = random_connected_graph(12, 0.2, seed).unwrap();
            assert_eq!(a, b);
            assert!(a.is_connected());
        }
        assert_ne!(
            random_connected_graph(12, 0.2, 1).unwrap(),
            random_connected_graph(12, 0.2, 2).unwrap()
        );
    }
}
