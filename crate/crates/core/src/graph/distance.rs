use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;

use super::{Graph, NodeId};

/// A shortest-path length, or the explicit absence of any path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// Unreachable compares greater than every finite distance.
impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
            (Distance::Finite(_), Distance::Unreachable) => Ordering::Less,
            (Distance::Unreachable, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Unreachable, Distance::Unreachable) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// Distances from `source` to every node.
pub fn bfs_distances(g: &Graph, source: NodeId) -> Result<Vec<Distance>> {
    g.check_node(source)?;
    let mut dist = vec![Distance::Unreachable; g.node_count()];
    dist[source] = Distance::Finite(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let Distance::Finite(du) = dist[u] else {
            unreachable!("queued nodes have finite distance")
        };
        for &w in g.neighbors(u) {
            if dist[w] == Distance::Unreachable {
                dist[w] = Distance::Finite(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// All-pairs shortest-path lengths, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: NodeId, v: NodeId) -> Distance {
        self.dist[u * self.n + v]
    }

    /// Finite distance; panics on unreachable pairs, so callers must have
    /// established connectivity first.
    pub(crate) fn at(&self, u: NodeId, v: NodeId) -> usize {
        match self.dist[u * self.n + v] {
            Distance::Finite(d) => d,
            Distance::Unreachable => panic!("nodes {u} and {v} are not connected"),
        }
    }

    pub fn row(&self, u: NodeId) -> &[Distance] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&Distance::Unreachable)
    }

    /// Sum of finite distances from `v`.
    pub fn distance_sum(&self, v: NodeId) -> usize {
        self.row(v).iter().filter_map(|d| d.finite()).sum()
    }

    pub fn distance_list(&self, v: NodeId) -> DistanceList {
        DistanceList::from_row(self.row(v))
    }
}

impl Serialize for DistanceMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Option<usize>>> = (0..self.n)
            .map(|u| self.row(u).iter().map(|d| d.finite()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// One BFS per node.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.node_count();
    let mut dist = Vec::with_capacity(n * n);
    for s in g.nodes() {
        dist.extend(bfs_distances(g, s).expect("source in range"));
    }
    DistanceMatrix { n, dist }
}

/// `A(v)`: how many nodes sit at each distance `1..=k` from a node, where `k`
/// is the eccentricity. Nodes in other components are not counted; their
/// number is kept in `unreachable`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DistanceList {
    counts: Vec<usize>,
    unreachable: usize,
}

impl DistanceList {
    fn from_row(row: &[Distance]) -> Self {
        let mut counts = Vec::new();
        let mut unreachable = 0;
        for d in row {
            match d {
                Distance::Finite(0) => {}
                Distance::Finite(d) => {
                    if counts.len() < *d {
                        counts.resize(*d, 0);
                    }
                    counts[d - 1] += 1;
                }
                Distance::Unreachable => unreachable += 1,
            }
        }
        DistanceList { counts, unreachable }
    }

    /// `counts()[i]` is the number of nodes at distance `i + 1`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn unreachable(&self) -> usize {
        self.unreachable
    }

    /// Largest finite distance.
    pub fn eccentricity(&self) -> usize {
        self.counts.len()
    }

    pub fn reached(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn into_counts(self) -> Vec<usize> {
        self.counts
    }
}

pub fn distance_list(g: &Graph, v: NodeId) -> Result<DistanceList> {
    Ok(DistanceList::from_row(&bfs_distances(g, v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn bfs_on_path() {
        let d = bfs_distances(&path(3), 0).unwrap();
        assert_eq!(d, vec![Distance::Finite(0), Distance::Finite(1), Distance::Finite(2)]);
        assert_eq!(bfs_distances(&path(3), 3), Err(Error::NodeOutOfRange { node: 3, n: 3 }));
    }

    #[test]
    fn unreachable_in_other_component() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d[2], Distance::Unreachable);
        let list = distance_list(&g, 0).unwrap();
        assert_eq!(list.counts(), &[1]);
        assert_eq!(list.unreachable(), 2);
    }

    #[test]
    fn empty_graph_matrix() {
        let m = all_pairs_distances(&Graph::empty(3));
        for u in 0..3 {
            for v in 0..3 {
                let expected = if u == v { Distance::Finite(0) } else { Distance::Unreachable };
                assert_eq!(m.get(u, v), expected);
            }
        }
        assert!(!m.is_connected());
    }

    #[test]
    fn star_center_list() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(distance_list(&g, 0).unwrap().counts(), &[4]);
        assert_eq!(distance_list(&g, 1).unwrap().counts(), &[1, 3]);
    }

    #[test]
    fn singleton_has_empty_list() {
        let list = distance_list(&Graph::empty(1), 0).unwrap();
        assert!(list.counts().is_empty());
        assert_eq!(list.eccentricity(), 0);
    }

    #[test]
    fn unreachable_sorts_last() {
        assert!(Distance::Finite(1000) < Distance::Unreachable);
        assert_eq!(Distance::Unreachable.to_string(), "inf");
    }

    #[test]
    fn path_matrix_max_is_two() {
        let m = all_pairs_distances(&path(3));
        let max = (0..3).flat_map(|u| (0..3).map(move |v| (u, v))).map(|(u, v)| m.at(u, v)).max();
        assert_eq!(max, Some(2));
    }
}
