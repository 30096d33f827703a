//! Undirected, unweighted, simple graphs over contiguous node ids.
//!
//! Adjacency lists are kept sorted, which makes `has_edge` a binary search and
//! keeps every derived quantity independent of insertion order.

mod distance;
pub(crate) mod generate;
mod parse;
pub(crate) mod tree;

pub use distance::{all_pairs_distances, bfs_distances, distance_list, Distance, DistanceList, DistanceMatrix};
pub use generate::{
    enumerate_trees, prufer_sequence_at, random_connected_graph, random_tree, tree_count,
    tree_from_prufer, TreeEnumerator, DEFAULT_TREE_CAP,
};
pub use parse::parse_edge_list;
pub use tree::{bridge_split, bridges, is_tree, subtree_size, BridgeSplit, SubtreeSizes};

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeListRepr", into = "EdgeListRepr")]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

/// Wire form used for witnesses and fixtures: `{"n": 3, "edges": [[0,1],[1,2]]}`.
#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(NodeId, NodeId)>,
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;

    fn try_from(repr: EdgeListRepr) -> Result<Self> {
        Graph::from_edges(repr.n, &repr.edges)
    }
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr {
            n: g.node_count(),
            edges: g.edges().collect(),
        }
    }
}

impl Graph {
    /// A graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId) -> Result<()> {
        let n = self.node_count();
        for node in [u, v] {
            if node >= n {
                return Err(Error::NodeOutOfRange { node, n });
            }
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop on node {u}")));
        }
        let pos = match self.adjacency[u].binary_search(&v) {
            Ok(_) => return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}"))),
            Err(pos) => pos,
        };
        self.adjacency[u].insert(pos, v);
        let pos = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(pos, u);
        self.edge_count += 1;
        Ok(())
    }

    /// Appends a fresh isolated node and returns its id.
    pub fn add_node(&mut self) -> NodeId {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub(crate) fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: v,
                n: self.node_count(),
            })
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `G[keep]` with nodes renumbered in the order given by `keep`.
    pub fn induced_subgraph(&self, keep: &[NodeId]) -> Graph {
        let mut index = vec![usize::MAX; self.node_count()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut g = Graph::empty(keep.len());
        for (new_u, &old_u) in keep.iter().enumerate() {
            for &old_v in self.neighbors(old_u) {
                let new_v = index[old_v];
                if new_v != usize::MAX && new_u < new_v {
                    g.adjacency[new_u].push(new_v);
                    g.adjacency[new_v].push(new_u);
                    g.edge_count += 1;
                }
            }
        }
        for nbrs in &mut g.adjacency {
            nbrs.sort_unstable();
        }
        g
    }

    /// Applies `perm` (old id -> new id) to every node.
    pub fn relabel(&self, perm: &[NodeId]) -> Result<Graph> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(n, &edges)
    }

    /// Serializes into the edge-list text format read by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.node_count(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_stays_sorted_and_symmetric() {
        let g = Graph::from_edges(4, &[(3, 0), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert!(g.has_edge(3, 0) && g.has_edge(0, 3));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(2, &[(0, 0)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::NodeOutOfRange { node: 2, n: 2 })
        ));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced_subgraph(&[3, 2, 1]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
