//! Hitting times of the simple random walk and the centralities built on them.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::centrality::require_connected;
use crate::error::{Error, Result};
use crate::graph::{bridge_split, is_tree, BridgeSplit, Graph, NodeId};
use crate::linalg::solve_exact;
use crate::score::{int, inverse, ratio, Rational, ScoreVector};

/// Exact `H(u, v)` for every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingMatrix {
    n: usize,
    hit: Vec<Rational>,
}

impl HittingMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Expected number of steps from `from` until `to` is first visited.
    pub fn get(&self, from: NodeId, to: NodeId) -> &Rational {
        &self.hit[from * self.n + to]
    }

    /// `sum_u H(u, v)`, i.e. `RWC_v^{-1}`.
    pub fn column_sum(&self, to: NodeId) -> Rational {
        (0..self.n).map(|u| self.get(u, to)).sum()
    }
}

impl Serialize for HittingMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|u| (0..self.n).map(|v| self.get(u, v).to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// `H(u, target)` for all `u`, from the system
/// `deg(u) H(u) - sum_{w ~ u, w != target} H(w) = deg(u)`, `H(target) = 0`.
/// The graph must be connected.
pub fn hitting_times_to(g: &Graph, target: NodeId) -> Result<Vec<Rational>> {
    g.check_node(target)?;
    require_connected(g, 2)?;
    Ok(solve_column(g, target))
}

fn solve_column(g: &Graph, target: NodeId) -> Vec<Rational> {
    let n = g.node_count();
    // Row/column index of each non-target node in the reduced system.
    let slot = |u: NodeId| if u < target { u } else { u - 1 };
    let mut matrix = vec![vec![0i64; n - 1]; n - 1];
    let mut rhs = vec![0i64; n - 1];
    for u in g.nodes().filter(|&u| u != target) {
        let row = slot(u);
        let deg = g.degree(u) as i64;
        matrix[row][row] = deg;
        rhs[row] = deg;
        for &w in g.neighbors(u) {
            if w != target {
                matrix[row][slot(w)] -= 1;
            }
        }
    }
    let reduced = solve_exact(&matrix, &rhs).expect("reduced Laplacian of a connected graph is nonsingular");
    let mut column = Vec::with_capacity(n);
    column.extend(reduced[..target].iter().cloned());
    column.push(Rational::zero());
    column.extend(reduced[target..].iter().cloned());
    column
}

/// Solves one system per target; targets run in parallel on larger graphs.
pub fn hitting_times(g: &Graph) -> Result<HittingMatrix> {
    require_connected(g, 2)?;
    let n = g.node_count();
    let columns: Vec<Vec<Rational>> = if n >= 32 {
        (0..n).into_par_iter().map(|v| solve_column(g, v)).collect()
    } else {
        (0..n).map(|v| solve_column(g, v)).collect()
    };
    let mut hit = vec![Rational::zero(); n * n];
    for (v, column) in columns.into_iter().enumerate() {
        for (u, h) in column.into_iter().enumerate() {
            hit[u * n + v] = h;
        }
    }
    Ok(HittingMatrix { n, hit })
}

/// `2|E| / deg(v)`.
pub fn expected_return_time(g: &Graph, v: NodeId) -> Result<Rational> {
    g.check_node(v)?;
    if g.degree(v) == 0 {
        return Err(Error::IsolatedNode(v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(ratio(2 * g.edge_count(), g.degree(v)))
}

pub fn rw_closeness_from(hm: &HittingMatrix) -> ScoreVector {
    let values = (0..hm.node_count()).map(|v| inverse(&hm.column_sum(v))).collect();
    ScoreVector::new("rwc", values)
}

/// `RWC_v = 1 / sum_u H(u, v)`; the return time of `v` is not included.
pub fn rw_closeness(g: &Graph) -> Result<ScoreVector> {
    Ok(rw_closeness_from(&hitting_times(g)?))
}

fn checked_split(g: &Graph, u: NodeId, v: NodeId) -> Result<BridgeSplit> {
    g.check_node(u)?;
    g.check_node(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeAbsent { u, v });
    }
    bridge_split(g, u, v)
}

/// `RWC_v^{-1} - RWC_u^{-1} = (|S_u| - |S_v|)(2n - 1)` on a tree edge.
pub fn tree_rwc_bridge_gap(g: &Graph, u: NodeId, v: NodeId) -> Result<Rational> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let split = checked_split(g, u, v)?;
    let n = g.node_count();
    Ok(int(2 * n - 1) * (int(split.side_u.len()) - int(split.side_v.len())))
}

/// `RWC_v^{-1} - RWC_u^{-1} = |S_u|(2|E[S_u]| + 1) - |S_v|(2|E[S_v]| + 1)`
/// across a bridge `{u, v}` of a connected graph.
pub fn general_bridge_gap(g: &Graph, u: NodeId, v: NodeId) -> Result<Rational> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let split = checked_split(g, u, v)?;
    let weight = |side: &[NodeId]| int(side.len() * (2 * BridgeSplit::inner_edges(g, side) + 1));
    Ok(weight(&split.side_u) - weight(&split.side_v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn p2_hits_in_one_step() {
        let h = hitting_times(&path(2)).unwrap();
        assert_eq!(h.get(0, 1), &int(1));
        assert_eq!(h.get(1, 0), &int(1));
        assert_eq!(h.get(0, 0), &int(0));
    }

    #[test]
    fn p3_values() {
        // H(end, centre) = 1, H(centre, end) = 3, H(end, other end) = 4.
        let h = hitting_times(&path(3)).unwrap();
        assert_eq!(h.get(0, 1), &int(1));
        assert_eq!(h.get(1, 0), &int(3));
        assert_eq!(h.get(2, 0), &int(4));
        let rwc = rw_closeness(&path(3)).unwrap();
        assert_eq!(rwc.values(), &[ratio(1, 7), ratio(1, 2), ratio(1, 7)]);
    }

    #[test]
    fn return_times() {
        assert_eq!(expected_return_time(&path(2), 0).unwrap(), int(2));
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(expected_return_time(&triangle, 1).unwrap(), int(3));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(expected_return_time(&star, 0).unwrap(), int(2));
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(expected_return_time(&split, 2), Err(Error::IsolatedNode(2)));
        assert_eq!(expected_return_time(&split, 0), Err(Error::Disconnected));
    }

    #[test]
    fn rejects_degenerate_graphs() {
        assert_eq!(rw_closeness(&Graph::empty(1)), Err(Error::TooFewNodes { min: 2, n: 1 }));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(hitting_times(&split), Err(Error::Disconnected));
    }

    #[test]
    fn bridge_gaps_on_paths() {
        assert_eq!(tree_rwc_bridge_gap(&path(2), 0, 1).unwrap(), int(0));
        assert_eq!(general_bridge_gap(&path(2), 0, 1).unwrap(), int(0));
        // centre 1, endpoint 0: (2 - 1)(2*3 - 1) = 5
        assert_eq!(tree_rwc_bridge_gap(&path(3), 1, 0).unwrap(), int(5));
        assert_eq!(general_bridge_gap(&path(3), 1, 0).unwrap(), int(5));
        assert_eq!(tree_rwc_bridge_gap(&path(3), 0, 2), Err(Error::EdgeAbsent { u: 0, v: 2 }));
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tree_rwc_bridge_gap(&triangle, 0, 1), Err(Error::NotATree));
        assert_eq!(general_bridge_gap(&triangle, 0, 1), Err(Error::NotABridge { u: 0, v: 1 }));
    }

    #[test]
    fn hitting_matrix_json() {
        let h = hitting_times(&path(3)).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"[["0","1","4"],["3","0","3"],["4","1","0"]]"#
        );
    }
}
