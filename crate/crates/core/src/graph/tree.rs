use serde::Serialize;

use crate::error::{Error, Result};

use super::{bfs_distances, Graph, NodeId};

/// Connected with exactly `n - 1` edges. The empty graph is not a tree.
pub fn is_tree(g: &Graph) -> bool {
    g.node_count() >= 1 && g.edge_count() + 1 == g.node_count() && g.is_connected()
}

pub(crate) fn require_tree(g: &Graph) -> Result<()> {
    if is_tree(g) {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// All bridges as `(u, v)` with `u < v`, sorted. Iterative low-link search.
pub fn bridges(g: &Graph) -> Vec<(NodeId, NodeId)> {
    let n = g.node_count();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut clock = 0;
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        // (node, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(frame) = stack.last_mut() {
            let (u, parent, idx) = *frame;
            if let Some(&w) = g.neighbors(u).get(idx) {
                frame.2 += 1;
                if w == parent {
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, u, 0));
                } else {
                    low[u] = low[u].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > order[parent] {
                        out.push((parent.min(u), parent.max(u)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// The two sides left after deleting a bridge `{u, v}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeSplit {
    pub side_u: Vec<NodeId>,
    pub side_v: Vec<NodeId>,
}

impl BridgeSplit {
    /// Number of edges with both endpoints on `side`.
    pub fn inner_edges(g: &Graph, side: &[NodeId]) -> usize {
        let mut member = vec![false; g.node_count()];
        for &s in side {
            member[s] = true;
        }
        side.iter()
            .map(|&s| g.neighbors(s).iter().filter(|&&w| member[w]).count())
            .sum::<usize>()
            / 2
    }
}

/// Splits the graph at the bridge `{u, v}`: `side_u` is the component of
/// `G - {u,v}` holding `u`, `side_v` the one holding `v`.
pub fn bridge_split(g: &Graph, u: NodeId, v: NodeId) -> Result<BridgeSplit> {
    g.check_node(u)?;
    g.check_node(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeAbsent { u, v });
    }
    let reach = |start: NodeId, banned: NodeId| {
        let mut seen = vec![false; g.node_count()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &w in g.neighbors(x) {
                if x == start && w == banned {
                    continue;
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    let from_u = reach(u, v);
    if from_u[v] {
        return Err(Error::NotABridge { u, v });
    }
    let from_v = reach(v, u);
    let collect = |mask: &[bool]| mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
    Ok(BridgeSplit {
        side_u: collect(&from_u),
        side_v: collect(&from_v),
    })
}

/// `|T_u^v|`: the nodes `w` with `d(w,v) = d(w,u) + d(u,v)`, counted straight
/// from the definition.
pub fn subtree_size(g: &Graph, u: NodeId, v: NodeId) -> Result<usize> {
    g.check_node(u)?;
    g.check_node(v)?;
    require_tree(g)?;
    if u == v {
        return Err(Error::SameNode(u));
    }
    let du = bfs_distances(g, u)?;
    let dv = bfs_distances(g, v)?;
    let d_uv = du[v].finite().expect("tree is connected");
    Ok(g.nodes()
        .filter(|&w| {
            let (a, b) = (du[w].finite().unwrap(), dv[w].finite().unwrap());
            b == a + d_uv
        })
        .count())
}

/// Every `|T_u^v|` of a tree, obtained by rooting the tree at each node in
/// turn. `get(v, v)` is `n`.
#[derive(Debug, Clone)]
pub struct SubtreeSizes {
    n: usize,
    sizes: Vec<usize>,
}

impl SubtreeSizes {
    pub fn new(g: &Graph) -> Result<Self> {
        require_tree(g)?;
        let n = g.node_count();
        let mut sizes = vec![0; n * n];
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            order.clear();
            order.push(root);
            parent[root] = usize::MAX;
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for &w in g.neighbors(x) {
                    if w != parent[x] {
                        parent[w] = x;
                        order.push(w);
                    }
                }
            }
            let row = &mut sizes[root * n..(root + 1) * n];
            for &x in order.iter().rev() {
                row[x] += 1;
                if parent[x] != usize::MAX {
                    row[parent[x]] += row[x];
                }
            }
        }
        Ok(SubtreeSizes { n, sizes })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// `|T_u^v|`: size of the subtree under `u` when the tree hangs from `v`.
    pub fn get(&self, u: NodeId, v: NodeId) -> usize {
        self.sizes[v * self.n + u]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn tree_predicate() {
        assert!(is_tree(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()));
        assert!(!is_tree(&triangle()));
        assert!(!is_tree(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()));
        assert!(is_tree(&Graph::empty(1)));
        assert!(!is_tree(&Graph::empty(0)));
    }

    #[test]
    fn split_path() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = bridge_split(&g, 0, 1).unwrap();
        assert_eq!(s.side_u, vec![0]);
        assert_eq!(s.side_v, vec![1, 2]);
    }

    #[test]
    fn split_errors() {
        assert_eq!(bridge_split(&triangle(), 0, 1), Err(Error::NotABridge { u: 0, v: 1 }));
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bridge_split(&g, 0, 2), Err(Error::EdgeAbsent { u: 0, v: 2 }));
    }

    #[test]
    fn bridges_of_triangle_with_tail() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(bridges(&g), vec![(2, 3), (3, 4)]);
        assert!(bridges(&triangle()).is_empty());
    }

    #[test]
    fn leaf_subtree_is_one() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(subtree_size(&g, 0, 1).unwrap(), 1);
        assert_eq!(subtree_size(&g, 1, 0).unwrap(), 3);
        let table = SubtreeSizes::new(&g).unwrap();
        assert_eq!(table.get(0, 1), 1);
        assert_eq!(table.get(1, 0), 3);
        assert_eq!(table.get(2, 2), 4);
    }

    #[test]
    fn subtree_requires_tree() {
        assert_eq!(subtree_size(&triangle(), 0, 1), Err(Error::NotATree));
        assert!(SubtreeSizes::new(&triangle()).is_err());
    }
}
