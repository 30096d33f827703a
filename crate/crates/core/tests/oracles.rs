//! Library results against naive reference implementations written here
//! from the definitions.
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Zero};

use condorcet_centrality::canonical::{canonical_bot, compositions};
use condorcet_centrality::condorcet::{condorcet_winner, preference_matrix};
use condorcet_centrality::graph::{
    all_pairs_distances, enumerate_trees, random_connected_graph, random_tree, subtree_size, Graph, NodeId,
    SubtreeSizes,
};
use condorcet_centrality::harness::{fixture, FIXTURE_NAMES};
use condorcet_centrality::random_walk::hitting_times;
use condorcet_centrality::Rational;

const INF: usize = usize::MAX / 4;

fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for &w in g.neighbors(v) {
            d[v][w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Hitting times into `target` from `h(t) = 0`, `h(u) = 1 + mean of h over
/// neighbours`, solved by Gauss-Jordan over rationals.
fn hitting_oracle(g: &Graph, target: NodeId) -> Vec<Rational> {
    let n = g.node_count();
    let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n + 1]; n];
    for u in 0..n {
        m[u][u] = Rational::one();
        if u == target {
            continue;
        }
        let p = Rational::new(1.into(), (g.degree(u) as i64).into());
        for &w in g.neighbors(u) {
            m[u][w] -= &p;
        }
        m[u][n] = Rational::one();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("nonsingular");
        m.swap(col, pivot);
        let inv = Rational::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..=n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

fn sample_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = FIXTURE_NAMES.iter().map(|name| fixture(name).unwrap().graph).collect();
    for seed in 0..40 {
        out.push(random_connected_graph(2 + (seed as usize % 13), 0.3, seed).unwrap());
        out.push(random_tree(2 + (seed as usize % 11), seed).unwrap());
    }
    out
}

#[test]
fn distances_match_floyd_warshall() {
    for g in sample_graphs() {
        let dm = all_pairs_distances(&g);
        let fw = floyd_warshall(&g);
        for u in g.nodes() {
            for v in g.nodes() {
                assert_eq!(dm.get(u, v).finite(), Some(fw[u][v]), "d({u},{v})");
            }
        }
    }
}

#[test]
fn hitting_times_match_gauss_jordan() {
    for g in sample_graphs().into_iter().filter(|g| g.node_count() <= 14) {
        let hm = hitting_times(&g).unwrap();
        for t in g.nodes() {
            let column = hitting_oracle(&g, t);
            for u in g.nodes() {
                assert_eq!(hm.get(u, t), &column[u], "H({u},{t})");
            }
        }
    }
}

#[test]
fn votes_and_winner_by_counting() {
    for g in sample_graphs() {
        let d = floyd_warshall(&g);
        let pm = preference_matrix(&g).unwrap();
        let n = g.node_count();
        let net = |u: NodeId, v: NodeId| (0..n).filter(|&x| d[u][x] < d[v][x]).count();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    assert_eq!(pm.net(u, v), net(u, v));
                }
            }
        }
        let winner = (0..n).find(|&u| (0..n).all(|v| v == u || net(u, v) > net(v, u)));
        assert_eq!(condorcet_winner(&pm), winner);
    }
}

/// Size of `u`'s side after deleting edge `{u, w}`, where `w` is `u`'s
/// neighbour towards `v` (or `n` when `u == v`).
fn side_size(g: &Graph, u: NodeId, v: NodeId) -> usize {
    if u == v {
        return g.node_count();
    }
    let d = floyd_warshall(g);
    let towards = *g.neighbors(u).iter().find(|&&w| d[w][v] + 1 == d[u][v]).unwrap();
    let mut seen = vec![false; g.node_count()];
    seen[u] = true;
    seen[towards] = true;
    let mut queue = VecDeque::from([u]);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count
}

#[test]
fn subtree_sizes_by_edge_deletion() {
    for seed in 0..30 {
        let g = random_tree(2 + seed as usize % 12, seed).unwrap();
        let sizes = SubtreeSizes::new(&g).unwrap();
        for u in g.nodes() {
            for v in g.nodes() {
                let expected = side_size(&g, u, v);
                assert_eq!(sizes.get(u, v), expected);
                if u != v {
                    assert_eq!(subtree_size(&g, u, v).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn enumeration_yields_distinct_labeled_trees() {
    for n in 1..=7 {
        let mut seen = BTreeSet::new();
        for g in enumerate_trees(n).unwrap() {
            assert_eq!(g.edge_count(), n - 1);
            assert!(g.is_connected());
            assert!(seen.insert(g.edges().collect::<Vec<_>>()));
        }
        assert_eq!(seen.len() as u64, (n as u64).pow(n.saturating_sub(2) as u32));
    }
}

#[test]
fn canonical_bot_is_the_unique_light_list() {
    for n in 1..=11 {
        for sum in n..=n * (n + 1) / 2 {
            let light: Vec<_> = compositions(n)
                .filter(|a| a.sum() == sum && a.weight().unwrap() <= 1)
                .collect();
            assert_eq!(light.len(), 1, "S={sum} n={n}: {light:?}");
            assert_eq!(canonical_bot(sum, n).unwrap().list, light[0]);
        }
    }
}
