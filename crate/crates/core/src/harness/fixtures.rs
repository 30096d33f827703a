//! Small hand-built graphs with known election outcomes. Each fixture is
//! checked against its annotations whenever it is loaded.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canonical::{build_minimal_gadget, build_shift_gadget, build_shift_gadget_extended, Gadget, NList};
use crate::centrality::{closeness, decay, degree, harmonic};
use crate::condorcet::{condorcet_winner, preference_matrix, tree_compare_structural, Preference};
use crate::error::{Error, Result};
use crate::graph::{distance_list, Graph, NodeId};
use crate::random_walk::{hitting_times, rw_closeness};
use crate::score::{int, ratio, ScoreVector};

pub const FIXTURE_NAMES: [&str; 10] = [
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6g", "fig6gp", "fig7", "fig8", "fig9",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub graph: Graph,
    pub marks: BTreeMap<String, NodeId>,
    pub winner: Option<NodeId>,
}

impl Fixture {
    /// Id of a marked node; panics on unknown marks.
    pub fn mark(&self, label: &str) -> NodeId {
        self.marks[label]
    }
}

/// Builds a fixture from edges over arbitrary labels; nodes are numbered in
/// the order `labels` lists them.
fn from_labels(
    name: &str,
    description: &str,
    labels: &[u32],
    edges: &[(u32, u32)],
    marks: &[(&str, u32)],
    winner: Option<&str>,
) -> Fixture {
    let id = |x: u32| labels.iter().position(|&l| l == x).expect("edge uses a declared label");
    let edges: Vec<(NodeId, NodeId)> = edges.iter().map(|&(a, b)| (id(a), id(b))).collect();
    let graph = Graph::from_edges(labels.len(), &edges).expect("fixture edges are valid");
    let marks: BTreeMap<String, NodeId> = marks.iter().map(|&(m, x)| (m.to_string(), id(x))).collect();
    let winner = winner.map(|w| marks[w]);
    Fixture {
        name: name.into(),
        description: description.into(),
        graph,
        marks,
        winner,
    }
}

/// Gadget fixtures carry no winner annotation; the computed one is stored.
fn from_gadget(name: &str, description: &str, gadget: Gadget) -> Fixture {
    let winner = preference_matrix(&gadget.graph)
        .ok()
        .and_then(|pm| condorcet_winner(&pm));
    let marks = BTreeMap::from([("u0".to_string(), gadget.u0), ("v0".to_string(), gadget.v0)]);
    Fixture {
        name: name.into(),
        description: description.into(),
        graph: gadget.graph,
        marks,
        winner,
    }
}

/// The fixture graph without its load-time check.
pub fn fixture_unchecked(name: &str) -> Result<Fixture> {
    let labels_1_to = |n: u32| (1..=n).collect::<Vec<u32>>();
    Ok(match name {
        // A 4-clique with a pendant path leading to a hub; closeness, harmonic,
        // decay, random-walk closeness and degree all pick different tops.
        "fig1" => from_labels(
            name,
            "13 nodes: clique on x, path x-u-v-w-y, star around y",
            &[1, 2, 3, 4, 45, 5, 6, 67, 7, 8, 9, 10, 11],
            &[
                (1, 2), (3, 1), (2, 3), (1, 4), (2, 4), (3, 4), (45, 5), (9, 7),
                (11, 10), (67, 7), (6, 67), (5, 6), (7, 10), (7, 8), (45, 4),
            ],
            &[("x", 4), ("u", 5), ("v", 6), ("w", 67), ("y", 7)],
            Some("v"),
        ),
        "fig2" => from_labels(
            name,
            "12 nodes, three-fold symmetric: u, v, w each with two private supporters",
            &labels_1_to(12),
            &[
                (1, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 1), (1, 7), (7, 8), (8, 2),
                (7, 2), (2, 9), (9, 10), (10, 3), (9, 3), (3, 11), (11, 12), (12, 1), (11, 1),
            ],
            &[("u", 2), ("v", 1), ("w", 3)],
            None,
        ),
        "fig3" => from_labels(
            name,
            "11-node tree: a 5-path ending in v, whose neighbour u has four leaves",
            &(0..=10).collect::<Vec<u32>>(),
            &[(6, 9), (6, 8), (6, 7), (5, 6), (4, 5), (3, 4), (2, 3), (1, 2), (0, 1), (6, 10)],
            &[("v", 5), ("u", 6)],
            Some("v"),
        ),
        "fig4" => from_labels(
            name,
            "7-node tree where u beats v yet has lower closeness",
            &[1, 3, 4, 5, 6, 7, 8],
            &[(1, 5), (3, 5), (4, 5), (5, 6), (6, 7), (7, 8)],
            &[("u", 1), ("r", 5), ("v", 7)],
            Some("r"),
        ),
        "fig5" => from_labels(
            name,
            "10-node tree rooted at the winner r",
            &labels_1_to(10),
            &[(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (6, 7), (3, 8), (3, 10), (3, 9)],
            &[("r", 1), ("t", 4), ("u", 5), ("w", 6), ("v", 8), ("leaf", 7)],
            Some("r"),
        ),
        "fig6g" => from_labels(
            name,
            "u and v share four neighbours, w is adjacent to u, v and three of u's",
            &labels_1_to(12),
            &[
                (1, 2), (2, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (1, 7),
                (1, 8), (1, 9), (1, 10), (3, 12), (3, 7), (3, 8), (3, 9), (3, 10), (3, 11),
            ],
            &[("u", 1), ("w", 2), ("v", 3)],
            Some("u"),
        ),
        "fig6gp" => from_labels(
            name,
            "the previous graph rewired so that v wins",
            &labels_1_to(12),
            &[
                (1, 2), (2, 3), (1, 4), (1, 5), (2, 4), (2, 5), (1, 7), (1, 8), (1, 9),
                (1, 10), (3, 7), (3, 8), (3, 9), (3, 10), (3, 6), (6, 11), (6, 12), (1, 3),
            ],
            &[("u", 1), ("w", 2), ("v", 3)],
            Some("v"),
        ),
        "fig7" => from_gadget(name, "shift gadget, i = 2, j = 4", build_shift_gadget(2, 4)?),
        "fig8" => {
            let a = NList::new(vec![3, 5, 2, 3, 2])?;
            let star = Graph::from_edges(3, &[(0, 1), (0, 2)])?;
            let gadget = build_shift_gadget_extended(&a, 2, 4, Some((&star, 0)))?;
            from_gadget(name, "extended shift gadget for (3,5,2,3,2), i = 2, j = 4", gadget)
        }
        "fig9" => {
            let gadget = build_minimal_gadget(28, 11)?;
            from_gadget(name, "minimal-list gadget, S = 28, n = 11", gadget)
        }
        other => return Err(Error::UnknownFixture(other.to_string())),
    })
}

/// Loads a fixture and re-checks its annotated claims.
pub fn fixture(name: &str) -> Result<Fixture> {
    let f = fixture_unchecked(name)?;
    verify_fixture(&f).map_err(|detail| Error::FixtureMismatch {
        name: name.to_string(),
        detail,
    })?;
    Ok(f)
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

fn top(scores: Result<ScoreVector>) -> std::result::Result<Vec<NodeId>, String> {
    scores.map(|s| s.top()).map_err(|e| e.to_string())
}

fn list(g: &Graph, v: NodeId) -> Vec<usize> {
    distance_list(g, v).expect("marked node exists").into_counts()
}

/// Checks every claim attached to the named fixture; the error names the
/// first one that fails.
pub fn verify_fixture(f: &Fixture) -> std::result::Result<(), String> {
    let g = &f.graph;
    let pm = preference_matrix(g).map_err(|e| e.to_string())?;
    if !f.marks.contains_key("u0") {
        expect("winner", condorcet_winner(&pm), f.winner)?;
    }
    let m = |label: &str| f.mark(label);
    match f.name.as_str() {
        "fig1" => {
            let (x, u, v, w, y) = (m("x"), m("u"), m("v"), m("w"), m("y"));
            expect("A(v)", list(g, v), vec![2, 2, 4, 4])?;
            expect("closeness top", top(closeness(g))?, vec![v])?;
            expect("rwc top", top(rw_closeness(g))?, vec![u])?;
            expect("harmonic top", top(Ok(harmonic(g)))?, vec![y])?;
            expect("decay top", top(decay(g, &ratio(4, 5)))?, vec![w])?;
            let mut deg = vec![x, y];
            deg.sort_unstable();
            expect("degree top", top(Ok(degree(g)))?, deg)?;
            let h = hitting_times(g).map_err(|e| e.to_string())?;
            expect("H(u,v)", h.get(u, v).clone(), int(17))?;
            expect("H(v,u)", h.get(v, u).clone(), int(13))?;
        }
        "fig2" => {
            let (u, v, w) = (m("u"), m("v"), m("w"));
            expect("Net(u,v)", pm.net(u, v), 5)?;
            expect("Net(v,u)", pm.net(v, u), 4)?;
            expect("u vs v", pm.verdict(u, v), Preference::FirstPreferred)?;
            expect("v vs w", pm.verdict(v, w), Preference::FirstPreferred)?;
            expect("w vs u", pm.verdict(w, u), Preference::FirstPreferred)?;
        }
        "fig3" => {
            let u = m("u");
            expect("harmonic top", top(Ok(harmonic(g)))?, vec![u])?;
            expect("decay top", top(decay(g, &ratio(4, 5)))?, vec![u])?;
            expect("degree top", top(Ok(degree(g)))?, vec![u])?;
        }
        "fig4" => {
            let (u, v) = (m("u"), m("v"));
            expect("u vs v", pm.verdict(u, v), Preference::FirstPreferred)?;
            let c = closeness(g).map_err(|e| e.to_string())?;
            expect("closeness u < v", c.get(u) < c.get(v), true)?;
        }
        "fig5" => {
            let (u, v, w) = (m("u"), m("v"), m("w"));
            let structural = |a, b| tree_compare_structural(g, a, b).map_err(|e| e.to_string());
            expect("u vs v", structural(u, v)?, Preference::Tie)?;
            expect("v vs w", structural(v, w)?, Preference::Tie)?;
            expect("w vs u", structural(w, u)?, Preference::FirstPreferred)?;
        }
        "fig6g" | "fig6gp" => {
            let (u, v, w) = (m("u"), m("v"), m("w"));
            expect("A(u)", list(g, u), vec![8, 1, 2])?;
            expect("A(v)", list(g, v), vec![7, 4])?;
            expect("rwc top", top(rw_closeness(g))?, vec![f.winner.expect("annotated")])?;
            if f.name == "fig6g" {
                let c = closeness(g).map_err(|e| e.to_string())?;
                let inv = |x: NodeId| crate::score::inverse(c.get(x));
                expect("inverse closeness (v,u,w)", (inv(v), inv(u), inv(w)), (int(15), int(16), int(17)))?;
                expect("closeness top", c.top(), vec![v])?;
            }
        }
        "fig7" | "fig8" | "fig9" => {
            let (u0, v0) = (m("u0"), m("v0"));
            let want = if f.name == "fig9" {
                Preference::FirstPreferred
            } else {
                Preference::Tie
            };
            expect("u0 vs v0", pm.verdict(u0, v0), want)?;
            let expected: [(&str, Vec<usize>, Vec<usize>); 3] = [
                ("fig7", vec![2, 3, 2, 3], vec![3, 2, 2, 2, 1]),
                ("fig8", vec![3, 5, 2, 3, 2], vec![4, 4, 2, 2, 3]),
                ("fig9", vec![6, 2, 3, 1, 1, 1], vec![6, 2, 2, 2, 1, 1]),
            ];
            let (_, a, b) = expected.iter().find(|(n, _, _)| *n == f.name).expect("listed");
            expect("A(u0)", &list(g, u0), a)?;
            expect("A(v0)", &list(g, v0), b)?;
        }
        _ => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        for name in FIXTURE_NAMES {
            let f = fixture(name).unwrap_or_else(|e| panic!("{e}"));
            assert_eq!(f.name, name);
            assert!(f.graph.is_connected());
        }
        assert_eq!(fixture("fig10"), Err(Error::UnknownFixture("fig10".into())));
    }

    #[test]
    fn sizes() {
        assert_eq!(fixture("fig1").unwrap().graph.node_count(), 13);
        let f3 = fixture("fig3").unwrap();
        assert_eq!((f3.graph.node_count(), f3.graph.edge_count()), (11, 10));
        assert_eq!(fixture("fig6g").unwrap().graph.node_count(), 12);
    }

    #[test]
    fn tampered_fixture_is_rejected() {
        let mut f = fixture_unchecked("fig3").unwrap();
        f.winner = Some(f.mark("u"));
        assert!(verify_fixture(&f).is_err());
    }
}
