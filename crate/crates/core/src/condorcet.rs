//! Graphs as elections: every node votes for whichever candidate is closer.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, bridge_split, bridges, DistanceMatrix, Graph, NodeId, SubtreeSizes};
use crate::graph::tree::require_tree;
use crate::score::{int, Rational, ScoreVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Preference {
    FirstPreferred,
    SecondPreferred,
    Tie,
}

impl Preference {
    fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Greater => Preference::FirstPreferred,
            Ordering::Less => Preference::SecondPreferred,
            Ordering::Equal => Preference::Tie,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Preference::FirstPreferred => Preference::SecondPreferred,
            Preference::SecondPreferred => Preference::FirstPreferred,
            Preference::Tie => Preference::Tie,
        }
    }
}

/// `net(u, v) = |{w : d(w, u) < d(w, v)}|` for every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreferenceMatrix {
    n: usize,
    net: Vec<usize>,
}

impl PreferenceMatrix {
    /// Distances must come from a connected graph.
    pub fn from_distances(dm: &DistanceMatrix) -> Self {
        let n = dm.node_count();
        let mut net = vec![0; n * n];
        for w in 0..n {
            for u in 0..n {
                let du = dm.at(w, u);
                for v in 0..n {
                    if du < dm.at(w, v) {
                        net[u * n + v] += 1;
                    }
                }
            }
        }
        PreferenceMatrix { n, net }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn net(&self, u: NodeId, v: NodeId) -> usize {
        self.net[u * self.n + v]
    }

    /// `u ≻ v`.
    pub fn prefers(&self, u: NodeId, v: NodeId) -> bool {
        self.net(u, v) > self.net(v, u)
    }

    /// Like [`compare`] without the checks.
    pub fn verdict(&self, u: NodeId, v: NodeId) -> Preference {
        Preference::from_ordering(self.net(u, v).cmp(&self.net(v, u)))
    }

    fn check(&self, v: NodeId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: v, n: self.n })
        }
    }
}

pub fn preference_matrix(g: &Graph) -> Result<PreferenceMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(PreferenceMatrix::from_distances(&all_pairs_distances(g)))
}

/// Sign of `Net(u, v) - Net(v, u)`.
pub fn compare(pm: &PreferenceMatrix, u: NodeId, v: NodeId) -> Result<Preference> {
    pm.check(u)?;
    pm.check(v)?;
    if u == v {
        return Err(Error::SameNode(u));
    }
    Ok(pm.verdict(u, v))
}

pub fn condorcet_winner(pm: &PreferenceMatrix) -> Option<NodeId> {
    let n = pm.node_count();
    (0..n).find(|&u| (0..n).all(|v| v == u || pm.prefers(u, v)))
}

/// The tied adjacent pair that beats everyone else, present exactly when a
/// tree has no Condorcet winner.
pub fn weak_condorcet_winners(g: &Graph, pm: &PreferenceMatrix) -> Result<Option<(NodeId, NodeId)>> {
    require_tree(g)?;
    if pm.node_count() != g.node_count() {
        return Err(Error::NodeCountMismatch {
            expected: g.node_count(),
            found: pm.node_count(),
        });
    }
    if condorcet_winner(pm).is_some() {
        return Ok(None);
    }
    let beats_rest = |a: NodeId, b: NodeId| g.nodes().all(|w| w == a || w == b || pm.prefers(a, w));
    Ok(g
        .edges()
        .find(|&(u, v)| pm.verdict(u, v) == Preference::Tie && beats_rest(u, v) && beats_rest(v, u)))
}

/// Some cycle of the strict preference digraph, via depth-first search for a
/// back edge.
pub fn find_condorcet_cycle(pm: &PreferenceMatrix) -> Option<Vec<NodeId>> {
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let n = pm.node_count();
    let mut colour = vec![WHITE; n];
    for root in 0..n {
        if colour[root] != WHITE {
            continue;
        }
        let mut stack: Vec<(NodeId, NodeId)> = vec![(root, 0)];
        colour[root] = GREY;
        while let Some(frame) = stack.last_mut() {
            let (u, next) = *frame;
            if next == n {
                colour[u] = BLACK;
                stack.pop();
                continue;
            }
            frame.1 += 1;
            let v = next;
            if !pm.prefers(u, v) {
                continue;
            }
            match colour[v] {
                WHITE => {
                    colour[v] = GREY;
                    stack.push((v, 0));
                }
                GREY => {
                    let start = stack.iter().position(|&(x, _)| x == v).expect("grey nodes are on the stack");
                    return Some(stack[start..].iter().map(|&(x, _)| x).collect());
                }
                _ => {}
            }
        }
    }
    None
}

/// Distance to the Condorcet winner, or to the closer weak Condorcet winner.
pub fn level(g: &Graph, pm: &PreferenceMatrix, v: NodeId) -> Result<usize> {
    g.check_node(v)?;
    let centre = match condorcet_winner(pm) {
        Some(w) => vec![w],
        None => match weak_condorcet_winners(g, pm)? {
            Some((a, b)) => vec![a, b],
            None => return Err(Error::InvalidGraph("tree without (weak) Condorcet winner".into())),
        },
    };
    let dist = crate::graph::bfs_distances(g, v)?;
    Ok(centre
        .iter()
        .filter_map(|&c| dist[c].finite())
        .min()
        .expect("tree is connected"))
}

/// Sorted subtree sizes `|T_u^v| > n/2` over `u != v`. Ordered shortlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LtList(Vec<usize>);

impl LtList {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for LtList {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_compare(&self.0, &other.0)
    }
}

impl PartialOrd for LtList {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter first, then lexicographic.
pub fn shortlex_compare(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Precomputed distances and subtree sizes of a tree, for answering
/// preference questions without counting votes.
#[derive(Debug, Clone)]
pub struct TreeStructure {
    dist: DistanceMatrix,
    sizes: SubtreeSizes,
    levels: Vec<usize>,
}

impl TreeStructure {
    pub fn new(g: &Graph) -> Result<Self> {
        let sizes = SubtreeSizes::new(g)?;
        let n = g.node_count();
        let levels = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && 2 * sizes.get(u, v) > n).count())
            .collect();
        Ok(TreeStructure {
            dist: all_pairs_distances(g),
            sizes,
            levels,
        })
    }

    pub fn subtree_sizes(&self) -> &SubtreeSizes {
        &self.sizes
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Number of majority-sized subtrees seen from `v`; equals its level.
    pub fn level(&self, v: NodeId) -> usize {
        self.levels[v]
    }

    pub fn lt_list(&self, v: NodeId) -> LtList {
        let n = self.sizes.node_count();
        let mut values: Vec<usize> = (0..n)
            .filter(|&u| u != v)
            .map(|u| self.sizes.get(u, v))
            .filter(|&t| 2 * t > n)
            .collect();
        values.sort_unstable();
        LtList(values)
    }

    /// Node `w` on the `u`-`v` path with `d(u, w) = ceil(d(u, v) / 2)`.
    pub fn middle(&self, u: NodeId, v: NodeId) -> NodeId {
        let d = self.dist.at(u, v);
        let target = d.div_ceil(2);
        (0..self.dist.node_count())
            .find(|&w| self.dist.at(u, w) == target && self.dist.at(w, v) == d - target)
            .expect("path has a middle node")
    }

    /// `u ⪰ v` from levels and the sizes `|T_w^u|`, `|T_w^v|` at the middle node.
    pub fn weakly_prefers(&self, u: NodeId, v: NodeId) -> bool {
        match self.levels[u].cmp(&self.levels[v]) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => {
                let w = self.middle(u, v);
                self.sizes.get(w, u) <= self.sizes.get(w, v)
            }
        }
    }

    pub fn compare(&self, u: NodeId, v: NodeId) -> Result<Preference> {
        if u == v {
            return Err(Error::SameNode(u));
        }
        match (self.weakly_prefers(u, v), self.weakly_prefers(v, u)) {
            (true, true) => Ok(Preference::Tie),
            (true, false) => Ok(Preference::FirstPreferred),
            (false, true) => Ok(Preference::SecondPreferred),
            (false, false) => Err(Error::InvalidGraph(format!(
                "neither {u} nor {v} is weakly preferred"
            ))),
        }
    }
}

pub fn tree_compare_structural(g: &Graph, u: NodeId, v: NodeId) -> Result<Preference> {
    g.check_node(u)?;
    g.check_node(v)?;
    TreeStructure::new(g)?.compare(u, v)
}

pub fn lt_list(g: &Graph, v: NodeId) -> Result<LtList> {
    g.check_node(v)?;
    Ok(TreeStructure::new(g)?.lt_list(v))
}

/// `W_v = (sum_i t_i n^(k+1-i))^-1` over `LT^v = (t_1..t_k)`, and 1 when `k = 0`.
pub fn w_measure(g: &Graph) -> Result<ScoreVector> {
    Ok(w_measure_from(&TreeStructure::new(g)?))
}

pub fn w_measure_from(ts: &TreeStructure) -> ScoreVector {
    let n = int(ts.sizes.node_count());
    let values = (0..ts.sizes.node_count())
        .map(|v| {
            let lt = ts.lt_list(v);
            if lt.is_empty() {
                return Rational::one();
            }
            // Horner: ((t_1 n + t_2) n + ...) n
            let inv = lt
                .values()
                .iter()
                .fold(Rational::zero(), |acc, &t| (acc + int(t)) * &n);
            Rational::one() / inv
        })
        .collect();
    ScoreVector::new("w", values)
}

/// A pair where the preference verdict and the score order disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub u: NodeId,
    pub v: NodeId,
    pub preference: Preference,
    pub score_u: String,
    pub score_v: String,
}

impl PairViolation {
    fn new(u: NodeId, v: NodeId, preference: Preference, scores: &ScoreVector) -> Self {
        PairViolation {
            u,
            v,
            preference,
            score_u: scores.get(u).to_string(),
            score_v: scores.get(v).to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeViolation {
    pub u: NodeId,
    pub v: NodeId,
    pub side_u: usize,
    pub side_v: usize,
    pub score_u: String,
    pub score_v: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyViolation {
    pub winner: NodeId,
    pub top: Vec<NodeId>,
}

fn check_len(g: &Graph, scores: &ScoreVector) -> Result<()> {
    if scores.len() != g.node_count() {
        return Err(Error::NodeCountMismatch {
            expected: g.node_count(),
            found: scores.len(),
        });
    }
    Ok(())
}

/// Edges `{u, v}` where `u ⪰ v <=> F_u >= F_v` fails (in either direction).
pub fn check_cc(g: &Graph, scores: &ScoreVector) -> Result<Vec<PairViolation>> {
    check_len(g, scores)?;
    let pm = preference_matrix(g)?;
    Ok(check_cc_with(g, &pm, scores))
}

pub fn check_cc_with(g: &Graph, pm: &PreferenceMatrix, scores: &ScoreVector) -> Vec<PairViolation> {
    g.edges()
        .filter_map(|(u, v)| {
            let pref = pm.verdict(u, v);
            (pref != Preference::from_ordering(scores.cmp_nodes(u, v)))
                .then(|| PairViolation::new(u, v, pref, scores))
        })
        .collect()
}

/// Bridges where the larger side does not hold the larger score (or sides of
/// equal size hold different scores).
pub fn check_bridge_axiom(g: &Graph, scores: &ScoreVector) -> Result<Vec<BridgeViolation>> {
    check_len(g, scores)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = Vec::new();
    for (u, v) in bridges(g) {
        let split = bridge_split(g, u, v)?;
        let (su, sv) = (split.side_u.len(), split.side_v.len());
        if su.cmp(&sv) != scores.cmp_nodes(u, v) {
            out.push(BridgeViolation {
                u,
                v,
                side_u: su,
                side_v: sv,
                score_u: scores.get(u).to_string(),
                score_v: scores.get(v).to_string(),
            });
        }
    }
    Ok(out)
}

/// Reports the winner and the actual top set when they differ.
pub fn check_condorcet_consistency(g: &Graph, scores: &ScoreVector) -> Result<Option<ConsistencyViolation>> {
    check_len(g, scores)?;
    let pm = preference_matrix(g)?;
    Ok(check_consistency_with(&pm, scores))
}

pub fn check_consistency_with(pm: &PreferenceMatrix, scores: &ScoreVector) -> Option<ConsistencyViolation> {
    let winner = condorcet_winner(pm)?;
    let top = scores.top();
    (top != [winner]).then_some(ConsistencyViolation { winner, top })
}

/// All pairs with `u ≻ v` but `F_u <= F_v`.
pub fn check_weak_general_cct(g: &Graph, scores: &ScoreVector) -> Result<Vec<PairViolation>> {
    require_tree(g)?;
    check_len(g, scores)?;
    let pm = preference_matrix(g)?;
    Ok(check_weak_general_cct_with(&pm, scores))
}

pub fn check_weak_general_cct_with(pm: &PreferenceMatrix, scores: &ScoreVector) -> Vec<PairViolation> {
    let n = pm.node_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && pm.prefers(u, v) && scores.cmp_nodes(u, v) != Ordering::Greater {
                out.push(PairViolation::new(u, v, Preference::FirstPreferred, scores));
            }
        }
    }
    out
}

/// A triple `(a, b, c)` with `a ∼ b`, `b ∼ c` and `c ≻ a`. General CCT would
/// force `F_a = F_b = F_c` and `F_c > F_a` at once, so such a triple shows the
/// axiom cannot hold for any measure.
pub fn general_cct_conflict(pm: &PreferenceMatrix) -> Option<(NodeId, NodeId, NodeId)> {
    let n = pm.node_count();
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a && pm.verdict(a, b) == Preference::Tie) {
            for c in (0..n).filter(|&c| c != a && c != b) {
                if pm.verdict(b, c) == Preference::Tie && pm.prefers(c, a) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Violated { top: Vec<NodeId> },
    NoWinner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CondorcetReport {
    pub winner: Option<NodeId>,
    pub weak_winners: Option<(NodeId, NodeId)>,
    pub cycle: Option<Vec<NodeId>>,
    pub consistency: BTreeMap<String, Verdict>,
}

/// Winner, weak winners (trees only) and, when there is no winner, a cycle,
/// plus a consistency verdict for each score vector.
pub fn condorcet_report(g: &Graph, measures: &[ScoreVector]) -> Result<CondorcetReport> {
    let pm = preference_matrix(g)?;
    let winner = condorcet_winner(&pm);
    let weak_winners = if crate::graph::is_tree(g) {
        weak_condorcet_winners(g, &pm)?
    } else {
        None
    };
    let cycle = if winner.is_none() {
        find_condorcet_cycle(&pm)
    } else {
        None
    };
    let mut consistency = BTreeMap::new();
    for scores in measures {
        check_len(g, scores)?;
        let verdict = match (winner, check_consistency_with(&pm, scores)) {
            (None, _) => Verdict::NoWinner,
            (Some(_), None) => Verdict::Consistent,
            (Some(_), Some(violation)) => Verdict::Violated { top: violation.top },
        };
        consistency.insert(scores.measure().to_string(), verdict);
    }
    Ok(CondorcetReport {
        winner,
        weak_winners,
        cycle,
        consistency,
    })
}
