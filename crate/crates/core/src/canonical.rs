//! Distance lists as abstract integer sequences: sums, weights, shift steps,
//! the weight-at-most-one normal form, and graphs realizing pairs of lists.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::centrality::ListFunction;
use crate::error::{Error, Result};
use crate::graph::{distance_list, Graph, NodeId};

/// `(a_1, ..., a_k)`: `a_l` nodes at distance `l`. Positions are 1-based in
/// every method below.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NList(Vec<usize>);

impl NList {
    /// Rejects the empty list and trailing zeros.
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        match counts.last() {
            None => Err(Error::InvalidList("empty list".into())),
            Some(0) => Err(Error::InvalidList(format!("{counts:?} ends in zero"))),
            Some(_) => Ok(NList(counts)),
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_l`, or 0 past the end.
    pub fn at(&self, l: usize) -> usize {
        self.0.get(l - 1).copied().unwrap_or(0)
    }

    /// Total number of nodes.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// `S(a) = sum_l l * a_l`.
    pub fn sum(&self) -> usize {
        crate::centrality::weighted_sum(&self.0)
    }

    /// `ω(a) = sum_{l >= 2} (a_l - 1)`.
    pub fn weight(&self) -> Result<usize> {
        self.0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(idx, &a)| {
                a.checked_sub(1).ok_or(Error::MinEntry {
                    position: idx + 1,
                    value: 0,
                    required: 1,
                })
            })
            .sum()
    }

    /// `(a_1 + c_1, ..., a_l + c_l, a_{l+1}, ...)`; a longer `c` extends the list.
    pub fn add(&self, c: &[usize]) -> NList {
        let len = self.len().max(c.len());
        let mut out: Vec<usize> = (0..len)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + c.get(i).copied().unwrap_or(0))
            .collect();
        while out.len() > 1 && out.last() == Some(&0) {
            out.pop();
        }
        NList(out)
    }

    /// `b_l = a_l - [l=i] - [l=j] + [l ∈ {i-1, j+1}]`.
    pub fn shift_step(&self, i: usize, j: usize) -> Result<NList> {
        if !(2 <= i && i <= j && j <= self.len()) {
            return Err(Error::InvalidIndices(format!(
                "need 2 <= i <= j <= {}, got i = {i}, j = {j}",
                self.len()
            )));
        }
        let need = if i == j { 2 } else { 1 };
        if self.at(i) < need {
            return Err(Error::MinEntry {
                position: i,
                value: self.at(i),
                required: need,
            });
        }
        if self.at(j) < 1 {
            return Err(Error::MinEntry {
                position: j,
                value: self.at(j),
                required: 1,
            });
        }
        let mut b = self.0.clone();
        if j == b.len() {
            b.push(0);
        }
        b[i - 1] -= 1;
        b[j - 1] -= 1;
        b[i - 2] += 1;
        b[j] += 1;
        Ok(NList(b))
    }
}

impl fmt::Display for NList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `⊥_{S,n}` with the parameters it was derived from. `j = 1` means no
/// entry past the first exceeds one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalList {
    pub list: NList,
    pub sum: usize,
    pub n: usize,
    pub k: usize,
    pub j: usize,
}

fn triangle(k: usize) -> usize {
    k * (k + 1) / 2
}

/// The unique `n`-list with sum `S` and weight at most one.
pub fn canonical_bot(sum: usize, n: usize) -> Result<CanonicalList> {
    let max = triangle(n);
    if n == 0 || sum < n || sum > max {
        return Err(Error::SumOutOfRange {
            sum,
            n,
            min: n,
            max,
        });
    }
    let excess = sum - n;
    let k = (1..).find(|&k| triangle(k) > excess).expect("bounded by n");
    let j = excess - triangle(k - 1) + 1;
    let mut counts = vec![1; k];
    counts[0] = n - (k - 1) - usize::from(j >= 2);
    if j >= 2 {
        counts[j - 1] += 1;
    }
    Ok(CanonicalList {
        list: NList(counts),
        sum,
        n,
        k,
        j,
    })
}

/// Repeated shift steps down to `⊥_{S(a),n}`. Each macro step picks the
/// smallest `i` and largest `j` and applies `min(i - 1, k - j + 1)` shifts,
/// moving one unit to position 1 or to a new last position. The trace holds
/// the list after every macro step; it is empty when `a` is already canonical.
pub fn reduce_to_canonical(a: &NList) -> Result<(CanonicalList, Vec<NList>)> {
    if let Some(pos) = a.counts().iter().position(|&x| x == 0) {
        return Err(Error::MinEntry {
            position: pos + 1,
            value: 0,
            required: 1,
        });
    }
    let mut current = a.clone();
    let mut trace = Vec::new();
    while current.weight()? > 1 {
        let k = current.len();
        let i = (2..=k).find(|&l| current.at(l) > 1).expect("weight above one");
        let j = (i..=k).rev().find(|&l| current.at(l) > 1).expect("i qualifies");
        let m = (i - 1).min(k - j + 1);
        for t in 0..m {
            current = current.shift_step(i - t, j + t)?;
        }
        trace.push(current.clone());
    }
    let bot = canonical_bot(a.sum(), a.n())?;
    debug_assert_eq!(bot.list, current);
    Ok((bot, trace))
}

/// Every `n`-list with all entries at least one (compositions of `n`).
pub fn compositions(n: usize) -> impl Iterator<Item = NList> {
    let masks = if n == 0 { 0 } else { 1u64 << (n - 1) };
    (0..masks).map(move |mask| {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask >> bit & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        NList(parts)
    })
}

/// A graph with two marked adjacent nodes and the distance lists they are
/// built to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip)]
    pub graph: Graph,
    pub u0: NodeId,
    pub v0: NodeId,
    pub expected_u0: NList,
    pub expected_v0: NList,
    pub tail: Option<String>,
}

impl Gadget {
    /// Distance lists actually realized by `u0` and `v0`.
    pub fn realized(&self) -> (Vec<usize>, Vec<usize>) {
        let list = |v| distance_list(&self.graph, v).expect("marked node").into_counts();
        (list(self.u0), list(self.v0))
    }
}

/// Two paths `u_0..u_j`, `v_0..v_j` joined by `{u_0, v_0}` and
/// `{u_{j-1}, v_j}`. Returns the graph and the ids of `u_l` and `v_l`.
fn ladder(j: usize) -> (Graph, Vec<NodeId>, Vec<NodeId>) {
    let mut g = Graph::empty(2 * (j + 1));
    let u: Vec<NodeId> = (0..=j).collect();
    let v: Vec<NodeId> = (j + 1..2 * (j + 1)).collect();
    for l in 0..j {
        g.add_edge(u[l], u[l + 1]).expect("fresh edge");
        g.add_edge(v[l], v[l + 1]).expect("fresh edge");
    }
    g.add_edge(u[0], v[0]).expect("fresh edge");
    g.add_edge(u[j - 1], v[j]).expect("fresh edge");
    (g, u, v)
}

fn star_lists(i: usize, j: usize) -> (NList, NList) {
    let a = (1..=j).map(|l| 2 + usize::from(l == i) + usize::from(l == j)).collect();
    let b = (1..=j + 1)
        .map(|l| 2 + usize::from(l == i - 1) - usize::from(l == j + 1))
        .collect();
    (NList(a), NList(b))
}

fn check_shift_indices(i: usize, j: usize) -> Result<()> {
    if 2 <= i && i <= j {
        Ok(())
    } else {
        Err(Error::InvalidIndices(format!("need 2 <= i <= j, got i = {i}, j = {j}")))
    }
}

/// The ladder plus a pendant on `v_{i-2}`: `A(u_0) = a*`, `A(v_0) = b*` with
/// `a*_l = 2 + [l=i] + [l=j]` and `b*_l = 2 + [l=i-1] - [l=j+1]`.
pub fn build_shift_gadget(i: usize, j: usize) -> Result<Gadget> {
    check_shift_indices(i, j)?;
    let (mut g, u, v) = ladder(j);
    let w = g.add_node();
    g.add_edge(v[i - 2], w)?;
    let (a, b) = star_lists(i, j);
    Ok(Gadget {
        kind: "shift".into(),
        params: BTreeMap::from([("i".into(), i.to_string()), ("j".into(), j.to_string())]),
        graph: g,
        u0: u[0],
        v0: v[0],
        expected_u0: a,
        expected_v0: b,
        tail: None,
    })
}

/// Spine `s = p_0, p_1, ..., p_m` with `c_l - 1` extra leaves on `p_{l-1}`,
/// so that `A(s) = c`.
pub fn caterpillar(c: &[usize]) -> Result<Graph> {
    if let Some(pos) = c.iter().position(|&x| x == 0) {
        return Err(Error::MinEntry {
            position: pos + 1,
            value: 0,
            required: 1,
        });
    }
    let mut g = Graph::empty(c.len() + 1);
    for (l, &count) in c.iter().enumerate() {
        g.add_edge(l, l + 1)?;
        for _ in 1..count {
            let leaf = g.add_node();
            g.add_edge(l, leaf)?;
        }
    }
    Ok(g)
}

/// Grows the shift gadget so that `A(u_0) = a` and `A(v_0)` is `a` shifted at
/// `(i, j)`: `a_l - a*_l` extra nodes joined to both `u_{l-1}` and `v_{l-1}`
/// for each `l <= j`, and a tail graph glued at `v_j` for the layers beyond
/// `j`. The tail is given as a graph and its attachment node; by default a
/// caterpillar is used.
pub fn build_shift_gadget_extended(
    a: &NList,
    i: usize,
    j: usize,
    tail: Option<(&Graph, NodeId)>,
) -> Result<Gadget> {
    check_shift_indices(i, j)?;
    let b = a.shift_step(i, j)?;
    for l in 1..=j {
        for (value, position) in [(a.at(l), l), (b.at(l), l)] {
            if value < 2 {
                return Err(Error::MinEntry {
                    position,
                    value,
                    required: 2,
                });
            }
        }
    }
    let rest: Vec<usize> = a.counts()[j..].to_vec();
    let (tail_graph, s, tail_name) = match tail {
        Some((t, s)) => {
            t.check_node(s)?;
            let realized = distance_list(t, s)?;
            if realized.unreachable() > 0 || realized.counts() != rest.as_slice() {
                return Err(Error::InvalidParameter(format!(
                    "tail realizes {:?} from its marked node, layers beyond j need {rest:?}",
                    realized.counts()
                )));
            }
            (t.clone(), s, "custom".to_string())
        }
        None => (caterpillar(&rest)?, 0, "caterpillar".to_string()),
    };

    let mut gadget = build_shift_gadget(i, j)?;
    let (a_star, _) = star_lists(i, j);
    let g = &mut gadget.graph;
    let (u, v): (Vec<NodeId>, Vec<NodeId>) = ((0..=j).collect(), (j + 1..2 * (j + 1)).collect());
    for l in 1..=j {
        for _ in a_star.at(l)..a.at(l) {
            let twin = g.add_node();
            g.add_edge(u[l - 1], twin)?;
            g.add_edge(v[l - 1], twin)?;
        }
    }
    let mut ids = vec![0; tail_graph.node_count()];
    for (x, id) in ids.iter_mut().enumerate() {
        *id = if x == s { v[j] } else { g.add_node() };
    }
    for (x, y) in tail_graph.edges() {
        g.add_edge(ids[x], ids[y])?;
    }

    gadget.kind = "shift-ext".into();
    gadget.params.insert("a".into(), a.to_string());
    gadget.expected_u0 = a.clone();
    gadget.expected_v0 = b;
    gadget.tail = Some(tail_name);
    Ok(gadget)
}

/// Two adjacent nodes with `A(u_0) = ⊥_{S,n} + c` and `A(v_0) = ⊥_{S+1,n} + c`,
/// `c` the all-ones `j`-list. Built from the ladder on `j` rungs, `m - 1`
/// nodes joined to both `u_0` and `v_0` (`m - 2` when `j = 1`), and a path of
/// `k - j` nodes hanging from `v_j`.
pub fn build_minimal_gadget(sum: usize, n: usize) -> Result<Gadget> {
    let max = triangle(n);
    if n == 0 || sum < n || sum >= max {
        return Err(Error::SumOutOfRange {
            sum,
            n,
            min: n,
            max: max.saturating_sub(1),
        });
    }
    let bot = canonical_bot(sum, n)?;
    let next = canonical_bot(sum + 1, n)?;
    let (k, j, m) = (bot.k, bot.j, bot.list.at(1));
    let (mut g, u, v) = ladder(j);
    let fan = if j >= 2 { m - 1 } else { m - 2 };
    for _ in 0..fan {
        let z = g.add_node();
        g.add_edge(u[0], z)?;
        g.add_edge(v[0], z)?;
    }
    let mut last = v[j];
    for _ in j..k {
        let p = g.add_node();
        g.add_edge(last, p)?;
        last = p;
    }
    let c = vec![1; j];
    Ok(Gadget {
        kind: "minimal".into(),
        params: BTreeMap::from([("sum".into(), sum.to_string()), ("n".into(), n.to_string())]),
        graph: g,
        u0: u[0],
        v0: v[0],
        expected_u0: bot.list.add(&c),
        expected_v0: next.list.add(&c),
        tail: Some("path".into()),
    })
}

/// Whether `f(a) >= f(b) <=> f(a + c) >= f(b + c)` holds for this triple.
/// A `true` answer is only the absence of a counterexample.
pub fn check_regularity(f: &impl ListFunction, a: &NList, b: &NList, c: &[usize]) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::InvalidList(format!("{a} and {b} have different totals")));
    }
    if c.len() > a.len().min(b.len()) {
        return Err(Error::InvalidList(format!(
            "c has length {}, longer than {a} or {b}",
            c.len()
        )));
    }
    let eval = |x: &NList| {
        f.eval(x.counts())
            .ok_or_else(|| Error::InvalidList(format!("{} undefined on {x}", f.name())))
    };
    let before = eval(a)? >= eval(b)?;
    let after = eval(&a.add(c))? >= eval(&b.add(c))?;
    Ok(before == after)
}

/// Small triples `(a, b, c)`: `a`, `b` compositions of some `n <= n_max`,
/// `c` with entries in `0..=2`. Returns the first triple breaking regularity.
pub fn find_regularity_counterexample(
    f: &impl ListFunction,
    n_max: usize,
) -> Option<(NList, NList, Vec<usize>)> {
    for n in 1..=n_max {
        let lists: Vec<NList> = compositions(n).collect();
        for a in &lists {
            for b in &lists {
                let max_len = a.len().min(b.len());
                for len in 1..=max_len {
                    for code in 0..3usize.pow(len as u32) {
                        let c: Vec<usize> = (0..len).map(|p| code / 3usize.pow(p as u32) % 3).collect();
                        if let Ok(false) = check_regularity(f, a, b, &c) {
                            return Some((a.clone(), b.clone(), c));
                        }
                    }
                }
            }
        }
    }
    None
}
