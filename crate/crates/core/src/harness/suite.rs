//! Exhaustive checks over all labeled trees and randomized checks over
//! connected graphs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;
use rayon::prelude::*;

use crate::centrality::{
    closeness, closeness_from_distances, decay, degree, harmonic,
};
use crate::condorcet::{
    check_cc_with, check_consistency_with, check_weak_general_cct_with, condorcet_winner, preference_matrix, find_condorcet_cycle,
    level, w_measure_from, weak_condorcet_winners, PreferenceMatrix, TreeStructure,
};
use crate::error::{Error, Result};
use crate::graph::generate::random_connected_graph_with;
use crate::graph::{
    all_pairs_distances, bridge_split, bridges, prufer_sequence_at, tree_count, tree_from_prufer, Graph, NodeId,
    DEFAULT_TREE_CAP,
};
use crate::random_walk::{general_bridge_gap, hitting_times, rw_closeness_from};
use crate::score::{int, ratio, same_ranking, Rational, ScoreVector};

use super::fixtures::{fixture_unchecked, verify_fixture, FIXTURE_NAMES};
use super::report::{Tallies, VerificationReport};
use super::measure::Measure;

pub type ClosenessFn = fn(&Graph) -> Result<ScoreVector>;

#[derive(Debug, Clone)]
pub struct TreeSuiteConfig {
    pub n_max: usize,
    /// Random-walk, W-measure and pairwise structural checks stop here.
    pub detail_n_max: usize,
    /// The closeness implementation under test.
    pub closeness: ClosenessFn,
}

impl Default for TreeSuiteConfig {
    fn default() -> Self {
        TreeSuiteConfig {
            n_max: DEFAULT_TREE_CAP,
            detail_n_max: 8,
            closeness,
        }
    }
}

pub const TREE_CLAIMS: [&str; 17] = [
    "closeness-condorcet-consistent",
    "preference-transitive",
    "closeness-bridge-gap",
    "closeness-subtree-sum",
    "winner-or-weak-pair",
    "cct-implies-top",
    "rwc-condorcet-consistent",
    "edge-hitting-time",
    "rwc-bridge-gap",
    "rwc-subtree-sum",
    "closeness-rwc-same-ranking",
    "w-weak-general-cct",
    "w-matches-shortlex",
    "structural-compare-agrees",
    "moving-closer",
    "level-matches-lt-length",
    "bridge-split-matches-subtrees",
];

const CLOSENESS_CONSISTENT: usize = 0;
const TRANSITIVE: usize = 1;
const CLOSENESS_GAP: usize = 2;
const CLOSENESS_SUBTREE: usize = 3;
const WINNER_OR_PAIR: usize = 4;
const CCT_TOP: usize = 5;
const RWC_CONSISTENT: usize = 6;
const EDGE_HITTING: usize = 7;
const RWC_GAP: usize = 8;
const RWC_SUBTREE: usize = 9;
const SAME_RANKING: usize = 10;
const W_WEAK_GENERAL: usize = 11;
const W_SHORTLEX: usize = 12;
const STRUCTURAL: usize = 13;
const MOVING_CLOSER: usize = 14;
const LEVEL_LT: usize = 15;
const SPLIT_SUBTREES: usize = 16;

pub fn run_tree_suite(n_max: usize) -> Result<VerificationReport> {
    run_tree_suite_with(&TreeSuiteConfig {
        n_max,
        ..TreeSuiteConfig::default()
    })
}

pub fn run_tree_suite_with(cfg: &TreeSuiteConfig) -> Result<VerificationReport> {
    if cfg.n_max > DEFAULT_TREE_CAP {
        return Err(Error::TreeCapExceeded {
            n: cfg.n_max,
            cap: DEFAULT_TREE_CAP,
        });
    }
    let mut total = Tallies::new(&TREE_CLAIMS);
    for n in 1..=cfg.n_max {
        let detailed = n <= cfg.detail_n_max;
        let shard = (0..tree_count(n))
            .into_par_iter()
            .fold(
                || Tallies::new(&TREE_CLAIMS),
                |mut acc, index| {
                    let g = tree_from_prufer(n, &prufer_sequence_at(n, index)).expect("valid rank");
                    check_tree(cfg, &g, (n as u64) << 48 | index, detailed, &mut acc);
                    acc
                },
            )
            .reduce(|| Tallies::new(&TREE_CLAIMS), Tallies::merge);
        total = total.merge(shard);
    }
    let params = BTreeMap::from([
        ("n_max".to_string(), cfg.n_max.to_string()),
        ("detail_n_max".to_string(), cfg.detail_n_max.min(cfg.n_max).to_string()),
    ]);
    Ok(total.into_report("trees", params))
}

fn signed(x: usize) -> i64 {
    x as i64
}

fn check_tree(cfg: &TreeSuiteConfig, g: &Graph, key: u64, detailed: bool, acc: &mut Tallies) {
    acc.instances += 1;
    let n = g.node_count();
    if n < 2 {
        return;
    }
    let ts = TreeStructure::new(g).expect("enumerated graphs are trees");
    let dm = ts.distances();
    let sizes = ts.subtree_sizes();
    let pm = PreferenceMatrix::from_distances(dm);
    let winner = condorcet_winner(&pm);
    let weak = weak_condorcet_winners(g, &pm).expect("tree");
    let centre: Vec<NodeId> = match (winner, weak) {
        (Some(w), _) => vec![w],
        (None, Some((a, b))) => vec![a.min(b), a.max(b)],
        (None, None) => vec![],
    };
    acc.record(WINNER_OR_PAIR, key, !centre.is_empty(), g, || "no winner and no weak pair".into());

    match (cfg.closeness)(g) {
        Ok(c) => {
            let v = check_consistency_with(&pm, &c);
            acc.record(CLOSENESS_CONSISTENT, key, v.is_none(), g, || format!("{v:?}"));
        }
        Err(e) => acc.record(CLOSENESS_CONSISTENT, key, false, g, || e.to_string()),
    }

    let cycle = find_condorcet_cycle(&pm);
    let mut intransitive = None;
    'outer: for u in 0..n {
        for v in (0..n).filter(|&v| pm.prefers(u, v)) {
            for w in (0..n).filter(|&w| w != u && pm.prefers(v, w)) {
                if !pm.prefers(u, w) {
                    intransitive = Some((u, v, w));
                    break 'outer;
                }
            }
        }
    }
    acc.record(TRANSITIVE, key, cycle.is_none() && intransitive.is_none(), g, || {
        format!("cycle {cycle:?}, intransitive triple {intransitive:?}")
    });

    let mut gap_bad = None;
    for (u, v) in g.edges() {
        let lhs = signed(dm.distance_sum(v)) - signed(dm.distance_sum(u));
        let rhs = signed(sizes.get(u, v)) - signed(sizes.get(v, u));
        if lhs != rhs {
            gap_bad = Some((u, v, lhs, rhs));
            break;
        }
    }
    acc.record(CLOSENESS_GAP, key, gap_bad.is_none(), g, || format!("edge, lhs, rhs: {gap_bad:?}"));

    let subtree_bad = (0..n).find(|&v| dm.distance_sum(v) != (0..n).filter(|&u| u != v).map(|u| sizes.get(u, v)).sum::<usize>());
    acc.record(CLOSENESS_SUBTREE, key, subtree_bad.is_none(), g, || format!("node {subtree_bad:?}"));

    // Measures that satisfy CCT on this tree must put the centre on top.
    // Eccentricity and x are rebuilt from `dm` here; the library versions are
    // exercised by the graph suite and the unit tests.
    let c = closeness_from_distances(dm);
    let ecc = (0..n).map(|v| ratio(1, (0..n).map(|u| dm.at(u, v)).max().unwrap_or(0))).collect();
    let x = (0..n)
        .map(|v| if g.degree(v) > 1 { c.get(v).clone() } else { Rational::from_integer(0.into()) })
        .collect();
    let mut measures: Vec<ScoreVector> = vec![
        c,
        degree(g),
        ScoreVector::new("eccentricity", ecc),
        ScoreVector::new("x", x),
    ];
    if !detailed {
        check_cct_top(g, key, &pm, &centre, &measures, acc);
        return;
    }
    measures.push(harmonic(g));
    measures.push(decay(g, &Measure::default_delta()).expect("valid delta"));

    let hm = hitting_times(g).expect("connected");
    let rwc = rw_closeness_from(&hm);
    let rv = check_consistency_with(&pm, &rwc);
    acc.record(RWC_CONSISTENT, key, rv.is_none(), g, || format!("{rv:?}"));

    let mut hit_bad = None;
    let mut rwc_gap_bad = None;
    for (a, b) in g.edges() {
        for (u, v) in [(a, b), (b, a)] {
            if *hm.get(u, v) != int(2 * sizes.get(u, v) - 1) {
                hit_bad = Some((u, v, hm.get(u, v).to_string()));
            }
        }
        let lhs = hm.column_sum(b) - hm.column_sum(a);
        let diff = int(sizes.get(a, b)) - int(sizes.get(b, a));
        if lhs != diff * int(2 * n - 1) {
            rwc_gap_bad = Some((a, b, lhs.to_string()));
        }
    }
    acc.record(EDGE_HITTING, key, hit_bad.is_none(), g, || format!("{hit_bad:?}"));
    acc.record(RWC_GAP, key, rwc_gap_bad.is_none(), g, || format!("{rwc_gap_bad:?}"));

    let rwc_subtree_bad = (0..n).find(|&v| {
        let expected: usize = (0..n)
            .filter(|&u| u != v)
            .map(|u| sizes.get(u, v) * (2 * sizes.get(u, v) - 1))
            .sum();
        hm.column_sum(v) != int(expected)
    });
    acc.record(RWC_SUBTREE, key, rwc_subtree_bad.is_none(), g, || format!("node {rwc_subtree_bad:?}"));

    let same = same_ranking(&measures[0], &rwc).unwrap_or(false);
    acc.record(SAME_RANKING, key, same, g, || "closeness and rwc rank differently".into());

    let w = w_measure_from(&ts);
    let wv = check_weak_general_cct_with(&pm, &w);
    acc.record(W_WEAK_GENERAL, key, wv.is_empty(), g, || format!("{wv:?}"));

    let lts: Vec<_> = (0..n).map(|v| ts.lt_list(v)).collect();
    let mut shortlex_bad = None;
    let mut structural_bad = None;
    let mut moving_bad = None;
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            if w.cmp_nodes(u, v) != lts[v].cmp(&lts[u]) {
                shortlex_bad = Some((u, v));
            }
            let structural = ts.compare(u, v);
            if structural.as_ref().ok() != Some(&pm.verdict(u, v)) {
                structural_bad = Some((u, v, format!("{structural:?}")));
            }
            let d = dm.at(u, v);
            if d >= 3 {
                let step = |from: NodeId, to: NodeId| {
                    *g.neighbors(from)
                        .iter()
                        .find(|&&x| dm.at(x, to) + 1 == dm.at(from, to))
                        .expect("path continues")
                };
                let (u1, v1) = (step(u, v), step(v, u));
                if pm.verdict(u, v) != pm.verdict(u1, v1) {
                    moving_bad = Some((u, v, u1, v1));
                }
            }
        }
    }
    acc.record(W_SHORTLEX, key, shortlex_bad.is_none(), g, || format!("{shortlex_bad:?}"));
    acc.record(STRUCTURAL, key, structural_bad.is_none(), g, || format!("{structural_bad:?}"));
    acc.record(MOVING_CLOSER, key, moving_bad.is_none(), g, || format!("{moving_bad:?}"));

    let level_bad = (0..n).find(|&v| level(g, &pm, v).ok() != Some(lts[v].len()));
    acc.record(LEVEL_LT, key, level_bad.is_none(), g, || format!("node {level_bad:?}"));

    let split_bad = g.edges().find(|&(u, v)| {
        bridge_split(g, u, v)
            .map(|s| (s.side_u.len(), s.side_v.len()) != (sizes.get(u, v), sizes.get(v, u)))
            .unwrap_or(true)
    });
    acc.record(SPLIT_SUBTREES, key, split_bad.is_none(), g, || format!("edge {split_bad:?}"));

    measures.push(rwc);
    measures.push(w);
    check_cct_top(g, key, &pm, &centre, &measures, acc);
}

fn check_cct_top(
    g: &Graph,
    key: u64,
    pm: &PreferenceMatrix,
    centre: &[NodeId],
    measures: &[ScoreVector],
    acc: &mut Tallies,
) {
    for scores in measures {
        if check_cc_with(g, pm, scores).is_empty() {
            let top = scores.top();
            acc.record(CCT_TOP, key, top == centre, g, || {
                format!("{} satisfies CCT, top {top:?}, centre {centre:?}", scores.measure())
            });
        }
    }
}

pub const GRAPH_CLAIMS: [&str; 17] = [
    "closeness-cc",
    "closeness-net-identity",
    "rwc-general-bridge-gap",
    "fig2-cycle-found",
    "fig6g-closeness-not-consistent",
    "fig1-rwc-violates-cc",
    "fixture:fig1",
    "fixture:fig2",
    "fixture:fig3",
    "fixture:fig4",
    "fixture:fig5",
    "fixture:fig6g",
    "fixture:fig6gp",
    "fixture:fig7",
    "fixture:fig8",
    "fixture:fig9",
    "fixtures-connected",
];

const CLOSENESS_CC: usize = 0;
const NET_IDENTITY: usize = 1;
const GENERAL_GAP: usize = 2;
const FIG2_CYCLE: usize = 3;
const FIG6_INCONSISTENT: usize = 4;
const FIG1_RWC_CC: usize = 5;
const FIXTURE_BASE: usize = 6;
const FIXTURES_CONNECTED: usize = 16;

/// Every this many samples, a smaller graph is drawn for the random-walk
/// bridge check.
pub const RWC_STRIDE: u64 = 10;
pub const RWC_N_MAX: usize = 14;

fn sample_rng(seed: u64, index: u64) -> XorShiftRng {
    XorShiftRng::seed_from_u64(seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Randomized checks on connected graphs with `2..=n_max` nodes, then the
/// fixture regressions. Deterministic in `seed`.
pub fn run_graph_suite(samples: u64, n_max: usize, seed: u64) -> Result<VerificationReport> {
    if n_max < 2 {
        return Err(Error::TooFewNodes { min: 2, n: n_max });
    }
    let mut tallies = (0..samples)
        .into_par_iter()
        .fold(
            || Tallies::new(&GRAPH_CLAIMS),
            |mut acc, index| {
                check_sample(seed, index, n_max, &mut acc);
                acc
            },
        )
        .reduce(|| Tallies::new(&GRAPH_CLAIMS), Tallies::merge);
    check_fixtures(samples, &mut tallies);
    let params = BTreeMap::from([
        ("samples".to_string(), samples.to_string()),
        ("n_max".to_string(), n_max.to_string()),
        ("seed".to_string(), seed.to_string()),
        ("rwc_stride".to_string(), RWC_STRIDE.to_string()),
        ("rwc_n_max".to_string(), RWC_N_MAX.min(n_max).to_string()),
    ]);
    Ok(tallies.into_report("graphs", params))
}

fn check_sample(seed: u64, index: u64, n_max: usize, acc: &mut Tallies) {
    acc.instances += 1;
    let mut rng = sample_rng(seed, index);
    let n = rng.random_range(2..=n_max);
    let p = rng.random_range(0.02..0.5);
    let g = random_connected_graph_with(&mut rng, n, p);
    let dm = all_pairs_distances(&g);
    let pm = PreferenceMatrix::from_distances(&dm);
    let c = closeness_from_distances(&dm);
    let violations = check_cc_with(&g, &pm, &c);
    acc.record(CLOSENESS_CC, index, violations.is_empty(), &g, || format!("{violations:?}"));
    let identity_bad = g.edges().find(|&(u, v)| {
        signed(dm.distance_sum(v)) - signed(dm.distance_sum(u)) != signed(pm.net(u, v)) - signed(pm.net(v, u))
    });
    acc.record(NET_IDENTITY, index, identity_bad.is_none(), &g, || format!("edge {identity_bad:?}"));

    if index.is_multiple_of(RWC_STRIDE) {
        let m = rng.random_range(2..=RWC_N_MAX.min(n_max));
        let p = rng.random_range(0.05..0.35);
        let h = random_connected_graph_with(&mut rng, m, p);
        let hm = hitting_times(&h).expect("connected");
        let bad = bridges(&h).into_iter().find(|&(u, v)| {
            let solved: Rational = hm.column_sum(v) - hm.column_sum(u);
            general_bridge_gap(&h, u, v).map(|gap| gap != solved).unwrap_or(true)
        });
        acc.record(GENERAL_GAP, index, bad.is_none(), &h, || format!("bridge {bad:?}"));
    }
}

fn check_fixtures(key: u64, acc: &mut Tallies) {
    for (offset, name) in FIXTURE_NAMES.iter().enumerate() {
        let f = match fixture_unchecked(name) {
            Ok(f) => f,
            Err(e) => {
                acc.record(FIXTURE_BASE + offset, key, false, &Graph::empty(0), || e.to_string());
                continue;
            }
        };
        let outcome = verify_fixture(&f);
        acc.record(FIXTURE_BASE + offset, key, outcome.is_ok(), &f.graph, || {
            outcome.clone().unwrap_err()
        });
        acc.record(FIXTURES_CONNECTED, key, f.graph.is_connected(), &f.graph, || name.to_string());
        let pm = match preference_matrix(&f.graph) {
            Ok(pm) => pm,
            Err(_) => continue,
        };
        match *name {
            "fig2" => {
                let cycle = find_condorcet_cycle(&pm);
                let ok = cycle.as_ref().is_some_and(|c| {
                    c.len() >= 3 && (0..c.len()).all(|i| pm.prefers(c[i], c[(i + 1) % c.len()]))
                });
                acc.record(FIG2_CYCLE, key, ok, &f.graph, || format!("{cycle:?}"));
            }
            "fig6g" => {
                let ok = closeness(&f.graph)
                    .map(|c| check_consistency_with(&pm, &c).is_some())
                    .unwrap_or(false);
                acc.record(FIG6_INCONSISTENT, key, ok, &f.graph, || "closeness consistent".into());
            }
            "fig1" => {
                let ok = hitting_times(&f.graph)
                    .map(|hm| !check_cc_with(&f.graph, &pm, &rw_closeness_from(&hm)).is_empty())
                    .unwrap_or(false);
                acc.record(FIG1_RWC_CC, key, ok, &f.graph, || "no violation".into());
            }
            _ => {}
        }
    }
}
