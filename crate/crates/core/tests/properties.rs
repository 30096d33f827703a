use proptest::prelude::*;

use condorcet_centrality::canonical::{canonical_bot, reduce_to_canonical, NList};
use condorcet_centrality::centrality::closeness;
use condorcet_centrality::condorcet::{
    check_bridge_axiom, check_cc, condorcet_winner, preference_matrix, Preference,
};
use condorcet_centrality::graph::{
    all_pairs_distances, parse_edge_list, random_connected_graph, random_tree, subtree_size, Graph,
};
use condorcet_centrality::random_walk::{general_bridge_gap, hitting_times, tree_rwc_bridge_gap};
use condorcet_centrality::score::same_ranking;
use condorcet_centrality::Rational;

fn nlist() -> impl Strategy<Value = NList> {
    prop::collection::vec(1usize..5, 1..7).prop_map(|v| NList::new(v).unwrap())
}

fn tree() -> impl Strategy<Value = Graph> {
    (2usize..14, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed).unwrap())
}

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..16, 0.05f64..0.6, any::<u64>()).prop_map(|(n, p, seed)| random_connected_graph(n, p, seed).unwrap())
}

proptest! {
    #[test]
    fn shift_preserves_total_and_sum(a in nlist(), i in 2usize..7, extra in 0usize..5) {
        let j = i + extra;
        if let Ok(b) = a.shift_step(i, j) {
            prop_assert_eq!(b.n(), a.n());
            prop_assert_eq!(b.sum(), a.sum());
            prop_assert!(b.counts().last() != Some(&0));
        }
    }

    #[test]
    fn reduction_lowers_weight_until_canonical(a in nlist()) {
        let (bot, trace) = reduce_to_canonical(&a).unwrap();
        let mut weight = a.weight().unwrap();
        prop_assert!(trace.len() <= weight);
        for step in &trace {
            prop_assert_eq!((step.n(), step.sum()), (a.n(), a.sum()));
            let w = step.weight().unwrap();
            prop_assert!(w < weight);
            weight = w;
        }
        prop_assert!(bot.list.weight().unwrap() <= 1);
        prop_assert_eq!(bot.list, canonical_bot(a.sum(), a.n()).unwrap().list);
    }

    #[test]
    fn edge_list_round_trip(g in graph()) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g.clone());
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }

    #[test]
    fn winner_follows_relabeling(g in graph(), seed in any::<u64>()) {
        let n = g.node_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let h = g.relabel(&perm).unwrap();
        let w1 = condorcet_winner(&preference_matrix(&g).unwrap());
        let w2 = condorcet_winner(&preference_matrix(&h).unwrap());
        prop_assert_eq!(w1.map(|w| perm[w]), w2);
    }

    #[test]
    fn votes_partition_nodes(g in graph()) {
        let pm = preference_matrix(&g).unwrap();
        let n = g.node_count();
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                prop_assert!(pm.net(u, v) + pm.net(v, u) <= n);
                prop_assert_eq!(pm.verdict(u, v), pm.verdict(v, u).flip());
                prop_assert_eq!(pm.prefers(u, v), pm.verdict(u, v) == Preference::FirstPreferred);
            }
        }
    }

    #[test]
    fn closeness_gap_is_vote_margin(g in graph()) {
        let dm = all_pairs_distances(&g);
        let pm = preference_matrix(&g).unwrap();
        for (u, v) in g.edges() {
            let lhs = dm.distance_sum(v) as i64 - dm.distance_sum(u) as i64;
            prop_assert_eq!(lhs, pm.net(u, v) as i64 - pm.net(v, u) as i64);
        }
        prop_assert!(check_cc(&g, &closeness(&g).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn closeness_respects_bridges_on_trees(t in tree()) {
        prop_assert!(check_bridge_axiom(&t, &closeness(&t).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn tree_hitting_identities(t in tree()) {
        let hm = hitting_times(&t).unwrap();
        let n = t.node_count();
        for (u, v) in t.edges() {
            let su = subtree_size(&t, u, v).unwrap();
            prop_assert_eq!(hm.get(u, v), &Rational::from_integer((2 * su as i64 - 1).into()));
            let solved = hm.column_sum(v) - hm.column_sum(u);
            prop_assert_eq!(&solved, &tree_rwc_bridge_gap(&t, u, v).unwrap());
            prop_assert_eq!(&solved, &general_bridge_gap(&t, u, v).unwrap());
            let sv = subtree_size(&t, v, u).unwrap();
            prop_assert_eq!(su + sv, n);
        }
        let c = closeness(&t).unwrap();
        let rwc = condorcet_centrality::random_walk::rw_closeness_from(&hm);
        prop_assert!(same_ranking(&c, &rwc).unwrap());
    }

    #[test]
    fn ranking_ignores_positive_scaling(g in graph(), num in 1i64..50, den in 1i64..50) {
        let c = closeness(&g).unwrap();
        let scaled = c.scaled(&Rational::new(num.into(), den.into()));
        prop_assert!(same_ranking(&c, &scaled).unwrap());
        prop_assert_eq!(c.top(), scaled.top());
    }
}
