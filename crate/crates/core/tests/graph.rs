mod common;

use common::{complete, kab};
use fbp_core::connectivity::{connected_without, connectivity_level};
use fbp_core::oracles::enumerate_labeled_graphs;
use fbp_core::{degree_profile, Graph, GraphError};
use proptest::prelude::*;

/// Smallest vertex cut size, capped at 3, by trying every subset.
fn brute_level(g: &Graph) -> u8 {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    for k in 0..3usize {
        if k + 2 > n {
            // Complete graphs have no cut; their level is n - 1.
            return k as u8;
        }
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize == k {
                let removed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if !connected_without(g, &removed) {
                    return k as u8;
                }
            }
        }
    }
    3
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::numbered(n, all.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect(), None).unwrap()
        })
    })
}

#[test]
fn connectivity_examples() {
    assert_eq!(connectivity_level(&complete(4)), 3);
    assert_eq!(connectivity_level(&kab(2, 3)), 2);
    let p4 = Graph::numbered(4, vec![(0, 1), (1, 2), (2, 3)], None).unwrap();
    assert_eq!(connectivity_level(&p4), 1);
    let two = Graph::numbered(4, vec![(0, 1), (2, 3)], None).unwrap();
    assert_eq!(connectivity_level(&two), 0);
}

#[test]
fn degree_profile_examples() {
    assert_eq!(degree_profile(&complete(4)).degrees, vec![3, 3, 3, 3]);
    let p = degree_profile(&kab(2, 3));
    assert_eq!(p.degrees, vec![2, 2, 2, 3, 3]);
    assert!(p.above4.is_empty());
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
    assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
    assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
    assert!(enumerate_labeled_graphs(8).is_err());
}

#[test]
fn connectivity_matches_subset_removal_on_small_graphs() {
    for n in 1..=6 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            assert_eq!(connectivity_level(&g), brute_level(&g).min(3), "{:?}", g.edges());
        }
    }
}

#[test]
fn graph_invariants_are_enforced() {
    assert!(matches!(Graph::numbered(2, vec![(0, 0)], None), Err(GraphError::SelfLoop(_))));
    assert!(matches!(Graph::numbered(2, vec![(0, 1), (1, 0)], None), Err(GraphError::DuplicateEdge(..))));
    assert!(matches!(Graph::numbered(2, vec![(0, 1)], Some(vec![1, 1])), Err(GraphError::LayerViolation(..))));
    assert!(matches!(Graph::new(vec!["a-b".into()], vec![], None), Err(GraphError::BadToken(_))));
}

proptest! {
    #[test]
    fn connectivity_matches_bruteforce(g in graph_strategy(8)) {
        prop_assert_eq!(connectivity_level(&g), brute_level(&g).min(3));
    }

    #[test]
    fn degree_sum_is_twice_edges(g in graph_strategy(10)) {
        let p = degree_profile(&g);
        prop_assert_eq!(p.degrees.iter().sum::<usize>(), 2 * g.m());
        prop_assert!(p.degrees.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(p.above4.iter().all(|v| p.above3.contains(v)));
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph_strategy(9)) {
        let keep: Vec<usize> = (0..g.n()).collect();
        prop_assert_eq!(g.induced(&keep).0, g);
    }
}
