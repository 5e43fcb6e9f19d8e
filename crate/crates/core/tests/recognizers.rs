mod common;

use common::{complete, kab, snake, with_leg};
use fbp_core::connectivity::connectivity_level;
use fbp_core::oracles::{babysnake_oracle, enumerate_labeled_graphs, is_triconnected_bruteforce, Outer3Oracle};
use fbp_core::recognize::outer3::characterization_graph;
use fbp_core::recognize::stego::{decompose, LegCase};
use fbp_core::recognize::*;
use fbp_core::{degree_profile, validate, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sound(g: &Graph, r: &RecognitionResult) {
    if r.accepted {
        let d = r.witness.as_ref().expect("accepted without witness");
        let rep = validate(d);
        assert!(rep.valid, "{:?}", rep.violations);
        assert!(d.graph.same_as(g));
    } else {
        assert!(r.reason.as_deref().is_some_and(|s| !s.is_empty()));
    }
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let layers = g.layers().map(|l| {
        let mut out = vec![0; l.len()];
        for (v, &x) in l.iter().enumerate() {
            out[perm[v]] = x;
        }
        out
    });
    Graph::numbered(g.n(), edges, layers).unwrap()
}

#[test]
fn k23_in_k24_out() {
    let r = recognize_twolayer_biconnected(&kab(2, 3));
    assert!(r.accepted);
    sound(&kab(2, 3), &r);
    let r = recognize_twolayer_biconnected(&kab(2, 4));
    assert!(!r.accepted);
}

#[test]
fn k4_in_k5_out() {
    let r = recognize_outer_triconnected(&complete(4));
    assert!(r.accepted);
    sound(&complete(4), &r);
    let r = recognize_outer_triconnected(&complete(5));
    assert_eq!(r.reason.as_deref(), Some("edge count exceeds characterization"));
}

#[test]
fn tiny_graphs_are_rejected() {
    for n in 1..=3 {
        let r = recognize_outer_triconnected(&complete(n));
        assert_eq!(r.reason.as_deref(), Some("n too small"));
    }
}

#[test]
fn characterization_n9_k5() {
    let g = characterization_graph(9, 5, true, true);
    assert_eq!(g.m(), 17);
    assert_eq!(degree_profile(&g).above4.len(), 2);
    let r = recognize_outer_triconnected(&g);
    sound(&g, &r);
    assert_eq!(r.witness.unwrap().crossings.len(), 1);
}

#[test]
fn accepted_outer3_graphs_meet_degree_and_edge_certificates() {
    for n in 9..=30 {
        for k in 2..=n {
            for (a, b) in [(false, false), (true, false), (false, true), (true, true)] {
                let g = characterization_graph(n, k, a, b);
                if connectivity_level(&g) < 3 {
                    assert!(!recognize_outer_triconnected(&g).accepted);
                    continue;
                }
                let r = recognize_outer_triconnected(&g);
                assert!(r.accepted, "n={n} k={k}: {:?}", r.reason);
                let p = degree_profile(&g);
                assert!(p.degrees[0] >= 3);
                assert!(p.above3.len() <= 3 && p.above4.len() <= 2);
                let l = fbp_core::recognize::outer3::find_labeling(&g).unwrap();
                let ends = g.degree(l.order[0]) + g.degree(l.order[n - 1]);
                assert!((n..=n + 3).contains(&ends), "n={n} k={k} sum={ends}");
                assert!(g.m() <= 2 * n - 1);
            }
        }
    }
}

#[test]
fn outer3_agrees_with_oracle_exhaustively_small() {
    for n in 5..=6 {
        let oracle = Outer3Oracle::new(n).unwrap();
        for g in enumerate_labeled_graphs(n).unwrap() {
            let r = recognize_outer_triconnected(&g);
            assert_eq!(r.accepted, oracle.check(&g), "{:?}", g.edges());
            sound(&g, &r);
            if r.accepted {
                assert!(is_triconnected_bruteforce(&g));
            }
        }
    }
}

/// Layered graphs on `n` vertices with layer-0 set `mask`, every cross edge subset.
fn layered_graphs(n: usize, top_mask: u32) -> impl Iterator<Item = Graph> {
    let layers: Vec<u8> = (0..n).map(|v| u8::from(top_mask >> v & 1 == 0)).collect();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| layers[u] != layers[v]).collect();
    (0u64..1 << pairs.len()).map(move |m| {
        let e = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &p)| p).collect();
        Graph::numbered(n, e, Some(layers.clone())).unwrap()
    })
}

#[test]
fn snake_recognizer_agrees_with_oracle_up_to_seven() {
    let mut checked = 0;
    for n in 4..=7 {
        for top in 1u32..(1 << n) - 1 {
            // Symmetric layer splits give the same graphs with layers swapped.
            if top & 1 == 0 {
                continue;
            }
            for g in layered_graphs(n, top) {
                if connectivity_level(&g) < 2 {
                    continue;
                }
                let r = recognize_twolayer_biconnected(&g);
                assert_eq!(r.accepted, babysnake_oracle(&g).unwrap(), "{:?} {:?}", g.edges(), g.layers());
                sound(&g, &r);
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn snake_chain_k23_k22_k23() {
    let (g, _) = snake(4, &[Some(1), None, Some(1)]);
    assert_eq!(g.n(), 10);
    let r = recognize_twolayer_biconnected(&g);
    assert!(r.accepted, "{:?}", r.reason);
    sound(&g, &r);
    // A longer variant with a middle on the other layer.
    let (g, _) = snake(4, &[Some(1), Some(0), Some(1)]);
    assert_eq!(g.n(), 11);
    let r = recognize_twolayer_biconnected(&g);
    assert!(r.accepted);
    sound(&g, &r);
    assert_eq!(babysnake_oracle(&snake(3, &[Some(0), Some(1)]).0), Ok(true));
}

#[test]
fn preconditions_are_named() {
    let g = Graph::numbered(3, vec![(0, 1), (1, 2)], Some(vec![0, 1, 0])).unwrap();
    let r = recognize_twolayer_biconnected(&g);
    assert!(r.reason.unwrap().starts_with("precondition"));
    let r = recognize_twolayer_biconnected(&complete(3));
    assert!(r.reason.unwrap().starts_with("precondition"));
}

/// Two K2,3 blocks glued at a layer-1 vertex: the first has poles {0,1} and
/// rungs {2,3,4}; the second has poles {4,5} and rungs {6,7,8}.
fn two_k23_at_cutvertex() -> Graph {
    let mut e = vec![];
    for p in [0, 1] {
        for r in [2, 3, 4] {
            e.push((p, r));
        }
    }
    for p in [4, 5] {
        for r in [6, 7, 8] {
            e.push((r, p));
        }
    }
    Graph::numbered(9, e, Some(vec![0, 0, 1, 1, 1, 1, 0, 0, 0])).unwrap()
}

#[test]
fn leg_on_shared_cutvertex_is_accepted() {
    let g = with_leg(&two_k23_at_cutvertex(), 4);
    let r = recognize_twolayer_maximal(&g);
    assert!(r.accepted, "{:?}", r.reason);
    sound(&g, &r);
    let (dec, _) = decompose(&g).unwrap();
    assert_eq!(dec.cutvertices, vec![4]);
    assert_eq!(dec.legs, vec![(9, 4, LegCase::Cutvertex)]);
}

#[test]
fn leg_on_k22_block_vertex_is_rejected() {
    // K2,3 - K2,2 - K2,3 chain; vertex 3 sits in the first K2,3 and the K2,2.
    let (g, _) = snake(4, &[Some(1), None, Some(1)]);
    let r = recognize_twolayer_maximal(&with_leg(&g, 3));
    assert!(!r.accepted);
}

#[test]
fn k24_block_is_rejected() {
    let r = recognize_twolayer_maximal(&kab(2, 4));
    assert!(!r.accepted);
}

#[test]
fn stegosaurus_without_legs_is_accepted() {
    let g = two_k23_at_cutvertex();
    let r = recognize_twolayer_maximal(&g);
    assert!(r.accepted, "{:?}", r.reason);
    sound(&g, &r);
}

#[test]
fn snake_end_leg_is_accepted() {
    let (g, _) = snake(3, &[Some(1), Some(1)]);
    let h = with_leg(&g, 0);
    let r = recognize_twolayer_maximal(&h);
    assert!(r.accepted, "{:?}", r.reason);
    sound(&h, &r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_characterization_graphs_are_accepted(n in 9usize..40, k_frac in 0.0f64..1.0, a: bool, b: bool, seed: u64) {
        let k = 2 + ((n - 2) as f64 * k_frac) as usize;
        let g = characterization_graph(n, k.min(n), a, b);
        prop_assume!(connectivity_level(&g) == 3);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        let r = recognize_outer_triconnected(&h);
        prop_assert!(r.accepted, "{:?}", r.reason);
        sound(&h, &r);
    }

    #[test]
    fn relabelled_snakes_are_accepted(len in 2usize..8, mask: u32, seed: u64) {
        let mids: Vec<Option<u8>> = (0..len - 1).map(|i| (mask >> i & 1 == 1).then_some((mask >> (i + 8) & 1) as u8)).collect();
        let (g, _) = snake(len, &mids);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        let r = recognize_twolayer_biconnected(&h);
        prop_assert!(r.accepted, "{:?}", r.reason);
        sound(&h, &r);
    }

    #[test]
    fn rejections_always_carry_a_reason(bits in proptest::collection::vec(any::<bool>(), 36)) {
        let pairs = (0..9).flat_map(|u| (u + 1..9).map(move |v| (u, v)));
        let g = Graph::numbered(9, pairs.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect(), None).unwrap();
        let r = recognize_outer_triconnected(&g);
        sound(&g, &r);
    }
}
