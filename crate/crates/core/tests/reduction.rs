use fbp_core::reduction::{check_copy_contiguity, reduce, solve_3partition, Model, ThreePartitionInstance};
use std::time::Instant;

fn nine_items() -> ThreePartitionInstance {
    ThreePartitionInstance::new(vec![2, 2, 2, 3, 3, 3, 4, 5, 6], 10).unwrap().0
}

fn check_counts(k: usize, model: Model) {
    let inst = nine_items();
    let r = reduce(&inst, Some(k), model).unwrap();
    let s = &r.stats;
    let sigma = if model == Model::TwoSided { 2 } else { 1 };
    assert_eq!(s.beam_vertices, 4 * (9 * k + 1) + 3);
    assert_eq!(s.wall_vertices, 11);
    assert_eq!(s.obstacle_vertices, 4 * (k - 1) + 3);
    assert_eq!(s.obstacles_per_column, 4);
    assert_eq!(s.column_count, 9);
    assert_eq!(s.cells_per_column, 5);
    assert_eq!(s.path_length, 6 * k + 10);
    assert_eq!(s.central_cell_edges, inst.a.iter().map(|&a| sigma * a as usize).collect::<Vec<_>>());
    assert_eq!(s.other_cell_edges, sigma * k);
    assert_eq!(s.vertices, s.predicted_vertices);
    assert_eq!(s.edges, s.predicted_edges);
    assert!(r.paths.iter().all(|p| p.len() == s.path_length));
    r.rotation.check(&r.graph).unwrap();
    check_copy_contiguity(&r).unwrap();
    assert_eq!(r.expected_yes, Some(true));
}

#[test]
fn nine_item_counts_small_k() {
    check_counts(4, Model::OneSided);
    check_counts(4, Model::TwoSided);
    let r = reduce(&nine_items(), Some(4), Model::OneSided).unwrap();
    assert_eq!(r.stats.beam_vertices, 151);
    assert_eq!(r.stats.path_length, 34);
    assert_eq!(r.stats.central_cell_edges[8], 6);
}

#[test]
fn nine_item_counts_at_k100() {
    let t = Instant::now();
    check_counts(100, Model::OneSided);
    check_counts(100, Model::TwoSided);
    assert!(t.elapsed().as_secs_f64() < 20.0);
}

#[test]
fn default_scale_is_b_squared() {
    let inst = ThreePartitionInstance::new(vec![3, 3, 4], 10).unwrap().0;
    let r = reduce(&inst, None, Model::OneSided).unwrap();
    assert_eq!(r.k, 100);
    assert_eq!(r.stats.obstacles_per_column, 0);
    assert_eq!(r.stats.path_length, 10);
    let low = reduce(&inst, Some(5), Model::OneSided).unwrap();
    assert!(low.warnings.iter().any(|w| w.contains("B^2")));
}

#[test]
fn h_copies_have_the_full_edge_pattern() {
    let r = reduce(&nine_items(), Some(3), Model::OneSided).unwrap();
    let g = &r.graph;
    for c in &r.copies {
        let [a, b, cc, d, e, f, gg] = *c;
        let ring = [a, b, cc, d, e, f];
        for i in 0..6 {
            assert!(g.has_edge(ring[i], ring[(i + 1) % 6]));
        }
        assert!(g.has_edge(cc, gg) && g.has_edge(f, gg));
        for hub in [cc, f, gg] {
            for w in [a, b, d, e] {
                assert!(g.has_edge(hub, w));
            }
        }
    }
}

#[test]
fn destination_reverses_origin_order() {
    let r = reduce(&nine_items(), Some(3), Model::OneSided).unwrap();
    let first: Vec<usize> = r.paths.iter().map(|p| p[0]).collect();
    let last: Vec<usize> = r.paths.iter().map(|p| *p.last().unwrap()).collect();
    let at = |v: usize, es: &[usize]| -> Vec<usize> {
        r.rotation.order[v].iter().filter_map(|e| es.iter().position(|x| x == e)).collect()
    };
    let o = at(r.origin, &first);
    let mut d = at(r.destination, &last);
    d.reverse();
    // Equal up to rotation.
    let pos = d.iter().position(|&x| x == o[0]).unwrap();
    d.rotate_left(pos);
    assert_eq!(o, d);
}

#[test]
fn solver_finds_lexicographic_partition() {
    let inst = ThreePartitionInstance::new(vec![2, 3, 5, 2, 3, 5, 3, 3, 4], 10).unwrap().0;
    let sol = solve_3partition(&inst).unwrap().unwrap();
    let vals: Vec<Vec<u64>> = sol.iter().map(|t| t.iter().map(|&i| inst.a[i]).collect()).collect();
    assert_eq!(vals, vec![vec![2, 3, 5], vec![2, 3, 5], vec![3, 3, 4]]);
    assert!(ThreePartitionInstance::new(vec![1, 1, 1, 1, 1, 2], 3).is_err());
    let no = ThreePartitionInstance::new(vec![1, 1, 4, 2, 2, 2], 6).unwrap().0;
    assert_eq!(solve_3partition(&no).unwrap(), Some(vec![[0, 1, 2], [3, 4, 5]]));
    let no = ThreePartitionInstance::new(vec![1, 1, 1, 3, 3, 3], 6).unwrap().0;
    assert_eq!(solve_3partition(&no).unwrap(), None);
}

use proptest::prelude::*;

/// A YES instance: `m` triples drawn to sum to `b`, then shuffled.
fn yes_instance(m: usize, b: u64, cuts: &[(u64, u64)], order: &[usize]) -> ThreePartitionInstance {
    let mut a = Vec::new();
    for &(x, y) in cuts.iter().take(m) {
        let first = 1 + x % (b - 2);
        let second = 1 + y % (b - first - 1);
        a.extend([first, second, b - first - second]);
    }
    let mut shuffled: Vec<u64> = order.iter().filter(|&&i| i < a.len()).map(|&i| a[i]).collect();
    if shuffled.len() != a.len() {
        shuffled = a;
    }
    ThreePartitionInstance::new(shuffled, b).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn random_instances_match_closed_forms(
        m in 1usize..4,
        b in 3u64..12,
        k in 2usize..6,
        two_sided: bool,
        cuts in proptest::collection::vec((any::<u64>(), any::<u64>()), 3),
        order in Just((0..9).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let inst = yes_instance(m, b, &cuts, &order);
        let model = if two_sided { Model::TwoSided } else { Model::OneSided };
        let sigma = if two_sided { 2 } else { 1 };
        let r = match reduce(&inst, Some(k), model) {
            Ok(r) => r,
            // Oversized central cells are the one documented refusal.
            Err(_) => {
                prop_assert!(inst.a.iter().any(|&x| x as usize * sigma > k * k));
                return Ok(());
            }
        };
        let s = &r.stats;
        prop_assert_eq!(s.vertices, r.graph.n());
        prop_assert_eq!(s.edges, r.graph.m());
        prop_assert_eq!(s.vertices, s.predicted_vertices);
        prop_assert_eq!(s.edges, s.predicted_edges);
        prop_assert_eq!(s.column_count, 3 * m);
        prop_assert_eq!(s.cells_per_column, 2 * m - 1);
        prop_assert_eq!(s.obstacles_per_column, 2 * m - 2);
        prop_assert_eq!(s.path_length, (3 * m - 3) * k + b as usize);
        prop_assert_eq!(s.other_cell_edges, sigma * k);
        prop_assert!(r.paths.iter().all(|p| p.len() == s.path_length));
        prop_assert!(r.rotation.check(&r.graph).is_ok());
        prop_assert!(check_copy_contiguity(&r).is_ok());
        prop_assert_eq!(r.expected_yes, Some(true));
    }
}
