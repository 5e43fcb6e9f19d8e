use fbp_core::drawing::Variant;
use fbp_core::generate::*;
use fbp_core::validate;
use std::collections::BTreeSet;
use std::time::Instant;

fn edges_of(f: Family, p: usize) -> usize {
    f.generate(p).unwrap().graph.m()
}

#[test]
fn closed_form_examples() {
    assert_eq!(edges_of(Family::OnesidedGeneral, 1), 26);
    assert_eq!(edges_of(Family::OnesidedGeneral, 7), 104);
    assert_eq!(edges_of(Family::OnesidedOuter, 1), 9);
    assert_eq!(edges_of(Family::OnesidedOuter, 2), 17);
    assert_eq!(edges_of(Family::Bn, 1), 6);
    assert_eq!(edges_of(Family::Bn, 3), 16);
    assert_eq!(edges_of(Family::Bn, 10), 51);
    assert_eq!(edges_of(Family::Waterlily, 9), 27);
    assert_eq!(edges_of(Family::Waterlily, 12), 39);
    assert_eq!(edges_of(Family::DoubleWaterlily, 12), 54);
    assert_eq!(edges_of(Family::LayeredLily, 10), 16);
    assert_eq!(edges_of(Family::LayeredLily, 16), 28);
    assert_eq!(gen_d12().graph.m(), 90);
}

#[test]
fn general_family_starts_at_k1() {
    // Five vertices cannot carry 13 edges in a simple graph.
    assert!(gen_onesided_general(0).is_err());
}

#[test]
fn double_waterlily_needs_ten_vertices() {
    // 36 edges on 9 vertices is K9; no flower drawing realizes it.
    assert!(gen_double_waterlily(9).is_err());
}

#[test]
fn every_admissible_member_is_tight_and_valid() {
    for f in Family::ALL {
        for p in f.parameters_up_to(100) {
            if (f, p) == (Family::OnesidedGeneral, 0) || (f, p) == (Family::DoubleWaterlily, 9) {
                continue;
            }
            let t = Instant::now();
            let inst = f.generate(p).unwrap_or_else(|e| panic!("{} {p}: {e}", f.as_str()));
            assert!(t.elapsed().as_secs_f64() < 1.0, "{} {p} took {:?}", f.as_str(), t.elapsed());
            assert_eq!(inst.graph.m(), inst.expected_edges, "{} {p}", f.as_str());
            assert_eq!(inst.graph.n(), f.vertex_count(p));
            if let Some(d) = &inst.drawing {
                let r = validate(d);
                assert!(r.valid, "{} {p}: {:?}", f.as_str(), r.violations);
                assert!(d.graph.same_as(&inst.graph));
            } else {
                assert_eq!(f, Family::D12);
            }
        }
    }
}

#[test]
fn drawings_use_the_family_model() {
    let expect = [
        (Family::OnesidedGeneral, 1, Variant::General),
        (Family::OnesidedOuter, 1, Variant::Outer),
        (Family::Bn, 1, Variant::TwoLayer),
        (Family::Waterlily, 2, Variant::Outer),
        (Family::DoubleWaterlily, 2, Variant::General),
        (Family::LayeredLily, 2, Variant::TwoLayer),
    ];
    for (f, sides, variant) in expect {
        let p = f.parameters_up_to(30)[1];
        let d = f.generate(p).unwrap().drawing.unwrap();
        assert_eq!((d.sides, d.variant), (sides, variant), "{}", f.as_str());
    }
}

#[test]
fn d12_is_nine_regular() {
    let g = gen_d12().graph;
    assert_eq!(g.n(), 20);
    assert!((0..20).all(|v| g.degree(v) == 9));
}

#[test]
fn layered_lily_degree_deficiency_is_eight() {
    for n in (10..=40).step_by(2) {
        let g = gen_layered_lily(n).unwrap().graph;
        assert!((0..n).all(|v| g.degree(v) <= 4));
        let deficit: usize = (0..n).map(|v| 4 - g.degree(v)).sum();
        assert_eq!(deficit, 8, "n={n}");
        assert!((0..n).all(|v| g.degree(v) >= 2));
    }
    assert!(gen_layered_lily(11).is_err());
}

#[test]
fn waterlily_crossings_pair_neighbours() {
    let d = gen_waterlily(9).unwrap().drawing.unwrap();
    assert_eq!(d.bundles.len(), 18);
    assert_eq!(d.crossings.len(), 9);
    let mut seen = BTreeSet::new();
    for &(a, b) in &d.crossings {
        assert!(seen.insert(a) && seen.insert(b));
    }
}

#[test]
fn double_waterlily_is_simple() {
    for n in 10..=30 {
        let g = gen_double_waterlily(n).unwrap().graph;
        let keys: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
        assert_eq!(keys.len(), 6 * n - 18);
    }
}
