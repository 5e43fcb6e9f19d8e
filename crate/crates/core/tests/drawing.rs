mod common;

use common::{complete, corpus};
use fbp_core::drawing::{bound_guard, planarize, trace_faces, ArcKey, Attach, BundledDrawing, Variant};
use fbp_core::generate::{gen_waterlily, pentagon_base};
use fbp_core::recognize::recognize_outer_triconnected;
use fbp_core::{validate, Graph};

fn cycle_drawing(n: usize) -> BundledDrawing {
    let g = Graph::numbered(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), None).unwrap();
    let embedding = (0..n)
        .map(|v| {
            let next = g.edge_index(v, (v + 1) % n).unwrap();
            let prev = g.edge_index(v, (v + n - 1) % n).unwrap();
            vec![ArcKey::Mid(next), ArcKey::Mid(prev)]
        })
        .collect();
    BundledDrawing {
        attach: vec![Attach::default(); g.m()],
        graph: g,
        bundles: vec![],
        crossings: vec![],
        embedding,
        outer_face: None,
        variant: Variant::General,
        sides: 1,
    }
}

#[test]
fn cycle_has_two_faces() {
    let d = cycle_drawing(5);
    let p = planarize(&d).unwrap();
    assert_eq!((p.node_count, p.arcs.len()), (5, 5));
    assert_eq!(trace_faces(&p).unwrap().len(), 2);
    assert!(validate(&d).valid);
}

#[test]
fn k4_witness_planarization_counts() {
    let d = recognize_outer_triconnected(&complete(4)).witness.unwrap();
    assert_eq!(d.bundles.len(), 2);
    assert_eq!(d.crossings.len(), 1);
    assert!(d.bundles.iter().all(|b| b.edges.len() == 1));
    let p = planarize(&d).unwrap();
    assert_eq!(p.node_count, 7);
    assert_eq!(p.arcs.len(), 10);
    assert!(validate(&d).valid);
}

#[test]
fn waterlily_planarization_counts() {
    let d = gen_waterlily(9).unwrap().drawing.unwrap();
    let p = planarize(&d).unwrap();
    assert_eq!(p.node_count, 9 + 18 + 9);
    assert_eq!(d.crossings.len(), 9);
    let r = validate(&d);
    assert!(r.valid, "{:?}", r.violations);
}

#[test]
fn pentagon_base_faces_have_length_five() {
    for k in 0..6 {
        let rot = pentagon_base(k);
        let n = rot.len();
        let m: usize = rot.iter().map(|l| l.len()).sum::<usize>() / 2;
        assert_eq!((n, m), (5 + 3 * k, 5 + 5 * k));
        let g = Graph::numbered(n, (0..n).flat_map(|u| rot[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v))).collect(), None).unwrap();
        let embedding = (0..n).map(|u| rot[u].iter().map(|&v| ArcKey::Mid(g.edge_index(u, v).unwrap())).collect()).collect();
        let d = BundledDrawing {
            attach: vec![Attach::default(); g.m()],
            graph: g,
            bundles: vec![],
            crossings: vec![],
            embedding,
            outer_face: None,
            variant: Variant::General,
            sides: 1,
        };
        let faces = trace_faces(&planarize(&d).unwrap()).unwrap();
        assert_eq!(faces.len(), 2 + 2 * k);
        assert!(faces.iter().all(|f| f.darts.len() == 5));
    }
}

#[test]
fn bundle_in_two_crossings_is_v3() {
    let mut d = gen_waterlily(9).unwrap().drawing.unwrap();
    let (a, _) = d.crossings[0];
    let (_, b) = d.crossings[1];
    d.crossings.push((a, b));
    let r = validate(&d);
    assert!(!r.valid);
    assert!(r.violations.iter().any(|v| v.rule == "V3"), "{:?}", r.violations);
}

#[test]
fn two_sided_drawing_fails_one_sided_check() {
    let mut d = gen_waterlily(9).unwrap().drawing.unwrap();
    d.sides = 1;
    let r = validate(&d);
    assert!(r.violations.iter().any(|v| v.rule == "V2"), "{:?}", r.violations);
}

#[test]
fn scrambled_rotation_is_not_planar() {
    let mut d = complete_planar_k4();
    assert!(validate(&d).valid);
    d.embedding[0].swap(0, 1);
    let r = validate(&d);
    assert!(r.violations.iter().any(|v| v.rule == "V5"), "{:?}", r.violations);
}

/// K4 drawn planar: a triangle with a centre vertex.
fn complete_planar_k4() -> BundledDrawing {
    let g = complete(4);
    let rot = [vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
    let embedding = (0..4).map(|u| rot[u].iter().map(|&v| ArcKey::Mid(g.edge_index(u, v).unwrap())).collect()).collect();
    BundledDrawing {
        attach: vec![Attach::default(); g.m()],
        graph: g,
        bundles: vec![],
        crossings: vec![],
        embedding,
        outer_face: None,
        variant: Variant::General,
        sides: 1,
    }
}

#[test]
fn corpus_properties() {
    let corpus = corpus();
    assert!(corpus.len() > 100);
    for (name, d) in &corpus {
        let r = validate(d);
        assert!(r.valid, "{name}: {:?}", r.violations);
        assert!(bound_guard(d).is_ok(), "{name} exceeds its class bound");
        assert!(2 * d.crossings.len() <= d.bundles.len(), "{name}");
        let p = planarize(d).unwrap();
        let f = trace_faces(&p).unwrap().len() as i64;
        assert_eq!(p.node_count as i64 - p.arcs.len() as i64 + f, 2, "{name}");
        if d.sides == 1 {
            let mut two = d.clone();
            two.sides = 2;
            assert!(validate(&two).valid, "{name} as 2-sided");
        }
    }
}
