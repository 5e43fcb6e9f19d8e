use fbp::io::{parse_drawing, parse_graph, parse_rotation, write_drawing, write_graph, write_rotation};
use fbp_core::generate::Family;
use fbp_core::recognize::outer3::characterization_graph;
use fbp_core::recognize::recognize_outer_triconnected;
use fbp_core::reduction::{reduce, Model, ThreePartitionInstance};
use fbp_core::{validate, BundledDrawing, Graph};
use proptest::prelude::*;

fn drawings() -> Vec<(String, BundledDrawing)> {
    let mut out = vec![];
    for f in Family::ALL {
        for p in f.parameters_up_to(30) {
            if let Some(d) = f.generate(p).ok().and_then(|i| i.drawing) {
                out.push((format!("{}({p})", f.as_str()), d));
            }
        }
    }
    for n in [9, 12] {
        let g = characterization_graph(n, 4, true, false);
        out.push((format!("outer3({n})"), recognize_outer_triconnected(&g).witness.unwrap()));
    }
    out
}

#[test]
fn drawings_survive_a_round_trip() {
    for (label, d) in drawings() {
        let text = write_drawing(&d);
        let back = parse_drawing(&text).unwrap_or_else(|e| panic!("{label}: {e:#}"));
        assert_eq!(write_drawing(&back), text, "{label}: output is not canonical");
        assert!(back.graph.same_as(&d.graph), "{label}");
        assert_eq!(back.crossings.len(), d.crossings.len(), "{label}");
        assert_eq!(validate(&back).valid, validate(&d).valid, "{label}");
    }
}

#[test]
fn graphs_survive_a_round_trip() {
    for (label, d) in drawings() {
        let text = write_graph(&d.graph);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, d.graph, "{label}");
    }
}

#[test]
fn rotations_survive_a_round_trip() {
    let (inst, _) = ThreePartitionInstance::new(vec![3, 3, 4], 10).unwrap();
    let r = reduce(&inst, Some(3), Model::OneSided).unwrap();
    let text = write_rotation(&r.graph, &r.rotation);
    let g = parse_graph(&write_graph(&r.graph)).unwrap();
    assert_eq!(parse_rotation(&g, &text).unwrap(), r.rotation);
}

#[test]
fn rotation_must_cover_each_vertex() {
    let g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    assert!(parse_rotation(&g, "r 1 1-2 1-3\nr 2 1-2 2-3\nr 3 1-3 2-3\n").is_ok());
    assert!(parse_rotation(&g, "r 1 1-2\nr 2 1-2 2-3\nr 3 1-3 2-3\n").is_err());
    assert!(parse_rotation(&g, "r 1 1-2 1-3\nr 1 1-2 1-3\n").is_err());
    assert!(parse_rotation(&g, "r 1 1-2 9-3\n").is_err());
}

#[test]
fn vertex_order_rules() {
    // Integer tokens in 1..=n sort numerically even when they appear late.
    let g = parse_graph("p 3 2\ne 3 1\ne 2 3\n").unwrap();
    assert_eq!(g.names(), ["1", "2", "3"]);
    // Other tokens keep first appearance unless `v` lines fix the order.
    let g = parse_graph("p 3 2\ne b a\ne c b\n").unwrap();
    assert_eq!(g.names(), ["b", "a", "c"]);
    let g = parse_graph("p 3 2\nv c\nv a\nv b\ne b a\ne c b\n").unwrap();
    assert_eq!(g.names(), ["c", "a", "b"]);
    // Isolated vertices only exist through `v` or `l` lines.
    let g = parse_graph("p 3 1\nl x 0\nl y 1\nl z 0\ne x y\n").unwrap();
    assert_eq!((g.n(), g.m()), (3, 1));
}

#[test]
fn header_mismatch_is_an_error() {
    assert!(parse_graph("p 3 2\ne 1 2\n").is_err());
    assert!(parse_graph("e 1 2\n").is_err());
    assert!(parse_graph("p 2 1\ne 1 2\ne 1 2\n").is_err());
}

#[test]
fn malformed_drawings_are_rejected() {
    assert!(parse_drawing("{").is_err());
    assert!(parse_drawing("{}").is_err());
    let d = &drawings()[0].1;
    let mut v: serde_json::Value = serde_json::from_str(&write_drawing(d)).unwrap();
    v["variant"] = "spherical".into();
    assert!(parse_drawing(&v.to_string()).is_err());
}

proptest! {
    #[test]
    fn random_graph_files_round_trip(n in 2usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
        let e: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .zip(bits.iter())
            .filter(|(_, &b)| b)
            .map(|(p, _)| p)
            .collect();
        let g = Graph::numbered(n, e, None).unwrap();
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
