use fbp_core::k3n::{build_k3_2kp1, build_k3_4kp2, count_crossings, HalfPlane};

/// Crossing pairs for k = 0..6, computed by the exact intersection count and
/// checked against 2k^2 + k before freezing.
const PAIRS: [usize; 7] = [0, 3, 10, 21, 36, 55, 78];

#[test]
fn frozen_constants_match_the_closed_form() {
    for (k, &p) in PAIRS.iter().enumerate() {
        assert_eq!(p, 2 * k * k + k);
    }
}

#[test]
fn one_half_plane() {
    for (k, &want) in PAIRS.iter().enumerate() {
        let d = build_k3_2kp1(k);
        assert_eq!(d.halfplane, HalfPlane::Upper);
        assert_eq!((d.graph.n(), d.graph.m()), (3 + 2 * k + 1, 3 * (2 * k + 1)));
        let c = count_crossings(&d).unwrap();
        assert_eq!(c.pairs.len(), want, "k={k}");
        assert_eq!(c.max(), k, "k={k}");
        assert_eq!(c.per_edge.iter().sum::<usize>(), 2 * want);
        assert!(d.points.iter().all(|p| p.1 >= 0.into()));
    }
}

#[test]
fn mirrored_halves_double_the_count() {
    for (k, &want) in PAIRS.iter().enumerate() {
        let d = build_k3_4kp2(k);
        assert_eq!(d.halfplane, HalfPlane::Both);
        assert_eq!(d.graph.n(), 3 + 4 * k + 2);
        let c = count_crossings(&d).unwrap();
        assert_eq!(c.pairs.len(), 2 * want, "k={k}");
        assert_eq!(c.max(), k, "k={k}");
    }
}

#[test]
fn polylines_start_and_end_at_their_endpoints() {
    for k in 0..=4 {
        let d = build_k3_4kp2(k);
        for (e, curve) in d.curves.iter().enumerate() {
            let (u, v) = d.graph.edge(e);
            assert_eq!(curve.first(), Some(&d.points[u]));
            assert_eq!(curve.last(), Some(&d.points[v]));
        }
    }
}
