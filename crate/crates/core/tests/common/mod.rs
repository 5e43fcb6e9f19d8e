#![allow(dead_code)]

use fbp_core::generate::Family;
use fbp_core::recognize::outer3::characterization_graph;
use fbp_core::recognize::{recognize_outer_triconnected, recognize_twolayer_biconnected};
use fbp_core::{BundledDrawing, Graph};

pub fn complete(n: usize) -> Graph {
    let e = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::numbered(n, e, None).unwrap()
}

pub fn kab(a: usize, b: usize) -> Graph {
    let e = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    let layers = (0..a + b).map(|v| u8::from(v >= a)).collect();
    Graph::numbered(a + b, e, Some(layers)).unwrap()
}

/// A snake on `pairs` vertex pairs. `middles[i]` puts an extra vertex in
/// block `i` on the given layer. Pair `i` is (2i, 2i+1); middles follow.
pub fn snake(pairs: usize, middles: &[Option<u8>]) -> (Graph, Vec<usize>) {
    assert_eq!(middles.len(), pairs - 1);
    let mut layers: Vec<u8> = (0..2 * pairs).map(|v| (v % 2) as u8).collect();
    let mut edges = vec![(0, 1)];
    let mut mids = vec![];
    for i in 0..pairs - 1 {
        let (t, b, t2, b2) = (2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3);
        edges.extend([(t2, b2), (t, b2), (t2, b)]);
        if let Some(l) = middles[i] {
            let m = layers.len();
            layers.push(l);
            mids.push(m);
            if l == 0 {
                edges.extend([(m, b), (m, b2)]);
            } else {
                edges.extend([(t, m), (t2, m)]);
            }
        }
    }
    (Graph::numbered(layers.len(), edges, Some(layers)).unwrap(), mids)
}

/// Appends a degree-1 vertex on the other layer, attached to `at`.
pub fn with_leg(g: &Graph, at: usize) -> Graph {
    let mut layers = g.layers().unwrap().to_vec();
    layers.push(1 - layers[at]);
    let mut edges = g.edges().to_vec();
    edges.push((at, g.n()));
    Graph::numbered(g.n() + 1, edges, Some(layers)).unwrap()
}

/// Every drawing the crate can produce at desk scale: family members and
/// recognizer witnesses.
pub fn corpus() -> Vec<(String, BundledDrawing)> {
    let mut out = vec![];
    for f in Family::ALL {
        for p in f.parameters_up_to(40) {
            if let Ok(inst) = f.generate(p) {
                if let Some(d) = inst.drawing {
                    out.push((format!("{}({p})", f.as_str()), d));
                }
            }
        }
    }
    for n in 4..=14 {
        for k in 2..=n {
            if n == 4 && k != 3 {
                continue;
            }
            let g = characterization_graph(n, k, true, true);
            if let Some(d) = recognize_outer_triconnected(&g).witness {
                out.push((format!("outer3({n},{k})"), d));
            }
        }
    }
    for len in 2..=6 {
        for mask in 0..1u32 << (len - 1) {
            let mids: Vec<Option<u8>> = (0..len - 1).map(|i| (mask >> i & 1 == 1).then_some((i % 2) as u8)).collect();
            let (g, _) = snake(len, &mids);
            if let Some(d) = recognize_twolayer_biconnected(&g).witness {
                out.push((format!("snake({len},{mask})"), d));
            }
        }
    }
    out
}
