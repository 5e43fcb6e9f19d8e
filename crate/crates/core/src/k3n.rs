//! Geometric k-planar drawings of K3,2k+1 (one half plane) and K3,4k+2
//! (two mirrored halves), with exact crossing counting.

use crate::graph::Graph;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i128>;
pub type Point = (Q, Q);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPlane {
    Upper,
    Both,
}

#[derive(Clone, Debug)]
pub struct GeometricDrawing {
    pub k: usize,
    pub graph: Graph,
    pub points: Vec<Point>,
    /// Polyline per edge id, starting at the edge's first endpoint.
    pub curves: Vec<Vec<Point>>,
    pub halfplane: HalfPlane,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingCount {
    pub per_edge: Vec<usize>,
    /// Crossing edge pairs, one entry per crossing point, `e < f`.
    pub pairs: Vec<(usize, usize)>,
}

impl CrossingCount {
    pub fn max(&self) -> usize {
        self.per_edge.iter().copied().max().unwrap_or(0)
    }
}

fn q(n: i128) -> Q {
    Q::from_integer(n)
}

fn frac(a: i128, b: i128) -> Q {
    Q::new(a, b)
}

/// Half drawing with `(x, y)` mapped through `flip` (identity or mirror).
fn half(k: usize, suffix: &str, names: &mut Vec<String>, points: &mut Vec<Point>, edges: &mut Vec<(usize, usize)>, curves: &mut Vec<Vec<Point>>, mirror: bool) {
    let ki = k as i128;
    let f = |p: Point| if mirror { (p.0, -p.1) } else { p };
    let (u, v, w) = (0usize, 1usize, 2usize);
    let up = points[u];
    let vp = points[v];
    let wp = points[w];
    let a0 = names.len();
    for i in 0..=k {
        names.push(format!("a{i}{suffix}"));
        let x = if k == 0 { q(0) } else { -frac(i as i128, ki) };
        points.push(f((x, q(1))));
    }
    let b0 = names.len();
    for j in 1..=k {
        names.push(format!("b{j}{suffix}"));
        points.push(f((frac(j as i128, ki), q(1))));
    }
    let a = |i: usize| a0 + i;
    let b = |j: usize| b0 + j - 1;
    let mut straight = |x: usize, y: usize, px: Point, py: Point| {
        edges.push((x, y));
        curves.push(vec![px, py]);
    };
    for i in 0..=k {
        straight(v, a(i), vp, points[a(i)]);
        straight(u, a(i), up, points[a(i)]);
    }
    for j in 1..=k {
        straight(v, b(j), vp, points[b(j)]);
        straight(w, b(j), wp, points[b(j)]);
    }
    straight(w, a(0), wp, points[a(0)]);
    // (w, a_i) rises over a_i, passes right of b_k and drops into w;
    // taller curves end further right so they nest without crossing.
    for i in 1..=k {
        let ii = i as i128;
        let x = -frac(ii, ki);
        edges.push((w, a(i)));
        curves.push(vec![wp, f((q(1 + ii), q(1 + ii))), f((x, q(1 + ii))), points[a(i)]]);
    }
    // (u, b_j) stays below every (w, a_i) arch, passing left of a_k.
    for j in 1..=k {
        let jj = j as i128;
        let h = q(1) + frac(jj, ki + 1);
        edges.push((u, b(j)));
        curves.push(vec![up, f((q(-1 - jj), h)), f((frac(jj, ki), h)), points[b(j)]]);
    }
}

fn build(k: usize, mirrored: bool) -> GeometricDrawing {
    let mut names: Vec<String> = ["u", "v", "w"].iter().map(|s| String::from(*s)).collect();
    let mut points = vec![(q(-1), q(0)), (q(0), q(0)), (q(1), q(0))];
    let mut edges = Vec::new();
    let mut curves = Vec::new();
    half(k, "", &mut names, &mut points, &mut edges, &mut curves, false);
    if mirrored {
        half(k, "'", &mut names, &mut points, &mut edges, &mut curves, true);
    }
    let graph = Graph::new(names, edges, None).expect("complete bipartite edges are distinct");
    // Graph keeps insertion order and every edge already starts at u, v or w.
    GeometricDrawing { k, graph, points, curves, halfplane: if mirrored { HalfPlane::Both } else { HalfPlane::Upper } }
}

/// K3,2k+1 drawn above the line y = 0.
pub fn build_k3_2kp1(k: usize) -> GeometricDrawing {
    build(k, false)
}

/// K3,4k+2: two mirrored copies of the half drawing sharing u, v, w.
pub fn build_k3_4kp2(k: usize) -> GeometricDrawing {
    build(k, true)
}

fn orient(a: Point, b: Point, c: Point) -> i8 {
    let d = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    }
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    let (lo_x, hi_x) = if a.0 <= b.0 { (a.0, b.0) } else { (b.0, a.0) };
    let (lo_y, hi_y) = if a.1 <= b.1 { (a.1, b.1) } else { (b.1, a.1) };
    orient(a, b, p) == 0 && lo_x <= p.0 && p.0 <= hi_x && lo_y <= p.1 && p.1 <= hi_y
}

/// Proper crossing (`Ok(true)`), disjoint (`Ok(false)`), or a touching or
/// overlapping configuration (`Err` with the touching point when known).
fn segments(a: Point, b: Point, c: Point, d: Point) -> Result<bool, Option<Point>> {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return Ok(o1 != o2 && o3 != o4);
    }
    if o1 == 0 && o2 == 0 {
        // Collinear segments meeting only at a common endpoint just touch.
        for (p, x, y) in [(a, b, (c, d)), (b, a, (c, d))] {
            let other = if y.0 == p { Some(y.1) } else if y.1 == p { Some(y.0) } else { None };
            if let Some(o) = other {
                if !on_segment(p, x, o) && !on_segment(p, o, x) {
                    return Err(Some(p));
                }
            }
        }
        let overlap = on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
        return if overlap { Err(None) } else { Ok(false) };
    }
    for (s, t, p) in [(a, b, c), (a, b, d), (c, d, a), (c, d, b)] {
        if on_segment(s, t, p) {
            return Err(Some(p));
        }
    }
    Ok(false)
}

/// Exact pairwise crossing counts. Edges sharing an endpoint may only meet
/// at that endpoint; any other contact is reported as an error.
pub fn count_crossings(d: &GeometricDrawing) -> Result<CrossingCount, String> {
    let m = d.graph.m();
    let mut per_edge = vec![0; m];
    let mut pairs = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            let (eu, ev) = d.graph.edge(e);
            let (fu, fv) = d.graph.edge(f);
            let shared: Vec<Point> = [eu, ev]
                .iter()
                .filter(|x| **x == fu || **x == fv)
                .map(|&x| d.points[x])
                .collect();
            let (ce, cf) = (&d.curves[e], &d.curves[f]);
            let mut count = 0;
            for s in ce.windows(2) {
                for t in cf.windows(2) {
                    match segments(s[0], s[1], t[0], t[1]) {
                        Ok(true) => count += 1,
                        Ok(false) => {}
                        Err(Some(p)) if shared.contains(&p) => {}
                        Err(_) => {
                            return Err(format!(
                                "edges {} and {} touch or overlap",
                                d.graph.edge_key(e),
                                d.graph.edge_key(f)
                            ))
                        }
                    }
                }
            }
            if count > 0 && !shared.is_empty() {
                return Err(format!("adjacent edges {} and {} cross", d.graph.edge_key(e), d.graph.edge_key(f)));
            }
            per_edge[e] += count;
            per_edge[f] += count;
            for _ in 0..count {
                pairs.push((e, f));
            }
        }
    }
    Ok(CrossingCount { per_edge, pairs })
}
