//! SVG output. Drawings are laid out on their planarization: some nodes are
//! pinned by the layout hint and the rest sit at the average of their
//! neighbours.

use anyhow::{anyhow, bail, Result};
use fbp_core::drawing::{planarize, trace_faces, ArcKey, BundledDrawing, Planarization};
use fbp_core::k3n::GeometricDrawing;
use std::f64::consts::PI;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    TwoLayer,
    Circular,
    Barycentric,
}

impl Layout {
    pub fn parse(s: &str) -> Option<Layout> {
        match s {
            "twolayer" => Some(Layout::TwoLayer),
            "circular" => Some(Layout::Circular),
            "barycentric" => Some(Layout::Barycentric),
            _ => None,
        }
    }

    /// The natural layout for a drawing's variant.
    pub fn default_for(d: &BundledDrawing) -> Layout {
        match d.variant {
            fbp_core::Variant::TwoLayer => Layout::TwoLayer,
            fbp_core::Variant::Outer => Layout::Circular,
            fbp_core::Variant::General => Layout::Barycentric,
        }
    }
}

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const TOLERANCE: f64 = 1e-9;
const MAX_ROUNDS: usize = 100_000;

/// Nodes on the outer face in walk order, first visits only.
fn outer_walk(d: &BundledDrawing, p: &Planarization) -> Result<Vec<usize>> {
    let faces = trace_faces(p).map_err(|e| anyhow!("{}: {}", e.rule, e.message))?;
    let face = match &d.outer_face {
        Some(id) => faces.iter().find(|f| &f.id == id),
        None => None,
    }
    .or_else(|| faces.iter().max_by(|a, b| a.darts.len().cmp(&b.darts.len()).then(b.id.cmp(&a.id))))
    .ok_or_else(|| anyhow!("drawing has no faces"))?;
    let mut seen = vec![false; p.node_count];
    let mut out = Vec::new();
    for &dart in &face.darts {
        let v = p.tail(dart);
        if !seen[v] {
            seen[v] = true;
            out.push(v);
        }
    }
    Ok(out)
}

fn on_circle(i: usize, k: usize) -> (f64, f64) {
    let a = PI / 2.0 - 2.0 * PI * i as f64 / k as f64;
    (0.5 + 0.5 * a.cos(), 0.5 - 0.5 * a.sin())
}

/// Unit-box coordinates for every planarization node.
pub fn layout(d: &BundledDrawing, hint: Layout) -> Result<(Planarization, Vec<(f64, f64)>)> {
    let p = planarize(d).map_err(|e| anyhow!("{}: {}", e.rule, e.message))?;
    let n = d.graph.n();
    let mut pos = vec![(0.5, 0.5); p.node_count];
    let mut fixed = vec![false; p.node_count];
    let walk = outer_walk(d, &p).unwrap_or_default();
    let vertex_order: Vec<usize> = {
        let mut order: Vec<usize> = walk.iter().copied().filter(|&v| v < n).collect();
        let mut seen = vec![false; n];
        order.iter().for_each(|&v| seen[v] = true);
        order.extend((0..n).filter(|&v| !seen[v]));
        order
    };
    match hint {
        Layout::TwoLayer => {
            let layers = d.graph.layers().ok_or_else(|| anyhow!("twolayer layout needs vertex layers"))?;
            for side in 0..2u8 {
                let row: Vec<usize> = vertex_order.iter().copied().filter(|&v| layers[v] == side).collect();
                for (i, &v) in row.iter().enumerate() {
                    let x = if row.len() == 1 { 0.5 } else { i as f64 / (row.len() - 1) as f64 };
                    pos[v] = (x, side as f64);
                    fixed[v] = true;
                }
            }
        }
        Layout::Circular => {
            for (i, &v) in vertex_order.iter().enumerate() {
                pos[v] = on_circle(i, n);
                fixed[v] = true;
            }
        }
        Layout::Barycentric => {
            if walk.is_empty() {
                bail!("barycentric layout needs a nonempty outer face");
            }
            for (i, &v) in walk.iter().enumerate() {
                pos[v] = on_circle(i, walk.len());
                fixed[v] = true;
            }
        }
    }
    let mut nbrs = vec![Vec::new(); p.node_count];
    for &(a, b) in &p.ends {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    if let Some(v) = (0..p.node_count).find(|&v| !fixed[v] && nbrs[v].is_empty()) {
        bail!("node {} has no neighbours to place it by", d.node_key(v));
    }
    for _ in 0..MAX_ROUNDS {
        let mut moved: f64 = 0.0;
        for v in 0..p.node_count {
            if fixed[v] {
                continue;
            }
            let k = nbrs[v].len() as f64;
            let x = nbrs[v].iter().map(|&w| pos[w].0).sum::<f64>() / k;
            let y = nbrs[v].iter().map(|&w| pos[w].1).sum::<f64>() / k;
            moved = moved.max((x - pos[v].0).abs()).max((y - pos[v].1).abs());
            pos[v] = (x, y);
        }
        if moved < TOLERANCE {
            break;
        }
    }
    Ok((p, pos))
}

fn px(c: f64) -> f64 {
    MARGIN + c * (SIZE - 2.0 * MARGIN)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(d: &BundledDrawing, hint: Layout) -> Result<String> {
    let (p, pos) = layout(d, hint)?;
    let n = d.graph.n();
    let nb = d.bundles.len();
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(
        s,
        "<style>.edge{{stroke:#444;stroke-width:1}}.trunk{{stroke:#1f6fb2;stroke-width:4}}.vertex{{fill:#fff;stroke:#000}}.terminal{{fill:#1f6fb2}}.crossing{{fill:#c0392b}}</style>"
    );
    for (i, &(a, b)) in p.ends.iter().enumerate() {
        let class = match p.arcs[i] {
            ArcKey::Trunk(..) => "trunk",
            ArcKey::Mid(_) => "edge",
        };
        let _ = writeln!(
            s,
            r#"<line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            px(pos[a].0),
            px(pos[a].1),
            px(pos[b].0),
            px(pos[b].1)
        );
    }
    for t in n..n + nb {
        let _ = writeln!(s, r#"<circle class="terminal" cx="{:.3}" cy="{:.3}" r="3"/>"#, px(pos[t].0), px(pos[t].1));
    }
    for x in n + nb..p.node_count {
        let _ = writeln!(s, r#"<rect class="crossing" x="{:.3}" y="{:.3}" width="6" height="6"/>"#, px(pos[x].0) - 3.0, px(pos[x].1) - 3.0);
    }
    for v in 0..n {
        let (x, y) = (px(pos[v].0), px(pos[v].1));
        let _ = writeln!(s, r#"<circle class="vertex" cx="{x:.3}" cy="{y:.3}" r="8"/>"#);
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="10" text-anchor="middle">{}</text>"#, x, y + 3.5, escape(d.graph.name(v)));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn to_f64(q: &fbp_core::k3n::Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Straight polylines for a geometric drawing, scaled to fit.
pub fn render_geometry(d: &GeometricDrawing) -> String {
    let all = d.curves.iter().flatten().chain(d.points.iter());
    let pts: Vec<(f64, f64)> = all.map(|p| (to_f64(&p.0), to_f64(&p.1))).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let map = |p: &(fbp_core::k3n::Q, fbp_core::k3n::Q)| {
        let (x, y) = (to_f64(&p.0), to_f64(&p.1));
        (px((x - x0) / span), px((y1 - y) / span))
    };
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    for c in &d.curves {
        let pts: Vec<String> = c.iter().map(|p| {
            let (x, y) = map(p);
            format!("{x:.3},{y:.3}")
        }).collect();
        let _ = writeln!(s, r##"<polyline class="edge" fill="none" stroke="#444" points="{}"/>"##, pts.join(" "));
    }
    for (v, p) in d.points.iter().enumerate() {
        let (x, y) = map(p);
        let _ = writeln!(s, r#"<circle class="vertex" cx="{x:.3}" cy="{y:.3}" r="5" fill="white" stroke="black"/>"#);
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="10">{}</text>"#, x + 6.0, y - 6.0, escape(d.graph.name(v)));
    }
    s.push_str("</svg>\n");
    s
}
