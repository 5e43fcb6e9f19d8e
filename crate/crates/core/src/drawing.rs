//! Combinatorial fan-bundled drawings, their planarization, face tracing
//! and validation.
//!
//! Planarization nodes are numbered `0..n` for vertices, then one terminal
//! per bundle, then one dummy per crossing. A bundle's trunk is arc
//! `Trunk(b, 0)` from the anchor to the dummy (or straight to the terminal
//! when the bundle is uncrossed) and `Trunk(b, 1)` from the dummy to the
//! terminal. `Mid(e)` joins the two end attachments of edge `e`.

use crate::graph::Graph;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    General,
    Outer,
    TwoLayer,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::General => "general",
            Variant::Outer => "outer",
            Variant::TwoLayer => "twolayer",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "general" => Some(Variant::General),
            "outer" => Some(Variant::Outer),
            "twolayer" => Some(Variant::TwoLayer),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub id: String,
    pub anchor: usize,
    /// Edge ids in the order they leave the terminal, clockwise after the trunk.
    pub edges: Vec<usize>,
}

/// Bundle indices holding an edge at its smaller-index endpoint (`first`)
/// and at its larger-index endpoint (`second`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Attach {
    pub first: Option<usize>,
    pub second: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcKey {
    Trunk(usize, u8),
    Mid(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundledDrawing {
    pub graph: Graph,
    pub bundles: Vec<Bundle>,
    pub attach: Vec<Attach>,
    pub crossings: Vec<(usize, usize)>,
    /// Clockwise arc order per planarization node.
    pub embedding: Vec<Vec<ArcKey>>,
    pub outer_face: Option<String>,
    pub variant: Variant,
    pub sides: u8,
}

impl BundledDrawing {
    pub fn node_count(&self) -> usize {
        self.graph.n() + self.bundles.len() + self.crossings.len()
    }

    pub fn terminal_node(&self, b: usize) -> usize {
        self.graph.n() + b
    }

    pub fn dummy_node(&self, c: usize) -> usize {
        self.graph.n() + self.bundles.len() + c
    }

    /// For each bundle, the first crossing it takes part in.
    pub fn crossing_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.bundles.len()];
        for (c, &(a, b)) in self.crossings.iter().enumerate() {
            for x in [a, b] {
                if x < out.len() && out[x].is_none() {
                    out[x] = Some(c);
                }
            }
        }
        out
    }

    pub fn node_key(&self, node: usize) -> String {
        let n = self.graph.n();
        let nb = self.bundles.len();
        if node < n {
            alloc::format!("v:{}", self.graph.name(node))
        } else if node < n + nb {
            alloc::format!("t:{}", self.bundles[node - n].id)
        } else {
            let (a, b) = self.crossings[node - n - nb];
            alloc::format!("x:{}|{}", self.bundles[a].id, self.bundles[b].id)
        }
    }

    pub fn arc_key(&self, a: ArcKey) -> String {
        match a {
            ArcKey::Trunk(b, s) => alloc::format!("trunk:{}:{}", self.bundles[b].id, s),
            ArcKey::Mid(e) => alloc::format!("mid:{}", self.graph.edge_key(e)),
        }
    }

    /// Number of bundles holding `e` (0, 1 or 2).
    pub fn bundled_ends(&self, e: usize) -> usize {
        let a = self.attach[e];
        a.first.is_some() as usize + a.second.is_some() as usize
    }
}

/// A violated rule with the ids of the objects involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
    pub objects: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.message)?;
        if !self.objects.is_empty() {
            write!(f, " [{}]", self.objects.join(", "))?;
        }
        Ok(())
    }
}

/// Why planarization or face tracing failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarizeError {
    pub rule: &'static str,
    pub message: String,
    pub objects: Vec<String>,
}

impl PlanarizeError {
    fn new(rule: &'static str, message: String, objects: Vec<String>) -> Self {
        PlanarizeError { rule, message, objects }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarization {
    pub node_count: usize,
    pub vertex_count: usize,
    pub arcs: Vec<ArcKey>,
    /// `(tail, head)` per arc; the `+` dart runs tail to head.
    pub ends: Vec<(usize, usize)>,
    /// Clockwise arc ids per node.
    pub rotation: Vec<Vec<usize>>,
    /// Printable arc names, used for face identifiers.
    pub arc_names: Vec<String>,
}

impl Planarization {
    pub fn dart_name(&self, d: usize) -> String {
        alloc::format!("{}/{}", self.arc_names[d / 2], if d % 2 == 0 { '+' } else { '-' })
    }

    pub fn tail(&self, d: usize) -> usize {
        let (a, b) = self.ends[d / 2];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }
}

/// A face as its cyclic dart sequence, with the lexicographically smallest
/// dart name as identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub darts: Vec<usize>,
}

impl Face {
    /// Real vertices in visiting order (with repetition).
    pub fn vertex_visits(&self, p: &Planarization) -> Vec<usize> {
        self.darts.iter().map(|&d| p.tail(d)).filter(|&x| x < p.vertex_count).collect()
    }
}

fn other_end(p: &Planarization, arc: usize, node: usize) -> usize {
    let (a, b) = p.ends[arc];
    if a == node {
        b
    } else {
        a
    }
}

/// Builds the planarization, checking that the embedding lists exactly the
/// arcs at each node, that terminals and dummies have the prescribed local
/// order, and that the result is connected.
pub fn planarize(d: &BundledDrawing) -> Result<Planarization, PlanarizeError> {
    let g = &d.graph;
    let n = g.n();
    let nb = d.bundles.len();
    let node_count = d.node_count();
    for (c, &(a, b)) in d.crossings.iter().enumerate() {
        if a >= nb || b >= nb {
            return Err(PlanarizeError::new("V1", alloc::format!("crossing #{c} names an unknown bundle"), vec![]));
        }
    }
    for (b, bundle) in d.bundles.iter().enumerate() {
        if bundle.anchor >= n {
            return Err(PlanarizeError::new("V1", "bundle anchored at an unknown vertex".to_string(), vec![bundle.id.clone()]));
        }
        let _ = b;
    }
    if d.attach.len() != g.m() {
        return Err(PlanarizeError::new("V1", "attachment list does not match the edge list".to_string(), vec![]));
    }
    let crossing = d.crossing_of();
    let mut arcs = Vec::new();
    let mut ends = Vec::new();
    let mut trunk_id = vec![[usize::MAX; 2]; nb];
    for (b, bundle) in d.bundles.iter().enumerate() {
        let term = n + b;
        match crossing[b] {
            Some(c) => {
                let dummy = n + nb + c;
                trunk_id[b] = [arcs.len(), arcs.len() + 1];
                arcs.push(ArcKey::Trunk(b, 0));
                ends.push((bundle.anchor, dummy));
                arcs.push(ArcKey::Trunk(b, 1));
                ends.push((dummy, term));
            }
            None => {
                trunk_id[b][0] = arcs.len();
                arcs.push(ArcKey::Trunk(b, 0));
                ends.push((bundle.anchor, term));
            }
        }
    }
    let mid_base = arcs.len();
    for e in 0..g.m() {
        let (u, v) = g.edge(e);
        let at = d.attach[e];
        let end = |bundle: Option<usize>, x: usize| -> Result<usize, PlanarizeError> {
            match bundle {
                None => Ok(x),
                Some(b) if b < nb && d.bundles[b].anchor == x => Ok(n + b),
                Some(_) => Err(PlanarizeError::new(
                    "V1",
                    "edge attached to a bundle that is missing or anchored elsewhere".to_string(),
                    vec![g.edge_key(e)],
                )),
            }
        };
        arcs.push(ArcKey::Mid(e));
        ends.push((end(at.first, u)?, end(at.second, v)?));
    }
    let arc_id = |k: ArcKey| -> Option<usize> {
        match k {
            ArcKey::Trunk(b, s) if b < nb && s < 2 => {
                let id = trunk_id[b][s as usize];
                (id != usize::MAX).then_some(id)
            }
            ArcKey::Mid(e) if e < g.m() => Some(mid_base + e),
            _ => None,
        }
    };
    let arc_names: Vec<String> = arcs
        .iter()
        .map(|&k| match k {
            ArcKey::Trunk(b, s) => alloc::format!("trunk:{}:{}", d.bundles[b].id, s),
            ArcKey::Mid(e) => alloc::format!("mid:{}", g.edge_key(e)),
        })
        .collect();
    if d.embedding.len() != node_count {
        return Err(PlanarizeError::new(
            "V1",
            alloc::format!("embedding has {} nodes, expected {}", d.embedding.len(), node_count),
            vec![],
        ));
    }
    let mut rotation = Vec::with_capacity(node_count);
    let mut hits = vec![0u8; arcs.len()];
    for (x, list) in d.embedding.iter().enumerate() {
        let mut ids = Vec::with_capacity(list.len());
        for &k in list {
            let Some(a) = arc_id(k) else {
                return Err(PlanarizeError::new("V1", "embedding names an arc that does not exist".to_string(), vec![d.node_key(x)]));
            };
            if ends[a].0 != x && ends[a].1 != x {
                return Err(PlanarizeError::new(
                    "V1",
                    "embedding lists an arc at a node it does not touch".to_string(),
                    vec![d.node_key(x), arc_names[a].clone()],
                ));
            }
            hits[a] += 1;
            ids.push(a);
        }
        rotation.push(ids);
    }
    if let Some(a) = (0..arcs.len()).find(|&a| hits[a] != 2) {
        return Err(PlanarizeError::new(
            "V1",
            "arc not listed exactly once at each of its ends".to_string(),
            vec![arc_names[a].clone()],
        ));
    }
    // Terminal: the trunk, then the bundle's edges in order.
    for (b, bundle) in d.bundles.iter().enumerate() {
        let x = n + b;
        let rot = &rotation[x];
        let trunk = if crossing[b].is_some() { trunk_id[b][1] } else { trunk_id[b][0] };
        let start = rot.iter().position(|&a| a == trunk);
        let ok = match start {
            Some(s) if rot.len() == bundle.edges.len() + 1 => bundle
                .edges
                .iter()
                .enumerate()
                .all(|(i, &e)| e < g.m() && rot[(s + 1 + i) % rot.len()] == mid_base + e),
            _ => false,
        };
        if !ok {
            return Err(PlanarizeError::new(
                "V1",
                "terminal rotation is not the trunk followed by the bundle order".to_string(),
                vec![bundle.id.clone()],
            ));
        }
    }
    // Dummy: the two trunks alternate.
    for (c, &(a, b)) in d.crossings.iter().enumerate() {
        let x = n + nb + c;
        let rot = &rotation[x];
        let owner = |arc: usize| match arcs[arc] {
            ArcKey::Trunk(bb, _) => Some(bb),
            _ => None,
        };
        let ok = rot.len() == 4
            && owner(rot[0]) == owner(rot[2])
            && owner(rot[1]) == owner(rot[3])
            && owner(rot[0]) != owner(rot[1])
            && [owner(rot[0]), owner(rot[1])].contains(&Some(a))
            && [owner(rot[0]), owner(rot[1])].contains(&Some(b));
        if !ok {
            return Err(PlanarizeError::new("V1", "crossing rotation does not alternate".to_string(), vec![d.node_key(x)]));
        }
    }
    let p = Planarization { node_count, vertex_count: n, arcs, ends, rotation, arc_names };
    // Connectivity over arcs.
    if node_count > 0 {
        let mut seen = vec![false; node_count];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &a in &p.rotation[x] {
                let y = other_end(&p, a, x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != node_count {
            return Err(PlanarizeError::new("V5", "planarization is disconnected".to_string(), vec![]));
        }
    }
    Ok(p)
}

/// Walks all faces. The successor of dart `x -> y` leaves `y` along the arc
/// that follows `(y, x)` clockwise at `y`, so bounded faces of a drawing in
/// the plane come out counterclockwise.
pub fn trace_faces(p: &Planarization) -> Result<Vec<Face>, PlanarizeError> {
    let mut faces = Vec::new();
    walk_faces(p, |walk| {
        // Compare names as bytes in place; only the winner is formatted.
        let bytes = |d: usize| p.arc_names[d / 2].bytes().chain([b'/', if d % 2 == 0 { b'+' } else { b'-' }]);
        let id = walk.iter().copied().min_by(|&x, &y| bytes(x).cmp(bytes(y))).map(|d| p.dart_name(d)).unwrap_or_default();
        faces.push(Face { id, darts: walk.to_vec() });
    })?;
    Ok(faces)
}

/// Calls `visit` with each face's dart sequence, reusing one buffer, and
/// checks the Euler characteristic at the end.
fn walk_faces(p: &Planarization, mut visit: impl FnMut(&[usize])) -> Result<(), PlanarizeError> {
    let darts = 2 * p.arcs.len();
    let mut pos = vec![usize::MAX; darts];
    for (x, rot) in p.rotation.iter().enumerate() {
        for (i, &a) in rot.iter().enumerate() {
            if p.ends[a].0 == x {
                pos[2 * a] = i;
            }
            if p.ends[a].1 == x {
                pos[2 * a + 1] = i;
            }
        }
    }
    let next = |d: usize| -> usize {
        let back = d ^ 1;
        let y = p.tail(back);
        let rot = &p.rotation[y];
        let a = rot[(pos[back] + 1) % rot.len()];
        if p.ends[a].0 == y {
            2 * a
        } else {
            2 * a + 1
        }
    };
    let mut used = vec![false; darts];
    let mut walk = Vec::new();
    let mut count = 0i64;
    for s in 0..darts {
        if used[s] {
            continue;
        }
        walk.clear();
        let mut d = s;
        while !used[d] {
            used[d] = true;
            walk.push(d);
            d = next(d);
        }
        if d != s {
            return Err(PlanarizeError::new("V5", "face walk did not close".to_string(), vec![]));
        }
        count += 1;
        visit(&walk);
    }
    let v = p.node_count as i64;
    let e = p.arcs.len() as i64;
    let f = count;
    if v - e + f != 2 && !(v == 1 && e == 0) {
        let defect = 2 - (v - e + f);
        return Err(PlanarizeError::new(
            "V5",
            alloc::format!("embedding not planar: V - E + F = {}, genus defect {}", v - e + f, defect / 2),
            vec![],
        ));
    }
    Ok(())
}

/// Faces of a single-vertex planarization: one empty face.
fn faces_or_trivial(p: &Planarization) -> Result<Vec<Face>, PlanarizeError> {
    if p.arcs.is_empty() {
        return Ok(vec![Face { id: String::new(), darts: vec![] }]);
    }
    trace_faces(p)
}

/// Whether the visit sequence of a face splits cyclically into an arc
/// holding every layer-0 vertex and a complementary arc holding every
/// layer-1 vertex.
pub fn splits_into_layers(visits: &[usize], layers: &[u8], n: usize) -> bool {
    let need0 = (0..n).filter(|&v| layers[v] == 0).count();
    let need1 = n - need0;
    let len = visits.len();
    if len == 0 {
        return n == 0;
    }
    let mut mark = vec![usize::MAX; n];
    let mut stamp = 0usize;
    for start in 0..len {
        // Smallest prefix from `start` covering all layer-0 vertices.
        stamp += 1;
        let mut got = 0;
        let mut end = None;
        for i in 0..len {
            let v = visits[(start + i) % len];
            if layers[v] == 0 && mark[v] != stamp {
                mark[v] = stamp;
                got += 1;
            }
            if got == need0 {
                end = Some(i + 1);
                break;
            }
        }
        let Some(taken) = end else { return false };
        stamp += 1;
        let mut got1 = 0;
        for i in taken..len {
            let v = visits[(start + i) % len];
            if layers[v] == 1 && mark[v] != stamp {
                mark[v] = stamp;
                got1 += 1;
            }
        }
        if got1 == need1 {
            return true;
        }
    }
    false
}

fn violation(rule: &'static str, message: impl Into<String>, objects: Vec<String>) -> Violation {
    Violation { rule, message: message.into(), objects }
}

/// Checks V1 (structure), V2 (1-sided), V3 (one crossing per bundle),
/// V4 (almost simple), V5 (planar skeleton) and V6 (variant).
pub fn validate(d: &BundledDrawing) -> ValidationReport {
    let g = &d.graph;
    let n = g.n();
    let nb = d.bundles.len();
    let mut out = Vec::new();
    let mut v1_ok = true;

    if d.sides != 1 && d.sides != 2 {
        out.push(violation("V1", alloc::format!("sides must be 1 or 2, got {}", d.sides), vec![]));
        v1_ok = false;
    }
    {
        let mut ids: Vec<&str> = d.bundles.iter().map(|b| b.id.as_str()).collect();
        ids.sort_unstable();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                out.push(violation("V1", "duplicate bundle id", vec![w[0].to_string()]));
                v1_ok = false;
            }
        }
    }
    for bundle in &d.bundles {
        if bundle.anchor >= n {
            out.push(violation("V1", "bundle anchored at an unknown vertex", vec![bundle.id.clone()]));
            v1_ok = false;
            continue;
        }
        if bundle.edges.is_empty() {
            out.push(violation("V1", "bundle has no edges", vec![bundle.id.clone()]));
            v1_ok = false;
        }
        let mut es = bundle.edges.clone();
        es.sort_unstable();
        es.dedup();
        if es.len() != bundle.edges.len() {
            out.push(violation("V1", "bundle lists an edge twice", vec![bundle.id.clone()]));
            v1_ok = false;
        }
        for &e in &bundle.edges {
            if e >= g.m() {
                out.push(violation("V1", "bundle lists an unknown edge", vec![bundle.id.clone()]));
                v1_ok = false;
                continue;
            }
            let (u, v) = g.edge(e);
            if u != bundle.anchor && v != bundle.anchor {
                out.push(violation("V1", "bundle edge not incident to its anchor", vec![bundle.id.clone(), g.edge_key(e)]));
                v1_ok = false;
            }
        }
    }
    if d.attach.len() != g.m() {
        out.push(violation("V1", "attachment list does not match the edge list", vec![]));
        v1_ok = false;
    } else if v1_ok {
        // Edge listed in bundle b iff the attachment at b's anchor names b.
        let mut member: Vec<(usize, usize)> =
            d.bundles.iter().enumerate().flat_map(|(b, bundle)| bundle.edges.iter().map(move |&e| (b, e))).collect();
        member.sort_unstable();
        for e in 0..g.m() {
            let (u, v) = g.edge(e);
            for (slot, x) in [(d.attach[e].first, u), (d.attach[e].second, v)] {
                if let Some(b) = slot {
                    if b >= nb || d.bundles[b].anchor != x || member.binary_search(&(b, e)).is_err() {
                        out.push(violation("V1", "attachment disagrees with bundle contents", vec![g.edge_key(e)]));
                        v1_ok = false;
                    }
                }
            }
        }
        for (b, bundle) in d.bundles.iter().enumerate() {
            for &e in &bundle.edges {
                let (u, _) = g.edge(e);
                let slot = if bundle.anchor == u { d.attach[e].first } else { d.attach[e].second };
                if slot != Some(b) {
                    out.push(violation("V1", "bundle lists an edge not attached to it", vec![bundle.id.clone(), g.edge_key(e)]));
                    v1_ok = false;
                }
            }
        }
    }
    for &(a, b) in &d.crossings {
        if a >= nb || b >= nb || a == b {
            out.push(violation("V1", "crossing names an unknown or repeated bundle", vec![]));
            v1_ok = false;
        }
    }

    // V2
    if d.sides == 1 && d.attach.len() == g.m() {
        for e in 0..g.m() {
            if d.bundled_ends(e) == 2 {
                out.push(violation("V2", "edge bundled at both ends in a 1-sided drawing", vec![g.edge_key(e)]));
            }
        }
    }

    // V3
    let mut v3_ok = true;
    let mut count = vec![0usize; nb];
    for &(a, b) in &d.crossings {
        for x in [a, b] {
            if x < nb {
                count[x] += 1;
            }
        }
    }
    for (b, &c) in count.iter().enumerate() {
        if c > 1 {
            out.push(violation("V3", alloc::format!("bundle crosses {c} bundles"), vec![d.bundles[b].id.clone()]));
            v3_ok = false;
        }
    }

    // V4
    for &(a, b) in &d.crossings {
        if a < nb && b < nb && d.bundles[a].anchor == d.bundles[b].anchor {
            out.push(violation(
                "V4",
                "two bundles of the same vertex cross",
                vec![d.bundles[a].id.clone(), d.bundles[b].id.clone()],
            ));
        }
    }

    // V5 and V6
    if v1_ok && v3_ok {
        match planarize(d).and_then(|p| faces_or_trivial(&p).map(|f| (p, f))) {
            Err(e) => out.push(violation(e.rule, e.message, e.objects)),
            Ok((p, faces)) => {
                if let Some(v) = variant_violation(d, &p, &faces) {
                    out.push(v);
                }
            }
        }
    }

    ValidationReport { valid: out.is_empty(), violations: out }
}

fn variant_violation(d: &BundledDrawing, p: &Planarization, faces: &[Face]) -> Option<Violation> {
    let n = d.graph.n();
    let hinted: Vec<&Face> = match &d.outer_face {
        Some(h) => {
            let f: Vec<&Face> = faces.iter().filter(|f| &f.id == h).collect();
            if f.is_empty() {
                return Some(violation("V6", "outer face hint names no face", vec![h.clone()]));
            }
            f
        }
        None => faces.iter().collect(),
    };
    let covers_all = |f: &Face| {
        // Only faces this long can cover every vertex, and there are few.
        if f.darts.len() < n {
            return false;
        }
        let visits = f.vertex_visits(p);
        let mut seen = vec![false; n];
        for v in visits {
            seen[v] = true;
        }
        seen.iter().all(|&s| s)
    };
    match d.variant {
        Variant::General => None,
        Variant::Outer => {
            if hinted.iter().any(|f| covers_all(f)) {
                None
            } else {
                Some(violation("V6", "no face is incident to all vertices", vec![]))
            }
        }
        Variant::TwoLayer => {
            let Some(layers) = d.graph.layers() else {
                return Some(violation("V6", "2-layer drawing of a graph without layers", vec![]));
            };
            if hinted.iter().any(|f| covers_all(f) && splits_into_layers(&f.vertex_visits(p), layers, n)) {
                None
            } else {
                Some(violation("V6", "no face shows the two layers as contiguous blocks", vec![]))
            }
        }
    }
}

/// Identifier of a face incident to all vertices, if any.
pub fn find_outer_face(d: &BundledDrawing) -> Option<String> {
    let p = planarize(d).ok()?;
    let n = d.graph.n();
    if p.arcs.is_empty() {
        // The lone empty face touches no vertex.
        return (n == 0).then(String::new);
    }
    // Stamped marks keep the scan linear in the total face length.
    let mut stamp = vec![usize::MAX; n];
    let mut face = 0;
    let mut best: Option<String> = None;
    walk_faces(&p, |walk| {
        face += 1;
        if walk.len() < n {
            return;
        }
        let mut count = 0;
        for &dart in walk {
            let v = p.tail(dart);
            if v < n && stamp[v] != face {
                stamp[v] = face;
                count += 1;
            }
        }
        if count == n {
            let id = walk.iter().map(|&x| p.dart_name(x)).min().unwrap_or_default();
            if best.as_ref().map_or(true, |b| id < *b) {
                best = Some(id);
            }
        }
    })
    .ok()?;
    best
}

/// Upper bound on the edge count for a drawing class, as `(numerator,
/// denominator)` of an expression in n, when the bound applies to n.
pub fn class_bound(sides: u8, variant: Variant, n: usize) -> Option<(i64, i64)> {
    let n = n as i64;
    let (num, den, min_n) = match (sides, variant) {
        (1, Variant::General) => (13 * n - 26, 3, 3),
        (1, Variant::Outer) => (8 * n - 13, 3, 5),
        (1, Variant::TwoLayer) => (5 * n - 7, 3, 5),
        (_, Variant::Outer) => (4 * n - 9, 1, 3),
        (_, Variant::TwoLayer) => (3 * n - 7, 1, 3),
        (_, Variant::General) => (43 * n - 78, 5, 3),
    };
    (n >= min_n).then_some((num, den))
}

/// Checks the edge count against the class bound.
pub fn bound_guard(d: &BundledDrawing) -> Result<(), Violation> {
    let m = d.graph.m() as i64;
    match class_bound(d.sides, d.variant, d.graph.n()) {
        Some((num, den)) if m * den > num => Err(violation(
            "BOUND",
            alloc::format!("{} edges exceed the {}-sided {} bound {}/{}", m, d.sides, d.variant.as_str(), num, den),
            vec![],
        )),
        _ => Ok(()),
    }
}
