//! Assembly of drawings from a description that may still contain edges
//! the graph lacks and bundles that end up empty. Generators and
//! recognizers describe a "full" picture and let `finish` prune it.

use crate::drawing::{ArcKey, Attach, Bundle, BundledDrawing, Variant};
use crate::graph::Graph;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Arc names before edge ids are known; `Mid` names the edge by its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RawArc {
    Trunk(usize, u8),
    Mid(usize, usize),
}

/// Nodes are numbered as in the final drawing: vertices, terminals, dummies.
#[derive(Clone, Debug)]
pub struct RawDrawing {
    pub graph: Graph,
    pub bundles: Vec<(String, usize)>,
    pub crossings: Vec<(usize, usize)>,
    pub rotation: Vec<Vec<RawArc>>,
    pub variant: Variant,
    pub sides: u8,
}

impl RawDrawing {
    pub fn new(graph: Graph, variant: Variant, sides: u8) -> Self {
        let n = graph.n();
        RawDrawing { graph, bundles: Vec::new(), crossings: Vec::new(), rotation: vec![Vec::new(); n], variant, sides }
    }

    /// Adds a bundle and returns its index. Terminal node indices shift as
    /// bundles are added, so add all bundles before crossings and rotations
    /// that refer to node numbers.
    pub fn add_bundle(&mut self, id: String, anchor: usize) -> usize {
        self.bundles.push((id, anchor));
        self.bundles.len() - 1
    }

    pub fn terminal(&self, b: usize) -> usize {
        self.graph.n() + b
    }

    pub fn dummy(&self, c: usize) -> usize {
        self.graph.n() + self.bundles.len() + c
    }

    pub fn ensure_nodes(&mut self) {
        let total = self.graph.n() + self.bundles.len() + self.crossings.len();
        if self.rotation.len() < total {
            self.rotation.resize(total, Vec::new());
        }
    }

    /// Drops missing edges and empty bundles, smooths dummies whose partner
    /// vanished, and derives bundle orders and attachments from the terminal
    /// rotations.
    pub fn finish(self) -> Result<BundledDrawing, String> {
        let RawDrawing { graph, bundles, crossings, mut rotation, variant, sides } = self;
        let n = graph.n();
        let nb = bundles.len();
        rotation.resize(n + nb + crossings.len(), Vec::new());
        let edge_of = |u: usize, v: usize| graph.edge_index(u, v);
        for list in rotation.iter_mut() {
            list.retain(|a| match *a {
                RawArc::Mid(u, v) => edge_of(u, v).is_some(),
                RawArc::Trunk(..) => true,
            });
        }
        let mut crossing_of = vec![None; nb];
        for (c, &(a, b)) in crossings.iter().enumerate() {
            crossing_of[a] = Some(c);
            crossing_of[b] = Some(c);
        }
        let alive: Vec<bool> = (0..nb).map(|b| rotation[n + b].iter().any(|a| matches!(a, RawArc::Mid(..)))).collect();
        let crossing_alive: Vec<bool> = crossings.iter().map(|&(a, b)| alive[a] && alive[b]).collect();
        let mut new_bundle = vec![usize::MAX; nb];
        let mut kept = Vec::new();
        for b in 0..nb {
            if alive[b] {
                new_bundle[b] = kept.len();
                kept.push(b);
            }
        }
        let mut kept_crossings = Vec::new();
        for (c, &(a, b)) in crossings.iter().enumerate() {
            if crossing_alive[c] {
                kept_crossings.push((new_bundle[a], new_bundle[b]));
            }
        }
        let map_arc = |a: RawArc| -> Option<ArcKey> {
            match a {
                RawArc::Mid(u, v) => Some(ArcKey::Mid(edge_of(u, v)?)),
                RawArc::Trunk(b, s) => {
                    if !alive[b] {
                        return None;
                    }
                    let crossed = crossing_of[b].map(|c| crossing_alive[c]).unwrap_or(false);
                    if crossed {
                        Some(ArcKey::Trunk(new_bundle[b], s))
                    } else {
                        Some(ArcKey::Trunk(new_bundle[b], 0))
                    }
                }
            }
        };
        let mut embedding = Vec::with_capacity(n + kept.len() + kept_crossings.len());
        for list in rotation.iter().take(n) {
            embedding.push(list.iter().filter_map(|&a| map_arc(a)).collect::<Vec<_>>());
        }
        let mut out_bundles = Vec::with_capacity(kept.len());
        for &b in &kept {
            let list: Vec<ArcKey> = rotation[n + b].iter().filter_map(|&a| map_arc(a)).collect();
            let trunk = list
                .iter()
                .position(|a| matches!(a, ArcKey::Trunk(..)))
                .ok_or_else(|| alloc::format!("terminal of bundle {} has no trunk", bundles[b].0))?;
            let edges: Vec<usize> = (1..list.len())
                .map(|i| match list[(trunk + i) % list.len()] {
                    ArcKey::Mid(e) => Ok(e),
                    ArcKey::Trunk(..) => Err(alloc::format!("terminal of bundle {} has two trunks", bundles[b].0)),
                })
                .collect::<Result<_, _>>()?;
            out_bundles.push(Bundle { id: bundles[b].0.clone(), anchor: bundles[b].1, edges });
            embedding.push(list);
        }
        for (c, _) in crossings.iter().enumerate() {
            if crossing_alive[c] {
                embedding.push(rotation[n + nb + c].iter().filter_map(|&a| map_arc(a)).collect());
            }
        }
        let mut attach = vec![Attach::default(); graph.m()];
        for (b, bundle) in out_bundles.iter().enumerate() {
            for &e in &bundle.edges {
                let (u, v) = graph.edge(e);
                let slot = if bundle.anchor == u {
                    &mut attach[e].first
                } else if bundle.anchor == v {
                    &mut attach[e].second
                } else {
                    return Err(alloc::format!("bundle {} holds an edge away from its anchor", bundle.id));
                };
                if slot.is_some() {
                    return Err(alloc::format!("edge {} is in two bundles at one end", graph.edge_key(e)));
                }
                *slot = Some(b);
            }
        }
        let mut d = BundledDrawing {
            graph,
            bundles: out_bundles,
            attach,
            crossings: kept_crossings,
            embedding,
            outer_face: None,
            variant,
            sides,
        };
        if variant != Variant::General {
            d.outer_face = crate::drawing::find_outer_face(&d);
        }
        Ok(d)
    }
}

/// Planarization node named by role rather than index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Node {
    V(usize),
    T(usize),
    X(usize),
}

/// Collects positioned nodes, straight arcs, bundles and crossings, and
/// orders arcs clockwise around each node by angle.
#[derive(Clone, Debug, Default)]
pub struct GeoBuilder {
    pos: BTreeMap<Node, (f64, f64)>,
    arcs: Vec<(Node, Node, RawArc)>,
    bundles: Vec<(String, usize)>,
    crossings: Vec<(usize, usize)>,
}

impl GeoBuilder {
    pub fn new() -> Self {
        GeoBuilder::default()
    }

    pub fn place(&mut self, node: Node, x: f64, y: f64) {
        self.pos.insert(node, (x, y));
    }

    pub fn position(&self, node: Node) -> Option<(f64, f64)> {
        self.pos.get(&node).copied()
    }

    pub fn arc(&mut self, a: Node, b: Node, key: RawArc) {
        self.arcs.push((a, b, key));
    }

    pub fn add_bundle(&mut self, id: String, anchor: usize) -> usize {
        self.bundles.push((id, anchor));
        self.bundles.len() - 1
    }

    pub fn add_crossing(&mut self, a: usize, b: usize) -> usize {
        self.crossings.push((a, b));
        self.crossings.len() - 1
    }

    /// Straight mid arc between two nodes for edge (u, v).
    pub fn mid(&mut self, a: Node, b: Node, u: usize, v: usize) {
        self.arc(a, b, RawArc::Mid(u, v));
    }

    /// Converts to a raw drawing; every arc end must have been placed.
    pub fn build(self, graph: Graph, variant: Variant, sides: u8) -> Result<RawDrawing, String> {
        let n = graph.n();
        let nb = self.bundles.len();
        let index = |node: Node| match node {
            Node::V(v) => v,
            Node::T(b) => n + b,
            Node::X(c) => n + nb + c,
        };
        let total = n + nb + self.crossings.len();
        let mut around: Vec<Vec<(f64, RawArc)>> = vec![Vec::new(); total];
        for &(a, b, key) in &self.arcs {
            let pa = self.pos.get(&a).ok_or_else(|| alloc::format!("node {a:?} has no position"))?;
            let pb = self.pos.get(&b).ok_or_else(|| alloc::format!("node {b:?} has no position"))?;
            around[index(a)].push((libm::atan2(pb.1 - pa.1, pb.0 - pa.0), key));
            around[index(b)].push((libm::atan2(pa.1 - pb.1, pa.0 - pb.0), key));
        }
        let rotation = around
            .into_iter()
            .map(|mut l| {
                l.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap_or(core::cmp::Ordering::Equal));
                l.into_iter().map(|p| p.1).collect()
            })
            .collect();
        Ok(RawDrawing { graph, bundles: self.bundles, crossings: self.crossings, rotation, variant, sides })
    }
}
