//! Rotation systems: a clockwise cyclic order of incident edges per vertex.

use crate::graph::Graph;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    /// `order[v]` lists edge ids around `v` clockwise.
    pub order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that every vertex lists exactly its incident edges, once each.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if self.order.len() != g.n() {
            return Err(alloc::format!("rotation covers {} vertices, graph has {}", self.order.len(), g.n()));
        }
        let mut seen = vec![usize::MAX; g.m()];
        for (v, list) in self.order.iter().enumerate() {
            if list.len() != g.degree(v) {
                return Err(alloc::format!("vertex {} lists {} edges but has degree {}", g.name(v), list.len(), g.degree(v)));
            }
            for &e in list {
                if e >= g.m() {
                    return Err(alloc::format!("vertex {} lists unknown edge #{e}", g.name(v)));
                }
                let (a, b) = g.edge(e);
                if a != v && b != v {
                    return Err(alloc::format!("vertex {} lists non-incident edge {}", g.name(v), g.edge_key(e)));
                }
                if seen[e] == v {
                    return Err(alloc::format!("vertex {} lists edge {} twice", g.name(v), g.edge_key(e)));
                }
                seen[e] = v;
            }
        }
        Ok(())
    }

    /// Whether the edges satisfying `pred` form one contiguous run in the
    /// cyclic order at `v` (vacuously true when none or all do).
    pub fn contiguous_at(&self, v: usize, pred: impl Fn(usize) -> bool) -> bool {
        let list = &self.order[v];
        let flags: Vec<bool> = list.iter().map(|&e| pred(e)).collect();
        let changes = (0..flags.len()).filter(|&i| flags[i] != flags[(i + 1) % flags.len()]).count();
        changes <= 2
    }
}
