//! Generators for the density-extremal families and the dodecahedral
//! pentagram graph.

use crate::drawing::BundledDrawing;
use crate::graph::Graph;
use alloc::string::String;
use alloc::vec::Vec;

mod bn;
mod d12;
mod lily;
mod pentagon;

pub use bn::gen_bn;
pub use d12::gen_d12;
pub use lily::{gen_double_waterlily, gen_layered_lily, gen_waterlily};
pub use pentagon::{gen_onesided_general, gen_onesided_outer, pentagon_base};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    OnesidedGeneral,
    OnesidedOuter,
    Bn,
    Waterlily,
    DoubleWaterlily,
    LayeredLily,
    D12,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::OnesidedGeneral,
        Family::OnesidedOuter,
        Family::Bn,
        Family::Waterlily,
        Family::DoubleWaterlily,
        Family::LayeredLily,
        Family::D12,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::OnesidedGeneral => "onesided-general",
            Family::OnesidedOuter => "onesided-outer",
            Family::Bn => "bn",
            Family::Waterlily => "waterlily",
            Family::DoubleWaterlily => "double-waterlily",
            Family::LayeredLily => "layered-lily",
            Family::D12 => "d12",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.as_str() == s)
    }

    /// Name of the size parameter the generator takes, if any.
    pub fn parameter(self) -> Option<&'static str> {
        match self {
            Family::OnesidedGeneral | Family::Bn => Some("k"),
            Family::OnesidedOuter => Some("q"),
            Family::Waterlily | Family::DoubleWaterlily | Family::LayeredLily => Some("n"),
            Family::D12 => None,
        }
    }

    /// Vertex count for a parameter value.
    pub fn vertex_count(self, p: usize) -> usize {
        match self {
            Family::OnesidedGeneral => 5 + 3 * p,
            Family::OnesidedOuter | Family::Bn => 3 * p + 2,
            Family::Waterlily | Family::DoubleWaterlily | Family::LayeredLily => p,
            Family::D12 => 20,
        }
    }

    /// Parameter values the generator is specified for, up to `max_n`
    /// vertices. The layered lily only exists for even `n`.
    pub fn parameters_up_to(self, max_n: usize) -> Vec<usize> {
        let first = match self {
            Family::OnesidedGeneral | Family::D12 => 0,
            Family::OnesidedOuter | Family::Bn => 1,
            Family::Waterlily | Family::DoubleWaterlily => 9,
            Family::LayeredLily => 10,
        };
        if self == Family::D12 {
            return if max_n >= 20 { alloc::vec![0] } else { Vec::new() };
        }
        (first..)
            .take_while(|&p| self.vertex_count(p) <= max_n)
            .filter(|&p| self != Family::LayeredLily || p % 2 == 0)
            .collect()
    }

    /// Closed-form edge count of the family at `n` vertices.
    pub fn expected_edges(self, n: usize) -> usize {
        match self {
            Family::OnesidedGeneral => (13 * n - 26) / 3,
            Family::OnesidedOuter => (8 * n - 13) / 3,
            Family::Bn => (5 * n - 7) / 3,
            Family::Waterlily => 4 * n - 9,
            Family::DoubleWaterlily => 6 * n - 18,
            Family::LayeredLily => 2 * n - 4,
            Family::D12 => 5 * n - 10,
        }
    }

    /// Generates the instance for one parameter value.
    pub fn generate(self, p: usize) -> Result<FamilyInstance, String> {
        match self {
            Family::OnesidedGeneral => gen_onesided_general(p),
            Family::OnesidedOuter => gen_onesided_outer(p),
            Family::Bn => gen_bn(p),
            Family::Waterlily => gen_waterlily(p),
            Family::DoubleWaterlily => gen_double_waterlily(p),
            Family::LayeredLily => gen_layered_lily(p),
            Family::D12 => Ok(gen_d12()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: Family,
    pub params: Vec<(String, i64)>,
    pub graph: Graph,
    pub drawing: Option<BundledDrawing>,
    pub expected_edges: usize,
}

impl FamilyInstance {
    fn new(family: Family, params: &[(&str, i64)], graph: Graph, drawing: Option<BundledDrawing>) -> Self {
        let expected_edges = family.expected_edges(graph.n());
        FamilyInstance {
            family,
            params: params.iter().map(|&(k, v)| (String::from(k), v)).collect(),
            graph,
            drawing,
            expected_edges,
        }
    }
}

/// Faces of a plane graph given by clockwise neighbour lists, as vertex
/// walks. A walk follows `x -> y` with the neighbour after `x` clockwise at `y`.
pub(crate) fn plane_faces(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: Vec<Vec<bool>> = rot.iter().map(|l| alloc::vec![false; l.len()]).collect();
    let mut faces = Vec::new();
    for u in 0..rot.len() {
        for i in 0..rot[u].len() {
            if seen[u][i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut x, mut j) = (u, i);
            while !seen[x][j] {
                seen[x][j] = true;
                walk.push(x);
                let y = rot[x][j];
                let back = rot[y].iter().position(|&w| w == x).expect("symmetric rotation");
                j = (back + 1) % rot[y].len();
                x = y;
            }
            faces.push(walk);
        }
    }
    faces
}
