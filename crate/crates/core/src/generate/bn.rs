use super::{Family, FamilyInstance};
use crate::graph::Graph;
use crate::recognize::snake::{draw_chain, SnakeDecomposition};
use alloc::string::String;
use alloc::vec::Vec;

/// `k` copies of K2,3 in a row, consecutive copies sharing one edge.
/// Poles are tokens `1..=k+1` on layer 0, rungs `k+2..=3k+2` on layer 1.
pub fn gen_bn(k: usize) -> Result<FamilyInstance, String> {
    if k == 0 {
        return Err(String::from("k must be at least 1"));
    }
    let poles = k + 1;
    let n = poles + 2 * k + 1;
    let rung = |r: usize| poles + r - 1;
    let mut edges = Vec::new();
    for j in 1..=k {
        for r in [2 * j - 1, 2 * j, 2 * j + 1] {
            for p in [j, j + 1] {
                let e = (p - 1, rung(r));
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
    }
    let layers = (0..n).map(|v| if v < poles { 0 } else { 1 }).collect();
    let graph = Graph::numbered(n, edges, Some(layers)).map_err(|e| alloc::format!("{e}"))?;
    // Pair j joins pole j with rung 2j-1; rung 2j is the block's middle.
    let deco = SnakeDecomposition {
        pairs: (1..=poles).map(|j| (j - 1, rung(2 * j - 1))).collect(),
        middles: (1..=k).map(|j| Some(rung(2 * j))).collect(),
    };
    let drawing = draw_chain(&graph, &[deco], &[])?;
    Ok(FamilyInstance::new(Family::Bn, &[("k", k as i64)], graph, Some(drawing)))
}
