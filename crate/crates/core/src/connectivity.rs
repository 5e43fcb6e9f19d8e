//! Connectivity queries: components, cutvertices, blocks, and the capped
//! vertex connectivity used as a precondition check.

use crate::graph::Graph;
use alloc::vec;
use alloc::vec::Vec;

/// Whether the vertices not in `removed` induce a connected graph.
/// An empty remainder counts as connected.
pub fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let n = g.n();
    let mut gone = vec![false; n];
    for &r in removed {
        gone[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !gone[v]) else {
        return true;
    };
    let mut seen = gone;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count + removed.len() == n
}

pub fn is_connected(g: &Graph) -> bool {
    connected_without(g, &[])
}

/// min(3, vertex connectivity), with 0 for disconnected or single-vertex graphs.
/// Complete graphs K_n get n-1. Pair removal makes this quadratic in n times
/// the graph size, which is fine at the scales it is used.
pub fn connectivity_level(g: &Graph) -> u8 {
    let n = g.n();
    if n <= 1 || !is_connected(g) {
        return 0;
    }
    if n == 2 || !cutvertices(g).is_empty() {
        return 1;
    }
    if n == 3 {
        return 2;
    }
    for a in 0..n {
        for b in a + 1..n {
            if !connected_without(g, &[a, b]) {
                return 2;
            }
        }
    }
    3
}

/// Biconnected components as edge-id lists, via an iterative Hopcroft-Tarjan
/// walk. Isolated vertices produce no block.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut estack: Vec<usize> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, edge used to enter it, next neighbour slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, via, slot) = stack[top];
            if slot < g.degree(v) {
                let w = g.neighbors(v)[slot];
                let e = g.incident_edges(v)[slot];
                stack[top].2 += 1;
                if e == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    estack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    estack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = estack.pop() {
                            block.push(e);
                            if e == via {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Vertices whose removal increases the number of components.
pub fn cutvertices(g: &Graph) -> Vec<usize> {
    let mut count = vec![0usize; g.n()];
    for b in blocks(g) {
        let mut vs: Vec<usize> = b.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
        vs.sort_unstable();
        vs.dedup();
        for v in vs {
            count[v] += 1;
        }
    }
    (0..g.n()).filter(|&v| count[v] > 1).collect()
}

/// Vertex sets of the blocks, each sorted.
pub fn block_vertex_sets(g: &Graph) -> Vec<Vec<usize>> {
    blocks(g)
        .into_iter()
        .map(|b| {
            let mut vs: Vec<usize> = b.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect()
}

/// Two-colouring if the graph is bipartite (per component, smallest index gets 0).
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut col = vec![u8::MAX; n];
    for s in 0..n {
        if col[s] != u8::MAX {
            continue;
        }
        col[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if col[w] == u8::MAX {
                    col[w] = 1 - col[v];
                    stack.push(w);
                } else if col[w] == col[v] {
                    return None;
                }
            }
        }
    }
    Some(col)
}
