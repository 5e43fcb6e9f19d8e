use super::{Family, FamilyInstance};
use crate::graph::Graph;
use alloc::vec::Vec;

/// Dodecahedron with the five diagonals of every pentagonal face added.
pub fn gen_d12() -> FamilyInstance {
    // Outer 5-cycle 0..5, middle 10-cycle 5..15, inner 5-cycle 15..20.
    let mut dod = Vec::new();
    for i in 0..5 {
        dod.push((i, (i + 1) % 5));
        dod.push((i, 5 + 2 * i));
        dod.push((15 + i, 15 + (i + 1) % 5));
        dod.push((15 + i, 6 + 2 * i));
    }
    for i in 0..10 {
        dod.push((5 + i, 5 + (i + 1) % 10));
    }
    let mut adj = [[false; 20]; 20];
    for &(u, v) in &dod {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let nb = |u: usize| (0..20).filter(move |&w| adj[u][w]);
    // Faces are exactly the chordless 5-cycles; each is taken once from its
    // smallest vertex in one direction.
    let mut faces: Vec<[usize; 5]> = Vec::new();
    for a in 0..20 {
        for b in nb(a).filter(|&b| b > a) {
            for c in nb(b).filter(|&c| c > a && c != a) {
                for d in nb(c).filter(|&d| d > a && d != b) {
                    for e in nb(d).filter(|&e| e > b && e != c && adj[e][a]) {
                        let f = [a, b, c, d, e];
                        if (0..5).all(|i| !adj[f[i]][f[(i + 2) % 5]]) {
                            faces.push(f);
                        }
                    }
                }
            }
        }
    }
    assert_eq!(faces.len(), 12, "dodecahedron has twelve pentagons");
    let mut edges = dod.clone();
    for f in &faces {
        for i in 0..5 {
            edges.push((f[i], f[(i + 2) % 5]));
        }
    }
    let graph = Graph::numbered(20, edges, None).expect("pentagram chords are distinct");
    FamilyInstance::new(Family::D12, &[], graph, None)
}
