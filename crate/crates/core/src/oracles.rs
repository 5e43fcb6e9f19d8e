//! Brute-force reference checks. Nothing here calls the recognizers or the
//! connectivity module; agreement tests compare the two sides.

use crate::graph::Graph;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

fn pair_bit(n: usize, u: usize, v: usize) -> u64 {
    let (a, b) = (u.min(v), u.max(v));
    // Row-major index over pairs a < b.
    let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
    1u64 << idx
}

/// Edge set of `g` as a bitmask over vertex pairs.
pub fn edge_mask(g: &Graph) -> u64 {
    g.edges().iter().fold(0, |m, &(u, v)| m | pair_bit(g.n(), u, v))
}

fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = alloc::vec![0u32; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn connected_within(adj: &[u32], alive: u32) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == alive
}

/// At least four vertices and connected after deleting any two.
pub fn is_triconnected_bruteforce(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || n > 32 {
        return false;
    }
    let adj = adjacency(g);
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for a in 0..n {
        for b in a..n {
            if !connected_within(&adj, all & !(1 << a) & !(1 << b)) {
                return false;
            }
        }
    }
    true
}

/// Every edge mask on `n` vertices produced by a labeling v1..vn, a split
/// index k and the optional edges of the characterization.
pub struct Outer3Oracle {
    n: usize,
    masks: BTreeSet<u64>,
}

impl Outer3Oracle {
    pub fn new(n: usize) -> Result<Self, String> {
        if !(5..=8).contains(&n) {
            return Err(format!("outer3 oracle supports 5 <= n <= 8, got {n}"));
        }
        let mut masks = BTreeSet::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            // v(i) is the vertex labelled i (1-based).
            let v = |i: usize| perm[i - 1];
            let e = |a: usize, b: usize| pair_bit(n, v(a), v(b));
            let mut base = 0u64;
            for i in 1..n {
                base |= e(i, i + 1);
            }
            base |= e(1, n - 1) | e(n, 2);
            for k in 2..=n {
                let mut m = base;
                for i in 3..k {
                    m |= e(n, i);
                }
                for j in k..=n - 2 {
                    m |= e(1, j);
                }
                if k == 2 || k == n - 1 {
                    m |= e(1, n);
                }
                let nk = if k < n { e(n, k) } else { 0 };
                for extra in [0, nk, e(1, n), nk | e(1, n)] {
                    masks.insert(m | extra);
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(Outer3Oracle { n, masks })
    }

    pub fn check(&self, g: &Graph) -> bool {
        g.n() == self.n && is_triconnected_bruteforce(g) && self.masks.contains(&edge_mask(g))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Whether `g` is a triconnected graph matching the outer characterization
/// under some labeling.
pub fn outer3_oracle(g: &Graph) -> Result<bool, String> {
    Ok(Outer3Oracle::new(g.n())?.check(g))
}

/// Whether `g` is a spanning subgraph of some baby snake on its layers.
pub fn babysnake_oracle(g: &Graph) -> Result<bool, String> {
    let n = g.n();
    if n > 8 {
        return Err(format!("baby-snake oracle supports n <= 8, got {n}"));
    }
    let layers = g.layers().ok_or_else(|| String::from("baby-snake oracle needs layers"))?;
    let target = edge_mask(g);
    let tops: Vec<usize> = (0..n).filter(|&v| layers[v] == 0).collect();
    let bots: Vec<usize> = (0..n).filter(|&v| layers[v] == 1).collect();
    fn grow(n: usize, layers: &[u8], used: u32, last: (usize, usize), mask: u64, blocks: usize, target: u64) -> bool {
        let full = (1u32 << n) - 1;
        if used == full {
            return blocks > 0 && target & !mask == 0;
        }
        let free = |v: usize| used & (1 << v) == 0;
        let (t, b) = last;
        for t2 in (0..n).filter(|&x| free(x) && layers[x] == 0) {
            for b2 in (0..n).filter(|&x| free(x) && layers[x] == 1) {
                let core = mask | pair_bit(n, t2, b2) | pair_bit(n, t, b2) | pair_bit(n, t2, b);
                let used2 = used | (1 << t2) | (1 << b2);
                if grow(n, layers, used2, (t2, b2), core, blocks + 1, target) {
                    return true;
                }
                for m in (0..n).filter(|&x| free(x) && x != t2 && x != b2) {
                    let with = if layers[m] == 0 {
                        core | pair_bit(n, m, b) | pair_bit(n, m, b2)
                    } else {
                        core | pair_bit(n, t, m) | pair_bit(n, t2, m)
                    };
                    if grow(n, layers, used2 | (1 << m), (t2, b2), with, blocks + 1, target) {
                        return true;
                    }
                }
            }
        }
        false
    }
    for &t in &tops {
        for &b in &bots {
            if grow(n, layers, (1 << t) | (1 << b), (t, b), pair_bit(n, t, b), 0, target) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All `2^(n(n-1)/2)` labeled graphs on vertices `1..=n`, in mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, String> {
    if n > 7 {
        return Err(format!("labeled enumeration supports n <= 7, got {n}"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::numbered(n, edges, None).expect("distinct pairs")
    }))
}
