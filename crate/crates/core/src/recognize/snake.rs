//! Baby snakes: chains of K2,2 and K2,3 blocks in which consecutive blocks
//! share one vertex pair.
//!
//! A snake is stored as its pairs P0..Pk (one vertex per layer) plus an
//! optional middle vertex for each block between consecutive pairs. A block
//! with a middle on one layer has its poles on the other layer; a block
//! without a middle takes its poles on layer 0.

use super::RecognitionResult;
use crate::connectivity::connectivity_level;
use crate::drawing::{BundledDrawing, Variant};
use crate::embed::{GeoBuilder, Node, RawArc};
use crate::graph::Graph;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeDecomposition {
    /// `(layer-0 vertex, layer-1 vertex)` per pair, left to right.
    pub pairs: Vec<(usize, usize)>,
    /// One entry per block, block `i` sitting between pairs `i` and `i+1`.
    pub middles: Vec<Option<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    K22,
    K23,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeBlock {
    pub kind: BlockKind,
    /// Left and right pole.
    pub poles: (usize, usize),
    /// Left rung, the middle if any, right rung.
    pub rungs: Vec<usize>,
    /// Layer holding the poles.
    pub pole_layer: u8,
}

impl SnakeDecomposition {
    pub fn block_count(&self) -> usize {
        self.middles.len()
    }

    /// Layer of the poles of block `i`.
    pub fn pole_layer(&self, g: &Graph, i: usize) -> u8 {
        match self.middles[i] {
            Some(m) => 1 - g.layer(m).unwrap_or(0),
            None => 0,
        }
    }

    fn side(pair: (usize, usize), layer: u8) -> usize {
        if layer == 0 {
            pair.0
        } else {
            pair.1
        }
    }

    pub fn block(&self, g: &Graph, i: usize) -> SnakeBlock {
        let pl = self.pole_layer(g, i);
        let (a, b) = (self.pairs[i], self.pairs[i + 1]);
        let mut rungs = vec![Self::side(a, 1 - pl)];
        rungs.extend(self.middles[i]);
        rungs.push(Self::side(b, 1 - pl));
        SnakeBlock {
            kind: if self.middles[i].is_some() { BlockKind::K23 } else { BlockKind::K22 },
            poles: (Self::side(a, pl), Self::side(b, pl)),
            rungs,
            pole_layer: pl,
        }
    }

    pub fn blocks(&self, g: &Graph) -> Vec<SnakeBlock> {
        (0..self.block_count()).map(|i| self.block(g, i)).collect()
    }

    /// Pairs shared by two consecutive blocks.
    pub fn shared_pairs(&self) -> &[(usize, usize)] {
        if self.pairs.len() <= 2 {
            &[]
        } else {
            &self.pairs[1..self.pairs.len() - 1]
        }
    }

    pub fn reversed(&self) -> SnakeDecomposition {
        let mut pairs = self.pairs.clone();
        pairs.reverse();
        let mut middles = self.middles.clone();
        middles.reverse();
        SnakeDecomposition { pairs, middles }
    }

    /// All edges of the full baby snake, as index pairs.
    pub fn edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &(t, b) in &self.pairs {
            out.push((t, b));
        }
        for i in 0..self.block_count() {
            let (t0, b0) = self.pairs[i];
            let (t1, b1) = self.pairs[i + 1];
            out.push((t0, b1));
            out.push((t1, b0));
            if let Some(m) = self.middles[i] {
                if g.layer(m) == Some(0) {
                    out.push((m, b0));
                    out.push((m, b1));
                } else {
                    out.push((t0, m));
                    out.push((t1, m));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.extend(self.middles.iter().flatten());
        v
    }
}

/// Dense bitset over vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(n: usize) -> Bits {
        let mut w = vec![u64::MAX; n.div_ceil(64)];
        if n % 64 != 0 {
            if let Some(last) = w.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Bits(w)
    }
    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1u64 << (i % 64));
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b))
    }
}

/// Constraints and limits for the decomposition search.
#[derive(Clone, Debug, Default)]
pub struct SnakeQuery {
    /// Every block must be complete and every pair edge present.
    pub exact: bool,
    /// Vertex required in the first pair.
    pub left: Option<usize>,
    /// Vertex required in the last pair.
    pub right: Option<usize>,
    /// Stop after this many decompositions (0 means 1).
    pub limit: usize,
}

struct Search<'a> {
    g: &'a Graph,
    q: &'a SnakeQuery,
    dead: BTreeSet<(usize, usize, Bits)>,
    found: Vec<SnakeDecomposition>,
    pairs: Vec<(usize, usize)>,
    middles: Vec<Option<usize>>,
}

impl Search<'_> {
    fn limit(&self) -> usize {
        self.q.limit.max(1)
    }

    fn nbrs_in(&self, v: usize, r: &Bits) -> Vec<usize> {
        self.g.neighbors(v).iter().copied().filter(|&w| r.has(w)).collect()
    }

    fn layer(&self, v: usize) -> u8 {
        self.g.layer(v).unwrap_or(0)
    }

    /// Extends the snake from pair (t, b) with unplaced set r. Returns
    /// whether a decomposition was found below this state.
    fn extend(&mut self, t: usize, b: usize, r: Bits) -> bool {
        if r.is_empty() {
            let ok = match self.q.right {
                Some(c) => t == c || b == c,
                None => true,
            };
            if ok && !self.middles.is_empty() {
                self.found.push(SnakeDecomposition { pairs: self.pairs.clone(), middles: self.middles.clone() });
                return true;
            }
            return false;
        }
        let key = (t, b, r.clone());
        if self.dead.contains(&key) {
            return false;
        }
        let g = self.g;
        let mut c: Vec<usize> = self.nbrs_in(t, &r);
        c.extend(self.nbrs_in(b, &r));
        c.sort_unstable();
        c.dedup();
        if c.len() > 3 {
            self.dead.insert(key);
            return false;
        }
        let c_top: Vec<usize> = c.iter().copied().filter(|&v| self.layer(v) == 0).collect();
        let c_bot: Vec<usize> = c.iter().copied().filter(|&v| self.layer(v) == 1).collect();
        let all_top: Vec<usize> = r.iter().filter(|&v| self.layer(v) == 0).collect();
        let all_bot: Vec<usize> = r.iter().filter(|&v| self.layer(v) == 1).collect();
        let tops = if c_top.is_empty() { all_top } else { c_top };
        let bots = if c_bot.is_empty() { all_bot } else { c_bot };
        let mut any = false;
        for &t2 in &tops {
            for &b2 in &bots {
                // Whatever C leaves uncovered must be the middle.
                let rest: Vec<usize> = c.iter().copied().filter(|&v| v != t2 && v != b2).collect();
                let middle_options: Vec<Option<usize>> = match rest.len() {
                    0 => {
                        let mut o = vec![None];
                        // A middle outside C touches only the new pair.
                        for m in r.iter() {
                            if m == t2 || m == b2 {
                                continue;
                            }
                            let nb = g.neighbors(m);
                            if !nb.is_empty() && nb.iter().all(|&w| w == t2 || w == b2) {
                                o.push(Some(m));
                            }
                        }
                        o
                    }
                    1 => vec![Some(rest[0])],
                    _ => continue,
                };
                for m in middle_options {
                    if let Some(m) = m {
                        let ok = g.neighbors(m).iter().all(|&w| w == t || w == b || w == t2 || w == b2);
                        if !ok {
                            continue;
                        }
                        if self.q.exact {
                            let (x, y) = if self.layer(m) == 0 { (b, b2) } else { (t, t2) };
                            if !g.has_edge(m, x) || !g.has_edge(m, y) {
                                continue;
                            }
                        }
                    } else if self.q.exact && g.layer(t2) == g.layer(b2) {
                        continue;
                    }
                    if self.q.exact && !(g.has_edge(t, b2) && g.has_edge(t2, b) && g.has_edge(t2, b2)) {
                        continue;
                    }
                    let mut r2 = r.clone();
                    r2.remove(t2);
                    r2.remove(b2);
                    if let Some(m) = m {
                        r2.remove(m);
                    }
                    self.pairs.push((t2, b2));
                    self.middles.push(m);
                    let got = self.extend(t2, b2, r2);
                    self.pairs.pop();
                    self.middles.pop();
                    any |= got;
                    if self.found.len() >= self.limit() {
                        return true;
                    }
                }
            }
        }
        if !any {
            self.dead.insert(key);
        }
        any
    }
}

/// Finds baby-snake decompositions whose snake contains `g` as a spanning
/// subgraph (or equals it, with `exact`). Layers must be present.
pub fn find_snakes(g: &Graph, q: &SnakeQuery) -> Vec<SnakeDecomposition> {
    let n = g.n();
    if g.layers().is_none() || n < 4 {
        return Vec::new();
    }
    let mut s = Search { g, q, dead: BTreeSet::new(), found: Vec::new(), pairs: Vec::new(), middles: Vec::new() };
    let tops: Vec<usize> = (0..n).filter(|&v| g.layer(v) == Some(0)).collect();
    let bots: Vec<usize> = (0..n).filter(|&v| g.layer(v) == Some(1)).collect();
    for &t in &tops {
        for &b in &bots {
            if let Some(c) = q.left {
                if t != c && b != c {
                    continue;
                }
            }
            if q.exact && !g.has_edge(t, b) {
                continue;
            }
            let mut r = Bits::full(n);
            r.remove(t);
            r.remove(b);
            s.pairs = vec![(t, b)];
            s.middles.clear();
            s.extend(t, b, r);
            if s.found.len() >= s.limit() {
                return s.found;
            }
        }
    }
    s.found
}

/// Recognizes biconnected 1-sided 2-layer graphs: exactly the spanning
/// subgraphs of baby snakes.
pub fn recognize_twolayer_biconnected(g: &Graph) -> RecognitionResult {
    if g.layers().is_none() {
        return RecognitionResult::reject("precondition: graph has no layers");
    }
    if connectivity_level(g) < 2 {
        return RecognitionResult::reject("precondition: graph is not biconnected");
    }
    let found = find_snakes(g, &SnakeQuery { limit: 1, ..SnakeQuery::default() });
    let Some(d) = found.into_iter().next() else {
        return RecognitionResult::reject("not a spanning subgraph of a baby snake");
    };
    match draw_chain(g, &[d], &[]) {
        Ok(w) => RecognitionResult::accept(w),
        Err(e) => RecognitionResult::reject(alloc::format!("witness construction failed: {e}")),
    }
}

/// Where a leg is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegSpot {
    /// Inside block `block` of snake `snake`, bundled with the left or
    /// right pole's bundle.
    Gap { snake: usize, block: usize, left_pole: bool },
    /// On the other layer at the cutvertex joining snakes `j` and `j+1`.
    Between { junction: usize },
    /// Beyond the first or last pair, drawn plain.
    Far { right: bool },
}

fn layer_y(layer: u8) -> f64 {
    if layer == 0 {
        1.0
    } else {
        0.0
    }
}

/// Draws a chain of snakes joined at cutvertices, with legs, on two lines:
/// layer 0 on top, layer 1 below. Every block uses two crossing bundles
/// anchored at its poles. Edges missing from `g` are dropped.
pub fn draw_chain(g: &Graph, snakes: &[SnakeDecomposition], legs: &[(usize, usize, LegSpot)]) -> Result<BundledDrawing, String> {
    let mut geo = GeoBuilder::new();
    let layer = |v: usize| g.layer(v).unwrap_or(0);
    let mut base = 0.0;
    let mut bases = Vec::new();
    let mut junction_pos = Vec::new();
    let mut placed = vec![false; g.n()];
    // Cutvertices first, so the pair loop leaves them alone.
    for (j, s) in snakes.iter().enumerate() {
        bases.push(base);
        let end = base + 4.0 * s.block_count() as f64;
        if let Some(next) = snakes.get(j + 1) {
            let (a, b) = s.pairs[s.pairs.len() - 1];
            let (c, d) = next.pairs[0];
            let cut = if a == c || a == d { a } else if b == c || b == d { b } else {
                return Err(String::from("consecutive snakes do not share a vertex"));
            };
            geo.place(Node::V(cut), end + 1.0, layer_y(layer(cut)));
            placed[cut] = true;
            junction_pos.push((cut, end + 1.0));
        }
        base = end + 2.0;
    }
    let last_x = base - 2.0;
    for (j, s) in snakes.iter().enumerate() {
        for (i, &(t, b)) in s.pairs.iter().enumerate() {
            let x = bases[j] + 4.0 * i as f64;
            for v in [t, b] {
                if !placed[v] {
                    geo.place(Node::V(v), x, layer_y(layer(v)));
                    placed[v] = true;
                }
            }
            geo.mid(Node::V(t), Node::V(b), t, b);
        }
    }
    for (j, s) in snakes.iter().enumerate() {
        for i in 0..s.block_count() {
            let blk = s.block(g, i);
            let xc = bases[j] + 4.0 * i as f64 + 2.0;
            let f = |y: f64| if blk.pole_layer == 0 { y } else { 1.0 - y };
            let (pl, pr) = blk.poles;
            let rl = blk.rungs[0];
            let rr = *blk.rungs.last().unwrap_or(&rl);
            let bl = geo.add_bundle(alloc::format!("{}.{}.{}", g.name(pl), j, i), pl);
            let br = geo.add_bundle(alloc::format!("{}.{}.{}", g.name(pr), j, i), pr);
            let c = geo.add_crossing(bl, br);
            geo.place(Node::T(bl), xc + 0.8, f(0.4));
            geo.place(Node::T(br), xc - 0.8, f(0.4));
            geo.place(Node::X(c), xc, f(0.5714));
            geo.arc(Node::V(pl), Node::X(c), RawArc::Trunk(bl, 0));
            geo.arc(Node::X(c), Node::T(bl), RawArc::Trunk(bl, 1));
            geo.arc(Node::V(pr), Node::X(c), RawArc::Trunk(br, 0));
            geo.arc(Node::X(c), Node::T(br), RawArc::Trunk(br, 1));
            geo.mid(Node::T(bl), Node::V(rr), pl, rr);
            geo.mid(Node::T(br), Node::V(rl), pr, rl);
            if let Some(m) = s.middles[i] {
                geo.place(Node::V(m), xc, f(0.0));
                geo.mid(Node::T(bl), Node::V(m), pl, m);
                geo.mid(Node::T(br), Node::V(m), pr, m);
            }
            for left in [true, false] {
                let mine: Vec<usize> = legs
                    .iter()
                    .filter(|l| l.2 == LegSpot::Gap { snake: j, block: i, left_pole: left })
                    .map(|l| l.0)
                    .collect();
                let (anchor, term, lo) = if left { (pl, bl, xc + 0.4) } else { (pr, br, xc - 1.6) };
                for (t, &leg) in mine.iter().enumerate() {
                    let x = lo + 1.2 * (t + 1) as f64 / (mine.len() + 1) as f64;
                    geo.place(Node::V(leg), x, f(0.0));
                    geo.mid(Node::T(term), Node::V(leg), anchor, leg);
                }
            }
        }
    }
    for (jn, &(cut, x)) in junction_pos.iter().enumerate() {
        let mine: Vec<usize> = legs.iter().filter(|l| l.2 == LegSpot::Between { junction: jn }).map(|l| l.0).collect();
        for (t, &leg) in mine.iter().enumerate() {
            let lx = x - 0.5 + (t + 1) as f64 / (mine.len() + 1) as f64;
            geo.place(Node::V(leg), lx, layer_y(1 - layer(cut)));
            geo.mid(Node::V(cut), Node::V(leg), cut, leg);
        }
    }
    for right in [false, true] {
        let mine: Vec<(usize, usize)> = legs.iter().filter(|l| l.2 == LegSpot::Far { right }).map(|l| (l.0, l.1)).collect();
        for (t, &(leg, anchor)) in mine.iter().enumerate() {
            let off = 1.0 + 0.5 * t as f64;
            let x = if right { last_x + off } else { -off };
            geo.place(Node::V(leg), x, layer_y(1 - layer(anchor)));
            geo.mid(Node::V(anchor), Node::V(leg), anchor, leg);
        }
    }
    geo.build(g.clone(), Variant::TwoLayer, 1)?.finish()
}
