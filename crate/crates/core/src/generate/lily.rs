//! 2-sided families: water lilies on a circle and the layered lily on two
//! lines. Every edge runs between two bundle terminals.

use super::{Family, FamilyInstance};
use crate::drawing::Variant;
use crate::embed::{RawArc, RawDrawing};
use crate::graph::Graph;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Terminal positions `0..2n` around the circle: position `2i` is the left
/// bundle of `v(i+1)`, position `2i+1` the right bundle of `v(i)`.
fn vert(p: usize, n: usize) -> usize {
    (p / 2 + usize::from(p % 2 == 0)) % n
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Accepts or refuses a finished chord set; refusing resumes the search.
type Done<'d> = &'d mut dyn FnMut(&[(usize, usize)], &BTreeSet<(usize, usize)>) -> bool;

struct Zigzag<'a, 'd> {
    n: usize,
    sets: &'a [Vec<usize>],
    used: BTreeSet<(usize, usize)>,
    chords: Vec<(usize, usize)>,
    budget: usize,
    done: Done<'d>,
}

impl Zigzag<'_, '_> {
    fn ok(&self, p: usize, q: usize) -> bool {
        let n = self.n;
        let d = (vert(p, n) + n - vert(q, n)) % n;
        ![0, 1, 2, n - 1, n - 2].contains(&d) && !self.used.contains(&key(vert(p, n), vert(q, n)))
    }

    fn take(&mut self, p: usize, q: usize) {
        self.used.insert(key(vert(p, self.n), vert(q, self.n)));
        self.chords.push((p, q));
    }

    fn undo(&mut self) {
        let (p, q) = self.chords.pop().expect("chord to undo");
        self.used.remove(&key(vert(p, self.n), vert(q, self.n)));
    }

    /// Fills set `j` from the chord between local indices `l` and `r`,
    /// leaving exactly `quads` quadrilateral faces, then moves on to the
    /// next set.
    fn fill(&mut self, j: usize, l: usize, r: usize, quads: usize, step: usize) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        let done = (r - l == 2 && quads == 0) || (r - l == 3 && quads == 1);
        if done {
            return self.next_set(j + 1);
        }
        if r - l <= 2 {
            return false;
        }
        let s = &self.sets[j];
        let right_first = step % 4 == 0 || step % 4 == 3;
        let mut moves: Vec<(usize, usize, usize)> = if right_first {
            vec![(l, r - 1, 0), (l + 1, r, 0)]
        } else {
            vec![(l + 1, r, 0), (l, r - 1, 0)]
        };
        if quads > 0 && r - l >= 5 {
            moves.extend([(l, r - 2, 1), (l + 2, r, 1), (l + 1, r - 1, 1)]);
        }
        for (a, b, q) in moves {
            let (pa, pb) = (s[a], s[b]);
            if !self.ok(pa, pb) {
                continue;
            }
            self.take(pa, pb);
            if self.fill(j, a, b, quads - q, step + 1) {
                return true;
            }
            self.undo();
        }
        false
    }

    fn next_set(&mut self, j: usize) -> bool {
        if j == self.sets.len() {
            return (self.done)(&self.chords, &self.used);
        }
        let len = self.sets[j].len();
        self.fill(j, 0, len - 1, 2, 0)
    }
}

/// Chords of a lily terminal graph: a central triangle on the three shared
/// terminals plus a zigzag in each of the three sets with two quads each.
fn lily_chords(n: usize, used: &BTreeSet<(usize, usize)>, starts: &[usize], budget: usize, done: Done<'_>) -> Option<Vec<(usize, usize)>> {
    let total = 2 * n + 3;
    // Odd sizes of at least seven summing to 2n + 3, as even as possible.
    let base = {
        let b = total / 3;
        if b % 2 == 0 {
            b - 1
        } else {
            b
        }
    };
    let mut size_options = Vec::new();
    for extra_a in (0..=total - 3 * base).step_by(2) {
        for extra_b in (0..=total - 3 * base - extra_a).step_by(2) {
            let c = total - 2 * base - extra_a - extra_b;
            if c % 2 == 1 && c >= 7 {
                size_options.push([base + extra_a, base + extra_b, c]);
            }
        }
    }
    if base < 7 {
        return None;
    }
    for &start in starts {
        for sizes in &size_options {
            let mut sets = Vec::new();
            let mut at = start;
            for &sz in sizes {
                sets.push((0..sz).map(|i| (at + i) % (2 * n)).collect::<Vec<_>>());
                at = (at + sz - 1) % (2 * n);
            }
            let mut z = Zigzag { n, sets: &sets, used: used.clone(), chords: Vec::new(), budget, done: &mut *done };
            let shared = [sets[0][0], sets[1][0], sets[2][0]];
            let tri = [(shared[0], shared[1]), (shared[1], shared[2]), (shared[2], shared[0])];
            if tri.iter().all(|&(p, q)| z.ok(p, q)) && key(vert(shared[0], n), vert(shared[1], n)) != key(vert(shared[1], n), vert(shared[2], n)) {
                let mut fine = true;
                for &(p, q) in &tri {
                    if !z.ok(p, q) {
                        fine = false;
                        break;
                    }
                    z.take(p, q);
                }
                if fine && z.next_set(0) {
                    return Some(z.chords);
                }
            }
        }
    }
    None
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let (x, y) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |p: usize| x < p && p < y;
    let shared = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    !shared && inside(b.0) != inside(b.1)
}

/// Any `need` pairwise non-crossing chords on unused, distinct vertex
/// pairs. Used when the set pattern leaves too few pairs, at small n.
fn free_chords(n: usize, used: &BTreeSet<(usize, usize)>, need: usize, budget: &mut usize) -> Option<Vec<(usize, usize)>> {
    let mut options: Vec<Vec<(usize, usize)>> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut o = Vec::new();
            for p in 0..2 * n {
                for q in p + 1..2 * n {
                    if key(vert(p, n), vert(q, n)) == (u, v) {
                        o.push((p, q));
                    }
                }
            }
            options.push(o);
        }
    }
    fn go(i: usize, options: &[Vec<(usize, usize)>], need: usize, chosen: &mut Vec<(usize, usize)>, budget: &mut usize) -> bool {
        if chosen.len() == need {
            return true;
        }
        if *budget == 0 || options.len() - i < need - chosen.len() {
            return false;
        }
        *budget -= 1;
        for &c in &options[i] {
            if chosen.iter().all(|&d| !crosses(c, d)) {
                chosen.push(c);
                if go(i + 1, options, need, chosen, budget) {
                    return true;
                }
                chosen.pop();
            }
        }
        go(i + 1, options, need, chosen, budget)
    }
    let mut chosen = Vec::new();
    go(0, &options, need, &mut chosen, budget).then_some(chosen)
}

/// Splits non-boundary pairs between an inner and an outer non-crossing
/// chord set of `2n - 9` chords each, ignoring the set pattern entirely.
fn free_double(n: usize) -> Option<(Vec<(usize, usize)>, Vec<(usize, usize)>)> {
    let boundary: BTreeSet<_> = boundary_edges(n).into_iter().collect();
    let mut options: Vec<Vec<(usize, usize)>> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if boundary.contains(&(u, v)) {
                continue;
            }
            let o = (0..2 * n)
                .flat_map(|p| (p + 1..2 * n).map(move |q| (p, q)))
                .filter(|&(p, q)| key(vert(p, n), vert(q, n)) == (u, v))
                .collect();
            options.push(o);
        }
    }
    let need = 2 * n - 9;
    struct St<'a> {
        options: &'a [Vec<(usize, usize)>],
        need: usize,
        sides: [Vec<(usize, usize)>; 2],
        budget: usize,
    }
    fn go(st: &mut St, i: usize) -> bool {
        if st.sides[0].len() == st.need && st.sides[1].len() == st.need {
            return true;
        }
        let missing = 2 * st.need - st.sides[0].len() - st.sides[1].len();
        if st.budget == 0 || st.options.len() - i < missing {
            return false;
        }
        st.budget -= 1;
        for s in 0..2 {
            if st.sides[s].len() == st.need {
                continue;
            }
            for k in 0..st.options[i].len() {
                let c = st.options[i][k];
                if st.sides[s].iter().all(|&d| !crosses(c, d)) {
                    st.sides[s].push(c);
                    if go(st, i + 1) {
                        return true;
                    }
                    st.sides[s].pop();
                }
            }
        }
        go(st, i + 1)
    }
    let mut st = St { options: &options, need, sides: [Vec::new(), Vec::new()], budget: 50_000_000 };
    if go(&mut st, 0) {
        let [a, b] = st.sides;
        Some((a, b))
    } else {
        None
    }
}

fn boundary_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..n {
        e.push(key(i, (i + 1) % n));
        e.push(key(i, (i + 2) % n));
    }
    e
}

/// Bundles 0..2n are the inner terminals; `outer` adds 2n more at offset 2n.
fn lily_drawing(n: usize, graph: &Graph, inner: &[(usize, usize)], outer: Option<&[(usize, usize)]>, variant: Variant) -> Result<RawDrawing, String> {
    let mut raw = RawDrawing::new(graph.clone(), variant, 2);
    let copies = if outer.is_some() { 2 } else { 1 };
    for c in 0..copies {
        for p in 0..2 * n {
            let v = vert(p, n);
            let side = if p % 2 == 0 { "l" } else { "r" };
            let prime = if c == 1 { "o" } else { "" };
            raw.add_bundle(format!("{}.{}{}", graph.name(v), side, prime), v);
        }
    }
    for c in 0..copies {
        for i in 0..n {
            raw.crossings.push((c * 2 * n + 2 * i + 1, c * 2 * n + 2 * i));
        }
    }
    raw.ensure_nodes();
    let r_of = |i: usize| 2 * i + 1;
    let l_of = |i: usize| 2 * ((i + n - 1) % n);
    for i in 0..n {
        raw.rotation[i] = if outer.is_some() {
            vec![
                RawArc::Trunk(2 * n + r_of(i), 0),
                RawArc::Trunk(r_of(i), 0),
                RawArc::Trunk(l_of(i), 0),
                RawArc::Trunk(2 * n + l_of(i), 0),
            ]
        } else {
            vec![RawArc::Trunk(r_of(i), 0), RawArc::Trunk(l_of(i), 0)]
        };
        let (r, l) = (r_of(i), l_of(i + 1));
        let x = raw.dummy(i);
        raw.rotation[x] = vec![RawArc::Trunk(r, 0), RawArc::Trunk(l, 0), RawArc::Trunk(r, 1), RawArc::Trunk(l, 1)];
        if outer.is_some() {
            let (r2, l2) = (2 * n + r, 2 * n + l);
            let x2 = raw.dummy(n + i);
            raw.rotation[x2] = vec![RawArc::Trunk(l2, 1), RawArc::Trunk(r2, 1), RawArc::Trunk(l2, 0), RawArc::Trunk(r2, 0)];
        }
    }
    let m = 2 * n;
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); m];
    for p in 0..m {
        nbrs[p].push((p + 1) % m);
        nbrs[p].push((p + m - 1) % m);
    }
    for &(p, q) in inner {
        nbrs[p].push(q);
        nbrs[q].push(p);
    }
    for p in 0..m {
        let mut l = nbrs[p].clone();
        l.sort_by_key(|&q| (q + m - p) % m);
        let t = raw.terminal(p);
        raw.rotation[t] = core::iter::once(RawArc::Trunk(p, 1))
            .chain(l.iter().map(|&q| mid_arc(vert(p, n), vert(q, n))))
            .collect();
    }
    if let Some(outer) = outer {
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &(p, q) in outer {
            nbrs[p].push(q);
            nbrs[q].push(p);
        }
        for p in 0..m {
            let mut l = nbrs[p].clone();
            l.sort_by_key(|&q| (p + m - q) % m);
            let t = raw.terminal(m + p);
            raw.rotation[t] = core::iter::once(RawArc::Trunk(m + p, 1))
                .chain(l.iter().map(|&q| mid_arc(vert(p, n), vert(q, n))))
                .collect();
        }
    }
    Ok(raw)
}

fn mid_arc(u: usize, v: usize) -> RawArc {
    let (a, b) = key(u, v);
    RawArc::Mid(a, b)
}

fn chord_edges(n: usize, chords: &[(usize, usize)]) -> Vec<(usize, usize)> {
    chords.iter().map(|&(p, q)| key(vert(p, n), vert(q, n))).collect()
}

fn inner_starts(n: usize) -> Vec<usize> {
    (0..n).map(|i| (2 * i + 1) % (2 * n)).collect()
}

fn inner_lily(n: usize) -> Result<Vec<(usize, usize)>, String> {
    let used: BTreeSet<_> = boundary_edges(n).into_iter().collect();
    lily_chords(n, &used, &inner_starts(n), 200_000, &mut |_, _| true).ok_or_else(|| format!("no water-lily zigzag found for n = {n}"))
}

/// 2-sided outer family on `n >= 9` vertices with `4n - 9` edges.
pub fn gen_waterlily(n: usize) -> Result<FamilyInstance, String> {
    if n < 9 {
        return Err(String::from("water lily needs n >= 9"));
    }
    let chords = inner_lily(n)?;
    let mut edges = boundary_edges(n);
    edges.extend(chord_edges(n, &chords));
    let graph = Graph::numbered(n, edges, None).map_err(|e| format!("{e}"))?;
    let drawing = lily_drawing(n, &graph, &chords, None, Variant::Outer)?.finish()?;
    Ok(FamilyInstance::new(Family::Waterlily, &[("n", n as i64)], graph, Some(drawing)))
}

/// 2-sided general family on `n >= 9` vertices with `6n - 18` edges: a water
/// lily inside the circle and a second terminal graph outside it.
pub fn gen_double_waterlily(n: usize) -> Result<FamilyInstance, String> {
    if n < 9 {
        return Err(String::from("double water lily needs n >= 9"));
    }
    // The outer chords depend on which inner zigzag was chosen, so the
    // inner search resumes whenever the outer one fails.
    let boundary: BTreeSet<_> = boundary_edges(n).into_iter().collect();
    let all_starts: Vec<usize> = (0..2 * n).collect();
    let mut outer = None;
    let mut spare = 2_000_000;
    let chords = lily_chords(n, &boundary, &inner_starts(n), 2_000_000, &mut |_, used| {
        outer = lily_chords(n, used, &all_starts, 20_000, &mut |_, _| true)
            .or_else(|| free_chords(n, used, 2 * n - 9, &mut spare));
        outer.is_some()
    })
    .zip(outer)
    .or_else(|| free_double(n))
    .ok_or_else(|| format!("no double water lily found for n = {n}"))?;
    let (chords, outer) = chords;
    let mut edges = boundary_edges(n);
    edges.extend(chord_edges(n, &chords));
    edges.extend(chord_edges(n, &outer));
    let graph = Graph::numbered(n, edges, None).map_err(|e| format!("{e}"))?;
    let drawing = lily_drawing(n, &graph, &chords, Some(&outer), Variant::General)?.finish()?;
    Ok(FamilyInstance::new(Family::DoubleWaterlily, &[("n", n as i64)], graph, Some(drawing)))
}

/// Terminal sequence along one line: owners 1, 2,1, 3,2, ..., p,p-1, p.
fn line_sequence(p: usize) -> Vec<usize> {
    let mut s = vec![1];
    for m in 1..p {
        s.push(m + 1);
        s.push(m);
    }
    s.push(p);
    s
}

/// 2-sided 2-layer family on even `n >= 10` with `2n - 4` edges.
pub fn gen_layered_lily(n: usize) -> Result<FamilyInstance, String> {
    if n < 10 || n % 2 == 1 {
        return Err(String::from("layered lily needs an even n >= 10"));
    }
    let p = n / 2;
    let seq = line_sequence(p);
    let len = seq.len();
    // Staircase over (top terminal, bottom terminal) index pairs.
    let mut pts: Vec<(usize, usize)> = vec![(0, 0)];
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    pairs.insert((seq[0], seq[0]));
    'outer: for m in 0usize.. {
        for pt in [(2 * m + 1, (2 * m).saturating_sub(1)), (2 * m + 1, 2 * m), (2 * m + 1, 2 * m + 1), (2 * m + 2, 2 * m + 1)] {
            if pts.contains(&pt) {
                continue;
            }
            if pt.0 >= len || pt.1 >= len || !pairs.insert((seq[pt.0], seq[pt.1])) {
                break 'outer;
            }
            pts.push(pt);
        }
    }
    // Tops t1..tp are vertices 0..p, bottoms b1..bp are p..2p.
    let top = |x: usize| seq[x] - 1;
    let bot = |y: usize| p + seq[y] - 1;
    let edges: Vec<(usize, usize)> = pts.iter().map(|&(x, y)| (top(x), bot(y))).collect();
    let layers = (0..n).map(|v| u8::from(v >= p)).collect();
    let graph = Graph::numbered(n, edges, Some(layers)).map_err(|e| format!("{e}"))?;
    let mut raw = RawDrawing::new(graph.clone(), Variant::TwoLayer, 2);
    for owner in [&top as &dyn Fn(usize) -> usize, &bot] {
        for x in 0..len {
            let side = if x == 0 || x % 2 == 1 { "l" } else { "r" };
            let v = owner(x);
            raw.add_bundle(format!("{}.{}", graph.name(v), side), v);
        }
    }
    // Right bundle of owner m (index 2m) crosses the left bundle of m+1 (2m-1).
    for off in [0, len] {
        for m in 1..p {
            raw.crossings.push((off + 2 * m, off + 2 * m - 1));
        }
    }
    raw.ensure_nodes();
    let left = |x: usize| x == 0 || x % 2 == 1;
    for (off, owner) in [(0usize, &top as &dyn Fn(usize) -> usize), (len, &bot)] {
        let mut at_vertex: Vec<Vec<(bool, usize)>> = vec![Vec::new(); n];
        for x in 0..len {
            at_vertex[owner(x)].push((left(x), off + x));
        }
        for (v, list) in at_vertex.iter().enumerate() {
            if list.is_empty() {
                continue;
            }
            let mut l = list.clone();
            // Tops list left then right; bottoms right then left.
            l.sort_by_key(|&(is_left, _)| if off == 0 { !is_left } else { is_left });
            raw.rotation[v] = l.iter().map(|&(_, b)| RawArc::Trunk(b, 0)).collect();
        }
    }
    for m in 1..p {
        let (r, l) = (2 * m, 2 * m - 1);
        let x = raw.dummy(m - 1);
        raw.rotation[x] = vec![RawArc::Trunk(r, 0), RawArc::Trunk(l, 0), RawArc::Trunk(r, 1), RawArc::Trunk(l, 1)];
        let (r, l) = (len + 2 * m, len + 2 * m - 1);
        let x = raw.dummy(p - 1 + m - 1);
        raw.rotation[x] = vec![RawArc::Trunk(l, 1), RawArc::Trunk(r, 1), RawArc::Trunk(l, 0), RawArc::Trunk(r, 0)];
    }
    for x in 0..len {
        let mut l: Vec<usize> = pts.iter().filter(|pt| pt.0 == x).map(|pt| pt.1).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        let t = raw.terminal(x);
        raw.rotation[t] = core::iter::once(RawArc::Trunk(x, 1)).chain(l.iter().map(|&y| mid_arc(top(x), bot(y)))).collect();
    }
    for y in 0..len {
        let mut l: Vec<usize> = pts.iter().filter(|pt| pt.1 == y).map(|pt| pt.0).collect();
        l.sort_unstable();
        let t = raw.terminal(len + y);
        raw.rotation[t] = core::iter::once(RawArc::Trunk(len + y, 1)).chain(l.iter().map(|&x| mid_arc(top(x), bot(y)))).collect();
    }
    let drawing = raw.finish()?;
    Ok(FamilyInstance::new(Family::LayeredLily, &[("n", n as i64)], graph, Some(drawing)))
}
