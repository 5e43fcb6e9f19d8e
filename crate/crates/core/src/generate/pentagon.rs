//! Plane graphs with all faces of length five, each face filled with four
//! diagonals drawn as two crossing bundles.

use super::{plane_faces, Family, FamilyInstance};
use crate::drawing::Variant;
use crate::embed::{RawArc, RawDrawing};
use crate::graph::Graph;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

fn mid(u: usize, v: usize) -> RawArc {
    RawArc::Mid(u.min(v), u.max(v))
}

fn insert_after(list: &mut Vec<usize>, after: usize, new: usize) {
    let at = list.iter().position(|&w| w == after).expect("corner arc present");
    list.insert(at + 1, new);
}

/// Splits face walk `x` into three pentagons with new vertices a, b, c:
/// paths x1-a-b-x3 and a-c-x4.
fn split(rot: &mut Vec<Vec<usize>>, x: &[usize]) {
    let a = rot.len();
    let (b, c) = (a + 1, a + 2);
    insert_after(&mut rot[x[0]], x[4], a);
    insert_after(&mut rot[x[2]], x[1], b);
    insert_after(&mut rot[x[3]], x[2], c);
    rot.push(vec![x[0], c, b]);
    rot.push(vec![a, x[2]]);
    rot.push(vec![a, x[3]]);
}

fn cycle5() -> Vec<Vec<usize>> {
    (0..5).map(|i| vec![(i + 1) % 5, (i + 4) % 5]).collect()
}

/// Plane base with `5 + 3k` vertices whose faces all have length five. Each
/// step splits a face at the rotation whose corners x1, x3, x4 have the
/// smallest total degree, which keeps later diagonal choices independent.
pub fn pentagon_base(k: usize) -> Vec<Vec<usize>> {
    let mut rot = cycle5();
    for _ in 0..k {
        let faces = plane_faces(&rot);
        let mut best: Option<(usize, Vec<usize>)> = None;
        for f in &faces {
            for s in 0..5 {
                let x: Vec<usize> = (0..5).map(|i| f[(s + i) % 5]).collect();
                let score = rot[x[0]].len() + rot[x[2]].len() + rot[x[3]].len();
                if best.as_ref().map_or(true, |b| score < b.0) {
                    best = Some((score, x));
                }
            }
        }
        let (_, x) = best.expect("a face exists");
        split(&mut rot, &x);
    }
    rot
}

/// Chain of `q` pentagons, each glued to the previous one along an outer
/// edge disjoint from the previous gluing edge. Returns the rotation and the
/// outer face walk.
fn pentagon_chain(q: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut rot = cycle5();
    let mut fresh: Vec<usize> = (0..5).collect();
    let mut glued: Option<(usize, usize)> = None;
    for _ in 1..q {
        let outer = outer_walk(&rot);
        let len = outer.len();
        let i = (0..len)
            .find(|&i| {
                let (y1, y2) = (outer[i], outer[(i + 1) % len]);
                fresh.contains(&y1) && fresh.contains(&y2) && glued.map_or(true, |(a, b)| ![a, b].contains(&y1) && ![a, b].contains(&y2))
            })
            .expect("chain has a free outer edge");
        let (y0, y1, y2) = (outer[(i + len - 1) % len], outer[i], outer[(i + 1) % len]);
        let n1 = rot.len();
        let (n2, n3) = (n1 + 1, n1 + 2);
        insert_after(&mut rot[y1], y0, n1);
        insert_after(&mut rot[y2], y1, n3);
        rot.push(vec![y1, n2]);
        rot.push(vec![n1, n3]);
        rot.push(vec![n2, y2]);
        fresh = vec![n1, n2, n3];
        glued = Some((y1, y2));
    }
    let outer = outer_walk(&rot);
    (rot, outer)
}

/// The longest face, which for a pentagon chain is the outer one.
fn outer_walk(rot: &[Vec<usize>]) -> Vec<usize> {
    let faces = plane_faces(rot);
    let mut best = faces[0].clone();
    for f in faces {
        if f.len() > best.len() {
            best = f;
        }
    }
    best
}

/// Simple Kuhn augmenting-path matching of slots to faces.
fn match_slots(slots: &[Vec<usize>], faces: usize) -> Option<Vec<usize>> {
    fn augment(s: usize, slots: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &f in &slots[s] {
            if seen[f] {
                continue;
            }
            seen[f] = true;
            if owner[f].map_or(true, |o| augment(o, slots, owner, seen)) {
                owner[f] = Some(s);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; faces];
    for s in 0..slots.len() {
        let mut seen = vec![false; faces];
        if !augment(s, slots, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut of_slot = vec![usize::MAX; slots.len()];
    for (f, o) in owner.iter().enumerate() {
        if let Some(s) = o {
            of_slot[*s] = f;
        }
    }
    Some(of_slot)
}

/// Adds four diagonals to every listed face so that no vertex pair is used
/// twice, and draws each face's diagonals as two crossing bundles.
fn fill_faces(rot: &[Vec<usize>], faces: &[Vec<usize>], variant: Variant) -> Result<(Graph, RawDrawing), String> {
    let n = rot.len();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut base = Vec::new();
    for (u, l) in rot.iter().enumerate() {
        for &v in l {
            if u < v {
                base.push((u, v));
            }
        }
    }
    // Pairs that some face must leave out: all copies of a base edge, all
    // but one copy of any other diagonal.
    let mut occ: alloc::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    for (fi, f) in faces.iter().enumerate() {
        if f.len() != 5 {
            return Err(format!("face of length {} cannot take the pentagon pattern", f.len()));
        }
        for i in 0..5 {
            occ.entry(key(f[i], f[(i + 2) % 5])).or_default().push(fi);
        }
    }
    let mut slot_pair = Vec::new();
    let mut slots = Vec::new();
    for (&p, fs) in &occ {
        let demand = if base.contains(&p) { fs.len() } else { fs.len() - 1 };
        for _ in 0..demand {
            slot_pair.push(p);
            slots.push(fs.clone());
        }
    }
    let assigned = match_slots(&slots, faces.len())
        .ok_or_else(|| String::from("no choice of omitted diagonals keeps the graph simple"))?;
    let mut omit: Vec<Option<(usize, usize)>> = vec![None; faces.len()];
    for (s, &f) in assigned.iter().enumerate() {
        omit[f] = Some(slot_pair[s]);
    }
    let mut edges = base.clone();
    let mut rotation: Vec<Vec<RawArc>> = rot.iter().enumerate().map(|(u, l)| l.iter().map(|&v| mid(u, v)).collect()).collect();
    let mut gadgets = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        let om = omit[fi].unwrap_or_else(|| key(f[0], f[2]));
        let i = (0..5).find(|&i| key(f[i], f[(i + 2) % 5]) == om).expect("omitted pair is a diagonal");
        // Rotate so the omitted diagonal is v3 v5.
        let v: Vec<usize> = (0..5).map(|j| f[(i + 3 + j) % 5]).collect();
        for (a, b) in [(v[0], v[2]), (v[0], v[3]), (v[1], v[3]), (v[1], v[4])] {
            edges.push(key(a, b));
        }
        gadgets.push(v);
    }
    let graph = Graph::numbered(n, edges, None).map_err(|e| format!("{e}"))?;
    let mut raw = RawDrawing::new(graph.clone(), variant, 1);
    for (fi, v) in gadgets.iter().enumerate() {
        raw.add_bundle(format!("{}.{}", v[0] + 1, fi), v[0]);
        raw.add_bundle(format!("{}.{}", v[1] + 1, fi), v[1]);
    }
    for fi in 0..gadgets.len() {
        raw.crossings.push((2 * fi, 2 * fi + 1));
    }
    raw.ensure_nodes();
    for (fi, v) in gadgets.iter().enumerate() {
        let (b, b2) = (2 * fi, 2 * fi + 1);
        let at = |rotation: &mut Vec<Vec<RawArc>>, x: usize, prev: usize, new: &[RawArc]| {
            let list = &mut rotation[x];
            let p = list.iter().position(|&a| a == mid(x, prev)).expect("corner arc present");
            for (o, &a) in new.iter().enumerate() {
                list.insert(p + 1 + o, a);
            }
        };
        at(&mut rotation, v[0], v[4], &[RawArc::Trunk(b, 0)]);
        at(&mut rotation, v[1], v[0], &[RawArc::Trunk(b2, 0)]);
        at(&mut rotation, v[2], v[1], &[mid(v[0], v[2])]);
        at(&mut rotation, v[3], v[2], &[mid(v[0], v[3]), mid(v[1], v[3])]);
        at(&mut rotation, v[4], v[3], &[mid(v[1], v[4])]);
        let t = raw.terminal(b);
        let t2 = raw.terminal(b2);
        let x = raw.dummy(fi);
        raw.rotation[t] = vec![RawArc::Trunk(b, 1), mid(v[0], v[3]), mid(v[0], v[2])];
        raw.rotation[t2] = vec![RawArc::Trunk(b2, 1), mid(v[1], v[4]), mid(v[1], v[3])];
        raw.rotation[x] = vec![RawArc::Trunk(b, 0), RawArc::Trunk(b2, 1), RawArc::Trunk(b, 1), RawArc::Trunk(b2, 0)];
    }
    for (u, l) in rotation.into_iter().enumerate() {
        raw.rotation[u] = l;
    }
    Ok((graph, raw))
}

/// 1-sided general family on `5 + 3k` vertices with `(13n - 26)/3` edges.
pub fn gen_onesided_general(k: usize) -> Result<FamilyInstance, String> {
    let rot = pentagon_base(k);
    let faces = plane_faces(&rot);
    let (graph, raw) = fill_faces(&rot, &faces, Variant::General)?;
    let drawing = raw.finish()?;
    Ok(FamilyInstance::new(Family::OnesidedGeneral, &[("k", k as i64)], graph, Some(drawing)))
}

/// 1-sided outer family on `3q + 2` vertices with `(8n - 13)/3` edges.
pub fn gen_onesided_outer(q: usize) -> Result<FamilyInstance, String> {
    if q == 0 {
        return Err(String::from("q must be at least 1"));
    }
    let (rot, outer) = pentagon_chain(q);
    let mut faces = plane_faces(&rot);
    // With a single pentagon both faces look alike; keep one as outer.
    let pos = faces.iter().position(|f| *f == outer).expect("outer face traced");
    faces.remove(pos);
    let (graph, raw) = fill_faces(&rot, &faces, Variant::Outer)?;
    let drawing = raw.finish()?;
    Ok(FamilyInstance::new(Family::OnesidedOuter, &[("q", q as i64)], graph, Some(drawing)))
}
