//! Maximal 1-sided 2-layer graphs: a chain of baby snakes joined at
//! cutvertices, plus legs at a few admissible positions.

use super::snake::{draw_chain, find_snakes, BlockKind, LegSpot, SnakeDecomposition, SnakeQuery};
use super::RecognitionResult;
use crate::connectivity::{block_vertex_sets, is_connected};
use crate::graph::Graph;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Which admissible position a leg occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegCase {
    /// End vertex of a snake.
    SnakeEnd,
    /// Cutvertex between two K2,3 blocks.
    Cutvertex,
    /// Pole shared by two K2,3 blocks inside one snake.
    SharedPole,
}

#[derive(Clone, Debug)]
pub struct StegosaurusDecomposition {
    pub snakes: Vec<SnakeDecomposition>,
    pub cutvertices: Vec<usize>,
    /// `(leg, anchor, case)`.
    pub legs: Vec<(usize, usize, LegCase)>,
}

/// Decomposition on the original vertex indices, or a rejection reason.
pub fn decompose(g: &Graph) -> Result<(StegosaurusDecomposition, Vec<(usize, usize, LegSpot)>), String> {
    let n = g.n();
    if !is_connected(g) {
        return Err(String::from("graph is not connected"));
    }
    let is_leg: Vec<bool> = (0..n).map(|v| g.degree(v) == 1).collect();
    let back: Vec<usize> = (0..n).filter(|&v| !is_leg[v]).collect();
    let (core, _) = g.induced(&back);
    if core.n() < 4 {
        return Err(String::from("fewer than four vertices after removing legs"));
    }
    let blocks = block_vertex_sets(&core);
    let mut count = vec![0usize; core.n()];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    if count.iter().any(|&c| c > 2) {
        return Err(String::from("a cutvertex lies in more than two blocks"));
    }
    // Order blocks along the path of the block-cut tree.
    let cuts_of = |b: &Vec<usize>| -> Vec<usize> { b.iter().copied().filter(|&v| count[v] == 2).collect() };
    if blocks.iter().any(|b| cuts_of(b).len() > 2) {
        return Err(String::from("a block has more than two cutvertices"));
    }
    let start = blocks.iter().position(|b| cuts_of(b).len() <= 1).ok_or("block-cut tree is not a path")?;
    let mut order = vec![start];
    let mut joins: Vec<usize> = Vec::new();
    let mut used = vec![false; blocks.len()];
    used[start] = true;
    loop {
        let cur = &blocks[*order.last().unwrap_or(&start)];
        let next_cut = cuts_of(cur).into_iter().find(|c| joins.last() != Some(c));
        let Some(c) = next_cut else { break };
        let nb = (0..blocks.len()).find(|&j| !used[j] && blocks[j].contains(&c)).ok_or("block-cut tree is not a path")?;
        used[nb] = true;
        joins.push(c);
        order.push(nb);
    }
    if order.len() != blocks.len() {
        return Err(String::from("block-cut tree is not a path"));
    }
    let mut snakes = Vec::new();
    for (j, &bi) in order.iter().enumerate() {
        let (sub, smap) = core.induced(&blocks[bi]);
        let left = if j > 0 { smap[joins[j - 1]] } else { None };
        let right = joins.get(j).and_then(|&c| smap[c]);
        let q = SnakeQuery { exact: true, left, right, limit: 64 };
        let found = find_snakes(&sub, &q);
        if found.is_empty() {
            let names: Vec<&str> = blocks[bi].iter().map(|&v| g.name(back[v])).collect();
            return Err(format!("block {{{}}} is not a baby snake with its cutvertices at opposite ends", names.join(",")));
        }
        let sback: Vec<usize> = blocks[bi].iter().map(|&v| back[v]).collect();
        let lift = |d: &SnakeDecomposition| SnakeDecomposition {
            pairs: d.pairs.iter().map(|&(a, b)| (sback[a], sback[b])).collect(),
            middles: d.middles.iter().map(|m| m.map(|x| sback[x])).collect(),
        };
        snakes.push(found.iter().map(lift).collect::<Vec<_>>());
    }
    let cutvertices: Vec<usize> = joins.iter().map(|&c| back[c]).collect();
    let legs: Vec<(usize, usize)> = (0..n).filter(|&v| is_leg[v]).map(|v| (v, g.neighbors(v)[0])).collect();
    let anchor_snake = |a: usize, choice: &[SnakeDecomposition]| choice.iter().position(|s| s.vertices().contains(&a));

    // Pick per snake the first decomposition that places all its non-cut legs.
    let last = snakes.len() - 1;
    let mut chosen: Vec<SnakeDecomposition> = Vec::new();
    let mut placed: Vec<(usize, usize, LegSpot, LegCase)> = Vec::new();
    for (j, options) in snakes.iter().enumerate() {
        let mine: Vec<(usize, usize)> = legs
            .iter()
            .copied()
            .filter(|&(_, a)| !cutvertices.contains(&a) && options[0].vertices().contains(&a))
            .collect();
        let mut err = None;
        let mut ok = None;
        for d in options {
            match place_snake_legs(g, d, j, j == 0, j == last, &mine) {
                Ok(p) => {
                    ok = Some((d.clone(), p));
                    break;
                }
                Err(e) => {
                    if err.is_none() {
                        err = Some(e);
                    }
                }
            }
        }
        let Some((d, p)) = ok else {
            return Err(err.unwrap_or_default());
        };
        chosen.push(d);
        placed.extend(p);
    }
    for &(leg, a) in &legs {
        if let Some(jn) = cutvertices.iter().position(|&c| c == a) {
            let left = chosen[jn].block(g, chosen[jn].block_count() - 1).kind;
            let right = chosen[jn + 1].block(g, 0).kind;
            if left != BlockKind::K23 || right != BlockKind::K23 {
                return Err(format!("leg {} hangs on cutvertex {} between blocks that are not both K2,3", g.name(leg), g.name(a)));
            }
            placed.push((leg, a, LegSpot::Between { junction: jn }, LegCase::Cutvertex));
        } else if anchor_snake(a, &chosen).is_none() {
            return Err(format!("leg {} hangs on a vertex outside every snake", g.name(leg)));
        }
    }
    let spots = placed.iter().map(|&(l, a, s, _)| (l, a, s)).collect();
    let deco = StegosaurusDecomposition {
        snakes: chosen,
        cutvertices,
        legs: placed.iter().map(|&(l, a, _, c)| (l, a, c)).collect(),
    };
    Ok((deco, spots))
}

fn place_snake_legs(
    g: &Graph,
    d: &SnakeDecomposition,
    j: usize,
    first: bool,
    last: bool,
    legs: &[(usize, usize)],
) -> Result<Vec<(usize, usize, LegSpot, LegCase)>, String> {
    let k = d.block_count();
    let mut out = Vec::new();
    for &(leg, a) in legs {
        let pi = d.pairs.iter().position(|&(t, b)| t == a || b == a);
        let not_big = || format!("leg {} at {} is not at an admissible position", g.name(leg), g.name(a));
        let Some(pi) = pi else {
            // Middles of K2,3 blocks have degree two in the snake.
            return Err(not_big());
        };
        if pi == 0 || pi == k {
            let bi = if pi == 0 { 0 } else { k - 1 };
            let blk = d.block(g, bi);
            if blk.kind != BlockKind::K23 {
                return Err(format!("leg {} hangs on {} in a K2,2 block", g.name(leg), g.name(a)));
            }
            let is_pole = if pi == 0 { blk.poles.0 == a } else { blk.poles.1 == a };
            if is_pole {
                out.push((leg, a, LegSpot::Gap { snake: j, block: bi, left_pole: pi == 0 }, LegCase::SnakeEnd));
            } else if (pi == 0 && first) || (pi == k && last) {
                out.push((leg, a, LegSpot::Far { right: pi == k }, LegCase::SnakeEnd));
            } else {
                return Err(format!(
                    "leg {} at rung {} faces a cutvertex and cannot be drawn without an extra crossing",
                    g.name(leg),
                    g.name(a)
                ));
            }
        } else {
            let (l, r) = (d.block(g, pi - 1), d.block(g, pi));
            if l.kind == BlockKind::K23 && r.kind == BlockKind::K23 && l.poles.1 == a && r.poles.0 == a {
                out.push((leg, a, LegSpot::Gap { snake: j, block: pi - 1, left_pole: false }, LegCase::SharedPole));
            } else {
                return Err(not_big());
            }
        }
    }
    Ok(out)
}

/// Recognizes maximal 1-sided 2-layer graphs by stripping legs, checking
/// the remainder is a chain of baby snakes and that every leg is admissible.
pub fn recognize_twolayer_maximal(g: &Graph) -> RecognitionResult {
    if g.layers().is_none() {
        return RecognitionResult::reject("precondition: graph has no layers");
    }
    match decompose(g) {
        Ok((deco, spots)) => match draw_chain(g, &deco.snakes, &spots) {
            Ok(w) => RecognitionResult::accept(w),
            Err(e) => RecognitionResult::reject(format!("witness construction failed: {e}")),
        },
        Err(e) => RecognitionResult::reject(e),
    }
}
