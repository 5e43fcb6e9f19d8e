//! Hardness instances from 3-Partition: a graph plus a fixed rotation system
//! built from barrier gadgets, columns of cells and transversal paths.
//!
//! Layout conventions (the construction only fixes them up to the choice of
//! rotation, so they are ours):
//! - A barrier with `t` copies of H lives on a local grid, `x` in `0..=2t+1`,
//!   `y` in `0..=2`. Copy `j` has a=(2j+3,2), b=(2j+1,2), c=(2j,1),
//!   d=(2j+1,0), e=(2j+3,0), f=(2j+2,1), g=(2j+1,1), so the left-sided
//!   a, f, e of copy `j` coincide with the right-sided b, c, d of copy `j+1`.
//! - Corners: the left wall starts at the top beam's `c` end and stops at the
//!   bottom beam's `c` end; the right wall starts at the top beam's last `e`
//!   and stops at the bottom beam's last `e`.
//! - Column `i` is anchored at beam row slots `1+iK .. 1+(i+1)K`; slot 0 and
//!   the last slot are left free.
//! - Origin and destination are the middle interior-facing vertices of the
//!   left and right wall.
//!
//! The rotation is read off a straight-line placement: every vertex orders
//! its edges clockwise by angle.

use crate::graph::Graph;
use crate::rotation::RotationSystem;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// `a` holds `3m` values that should split into `m` triples summing to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    pub a: Vec<u64>,
    pub b: u64,
    pub m: usize,
}

impl ThreePartitionInstance {
    /// Checks the hard requirements and returns the soft ones as warnings.
    pub fn new(a: Vec<u64>, b: u64) -> Result<(ThreePartitionInstance, Vec<String>), String> {
        if a.is_empty() || a.len() % 3 != 0 {
            return Err(alloc::format!("need 3m values, got {}", a.len()));
        }
        if b == 0 || a.contains(&0) {
            return Err("values and B must be positive".to_string());
        }
        let m = a.len() / 3;
        let sum: u64 = a.iter().sum();
        if sum != m as u64 * b {
            return Err(alloc::format!("values sum to {sum}, expected m*B = {}", m as u64 * b));
        }
        let mut warnings = Vec::new();
        let out: Vec<u64> = a.iter().copied().filter(|&x| !(4 * x > b && 2 * x < b)).collect();
        if !out.is_empty() {
            warnings.push(alloc::format!("values {out:?} lie outside the open range (B/4, B/2)"));
        }
        Ok((ThreePartitionInstance { a, b, m }, warnings))
    }
}

/// Finds `m` disjoint index triples each summing to `B`. The first triple
/// always takes the smallest unused index, and the rest are tried in
/// increasing order, so the answer is the lexicographically first one.
pub fn solve_3partition(inst: &ThreePartitionInstance) -> Result<Option<Vec<[usize; 3]>>, String> {
    if inst.m > 5 {
        return Err(alloc::format!("solver is capped at m = 5, got m = {}", inst.m));
    }
    fn go(a: &[u64], b: u64, used: &mut [bool], out: &mut Vec<[usize; 3]>) -> bool {
        let Some(i) = used.iter().position(|&u| !u) else {
            return true;
        };
        used[i] = true;
        for j in i + 1..a.len() {
            if used[j] || a[i] + a[j] >= b {
                continue;
            }
            used[j] = true;
            for k in j + 1..a.len() {
                if !used[k] && a[i] + a[j] + a[k] == b {
                    used[k] = true;
                    out.push([i, j, k]);
                    if go(a, b, used, out) {
                        return true;
                    }
                    out.pop();
                    used[k] = false;
                }
            }
            used[j] = false;
        }
        used[i] = false;
        false
    }
    let mut used = vec![false; inst.a.len()];
    let mut out = Vec::new();
    Ok(go(&inst.a, inst.b, &mut used, &mut out).then_some(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    OneSided,
    TwoSided,
}

/// Sizes of the parts, both as built and as predicted by the closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStats {
    pub beam_vertices: usize,
    pub wall_vertices: usize,
    pub obstacle_vertices: usize,
    pub obstacles_per_column: usize,
    pub obstacle_count: usize,
    pub column_count: usize,
    pub cells_per_column: usize,
    pub path_count: usize,
    pub path_length: usize,
    /// Vertical edges of the central cell of each column.
    pub central_cell_edges: Vec<usize>,
    /// Vertical edges of every other cell.
    pub other_cell_edges: usize,
    pub vertices: usize,
    pub edges: usize,
    pub predicted_vertices: usize,
    pub predicted_edges: usize,
}

/// One copy of H inside a barrier, as vertex ids `[a, b, c, d, e, f, g]`.
pub type HCopy = [usize; 7];

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub rotation: RotationSystem,
    pub k: usize,
    pub model: Model,
    pub stats: ReductionStats,
    pub expected_yes: Option<bool>,
    pub warnings: Vec<String>,
    /// Barrier copies, so callers can check that each copy stays contiguous.
    pub copies: Vec<HCopy>,
    /// Edge pairs that the two-sided model asks to cross inside a cell.
    pub crossed_pairs: Vec<(usize, usize)>,
    /// Edges of each transversal path, origin first.
    pub paths: Vec<Vec<usize>>,
    pub origin: usize,
    pub destination: usize,
    pub convention: &'static str,
    /// Straight-line placement used to derive the rotation.
    pub positions: Vec<(f64, f64)>,
}

pub const CONVENTION: &str = "walls join the top beam's c-end and last e-vertex to the bottom beam's; \
columns use beam slots 1+iK..1+(i+1)K; origin and destination are the middle interior wall vertices";

/// Vertex count of a barrier with `t` copies.
pub fn barrier_vertices(t: usize) -> usize {
    4 * t + 3
}

/// Distinct edges of a barrier with `t` copies: 16 per copy, minus the two
/// boundary edges every glued pair shares.
pub fn barrier_edges(t: usize) -> usize {
    14 * t + 2
}

#[derive(Default)]
struct Builder {
    names: Vec<String>,
    pos: Vec<(f64, f64)>,
    edges: Vec<(usize, usize)>,
    edge_ids: BTreeMap<(usize, usize), usize>,
    copies: Vec<HCopy>,
}

impl Builder {
    fn vertex(&mut self, name: String, p: (f64, f64)) -> usize {
        self.names.push(name);
        self.pos.push(p);
        self.names.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) -> usize {
        let key = if u < v { (u, v) } else { (v, u) };
        if let Some(&e) = self.edge_ids.get(&key) {
            return e;
        }
        self.edges.push(key);
        self.edge_ids.insert(key, self.edges.len() - 1);
        self.edges.len() - 1
    }

    /// Builds a barrier of `t` copies through `place`, reusing the vertices
    /// in `fixed` (keyed by local grid point). Returns the local-point map.
    fn barrier(
        &mut self,
        prefix: &str,
        t: usize,
        place: impl Fn(f64, f64) -> (f64, f64),
        fixed: &[((usize, usize), usize)],
    ) -> BTreeMap<(usize, usize), usize> {
        let mut at: BTreeMap<(usize, usize), usize> = fixed.iter().copied().collect();
        let mut get = |b: &mut Builder, x: usize, y: usize| -> usize {
            *at.entry((x, y))
                .or_insert_with(|| b.vertex(alloc::format!("{prefix}.{x}.{y}"), place(x as f64, y as f64)))
        };
        for j in 0..t {
            let x = 2 * j;
            let a = get(self, x + 3, 2);
            let b = get(self, x + 1, 2);
            let c = get(self, x, 1);
            let d = get(self, x + 1, 0);
            let e = get(self, x + 3, 0);
            let f = get(self, x + 2, 1);
            let g = get(self, x + 1, 1);
            let ring = [a, b, c, d, e, f];
            for i in 0..6 {
                self.edge(ring[i], ring[(i + 1) % 6]);
            }
            self.edge(c, g);
            self.edge(f, g);
            for &hub in &[c, f, g] {
                for &w in &[a, b, d, e] {
                    self.edge(hub, w);
                }
            }
            self.copies.push([a, b, c, d, e, f, g]);
        }
        at
    }
}

/// Builds the instance. `k` defaults to `B²`.
pub fn reduce(inst: &ThreePartitionInstance, k: Option<usize>, model: Model) -> Result<ReductionInstance, String> {
    let (inst, mut warnings) = ThreePartitionInstance::new(inst.a.clone(), inst.b)?;
    let m = inst.m;
    let bb = inst.b as usize;
    let k = k.unwrap_or(bb * bb);
    if k < 2 {
        return Err(alloc::format!("K must be at least 2, got {k}"));
    }
    if k < bb * bb {
        warnings.push(alloc::format!("K = {k} is below B^2 = {}, so the hardness argument does not apply", bb * bb));
    }
    if inst.a.iter().any(|&x| x as usize * sigma_of(model) > k * k) {
        return Err(alloc::format!("a central cell would need more than K^2 = {} vertical edges", k * k));
    }
    let sigma = sigma_of(model);
    let beam_copies = 3 * m * k + 1;
    let cells = 2 * m - 1;
    let obstacles_per_column = 2 * m - 2;
    let path_length = (3 * m - 3) * k + bb;

    // Vertical coordinates: cells are 3 units tall, obstacles 2.
    let cell_top = |r: usize| -> f64 { -(5.0 * r as f64) };
    let height = 5.0 * cells as f64 - 2.0;
    let right = (2 * beam_copies + 1) as f64;

    let mut bld = Builder::default();
    let top = bld.barrier("t", beam_copies, |x, y| (x, y), &[]);
    let bottom = bld.barrier("b", beam_copies, |x, y| (x, -height - y), &[]);
    let last = 2 * beam_copies + 1;
    let left = bld.barrier(
        "l",
        2,
        |x, y| ((y - 1.0) * 0.5, 1.0 - x * (height + 2.0) / 4.0),
        &[((0, 1), top[&(0, 1)]), ((4, 1), bottom[&(0, 1)])],
    );
    let rightw = bld.barrier(
        "r",
        2,
        |x, y| (right - (y - 1.0) * 0.5, -x * height / 4.0),
        &[((0, 1), top[&(last, 0)]), ((4, 1), bottom[&(last, 0)])],
    );

    // Obstacles, column by column from the top.
    let mut obstacle_rows: Vec<Vec<BTreeMap<(usize, usize), usize>>> = Vec::with_capacity(3 * m);
    for col in 0..3 * m {
        let dx = (2 + 2 * col * k) as f64;
        let mut rows = Vec::with_capacity(obstacles_per_column);
        for s in 0..obstacles_per_column {
            let y0 = cell_top(s) - 3.0;
            rows.push(bld.barrier(&alloc::format!("o{col}.{s}"), k - 1, |x, y| (x + dx, y0 - 2.0 + y), &[]));
        }
        obstacle_rows.push(rows);
    }

    // Vertical edges.
    let mut crossed = Vec::new();
    let mut central = Vec::with_capacity(3 * m);
    for col in 0..3 * m {
        for r in 0..cells {
            let upper: Vec<usize> = (0..k)
                .map(|j| if r == 0 { top[&(2 * (1 + col * k + j) + 1, 0)] } else { obstacle_rows[col][r - 1][&(2 * j + 1, 0)] })
                .collect();
            let lower: Vec<usize> = (0..k)
                .map(|j| {
                    if r == cells - 1 {
                        bottom[&(2 * (1 + col * k + j) + 1, 0)]
                    } else {
                        obstacle_rows[col][r][&(2 * j + 1, 2)]
                    }
                })
                .collect();
            let size = if r == m - 1 { inst.a[col] as usize } else { k };
            let before = bld.edges.len();
            for (pair, (i, j)) in cell_pattern(size, k, model).into_iter().enumerate() {
                let e = bld.edge(upper[i], lower[j]);
                if model == Model::TwoSided && pair % 2 == 1 {
                    let prev = bld.edges.len() - 2;
                    crossed.push((prev, e));
                }
            }
            if r == m - 1 {
                central.push(bld.edges.len() - before);
            }
        }
    }

    // Transversal paths through the central row, topmost path first.
    let origin = left[&(3, 2)];
    let destination = rightw[&(3, 2)];
    let (ox, dx) = (bld.pos[origin].0, bld.pos[destination].0);
    let mid_top = cell_top(m - 1);
    let mut paths = Vec::with_capacity(m);
    for p in 0..m {
        let y = mid_top - 3.0 * (p + 1) as f64 / (m + 1) as f64;
        let mut prev = origin;
        let mut edges = Vec::with_capacity(path_length);
        for q in 1..path_length {
            let x = ox + (dx - ox) * q as f64 / path_length as f64;
            let v = bld.vertex(alloc::format!("p{p}.{q}"), (x, y));
            edges.push(bld.edge(prev, v));
            prev = v;
        }
        edges.push(bld.edge(prev, destination));
        paths.push(edges);
    }

    let Builder { names, pos, edges, copies, .. } = bld;
    let graph = Graph::new(names, edges, None).map_err(|e| e.to_string())?;
    let rotation = rotation_from_positions(&graph, &pos);

    let obstacle_count = 3 * m * obstacles_per_column;
    let predicted_vertices = 2 * barrier_vertices(beam_copies) + 2 * barrier_vertices(2) - 4
        + obstacle_count * barrier_vertices(k - 1)
        + m * (path_length - 1);
    let cell_edges = sigma * (3 * m * (cells - 1) * k + inst.a.iter().sum::<u64>() as usize);
    let predicted_edges = 2 * barrier_edges(beam_copies)
        + 2 * barrier_edges(2)
        + obstacle_count * barrier_edges(k - 1)
        + cell_edges
        + m * path_length;
    let stats = ReductionStats {
        beam_vertices: barrier_vertices(beam_copies),
        wall_vertices: barrier_vertices(2),
        obstacle_vertices: barrier_vertices(k - 1),
        obstacles_per_column,
        obstacle_count,
        column_count: 3 * m,
        cells_per_column: cells,
        path_count: m,
        path_length,
        central_cell_edges: central,
        other_cell_edges: sigma * k,
        vertices: graph.n(),
        edges: graph.m(),
        predicted_vertices,
        predicted_edges,
    };
    let expected_yes = solve_3partition(&inst).ok().map(|s| s.is_some());
    Ok(ReductionInstance {
        graph,
        rotation,
        k,
        model,
        stats,
        expected_yes,
        warnings,
        copies,
        crossed_pairs: crossed,
        paths,
        origin,
        destination,
        convention: CONVENTION,
        positions: pos,
    })
}

fn sigma_of(model: Model) -> usize {
    if model == Model::TwoSided {
        2
    } else {
        1
    }
}

/// Slot pairs (upper, lower) of the vertical edges in a cell holding `size`
/// base edges between two rows of `k` slots. One-sided cells are straight
/// while they fit and then wrap onto shifted slots, which keeps the pairs
/// distinct up to `k*k`. Two-sided cells list crossing pairs back to back:
/// (j, j+1) then (j+1, j).
fn cell_pattern(size: usize, k: usize, model: Model) -> Vec<(usize, usize)> {
    let wrap = |n: usize| -> Vec<(usize, usize)> { (0..n).map(|j| (j % k, (j + j / k) % k)).collect() };
    if model == Model::OneSided {
        return wrap(size);
    }
    if size >= k {
        // Wrapped slots; the crossing pairs are only nominal here.
        return wrap(2 * size);
    }
    let mut out = Vec::with_capacity(2 * size);
    for j in 0..size {
        out.push((j, j + 1));
        out.push((j + 1, j));
    }
    out
}

/// Clockwise order by decreasing angle, ties broken by edge id.
pub fn rotation_from_positions(g: &Graph, pos: &[(f64, f64)]) -> RotationSystem {
    let order = (0..g.n())
        .map(|v| {
            let mut l: Vec<(f64, usize)> = g
                .incident_edges(v)
                .iter()
                .map(|&e| {
                    let w = g.other(e, v);
                    (libm::atan2(pos[w].1 - pos[v].1, pos[w].0 - pos[v].0), e)
                })
                .collect();
            l.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap_or(core::cmp::Ordering::Equal).then(x.1.cmp(&y.1)));
            l.into_iter().map(|p| p.1).collect()
        })
        .collect();
    RotationSystem { order }
}

/// The contiguity condition on barrier copies: at every vertex, the edges of
/// each copy containing it form one run. Returns the first offender.
pub fn check_copy_contiguity(r: &ReductionInstance) -> Result<(), String> {
    let g = &r.graph;
    for copy in &r.copies {
        let in_copy = |e: usize| {
            let (u, v) = g.edge(e);
            copy.contains(&u) && copy.contains(&v)
        };
        for &v in copy {
            if !r.rotation.contiguous_at(v, in_copy) {
                return Err(alloc::format!("copy edges are split around {}", g.name(v)));
            }
        }
    }
    Ok(())
}
