//! Text and JSON file formats.
//!
//! Graph files are line oriented: `#` starts a comment, `p <n> <m>` is the
//! header, `v <id>` optionally fixes vertex order, `l <id> <0|1>` assigns a
//! layer and `e <u> <w>` adds an edge. Without `v` lines, a file whose tokens
//! are all integers in `1..=n` gets vertices `1..n` in numeric order, and any
//! other file lists vertices in order of first appearance.
//!
//! Rotation files hold one `r <v> <u-w> ...` line per vertex, edges
//! clockwise.

use anyhow::{anyhow, bail, Context, Result};
use fbp_core::drawing::{ArcKey, Attach, Bundle, BundledDrawing, Variant};
use fbp_core::k3n::{CrossingCount, GeometricDrawing, HalfPlane, Q};
use fbp_core::{Graph, RotationSystem};
use serde_json::{json, Map, Value};
use std::collections::HashMap;
use std::fmt::Write as _;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut declared: Vec<String> = Vec::new();
    let mut layer_lines: Vec<(String, u8, usize)> = Vec::new();
    let mut edge_lines: Vec<(String, String, usize)> = Vec::new();
    let mut seen_order: Vec<String> = Vec::new();
    let mut seen: HashMap<String, ()> = HashMap::new();
    let mut note = |t: &str, seen_order: &mut Vec<String>| {
        if seen.insert(t.to_string(), ()).is_none() {
            seen_order.push(t.to_string());
        }
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        match (parts[0], parts.len()) {
            ("p", 3) => {
                if header.is_some() {
                    bail!("line {line_no}: second header");
                }
                let n = parts[1].parse().with_context(|| format!("line {line_no}: bad vertex count"))?;
                let m = parts[2].parse().with_context(|| format!("line {line_no}: bad edge count"))?;
                header = Some((n, m));
            }
            ("v", 2) => {
                declared.push(parts[1].to_string());
                note(parts[1], &mut seen_order);
            }
            ("l", 3) => {
                let l = match parts[2] {
                    "0" => 0,
                    "1" => 1,
                    other => bail!("line {line_no}: layer must be 0 or 1, got {other}"),
                };
                note(parts[1], &mut seen_order);
                layer_lines.push((parts[1].to_string(), l, line_no));
            }
            ("e", 3) => {
                note(parts[1], &mut seen_order);
                note(parts[2], &mut seen_order);
                edge_lines.push((parts[1].to_string(), parts[2].to_string(), line_no));
            }
            _ => bail!("line {line_no}: cannot parse {line:?}"),
        }
    }
    let (n, m) = header.ok_or_else(|| anyhow!("missing header line `p <n> <m>`"))?;
    let names: Vec<String> = if !declared.is_empty() {
        if let Some(t) = seen_order.iter().find(|t| !declared.contains(t)) {
            bail!("vertex {t} is used but not declared");
        }
        declared
    } else if seen_order.iter().all(|t| t.parse::<usize>().is_ok_and(|x| (1..=n).contains(&x))) {
        (1..=n).map(|i| i.to_string()).collect()
    } else {
        seen_order
    };
    if names.len() != n {
        bail!("header declares {n} vertices but the file has {}", names.len());
    }
    if edge_lines.len() != m {
        bail!("header declares {m} edges but the file has {}", edge_lines.len());
    }
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let mut edges = Vec::with_capacity(m);
    for (u, w, line_no) in &edge_lines {
        if u == w {
            bail!("line {line_no}: self-loop at {u}");
        }
        edges.push((index[u.as_str()], index[w.as_str()]));
    }
    let layers = if layer_lines.is_empty() {
        None
    } else {
        let mut l = vec![None; n];
        for (t, x, line_no) in &layer_lines {
            let v = index[t.as_str()];
            if l[v].is_some_and(|y| y != *x) {
                bail!("line {line_no}: vertex {t} gets two layers");
            }
            l[v] = Some(*x);
        }
        let missing: Vec<&str> = (0..n).filter(|&v| l[v].is_none()).map(|v| names[v].as_str()).collect();
        if !missing.is_empty() {
            bail!("vertices without a layer: {}", missing.join(" "));
        }
        Some(l.into_iter().map(|x| x.unwrap_or(0)).collect())
    };
    Graph::new(names, edges, layers).map_err(|e| anyhow!("{e}"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "p {} {}", g.n(), g.m());
    let numbered = g.names().iter().enumerate().all(|(i, t)| *t == (i + 1).to_string());
    if !numbered {
        for t in g.names() {
            let _ = writeln!(s, "v {t}");
        }
    }
    if let Some(l) = g.layers() {
        for (v, x) in l.iter().enumerate() {
            let _ = writeln!(s, "l {} {}", g.name(v), x);
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", g.name(u), g.name(v));
    }
    s
}

fn token_index(g: &Graph) -> HashMap<&str, usize> {
    g.names().iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect()
}

fn edge_by_key(g: &Graph, index: &HashMap<&str, usize>, key: &str) -> Result<usize> {
    let (a, b) = key.split_once('-').ok_or_else(|| anyhow!("edge key {key:?} is not u-w"))?;
    let (u, w) = match (index.get(a), index.get(b)) {
        (Some(&u), Some(&w)) => (u, w),
        _ => bail!("edge key {key:?} names an unknown vertex"),
    };
    g.edge_index(u, w).ok_or_else(|| anyhow!("edge {key} is not in the graph"))
}

pub fn parse_rotation(g: &Graph, text: &str) -> Result<RotationSystem> {
    let index = token_index(g);
    let mut order: Vec<Option<Vec<usize>>> = vec![None; g.n()];
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts[0] != "r" || parts.len() < 2 {
            bail!("line {line_no}: expected `r <v> <edges...>`");
        }
        let v = *index.get(parts[1]).ok_or_else(|| anyhow!("line {line_no}: unknown vertex {}", parts[1]))?;
        if order[v].is_some() {
            bail!("line {line_no}: vertex {} listed twice", parts[1]);
        }
        let list = parts[2..]
            .iter()
            .map(|k| edge_by_key(g, &index, k).with_context(|| format!("line {line_no}")))
            .collect::<Result<Vec<_>>>()?;
        order[v] = Some(list);
    }
    let rot = RotationSystem { order: order.into_iter().map(|o| o.unwrap_or_default()).collect() };
    rot.check(g).map_err(|e| anyhow!("{e}"))?;
    Ok(rot)
}

pub fn write_rotation(g: &Graph, r: &RotationSystem) -> String {
    let mut s = String::new();
    for (v, list) in r.order.iter().enumerate() {
        let _ = write!(s, "r {}", g.name(v));
        for &e in list {
            let _ = write!(s, " {}", g.edge_key(e));
        }
        s.push('\n');
    }
    s
}

/// Logical graph fields for embedding in JSON documents.
pub fn graph_json(g: &Graph) -> Value {
    let layers = match g.layers() {
        Some(l) => {
            let mut m = Map::new();
            for (v, x) in l.iter().enumerate() {
                m.insert(g.name(v).to_string(), json!(x));
            }
            Value::Object(m)
        }
        None => Value::Null,
    };
    json!({
        "vertices": g.names(),
        "edges": g.edges().iter().map(|&(u, v)| json!([g.name(u), g.name(v)])).collect::<Vec<_>>(),
        "layers": layers,
    })
}

fn graph_from_json(v: &Value) -> Result<Graph> {
    let names: Vec<String> = v["vertices"]
        .as_array()
        .ok_or_else(|| anyhow!("graph.vertices must be a list"))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| anyhow!("vertex ids must be strings")))
        .collect::<Result<_>>()?;
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let find = |x: &Value| -> Result<usize> {
        let t = x.as_str().ok_or_else(|| anyhow!("edge ends must be strings"))?;
        index.get(t).copied().ok_or_else(|| anyhow!("edge names unknown vertex {t}"))
    };
    let mut edges = Vec::new();
    for e in v["edges"].as_array().ok_or_else(|| anyhow!("graph.edges must be a list"))? {
        let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| anyhow!("edge must be a pair"))?;
        edges.push((find(&pair[0])?, find(&pair[1])?));
    }
    let layers = match &v["layers"] {
        Value::Null => None,
        Value::Object(m) => {
            let mut l = vec![None; names.len()];
            for (k, x) in m {
                let i = *index.get(k.as_str()).ok_or_else(|| anyhow!("layer for unknown vertex {k}"))?;
                l[i] = match x.as_u64() {
                    Some(0) => Some(0u8),
                    Some(1) => Some(1u8),
                    _ => bail!("layer of {k} must be 0 or 1"),
                };
            }
            Some(l.into_iter().enumerate().map(|(i, x)| x.ok_or_else(|| anyhow!("vertex {} has no layer", names[i]))).collect::<Result<_>>()?)
        }
        _ => bail!("graph.layers must be an object or null"),
    };
    Graph::new(names, edges, layers).map_err(|e| anyhow!("{e}"))
}

pub fn drawing_json(d: &BundledDrawing) -> Value {
    let g = &d.graph;
    let bundles: Vec<Value> = d
        .bundles
        .iter()
        .map(|b| json!({"id": b.id, "anchor": g.name(b.anchor), "edges": b.edges.iter().map(|&e| g.edge_key(e)).collect::<Vec<_>>()}))
        .collect();
    let id = |b: Option<usize>| b.map(|b| Value::String(d.bundles[b].id.clone())).unwrap_or(Value::Null);
    let mut attachments = Map::new();
    for (e, a) in d.attach.iter().enumerate() {
        attachments.insert(g.edge_key(e), json!({"first": id(a.first), "second": id(a.second)}));
    }
    let crossings: Vec<Value> = d.crossings.iter().map(|&(a, b)| json!([d.bundles[a].id, d.bundles[b].id])).collect();
    let mut embedding = Map::new();
    for (node, list) in d.embedding.iter().enumerate() {
        embedding.insert(d.node_key(node), Value::Array(list.iter().map(|&a| Value::String(d.arc_key(a))).collect()));
    }
    let mut doc = json!({
        "variant": d.variant.as_str(),
        "sides": d.sides,
        "graph": graph_json(g),
        "bundles": bundles,
        "attachments": attachments,
        "crossings": crossings,
        "embedding": embedding,
    });
    if let Some(f) = &d.outer_face {
        doc["outerFace"] = Value::String(f.clone());
    }
    doc
}

pub fn write_drawing(d: &BundledDrawing) -> String {
    let mut s = serde_json::to_string_pretty(&drawing_json(d)).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn parse_drawing(text: &str) -> Result<BundledDrawing> {
    let doc: Value = serde_json::from_str(text).context("drawing is not valid JSON")?;
    let variant = doc["variant"]
        .as_str()
        .and_then(Variant::parse)
        .ok_or_else(|| anyhow!("variant must be general, outer or twolayer"))?;
    let sides = match doc["sides"].as_u64() {
        Some(1) => 1,
        Some(2) => 2,
        _ => bail!("sides must be 1 or 2"),
    };
    let graph = graph_from_json(&doc["graph"])?;
    let index = token_index(&graph);
    let mut bundles = Vec::new();
    let mut bundle_of: HashMap<String, usize> = HashMap::new();
    for b in doc["bundles"].as_array().ok_or_else(|| anyhow!("bundles must be a list"))? {
        let id = b["id"].as_str().ok_or_else(|| anyhow!("bundle id must be a string"))?.to_string();
        let anchor = b["anchor"].as_str().and_then(|t| index.get(t).copied()).ok_or_else(|| anyhow!("bundle {id} has an unknown anchor"))?;
        let edges = b["edges"]
            .as_array()
            .ok_or_else(|| anyhow!("bundle {id} needs an edge list"))?
            .iter()
            .map(|k| edge_by_key(&graph, &index, k.as_str().unwrap_or("")))
            .collect::<Result<Vec<_>>>()?;
        if bundle_of.insert(id.clone(), bundles.len()).is_some() {
            bail!("bundle id {id} is used twice");
        }
        bundles.push(Bundle { id, anchor, edges });
    }
    let lookup = |v: &Value| -> Result<Option<usize>> {
        match v {
            Value::Null => Ok(None),
            Value::String(s) => bundle_of.get(s).copied().map(Some).ok_or_else(|| anyhow!("unknown bundle {s}")),
            _ => bail!("attachment must be a bundle id or null"),
        }
    };
    let mut attach = vec![Attach::default(); graph.m()];
    if let Some(m) = doc["attachments"].as_object() {
        for (k, a) in m {
            let e = edge_by_key(&graph, &index, k)?;
            // Keys may list the endpoints in either order.
            let (a0, _) = k.split_once('-').unwrap_or((k, k));
            let flipped = index.get(a0).copied() != Some(graph.edge(e).0);
            let (x, y) = (lookup(&a["first"])?, lookup(&a["second"])?);
            attach[e] = if flipped { Attach { first: y, second: x } } else { Attach { first: x, second: y } };
        }
    } else if !doc["attachments"].is_null() {
        bail!("attachments must be an object");
    }
    let mut crossings = Vec::new();
    for c in doc["crossings"].as_array().map(|v| v.as_slice()).unwrap_or(&[]) {
        let pair = c.as_array().filter(|p| p.len() == 2).ok_or_else(|| anyhow!("crossing must be a pair of bundle ids"))?;
        let a = lookup(&pair[0])?.ok_or_else(|| anyhow!("crossing names null"))?;
        let b = lookup(&pair[1])?.ok_or_else(|| anyhow!("crossing names null"))?;
        crossings.push((a, b));
    }
    let n = graph.n();
    let nb = bundles.len();
    let mut dummy_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (c, &(a, b)) in crossings.iter().enumerate() {
        dummy_of.insert((a, b), c);
    }
    let node_of = |key: &str| -> Result<usize> {
        if let Some(t) = key.strip_prefix("v:") {
            index.get(t).copied().ok_or_else(|| anyhow!("unknown vertex node {key}"))
        } else if let Some(t) = key.strip_prefix("t:") {
            bundle_of.get(t).map(|&b| n + b).ok_or_else(|| anyhow!("unknown terminal node {key}"))
        } else if let Some(t) = key.strip_prefix("x:") {
            let (a, b) = t.split_once('|').ok_or_else(|| anyhow!("bad dummy node {key}"))?;
            let (a, b) = match (bundle_of.get(a), bundle_of.get(b)) {
                (Some(&a), Some(&b)) => (a, b),
                _ => bail!("dummy node {key} names an unknown bundle"),
            };
            dummy_of.get(&(a, b)).map(|&c| n + nb + c).ok_or_else(|| anyhow!("dummy node {key} is not a listed crossing"))
        } else {
            bail!("bad node key {key}")
        }
    };
    let arc_of = |key: &str| -> Result<ArcKey> {
        if let Some(t) = key.strip_prefix("mid:") {
            Ok(ArcKey::Mid(edge_by_key(&graph, &index, t)?))
        } else if let Some(t) = key.strip_prefix("trunk:") {
            let (id, s) = t.rsplit_once(':').ok_or_else(|| anyhow!("bad trunk arc {key}"))?;
            let b = *bundle_of.get(id).ok_or_else(|| anyhow!("trunk arc {key} names an unknown bundle"))?;
            let s = match s {
                "0" => 0,
                "1" => 1,
                _ => bail!("trunk arc {key} must end in :0 or :1"),
            };
            Ok(ArcKey::Trunk(b, s))
        } else {
            bail!("bad arc key {key}")
        }
    };
    let mut embedding = vec![Vec::new(); n + nb + crossings.len()];
    let emb = doc["embedding"].as_object().ok_or_else(|| anyhow!("embedding must be an object"))?;
    for (k, list) in emb {
        let node = node_of(k)?;
        embedding[node] = list
            .as_array()
            .ok_or_else(|| anyhow!("embedding of {k} must be a list"))?
            .iter()
            .map(|a| arc_of(a.as_str().unwrap_or("")))
            .collect::<Result<_>>()?;
    }
    let outer_face = doc["outerFace"].as_str().map(str::to_string);
    Ok(BundledDrawing { graph, bundles, attach, crossings, embedding, outer_face, variant, sides })
}

fn rational(q: &Q) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Coordinates are exact rationals written as `"p/q"` strings.
pub fn geometry_json(d: &GeometricDrawing, count: &CrossingCount) -> Value {
    let g = &d.graph;
    let mut vertices = Map::new();
    for (v, p) in d.points.iter().enumerate() {
        vertices.insert(g.name(v).to_string(), json!([rational(&p.0), rational(&p.1)]));
    }
    let mut curves = Map::new();
    for (e, c) in d.curves.iter().enumerate() {
        curves.insert(g.edge_key(e), Value::Array(c.iter().map(|p| json!([rational(&p.0), rational(&p.1)])).collect()));
    }
    json!({
        "k": d.k,
        "halfplane": match d.halfplane { HalfPlane::Upper => "upper", HalfPlane::Both => "both" },
        "graph": graph_json(g),
        "vertices": vertices,
        "curves": curves,
        "crossingPairs": count.pairs.len(),
        "maxCrossingsPerEdge": count.max(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_graph() {
        let g = parse_graph("p 2 1\ne 1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn layered_k23() {
        let text = "# K2,3\np 5 6\nl 1 0\nl 2 0\nl 3 1\nl 4 1\nl 5 1\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.layers().unwrap(), &[0, 0, 1, 1, 1]);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn self_loop_is_reported() {
        let err = parse_graph("p 1 1\ne 1 1\n").unwrap_err().to_string();
        assert!(err.contains("self-loop"), "{err}");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("p 2 1\nx 1 2\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
    }
}
