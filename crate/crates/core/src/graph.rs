//! Simple undirected graphs with stable vertex tokens and optional layers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Why a graph could not be built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop(String),
    DuplicateEdge(String, String),
    DuplicateVertex(String),
    UnknownVertex(String),
    BadToken(String),
    LayerViolation(String, String),
    MissingLayer(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            GraphError::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            GraphError::BadToken(v) => write!(f, "invalid vertex token {v:?}"),
            GraphError::LayerViolation(u, v) => write!(f, "edge {u}-{v} joins vertices of the same layer"),
            GraphError::MissingLayer(v) => write!(f, "vertex {v} has no layer"),
        }
    }
}

/// Vertex tokens end up inside edge keys like `u-v` and node keys like
/// `x:a|b`, so the separators are reserved.
pub fn valid_token(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || matches!(c, '-' | '|' | ':' | ',' | '/'))
}

/// A simple graph. Vertices are dense indices `0..n` carrying a token each;
/// edges are stored with the smaller index first and keep insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    adj_edge: Vec<Vec<usize>>,
    layers: Option<Vec<u8>>,
}

impl Graph {
    /// Builds a graph from tokens and index pairs. Adjacency lists come out
    /// sorted, which keeps `edge_index` a binary search.
    pub fn new(
        names: Vec<String>,
        edges: Vec<(usize, usize)>,
        layers: Option<Vec<u8>>,
    ) -> Result<Graph, GraphError> {
        let n = names.len();
        {
            let mut sorted: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(GraphError::DuplicateVertex(w[0].to_string()));
                }
            }
            if let Some(bad) = names.iter().find(|s| !valid_token(s)) {
                return Err(GraphError::BadToken(bad.clone()));
            }
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(GraphError::UnknownVertex(alloc::format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(GraphError::SelfLoop(names[u].clone()));
            }
            norm.push(if u < v { (u, v) } else { (v, u) });
        }
        let mut deg = alloc::vec![0usize; n];
        for &(u, v) in &norm {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut pairs: Vec<Vec<(usize, usize)>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        for (i, &(u, v)) in norm.iter().enumerate() {
            pairs[u].push((v, i));
            pairs[v].push((u, i));
        }
        let mut adj = Vec::with_capacity(n);
        let mut adj_edge = Vec::with_capacity(n);
        for (u, mut list) in pairs.into_iter().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(GraphError::DuplicateEdge(names[u].clone(), names[w[0].0].clone()));
                }
            }
            adj.push(list.iter().map(|p| p.0).collect());
            adj_edge.push(list.iter().map(|p| p.1).collect());
        }
        if let Some(l) = &layers {
            if l.len() != n {
                return Err(GraphError::MissingLayer(alloc::format!("#{}", l.len())));
            }
            for &(u, v) in &norm {
                if l[u] == l[v] {
                    return Err(GraphError::LayerViolation(names[u].clone(), names[v].clone()));
                }
            }
        }
        Ok(Graph { names, edges: norm, adj, adj_edge, layers })
    }

    /// Graph on tokens `1..=n`.
    pub fn numbered(n: usize, edges: Vec<(usize, usize)>, layers: Option<Vec<u8>>) -> Result<Graph, GraphError> {
        Graph::new((1..=n).map(|i| i.to_string()).collect(), edges, layers)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Linear scan; callers that need many lookups should build their own map.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids parallel to `neighbors(v)`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adj_edge[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).ok().map(|i| self.adj_edge[a][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn layers(&self) -> Option<&[u8]> {
        self.layers.as_deref()
    }

    pub fn layer(&self, v: usize) -> Option<u8> {
        self.layers.as_ref().map(|l| l[v])
    }

    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `u-v` with tokens in index order.
    pub fn edge_key(&self, e: usize) -> String {
        let (u, v) = self.edges[e];
        alloc::format!("{}-{}", self.names[u], self.names[v])
    }

    /// Same vertex tokens and same edge set (by tokens), layers ignored.
    pub fn same_as(&self, other: &Graph) -> bool {
        if self.n() != other.n() || self.m() != other.m() {
            return false;
        }
        let mut a: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        let mut b: Vec<&str> = other.names.iter().map(|s| s.as_str()).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        fn key<'a>(g: &'a Graph, e: &(usize, usize)) -> (&'a str, &'a str) {
            let (x, y) = (g.names[e.0].as_str(), g.names[e.1].as_str());
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        }
        let mut ea: Vec<(&str, &str)> = self.edges.iter().map(|e| key(self, e)).collect();
        let mut eb: Vec<(&str, &str)> = other.edges.iter().map(|e| key(other, e)).collect();
        ea.sort_unstable();
        eb.sort_unstable();
        ea == eb
    }

    /// Induced subgraph on `keep` (in the given order), with the map from old to new index.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = alloc::vec![None; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let layers = self.layers.as_ref().map(|l| keep.iter().map(|&v| l[v]).collect());
        (Graph::new(names, edges, layers).expect("induced subgraph of a valid graph"), map)
    }

    pub fn with_layers(mut self, layers: Option<Vec<u8>>) -> Result<Graph, GraphError> {
        if let Some(l) = &layers {
            if l.len() != self.n() {
                return Err(GraphError::MissingLayer(alloc::format!("#{}", l.len())));
            }
            for &(u, v) in &self.edges {
                if l[u] == l[v] {
                    return Err(GraphError::LayerViolation(self.names[u].clone(), self.names[v].clone()));
                }
            }
        }
        self.layers = layers;
        Ok(self)
    }
}

/// Sorted degrees plus the vertices above degree 3 and above degree 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub above3: Vec<usize>,
    pub above4: Vec<usize>,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let above3 = (0..g.n()).filter(|&v| g.degree(v) > 3).collect();
    let above4 = (0..g.n()).filter(|&v| g.degree(v) > 4).collect();
    degrees.sort_unstable();
    DegreeProfile { degrees, above3, above4 }
}
