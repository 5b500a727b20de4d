//! Finite simple graphs on named vertices, with the necessary conditions and
//! reductions used to classify compact visibility graphs.

mod algo;
mod classify;
mod io;
mod planar;

use std::collections::{BTreeSet, HashMap};

pub use algo::{
    bridge_or_triangle_violations, bridges, contains_k4, edge_in_triangle, is_connected, is_tree, k11n_parts,
    simplicial_reduce, simplicial_vertices, K11nParts,
};
pub use classify::{classify_compact, classify_compact_with, Classification, Verdict};
pub use io::{graph_to_dot, graph_to_text, parse_graph, GraphFormatError};
pub use planar::{is_planar, planar_faces, planar_or_k4};
pub(crate) use planar::blocks as planar_blocks;

use crate::geometry::is_identifier;
use crate::visibility::VisGraph;

/// Unordered edges as name pairs, smaller name first.
pub type EdgeSet = BTreeSet<(String, String)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("`{0}` is not an ASCII identifier")]
    InvalidName(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
}

/// Simple undirected graph. Vertices keep insertion order.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, o: &Graph) -> bool {
        self.names == o.names && self.adj == o.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn from_edges<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v.as_ref())?;
        }
        for (a, b) in edges {
            g.add_edge(a.as_ref(), b.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize, GraphError> {
        if !is_identifier(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.adj.push(BTreeSet::new());
        Ok(i)
    }

    /// Adds `ab`; returns false if it was already present.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<bool, GraphError> {
        let i = self.index_of(a).ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
        let j = self.index_of(b).ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
        if i == j {
            return Err(GraphError::SelfLoop(a.to_string()));
        }
        Ok(self.link(i, j))
    }

    pub(crate) fn link(&mut self, i: usize, j: usize) -> bool {
        let fresh = self.adj[i].insert(j);
        self.adj[j].insert(i);
        fresh
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|i| self.adj[i].range(i + 1..).map(move |&j| (i, j))).collect()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().into_iter().map(|(i, j)| self.key(i, j)).collect()
    }

    pub(crate) fn key(&self, i: usize, j: usize) -> (String, String) {
        crate::visibility::edge_key(&self.names[i], &self.names[j])
    }

    /// Same vertex names in the same order.
    pub fn same_vertices(&self, names: &[String]) -> bool {
        self.names == names
    }

    /// Induced subgraph on the kept indices, in their given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new();
        let mut map = vec![usize::MAX; self.n()];
        for (k, &i) in keep.iter().enumerate() {
            map[i] = k;
            g.add_vertex(&self.names[i]).expect("names already valid");
        }
        for &i in keep {
            for &j in &self.adj[i] {
                if map[j] != usize::MAX && i < j {
                    g.link(map[i], map[j]);
                }
            }
        }
        g
    }

    pub fn without_vertex(&self, name: &str) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&i| self.names[i] != name).collect();
        self.induced(&keep)
    }
}

impl From<&VisGraph> for Graph {
    fn from(v: &VisGraph) -> Graph {
        let mut g = Graph::new();
        for name in &v.vertices {
            g.add_vertex(name).expect("scene names are identifiers");
        }
        for (a, b) in v.edges() {
            g.add_edge(a, b).expect("edges join scene regions");
        }
        g
    }
}

/// Edges in exactly one of the two sets, split by side.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeDiff {
    /// In the target but not realized.
    pub missing: EdgeSet,
    /// Realized but not in the target.
    pub spurious: EdgeSet,
}

impl EdgeDiff {
    pub fn between(target: &EdgeSet, actual: &EdgeSet) -> EdgeDiff {
        EdgeDiff {
            missing: target.difference(actual).cloned().collect(),
            spurious: actual.difference(target).cloned().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.spurious.is_empty()
    }
}

impl std::fmt::Display for EdgeDiff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return write!(f, "no differences");
        }
        let mut first = true;
        for (tag, set) in [("missing", &self.missing), ("spurious", &self.spurious)] {
            for (a, b) in set {
                if !first {
                    writeln!(f)?;
                }
                first = false;
                write!(f, "{tag} {a} {b}")?;
            }
        }
        Ok(())
    }
}

/// Small fixed graphs used by tests, the classifier fixtures and the CLI docs.
pub mod families {
    use super::Graph;

    fn named(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn path(n: usize) -> Graph {
        let v = named("v", n);
        let e: Vec<_> = (1..n).map(|i| (v[i - 1].clone(), v[i].clone())).collect();
        Graph::from_edges(&v, &e).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n >= 3 {
            g.link(0, n - 1);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let v = named("v", n);
        let mut g = Graph::from_edges::<String>(&v, &[]).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                g.link(i, j);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut v = named("a", a);
        v.extend(named("b", b));
        let mut g = Graph::from_edges::<String>(&v, &[]).unwrap();
        for i in 0..a {
            for j in 0..b {
                g.link(i, a + j);
            }
        }
        g
    }

    /// Hubs `u`, `v` and independent `w0..w{n-1}`.
    pub fn k11n(n: usize) -> Graph {
        let mut v = vec!["u".to_string(), "v".to_string()];
        v.extend(named("w", n));
        let mut g = Graph::from_edges::<String>(&v, &[]).unwrap();
        g.link(0, 1);
        for i in 0..n {
            g.link(0, 2 + i);
            g.link(1, 2 + i);
        }
        g
    }

    /// A 4-cycle with one extra vertex on each side, adjacent to that side's
    /// endpoints. Every outer vertex is simplicial; removing them leaves the
    /// 4-cycle.
    pub fn c4_with_ears() -> Graph {
        let v: Vec<String> = ["a", "b", "c", "d", "x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        let e = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("x", "a"), ("x", "b"), ("y", "b"), ("y", "c"), ("z", "c"), ("z", "d"), ("w", "d"), ("w", "a")];
        let e: Vec<_> = e.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        Graph::from_edges(&v, &e).unwrap()
    }

    /// Two triangles sharing vertex `c`.
    pub fn bowtie() -> Graph {
        let v: Vec<String> = ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect();
        let e = [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "c")];
        let e: Vec<_> = e.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        Graph::from_edges(&v, &e).unwrap()
    }

    /// Octahedron: outer triangle `a b c`, inner triangle `x y z`.
    pub fn octahedron() -> Graph {
        let v: Vec<String> = ["a", "b", "c", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let e = [
            ("a", "b"), ("b", "c"), ("c", "a"), ("x", "y"), ("y", "z"), ("z", "x"),
            ("a", "x"), ("a", "y"), ("b", "y"), ("b", "z"), ("c", "z"), ("c", "x"),
        ];
        let e: Vec<_> = e.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        Graph::from_edges(&v, &e).unwrap()
    }

    /// Uniform-ish random labelled tree on `n` vertices (random parent for
    /// each vertex after the first).
    pub fn random_tree<R: rand::Rng>(rng: &mut R, n: usize) -> Graph {
        let v = named("t", n);
        let mut g = Graph::from_edges::<String>(&v, &[]).unwrap();
        for i in 1..n {
            let p = rng.gen_range(0..i);
            g.link(p, i);
        }
        g
    }
}
