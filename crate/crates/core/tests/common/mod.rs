//! Exhaustive reference implementations, deliberately naive and independent
//! of the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use visgraph::graph::Graph;

/// Dense adjacency with vertices in the graph's own order.
pub struct Dense {
    pub names: Vec<String>,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn of(g: &Graph) -> Dense {
        let names = g.names().to_vec();
        let n = names.len();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in g.edge_set() {
            let (i, j) = (names.iter().position(|x| *x == a).unwrap(), names.iter().position(|x| *x == b).unwrap());
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Dense { names, adj }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adj[i][j]).collect()
    }

    pub fn key(&self, i: usize, j: usize) -> (String, String) {
        let (a, b) = (self.names[i].clone(), self.names[j].clone());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Vertices reachable from `s`, optionally ignoring one edge.
    fn reach(&self, s: usize, skip: Option<(usize, usize)>) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.n() {
                let skipped = skip == Some((v, w)) || skip == Some((w, v));
                if self.adj[v][w] && !skipped && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn connected(&self) -> bool {
        self.n() == 0 || self.reach(0, None).iter().all(|&b| b)
    }

    pub fn bridges(&self) -> BTreeSet<(String, String)> {
        self.edges().into_iter().filter(|&(i, j)| !self.reach(i, Some((i, j)))[j]).map(|(i, j)| self.key(i, j)).collect()
    }

    pub fn in_triangle(&self, i: usize, j: usize) -> bool {
        (0..self.n()).any(|k| self.adj[i][k] && self.adj[j][k])
    }

    pub fn k4(&self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d];
                        if q.iter().all(|&x| q.iter().all(|&y| x == y || self.adj[x][y])) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    pub fn simplicial(&self, v: usize) -> bool {
        let nb: Vec<usize> = (0..self.n()).filter(|&w| self.adj[v][w]).collect();
        nb.iter().all(|&x| nb.iter().all(|&y| x == y || self.adj[x][y]))
    }

    fn block_connected(&self, block: &[usize]) -> bool {
        let mut seen = vec![block[0]];
        let mut k = 0;
        while k < seen.len() {
            let v = seen[k];
            k += 1;
            for &w in block {
                if self.adj[v][w] && !seen.contains(&w) {
                    seen.push(w);
                }
            }
        }
        seen.len() == block.len()
    }

    fn blocks_touch(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().any(|&x| b.iter().any(|&y| self.adj[x][y]))
    }

    /// Wagner: planar iff neither K5 nor K3,3 is a minor. Branch sets are
    /// enumerated as restricted growth strings with an "unused" label.
    pub fn planar(&self) -> bool {
        let n = self.n();
        let m = self.edges().len();
        if n >= 3 && m > 3 * n - 6 {
            return false;
        }
        let mut label = vec![0usize; n];
        !self.minor_search(0, 0, &mut label)
    }

    /// `label[v] == 0` means unused, otherwise branch set `label[v] - 1`.
    fn minor_search(&self, v: usize, used: usize, label: &mut Vec<usize>) -> bool {
        if v == self.n() {
            return (used == 5 || used == 6) && self.is_kuratowski_model(used, label);
        }
        for l in 0..=(used + 1).min(6) {
            label[v] = l;
            let next = if l == used + 1 { used + 1 } else { used };
            if self.minor_search(v + 1, next, label) {
                return true;
            }
        }
        false
    }

    fn is_kuratowski_model(&self, k: usize, label: &[usize]) -> bool {
        let blocks: Vec<Vec<usize>> = (1..=k).map(|l| (0..self.n()).filter(|&v| label[v] == l).collect()).collect();
        if !blocks.iter().all(|b| self.block_connected(b)) {
            return false;
        }
        let touch = |a: usize, b: usize| self.blocks_touch(&blocks[a], &blocks[b]);
        if k == 5 {
            return (0..5).all(|a| (a + 1..5).all(|b| touch(a, b)));
        }
        // K3,3: try every split with block 0 on the left
        for x in 1..6 {
            for y in x + 1..6 {
                let left = [0, x, y];
                let right: Vec<usize> = (1..6).filter(|z| !left.contains(z)).collect();
                if left.iter().all(|&a| right.iter().all(|&b| touch(a, b))) {
                    return true;
                }
            }
        }
        false
    }
}

pub fn graph(names: &[&str], edges: &[(&str, &str)]) -> Graph {
    Graph::from_edges(names, edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let mut g = Graph::from_edges::<String>(&names, &[]).unwrap();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(&names[i], &names[j]).unwrap();
            }
        }
    }
    g
}

fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU encoding rooted at `r`.
fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| encode(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical form of an unrooted tree: least encoding over its centers.
fn canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n)
        .filter(|&r| {
            let ecc = |s: usize| {
                let mut dist = vec![usize::MAX; n];
                dist[s] = 0;
                let mut q = std::collections::VecDeque::from([s]);
                while let Some(v) = q.pop_front() {
                    for &w in &adj[v] {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            q.push_back(w);
                        }
                    }
                }
                *dist.iter().max().unwrap()
            };
            let e = ecc(r);
            (0..n).all(|s| ecc(s) >= e)
        })
        .map(|r| encode(&adj, r, usize::MAX))
        .min()
        .unwrap()
}

/// One representative of every unlabelled tree on exactly `n` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    let names: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    let build = |edges: &[(usize, usize)]| {
        let pairs: Vec<(String, String)> = edges.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
        Graph::from_edges(&names, &pairs).unwrap()
    };
    match n {
        0 => return vec![],
        1 => return vec![build(&[])],
        2 => return vec![build(&[(0, 1)])],
        _ => {}
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let edges = prufer_decode(&seq, n);
        if seen.insert(canonical(n, &edges)) {
            out.push(build(&edges));
        }
        let mut k = 0;
        while k < seq.len() && seq[k] == n - 1 {
            seq[k] = 0;
            k += 1;
        }
        if k == seq.len() {
            break;
        }
        seq[k] += 1;
    }
    out
}
