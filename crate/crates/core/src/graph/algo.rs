use super::{EdgeSet, Graph};

/// Edges whose removal disconnects their component (iterative low-link DFS).
pub fn bridges(g: &Graph) -> EdgeSet {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = EdgeSet::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, remaining neighbors)
        let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, g.neighbors(root).iter().rev().copied().collect()));
        while let Some((v, parent, rest)) = stack.last_mut() {
            let (v, parent) = (*v, *parent);
            if let Some(w) = rest.pop() {
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, g.neighbors(w).iter().rev().copied().collect()));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some((p, _, _)) = stack.last() {
                    let p = *p;
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.insert(g.key(p, v));
                    }
                }
            }
        }
    }
    out
}

pub fn edge_in_triangle(g: &Graph, i: usize, j: usize) -> bool {
    let (a, b) = if g.degree(i) <= g.degree(j) { (i, j) } else { (j, i) };
    g.neighbors(a).iter().any(|&k| k != b && g.adjacent(k, b))
}

/// Edges that are neither bridges nor in a triangle.
pub fn bridge_or_triangle_violations(g: &Graph) -> EdgeSet {
    let br = bridges(g);
    g.edges()
        .into_iter()
        .filter(|&(i, j)| !edge_in_triangle(g, i, j))
        .map(|(i, j)| g.key(i, j))
        .filter(|k| !br.contains(k))
        .collect()
}

/// Some 4-clique, names sorted, if one exists.
pub fn contains_k4(g: &Graph) -> Option<[String; 4]> {
    for (u, v) in g.edges() {
        let common: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| w > v && g.adjacent(v, w)).collect();
        for (k, &x) in common.iter().enumerate() {
            if let Some(&y) = common[k + 1..].iter().find(|&&y| g.adjacent(x, y)) {
                let mut names = [u, v, x, y].map(|i| g.name(i).to_string());
                names.sort();
                return Some(names);
            }
        }
    }
    None
}

/// The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n()
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g)
}

/// Hubs and leaves of a graph isomorphic to `K_{1,1,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K11nParts {
    pub hubs: [String; 2],
    pub leaves: Vec<String>,
}

/// Recognizes `K_{1,1,n}`: two adjacent hubs of degree `n+1`, both adjacent
/// to `n` pairwise non-adjacent vertices of degree 2. For `n = 1` (a
/// triangle) the hubs are the two least-named vertices; for `n = 0` the
/// graph is a single edge.
pub fn k11n_parts(g: &Graph) -> Option<K11nParts> {
    let n = g.n().checked_sub(2)?;
    if g.m() != 2 * n + 1 {
        return None;
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.name(a).cmp(g.name(b)));
    let hubs: Vec<usize> = if n == 1 {
        order[..2].to_vec()
    } else {
        order.iter().copied().filter(|&i| g.degree(i) == n + 1).collect()
    };
    if hubs.len() != 2 || !g.adjacent(hubs[0], hubs[1]) {
        return None;
    }
    let leaves: Vec<usize> = order.iter().copied().filter(|i| !hubs.contains(i)).collect();
    let ok = leaves.iter().all(|&w| g.degree(w) == 2 && g.adjacent(w, hubs[0]) && g.adjacent(w, hubs[1]));
    ok.then(|| K11nParts {
        hubs: [g.name(hubs[0]).to_string(), g.name(hubs[1]).to_string()],
        leaves: leaves.iter().map(|&i| g.name(i).to_string()).collect(),
    })
}

fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nb: Vec<usize> = g.neighbors(v).iter().copied().collect();
    nb.iter().enumerate().all(|(k, &a)| nb[k + 1..].iter().all(|&b| g.adjacent(a, b)))
}

/// Vertices whose neighborhood is a clique, in name order.
pub fn simplicial_vertices(g: &Graph) -> Vec<String> {
    let mut out: Vec<String> = (0..g.n()).filter(|&v| is_simplicial(g, v)).map(|v| g.name(v).to_string()).collect();
    out.sort();
    out
}

/// Repeatedly deletes the least-named simplicial vertex while more than one
/// vertex remains. Returns the final graph and the deletion order.
pub fn simplicial_reduce(g: &Graph) -> (Graph, Vec<String>) {
    let mut cur = g.clone();
    let mut removed = Vec::new();
    while cur.n() > 1 {
        let Some(v) = simplicial_vertices(&cur).into_iter().next() else { break };
        cur = cur.without_vertex(&v);
        removed.push(v);
    }
    (cur, removed)
}

/// Every intermediate graph of [`simplicial_reduce`], starting with `g`.
pub(crate) fn reduction_chain(g: &Graph) -> Vec<(Option<String>, Graph)> {
    let mut out = vec![(None, g.clone())];
    let (_, removed) = simplicial_reduce(g);
    let mut cur = g.clone();
    for v in removed {
        cur = cur.without_vertex(&v);
        out.push((Some(v), cur.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn set(pairs: &[(&str, &str)]) -> EdgeSet {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(bridges(&path(4)).len(), 3);
        assert!(bridges(&cycle(5)).is_empty());
        assert!(bridges(&bowtie()).is_empty());
    }

    #[test]
    fn violation_examples() {
        assert_eq!(bridge_or_triangle_violations(&cycle(4)), cycle(4).edge_set());
        assert!(bridge_or_triangle_violations(&path(6)).is_empty());
        assert!(bridge_or_triangle_violations(&complete(4)).is_empty());
        // a triangle with a pendant 4-cycle attached
        let mut g = complete(3);
        for v in ["p", "q", "r"] {
            g.add_vertex(v).unwrap();
        }
        for (a, b) in [("v0", "p"), ("p", "q"), ("q", "r"), ("r", "v0")] {
            g.add_edge(a, b).unwrap();
        }
        assert_eq!(bridge_or_triangle_violations(&g), set(&[("p", "q"), ("p", "v0"), ("q", "r"), ("r", "v0")]));
    }

    #[test]
    fn k4_examples() {
        assert_eq!(contains_k4(&complete(4)), Some(["v0", "v1", "v2", "v3"].map(String::from)));
        assert_eq!(contains_k4(&complete_bipartite(3, 3)), None);
        let mut g = complete(5);
        g = {
            let mut h = Graph::from_edges::<String>(g.names(), &[]).unwrap();
            for (i, j) in g.edges() {
                if (i, j) != (0, 1) && (i, j) != (2, 3) {
                    h.link(i, j);
                }
            }
            h
        };
        assert_eq!(contains_k4(&g), None);
    }

    #[test]
    fn k11n_recognition() {
        for n in 0..6 {
            let p = k11n_parts(&k11n(n)).unwrap_or_else(|| panic!("n={n}"));
            assert_eq!(p.leaves.len(), n);
        }
        assert!(k11n_parts(&complete(4)).is_none());
        assert!(k11n_parts(&cycle(4)).is_none());
        assert!(k11n_parts(&path(3)).is_none());
    }

    #[test]
    fn reduction_examples() {
        let (g, removed) = simplicial_reduce(&c4_with_ears());
        assert_eq!(g.edge_set(), cycle(4).edge_set().into_iter().map(|(a, b)| {
            let m = |s: &str| ["a", "b", "c", "d"][s[1..].parse::<usize>().unwrap()].to_string();
            let (x, y) = (m(&a), m(&b));
            if x < y { (x, y) } else { (y, x) }
        }).collect());
        assert_eq!(removed, vec!["w", "x", "y", "z"]);
        assert_eq!(simplicial_reduce(&complete(6)).0.n(), 1);
        assert_eq!(simplicial_reduce(&path(7)).0.n(), 1);
        assert!(simplicial_reduce(&cycle(5)).1.is_empty());
    }
}
