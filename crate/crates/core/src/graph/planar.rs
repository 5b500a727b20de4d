//! Demoucron–Malgrange–Pertuiset planarity test, run per biconnected block.

use std::collections::BTreeSet;

use super::algo::contains_k4;
use super::Graph;

/// Edge-disjoint biconnected blocks, each as a sorted edge list.
pub(crate) fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            vec![(root, usize::MAX, g.neighbors(root).iter().rev().copied().collect())];
        while let Some((v, parent, rest)) = stack.last_mut() {
            let (v, parent) = (*v, *parent);
            if let Some(w) = rest.pop() {
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    estack.push((v.min(w), v.max(w)));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, g.neighbors(w).iter().rev().copied().collect()));
                } else if disc[w] < disc[v] {
                    estack.push((v.min(w), v.max(w)));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some((p, _, _)) = stack.last() {
                    let p = *p;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let key = (p.min(v), p.max(v));
                        let mut block = Vec::new();
                        while let Some(e) = estack.pop() {
                            block.push(e);
                            if e == key {
                                break;
                            }
                        }
                        block.sort();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Some cycle of a biconnected block with at least two edges, as a vertex list.
fn find_cycle(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    // DFS until a back edge closes a cycle through the tree path
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(start, 0usize)];
    depth[start] = 0;
    while let Some((v, k)) = stack.pop() {
        if k < adj[v].len() {
            stack.push((v, k + 1));
            let w = adj[v][k];
            if w == parent[v] {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if depth[w] < depth[v] {
                let mut cyc = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        }
    }
    unreachable!("biconnected block with three or more vertices has a cycle")
}

struct Fragment {
    contacts: BTreeSet<usize>,
    /// path between two distinct contacts through the fragment
    path: Vec<usize>,
}

/// Splits face `f` along `path` whose endpoints lie on `f`.
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = f.len();
    let (a, b) = (path[0], path[path.len() - 1]);
    let ia = f.iter().position(|&x| x == a).expect("path start on face");
    let ib = f.iter().position(|&x| x == b).expect("path end on face");
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(f[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % k;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(f[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % k;
    }
    f2.extend(inner.iter());
    (f1, f2)
}

/// Embeds one biconnected block with at least three vertices; returns the
/// face cycles on success.
fn embed_block(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let start = edges[0].0;
    let cycle = find_cycle(&adj, start);
    let mut in_h = vec![false; n];
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (k, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(k + 1) % cycle.len()];
        h_edges.insert((v.min(w), v.max(w)));
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];
    while h_edges.len() < edges.len() {
        let frags = fragments(&adj, edges, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| fr.contacts.iter().all(|c| faces[k].contains(c)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("fragments remain while edges remain");
        let path = &frags[fi].path;
        let (f1, f2) = split_face(&faces[face], path);
        faces[face] = f1;
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

fn fragments(adj: &[Vec<usize>], edges: &[(usize, usize)], in_h: &[bool], h_edges: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &(a, b) in edges {
        if in_h[a] && in_h[b] && !h_edges.contains(&(a, b)) {
            out.push(Fragment { contacts: [a, b].into_iter().collect(), path: vec![a, b] });
        }
    }
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let active: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    for &s in &active {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = s;
        let mut members = vec![s];
        comp[s] = id;
        let mut k = 0;
        let mut contacts = BTreeSet::new();
        while k < members.len() {
            let v = members[k];
            k += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    contacts.insert(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        // path: from the first contact into the component, out to another contact
        let a = *contacts.iter().next().expect("block fragments touch the embedded part");
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for &w in &adj[a] {
            if comp[w] == id && prev[w] == usize::MAX {
                prev[w] = a;
                queue.push_back(w);
            }
        }
        let mut end = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if in_h[w] && w != a {
                    end = Some((v, w));
                    break 'bfs;
                }
                if comp[w] == id && prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let (last, b) = end.expect("block fragments have two contacts");
        let mut path = vec![b, last];
        let mut x = last;
        while prev[x] != a {
            x = prev[x];
            path.push(x);
        }
        path.push(a);
        path.reverse();
        out.push(Fragment { contacts, path });
    }
    out
}

/// Face cycles of a planar embedding for each biconnected block with a
/// cycle; `None` if the graph is not planar.
pub fn planar_faces(g: &Graph) -> Option<Vec<Vec<Vec<String>>>> {
    let mut out = Vec::new();
    for block in blocks(g) {
        if block.len() < 3 {
            continue;
        }
        let faces = embed_block(g.n(), &block)?;
        out.push(faces.into_iter().map(|f| f.into_iter().map(|v| g.name(v).to_string()).collect()).collect());
    }
    Some(out)
}

pub fn is_planar(g: &Graph) -> bool {
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return false;
    }
    planar_faces(g).is_some()
}

/// Necessary condition for convex compact visibility graphs.
pub fn planar_or_k4(g: &Graph) -> bool {
    contains_k4(g).is_some() || is_planar(g)
}
