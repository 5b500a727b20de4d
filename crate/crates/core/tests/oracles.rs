//! Sanity checks on the brute-force reference implementations themselves.

mod common;

use common::{graph, trees, Dense};
use visgraph::graph::families;

#[test]
fn kuratowski_graphs_are_nonplanar() {
    assert!(!Dense::of(&families::complete(5)).planar());
    assert!(!Dense::of(&families::complete_bipartite(3, 3)).planar());
    let k33 = families::complete_bipartite(3, 3);
    let edges: Vec<(String, String)> = k33.edge_set().into_iter().filter(|e| e != &("a0".into(), "b0".into())).collect();
    let k33_minus = visgraph::graph::Graph::from_edges(k33.names(), &edges).unwrap();
    assert!(Dense::of(&k33_minus).planar());
    assert!(Dense::of(&families::octahedron()).planar());
    assert!(Dense::of(&families::complete(4)).planar());
}

#[test]
fn subdivided_k33_is_caught_by_the_minor_search() {
    // K3,3 with one edge subdivided: 7 vertices, 10 edges, passes the Euler bound
    let g = graph(
        &["a", "b", "c", "x", "y", "z", "s"],
        &[
            ("a", "x"), ("a", "y"), ("a", "s"), ("s", "z"),
            ("b", "x"), ("b", "y"), ("b", "z"),
            ("c", "x"), ("c", "y"), ("c", "z"),
        ],
    );
    assert!(!Dense::of(&g).planar());
}

#[test]
fn bridges_triangles_and_k4() {
    let bowtie = Dense::of(&families::bowtie());
    assert!(bowtie.bridges().is_empty());
    assert!(bowtie.edges().iter().all(|&(i, j)| bowtie.in_triangle(i, j)));
    assert!(!bowtie.k4());
    let p4 = Dense::of(&families::path(4));
    assert_eq!(p4.bridges().len(), 3);
    assert!(Dense::of(&families::complete(4)).k4());
    assert!(Dense::of(&families::cycle(5)).connected());
    assert!(!Dense::of(&graph(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")])).connected());
}

#[test]
fn unlabelled_tree_counts() {
    let counts: Vec<usize> = (1..=8).map(|n| trees(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
}
