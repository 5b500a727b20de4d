//! Direct constructions for trees and `K_{1,1,n}`.

use super::{gate, ConstructError};
use crate::geometry::{pt, Piece, Point, Region, Scene};
use crate::graph::{families, is_tree, Graph};
use crate::scalar::Scalar;

/// Nested cups. The least-named vertex is the root; children are placed left
/// to right in name order. A leaf at depth `d` is the point `(x, d)`. An
/// internal vertex at depth `d` is a cup: a base at height `d` with walls at
/// both ends and a tooth between consecutive child slots, all rising to the
/// common top `T = max depth + 1`. Each child sits in its own slot one unit
/// above the base, so it sees its parent straight down, the teeth keep
/// siblings apart, and a cup's own walls and base hide everything inside it
/// from the outside (nothing lies above `T`).
pub fn construct_tree(t: &Graph) -> Result<Scene, ConstructError> {
    if !is_tree(t) {
        return Err(ConstructError::NotATree);
    }
    let n = t.n();
    let root = (0..n).min_by(|&a, &b| t.name(a).cmp(t.name(b))).expect("nonempty");
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0i64; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut k = 0;
    while k < order.len() {
        let v = order[k];
        k += 1;
        let mut kids: Vec<usize> = t.neighbors(v).iter().copied().filter(|&c| c != parent[v] && c != root).collect();
        kids.sort_by(|&a, &b| t.name(a).cmp(t.name(b)));
        for &c in &kids {
            parent[c] = v;
            depth[c] = depth[v] + 1;
            order.push(c);
        }
        children[v] = kids;
    }
    let top = depth.iter().max().copied().unwrap_or(0) + 1;
    let mut width = vec![0i64; n];
    for &v in order.iter().rev() {
        width[v] = children[v].iter().map(|&c| width[c] + 2).sum();
    }
    let mut x = vec![0i64; n];
    let mut pieces: Vec<Vec<Piece>> = vec![Vec::new(); n];
    for &v in &order {
        let (x0, d) = (x[v], depth[v]);
        if children[v].is_empty() {
            pieces[v].push(Piece::Point(pt(x0, d)));
            continue;
        }
        let x1 = x0 + width[v];
        let post = |px: i64| Piece::seg(pt(px, d), pt(px, top));
        pieces[v].extend([Piece::seg(pt(x0, d), pt(x1, d)), post(x0), post(x1)]);
        let mut cursor = x0 + 1;
        let last = children[v].len() - 1;
        for (i, &c) in children[v].iter().enumerate() {
            x[c] = cursor;
            cursor += width[c] + 2;
            if i < last {
                pieces[v].push(post(cursor - 1));
            }
        }
    }
    let regions = pieces.into_iter().enumerate().map(|(v, ps)| Region::new(t.name(v), ps)).collect();
    gate(t, Scene::new(regions))
}

/// Comb for `K_{1,1,n}`: hub `u` is a base segment along the x-axis with
/// teeth of height 2 between consecutive slots, leaves `w_i` are the points
/// `(i, 1)`, and hub `v` is the point `(0, 2n + 2)`, high enough that every
/// segment from a leaf to `v` clears the teeth.
pub fn construct_k11n(n: usize) -> Result<Scene, ConstructError> {
    let g = families::k11n(n);
    let half = Scalar::ratio(1, 2);
    let at = |x: Scalar, y: i64| Point::new(x, Scalar::from_int(y));
    let u = if n == 0 {
        vec![Piece::Point(pt(0, 0))]
    } else {
        let mut ps = vec![Piece::seg(at(-&half, 0), at(Scalar::from_int(n as i64) - &half, 0))];
        for i in 0..n - 1 {
            let tx = Scalar::from_int(i as i64) + &half;
            ps.push(Piece::seg(at(tx.clone(), 0), at(tx, 2)));
        }
        ps
    };
    let mut regions = vec![Region::new("u", u), Region::new("v", vec![Piece::Point(pt(0, 2 * n as i64 + 2))])];
    for i in 0..n {
        regions.push(Region::new(format!("w{i}"), vec![Piece::Point(pt(i as i64, 1))]));
    }
    gate(&g, Scene::new(regions))
}
