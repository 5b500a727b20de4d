//! Interlocking hooks for drawings whose internal faces are triangles.
//!
//! Edge `uv` (with `u` the smaller name, `w = v - u`, `n` a quarter turn of
//! `w` towards the hook side, `m` the midpoint) becomes two polylines:
//!
//! ```text
//! u:  u -> m -> m + g*n -> m + g*n + 2d*w
//! v:  v -> m + d*w -> m + d*w + (g/2)*n
//! ```
//!
//! The halves see each other along the edge line through the gap
//! `(m, m + d*w)`, while any other line crossing the edge near the gap is
//! caught by one of the two hooks.

use std::collections::BTreeSet;

use super::{drawing::validate_drawing, verify_roundtrip, ConstructError, PlaneDrawing};
use crate::geometry::{point_segment_dist2, validate_scene, Piece, Point, Region, Scene};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Hook overlap `delta` and height `gamma` as fractions of the edge length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    pub delta: Scalar,
    pub gamma: Scalar,
    pub retries: usize,
}

impl Default for ConstructionParams {
    fn default() -> Self {
        ConstructionParams { delta: Scalar::ratio(1, 8), gamma: Scalar::ratio(1, 8), retries: 8 }
    }
}

/// Every hook stays strictly within half the local feature size around its
/// edge midpoint (squared distances, so no square roots).
fn params_fit(g: &Graph, pos: &[Point], delta: &Scalar, gamma: &Scalar) -> bool {
    let edges = g.edges();
    let reach = gamma + &(delta + delta);
    let reach2 = &reach * &reach;
    let four = Scalar::from_int(4);
    edges.iter().all(|&(a, b)| {
        let m = pos[a].midpoint(&pos[b]);
        let r2 = &reach2 * &pos[b].sub(&pos[a]).norm2();
        let near_edge = edges
            .iter()
            .filter(|&&e| e != (a, b))
            .map(|&(c, d)| point_segment_dist2(&m, &pos[c], &pos[d]));
        let near_vertex = (0..g.n()).filter(|&z| z != a && z != b).map(|z| m.dist2(&pos[z]));
        near_edge.chain(near_vertex).all(|lfs2| &four * &r2 < lfs2)
    })
}

fn hook_scene(g: &Graph, pos: &[Point], outer: &BTreeSet<(String, String)>, delta: &Scalar, gamma: &Scalar) -> Scene {
    let mut pieces: Vec<Vec<Piece>> = vec![Vec::new(); g.n()];
    let half_gamma = gamma * &Scalar::ratio(1, 2);
    for (i, j) in g.edges() {
        let (u, v) = if g.name(i) < g.name(j) { (i, j) } else { (j, i) };
        let (pu, pv) = (&pos[u], &pos[v]);
        let w = pv.sub(pu);
        let left = !outer.contains(&(g.name(u).to_string(), g.name(v).to_string()));
        let n = if left { w.perp() } else { w.perp().scale(&-Scalar::one()) };
        let m = pu.midpoint(pv);
        let up = m.add(&n.scale(gamma));
        let tip = up.add(&w.scale(&(delta + delta)));
        pieces[u].extend([Piece::seg(pu.clone(), m.clone()), Piece::seg(m.clone(), up.clone()), Piece::seg(up, tip)]);
        let foot = m.add(&w.scale(delta));
        let post = foot.add(&n.scale(&half_gamma));
        pieces[v].extend([Piece::seg(pv.clone(), foot.clone()), Piece::seg(foot, post)]);
    }
    let regions = pieces
        .into_iter()
        .enumerate()
        .map(|(k, ps)| {
            let ps = if ps.is_empty() { vec![Piece::Point(pos[k].clone())] } else { ps };
            Region::new(g.name(k), ps)
        })
        .collect();
    Scene::new(regions)
}

/// Builds and verifies a hook scene for a drawing with triangular internal
/// faces and a convex outer face. Hooks on boundary edges point inwards;
/// hooks on internal edges point to the left of the smaller-to-larger name
/// direction. Parameters halve on every failed attempt.
pub fn construct_triangulated(g: &Graph, d: &PlaneDrawing, p: &ConstructionParams) -> Result<Scene, ConstructError> {
    if !p.delta.is_positive() || !p.gamma.is_positive() {
        return Err(ConstructError::InvalidParams);
    }
    let report = validate_drawing(g, d);
    if !report.is_valid() {
        return Err(ConstructError::InvalidDrawing(report));
    }
    let outer = report.outer_darts();
    let pos: Vec<Point> = g.names().iter().map(|n| d.vertices[n].clone()).collect();
    let (mut delta, mut gamma) = (p.delta.clone(), p.gamma.clone());
    let half = Scalar::ratio(1, 2);
    let mut last = None;
    for _ in 0..=p.retries {
        if params_fit(g, &pos, &delta, &gamma) {
            let s = hook_scene(g, &pos, &outer, &delta, &gamma);
            if validate_scene(&s).is_valid() {
                let diff = verify_roundtrip(g, &s)?;
                if diff.is_empty() {
                    return Ok(s);
                }
                last = Some(diff);
            }
        }
        delta = &delta * &half;
        gamma = &gamma * &half;
    }
    Err(match last {
        Some(diff) => ConstructError::VerificationFailed(diff),
        None => ConstructError::NoFit,
    })
}
