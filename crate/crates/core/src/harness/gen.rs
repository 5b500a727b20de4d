use rand::Rng;

use super::{FuzzConfig, HarnessError};
use crate::geometry::{orient, pieces_intersect, pt, validate_scene, Orientation, Piece, Point, Region, Scene};

/// Attempts per piece before the whole scene is abandoned.
const PIECE_ATTEMPTS: usize = 400;
const SCENE_ATTEMPTS: usize = 20;

/// Strictly convex hull, counterclockwise, collinear points dropped.
pub(crate) fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Orientation::Ccw {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Orientation::Ccw {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn coord<R: Rng>(rng: &mut R, r: i64) -> i64 {
    rng.gen_range(-r..=r)
}

fn near<R: Rng>(rng: &mut R, p: (i64, i64), span: i64, r: i64) -> (i64, i64) {
    ((p.0 + rng.gen_range(-span..=span)).clamp(-r, r), (p.1 + rng.gen_range(-span..=span)).clamp(-r, r))
}

fn kind<R: Rng>(rng: &mut R, mix: &[u32; 3]) -> usize {
    let total: u32 = mix.iter().sum();
    let mut x = rng.gen_range(0..total);
    for (k, &w) in mix.iter().enumerate() {
        if x < w {
            return k;
        }
        x -= w;
    }
    unreachable!("weights sum to total")
}

/// A random piece of the given kind around `anchor` (or anywhere).
fn random_piece<R: Rng>(rng: &mut R, k: usize, r: i64, anchor: Option<(i64, i64)>) -> Option<Piece> {
    let base = anchor.unwrap_or_else(|| (coord(rng, r), coord(rng, r)));
    let span = (r / 4).max(2);
    match k {
        0 => Some(Piece::Point(pt(base.0, base.1))),
        1 => {
            let b = near(rng, base, span, r);
            (b != base).then(|| Piece::seg(pt(base.0, base.1), pt(b.0, b.1)))
        }
        _ => {
            let box_span = (r / 8).max(2);
            let count = rng.gen_range(3..=5);
            let mut pts = vec![pt(base.0, base.1)];
            for _ in 1..count {
                let q = near(rng, base, box_span, r);
                pts.push(pt(q.0, q.1));
            }
            let hull = convex_hull(pts);
            (hull.len() >= 3).then_some(Piece::Polygon(hull))
        }
    }
}

fn clashes(p: &Piece, others: &[Region]) -> bool {
    others.iter().any(|r| r.pieces.iter().any(|q| pieces_intersect(p, q)))
}

fn to_int(p: &Point) -> (i64, i64) {
    let x = p.x.as_small().expect("generated coordinates are small integers").0;
    let y = p.y.as_small().expect("generated coordinates are small integers").0;
    (x, y)
}

fn try_scene<R: Rng>(rng: &mut R, c: &FuzzConfig) -> Option<Scene> {
    let count = rng.gen_range(c.regions_min..=c.regions_max);
    let r = c.coord_range;
    let mut regions: Vec<Region> = Vec::with_capacity(count);
    for idx in 0..count {
        let mut first = None;
        for _ in 0..PIECE_ATTEMPTS {
            let k = kind(rng, &c.piece_mix);
            if let Some(p) = random_piece(rng, k, r, None) {
                if !clashes(&p, &regions) {
                    first = Some(p);
                    break;
                }
            }
        }
        let mut pieces = vec![first?];
        if !c.convex_only && rng.gen_bool(0.4) {
            // extra pieces anchored at a vertex of the region so far
            let extra = rng.gen_range(1..=3);
            for _ in 0..extra {
                for _ in 0..PIECE_ATTEMPTS / 8 {
                    let verts: Vec<Point> = pieces.iter().flat_map(Piece::vertex_vec).collect();
                    let anchor = to_int(&verts[rng.gen_range(0..verts.len())]);
                    let k = 1 + usize::from(c.piece_mix[2] > 0 && rng.gen_bool(0.3));
                    if let Some(p) = random_piece(rng, k, r, Some(anchor)) {
                        if !clashes(&p, &regions) && !pieces.contains(&p) {
                            pieces.push(p);
                            break;
                        }
                    }
                }
            }
        }
        regions.push(Region::new(format!("r{idx}"), pieces));
    }
    let s = Scene::new(regions);
    validate_scene(&s).is_valid().then_some(s)
}

pub fn random_scene(c: &FuzzConfig, iteration: usize) -> Result<Scene, HarnessError> {
    c.validate()?;
    let mut rng = crate::rng::stream(c.seed, iteration as u64);
    for _ in 0..SCENE_ATTEMPTS {
        if let Some(s) = try_scene(&mut rng, c) {
            return Ok(s);
        }
    }
    Err(HarnessError::GenerationExhausted { iteration, attempts: SCENE_ATTEMPTS })
}
