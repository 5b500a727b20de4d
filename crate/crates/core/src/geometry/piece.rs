use std::fmt;

use super::point::{orient_sign, Point};
use crate::scalar::Scalar;

/// Atomic convex building block of a region.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Piece {
    Point(Point),
    Segment(Point, Point),
    /// Strictly convex, counterclockwise, at least three vertices.
    Polygon(Vec<Point>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PieceError {
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("polygon has {0} vertices, need at least 3")]
    TooFewVertices(usize),
    #[error("polygon repeats vertex {0}")]
    RepeatedVertex(String),
    #[error("polygon is not strictly convex at vertex {0}")]
    NotStrictlyConvex(usize),
    #[error("polygon vertices are not in counterclockwise order")]
    NotCounterclockwise,
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl BBox {
    pub fn of_points<'a>(mut pts: impl Iterator<Item = &'a Point>) -> BBox {
        let first = pts.next().expect("bbox of empty point set");
        let (mut lx, mut ly, mut hx, mut hy) =
            (first.x.clone(), first.y.clone(), first.x.clone(), first.y.clone());
        for p in pts {
            if p.x < lx {
                lx = p.x.clone();
            }
            if p.x > hx {
                hx = p.x.clone();
            }
            if p.y < ly {
                ly = p.y.clone();
            }
            if p.y > hy {
                hy = p.y.clone();
            }
        }
        BBox { min: Point::new(lx, ly), max: Point::new(hx, hy) }
    }

    pub fn overlaps(&self, o: &BBox) -> bool {
        self.min.x <= o.max.x && o.min.x <= self.max.x && self.min.y <= o.max.y && o.min.y <= self.max.y
    }

    pub fn union(&self, o: &BBox) -> BBox {
        BBox {
            min: Point::new(self.min.x.clone().min(o.min.x.clone()), self.min.y.clone().min(o.min.y.clone())),
            max: Point::new(self.max.x.clone().max(o.max.x.clone()), self.max.y.clone().max(o.max.y.clone())),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }
}

impl Piece {
    pub fn seg(a: Point, b: Point) -> Piece {
        Piece::Segment(a, b)
    }

    pub fn check(&self) -> Result<(), PieceError> {
        match self {
            Piece::Point(_) => Ok(()),
            Piece::Segment(a, b) => {
                if a == b {
                    Err(PieceError::DegenerateSegment)
                } else {
                    Ok(())
                }
            }
            Piece::Polygon(v) => check_polygon(v),
        }
    }

    /// All vertices (point, both segment endpoints, or polygon corners).
    pub fn vertex_vec(&self) -> Vec<Point> {
        match self {
            Piece::Point(p) => vec![p.clone()],
            Piece::Segment(a, b) => vec![a.clone(), b.clone()],
            Piece::Polygon(v) => v.clone(),
        }
    }

    /// Boundary edges; a segment is its own single edge.
    pub fn edges(&self) -> Vec<(&Point, &Point)> {
        match self {
            Piece::Point(_) => Vec::new(),
            Piece::Segment(a, b) => vec![(a, b)],
            Piece::Polygon(v) => (0..v.len()).map(|i| (&v[i], &v[(i + 1) % v.len()])).collect(),
        }
    }

    pub fn bbox(&self) -> BBox {
        match self {
            Piece::Point(p) => BBox { min: p.clone(), max: p.clone() },
            Piece::Segment(a, b) => BBox::of_points([a, b].into_iter()),
            Piece::Polygon(v) => BBox::of_points(v.iter()),
        }
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        match self {
            Piece::Point(q) => p == q,
            Piece::Segment(a, b) => on_segment(p, a, b),
            Piece::Polygon(v) => point_in_convex(p, v),
        }
    }

    pub fn is_polygon(&self) -> bool {
        matches!(self, Piece::Polygon(_))
    }

    /// Image under a point map; polygons are reversed when `flip` is set so
    /// that they stay counterclockwise.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point, flip: bool) -> Piece {
        match self {
            Piece::Point(p) => Piece::Point(f(p)),
            Piece::Segment(a, b) => Piece::Segment(f(a), f(b)),
            Piece::Polygon(v) => {
                let mut out: Vec<Point> = v.iter().map(&f).collect();
                if flip {
                    out.reverse();
                }
                Piece::Polygon(out)
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Piece::Point(_) => "point",
            Piece::Segment(..) => "segment",
            Piece::Polygon(_) => "polygon",
        }
    }
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Point(p) => write!(f, "Pt{p:?}"),
            Piece::Segment(a, b) => write!(f, "Seg{a:?}-{b:?}"),
            Piece::Polygon(v) => write!(f, "Poly{v:?}"),
        }
    }
}

fn check_polygon(v: &[Point]) -> Result<(), PieceError> {
    let n = v.len();
    if n < 3 {
        return Err(PieceError::TooFewVertices(n));
    }
    for i in 0..n {
        for j in i + 1..n {
            if v[i] == v[j] {
                return Err(PieceError::RepeatedVertex(format!("{:?}", v[i])));
            }
        }
    }
    let mut any_cw = false;
    for i in 0..n {
        match orient_sign(&v[i], &v[(i + 1) % n], &v[(i + 2) % n]) {
            0 => return Err(PieceError::NotStrictlyConvex((i + 1) % n)),
            -1 => any_cw = true,
            _ => {}
        }
    }
    if any_cw {
        return Err(PieceError::NotCounterclockwise);
    }
    // All left turns plus a monotone fan rules out multiply wound stars.
    for i in 1..n - 1 {
        if orient_sign(&v[0], &v[i], &v[i + 1]) <= 0 {
            return Err(PieceError::NotCounterclockwise);
        }
    }
    Ok(())
}

/// `p` on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient_sign(a, b, p) == 0 && within_box(p, a, b)
}

fn within_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ly, hy) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    lx <= &p.x && &p.x <= hx && ly <= &p.y && &p.y <= hy
}

/// Closed point-in-convex-polygon test (CCW vertices).
pub fn point_in_convex(p: &Point, v: &[Point]) -> bool {
    let n = v.len();
    (0..n).all(|i| orient_sign(&v[i], &v[(i + 1) % n], p) >= 0)
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient_sign(a, b, c);
    let o2 = orient_sign(a, b, d);
    let o3 = orient_sign(c, d, a);
    let o4 = orient_sign(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within_box(c, a, b))
        || (o2 == 0 && within_box(d, a, b))
        || (o3 == 0 && within_box(a, c, d))
        || (o4 == 0 && within_box(b, c, d))
}

/// Open interiors of `ab` and `cd` cross at a single point.
pub fn segments_cross_properly(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient_sign(a, b, c);
    let o2 = orient_sign(a, b, d);
    let o3 = orient_sign(c, d, a);
    let o4 = orient_sign(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

fn segment_hits_polygon(a: &Point, b: &Point, v: &[Point]) -> bool {
    if point_in_convex(a, v) || point_in_convex(b, v) {
        return true;
    }
    let n = v.len();
    (0..n).any(|i| segments_intersect(a, b, &v[i], &v[(i + 1) % n]))
}

fn polygons_intersect(p: &[Point], q: &[Point]) -> bool {
    if point_in_convex(&p[0], q) || point_in_convex(&q[0], p) {
        return true;
    }
    let (n, m) = (p.len(), q.len());
    (0..n).any(|i| (0..m).any(|j| segments_intersect(&p[i], &p[(i + 1) % n], &q[j], &q[(j + 1) % m])))
}

/// Closed point sets of the two pieces intersect.
pub fn pieces_intersect(p1: &Piece, p2: &Piece) -> bool {
    if !p1.bbox().overlaps(&p2.bbox()) {
        return false;
    }
    pieces_intersect_unboxed(p1, p2)
}

pub(crate) fn pieces_intersect_unboxed(p1: &Piece, p2: &Piece) -> bool {
    use Piece::*;
    match (p1, p2) {
        (Point(p), other) | (other, Point(p)) => other.contains_point(p),
        (Segment(a, b), Segment(c, d)) => segments_intersect(a, b, c, d),
        (Segment(a, b), Polygon(v)) | (Polygon(v), Segment(a, b)) => segment_hits_polygon(a, b, v),
        (Polygon(p), Polygon(q)) => polygons_intersect(p, q),
    }
}

/// Closed segment `ab` meets the piece.
pub fn segment_hits_piece(a: &Point, b: &Point, piece: &Piece) -> bool {
    if a == b {
        return piece.contains_point(a);
    }
    pieces_intersect(&Piece::Segment(a.clone(), b.clone()), piece)
}

/// Vertex average; lies in the piece since pieces are convex.
pub fn piece_centroid(piece: &Piece) -> Point {
    let vs = piece.vertex_vec();
    let k = Scalar::ratio(1, vs.len() as i64);
    let sx = vs.iter().fold(Scalar::zero(), |acc, p| acc + &p.x);
    let sy = vs.iter().fold(Scalar::zero(), |acc, p| acc + &p.y);
    Point::new(sx * &k, sy * k)
}
