use std::fmt;

use crate::scalar::Scalar;

/// A point (or free vector) with exact rational coordinates.
///
/// Ordering is lexicographic on `(x, y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

/// Integer point shorthand.
pub fn pt(x: i64, y: i64) -> Point {
    Point::new(Scalar::from_int(x), Scalar::from_int(y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn cross(&self, o: &Point) -> Scalar {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Point) -> Scalar {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Scalar) -> Point {
        self.add(&other.sub(self).scale(t))
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new(self.x.midpoint(&other.x), self.y.midpoint(&other.y))
    }

    pub fn dist2(&self, other: &Point) -> Scalar {
        self.sub(other).norm2()
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(q - p) x (r - p)`.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    match orient_sign(p, q, r) {
        1 => Orientation::Ccw,
        -1 => Orientation::Cw,
        _ => Orientation::Collinear,
    }
}

pub(crate) fn orient_sign(p: &Point, q: &Point, r: &Point) -> i32 {
    if let (Some(px), Some(py), Some(qx), Some(qy), Some(rx), Some(ry)) = (
        int_of(&p.x),
        int_of(&p.y),
        int_of(&q.x),
        int_of(&q.y),
        int_of(&r.x),
        int_of(&r.y),
    ) {
        // |coords| < 2^62 keeps every product below 2^126.
        let v = (qx - px) * (ry - py) - (qy - py) * (rx - px);
        return v.signum() as i32;
    }
    q.sub(p).cross(&r.sub(p)).signum()
}

fn int_of(s: &Scalar) -> Option<i128> {
    match s.as_small() {
        Some((n, 1)) if n.unsigned_abs() < (1 << 62) => Some(n as i128),
        _ => None,
    }
}

/// Squared distance from `p` to the closed segment `ab`.
pub fn point_segment_dist2(p: &Point, a: &Point, b: &Point) -> Scalar {
    let ab = b.sub(a);
    let ap = p.sub(a);
    let len2 = ab.norm2();
    if len2.is_zero() {
        return ap.norm2();
    }
    let t = ap.dot(&ab);
    if !t.is_positive() {
        return ap.norm2();
    }
    if t >= len2 {
        return p.dist2(b);
    }
    // |ap|^2 - (ap.ab)^2/|ab|^2
    let c = ap.cross(&ab);
    &(&c * &c) / &len2
}
