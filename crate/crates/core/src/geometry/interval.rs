use super::piece::Piece;
use super::point::Point;
use super::scene::Region;
use crate::scalar::Scalar;

/// Closed parameter interval `[lo, hi]`; `lo == hi` is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Scalar,
    pub hi: Scalar,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(t: Scalar) -> Self {
        Interval { lo: t.clone(), hi: t }
    }

    pub fn contains(&self, t: &Scalar) -> bool {
        &self.lo <= t && t <= &self.hi
    }
}

/// Sorted, pairwise disjoint, merged closed intervals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalSet {
    items: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { items: Vec::new() }
    }

    /// Sorts and merges arbitrary closed intervals; touching intervals merge.
    pub fn from_intervals(mut items: Vec<Interval>) -> Self {
        items.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        let mut out: Vec<Interval> = Vec::with_capacity(items.len());
        for it in items {
            match out.last_mut() {
                Some(last) if it.lo <= last.hi => {
                    if it.hi > last.hi {
                        last.hi = it.hi;
                    }
                }
                _ => out.push(it),
            }
        }
        IntervalSet { items: out }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, t: &Scalar) -> bool {
        self.items.iter().any(|i| i.contains(t))
    }
}

/// Parameters `t` with `origin + t * dir` on the piece.
pub fn line_piece_interval(origin: &Point, dir: &Point, piece: &Piece) -> Option<Interval> {
    let len2 = dir.norm2();
    let param = |p: &Point| &p.sub(origin).dot(dir) / &len2;
    let side = |p: &Point| dir.cross(&p.sub(origin));
    match piece {
        Piece::Point(p) => side(p).is_zero().then(|| Interval::point(param(p))),
        Piece::Segment(a, b) => {
            let (fa, fb) = (side(a), side(b));
            let ts: Vec<Scalar> = crossing_params(a, b, &fa, &fb, &param);
            span(ts)
        }
        Piece::Polygon(v) => {
            let f: Vec<Scalar> = v.iter().map(side).collect();
            let n = v.len();
            let mut ts = Vec::new();
            for i in 0..n {
                let j = (i + 1) % n;
                if f[i].is_zero() {
                    ts.push(param(&v[i]));
                } else if f[i].signum() * f[j].signum() < 0 {
                    ts.push(cross_param(&v[i], &v[j], &f[i], &f[j], &param));
                }
            }
            span(ts)
        }
    }
}

fn crossing_params(
    a: &Point,
    b: &Point,
    fa: &Scalar,
    fb: &Scalar,
    param: &impl Fn(&Point) -> Scalar,
) -> Vec<Scalar> {
    let mut ts = Vec::new();
    if fa.is_zero() {
        ts.push(param(a));
    }
    if fb.is_zero() {
        ts.push(param(b));
    }
    if fa.signum() * fb.signum() < 0 {
        ts.push(cross_param(a, b, fa, fb, param));
    }
    ts
}

fn cross_param(a: &Point, b: &Point, fa: &Scalar, fb: &Scalar, param: &impl Fn(&Point) -> Scalar) -> Scalar {
    let s = fa / &(fa - fb);
    param(&a.lerp(b, &s))
}

fn span(ts: Vec<Scalar>) -> Option<Interval> {
    let mut it = ts.into_iter();
    let first = it.next()?;
    let (lo, hi) = it.fold((first.clone(), first), |(lo, hi), t| (lo.min(t.clone()), hi.max(t)));
    Some(Interval::new(lo, hi))
}

/// Exact merged parameter intervals of `{t : origin + t*dir in region}`.
pub fn line_region_intervals(origin: &Point, dir: &Point, region: &Region) -> IntervalSet {
    assert!(!dir.is_origin(), "line direction must be nonzero");
    IntervalSet::from_intervals(
        region.pieces.iter().filter_map(|pc| line_piece_interval(origin, dir, pc)).collect(),
    )
}
