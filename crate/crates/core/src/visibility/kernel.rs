//! Exact sightline sweep over candidate lines.
//!
//! Along any line, the regions it meets occupy pairwise disjoint closed
//! intervals. Two regions have a sightline on that line exactly when one of
//! their intervals directly follows the other with nothing in between; the
//! facing endpoints are then a witness.
//!
//! The label sequence along a line only changes when the line passes through a
//! scene vertex, so it is constant on every face of the arrangement of lines
//! dual to the vertices. The candidate set has one line per face kind:
//!
//! * every line through two distinct vertices,
//! * for every vertex `v`, one line through `v` in each open angular gap
//!   between consecutive directions towards other vertices,
//! * both translates of those lines by half a unit of the (integer) line
//!   offset, which cross no vertex and land in the two adjacent open cells.
//!
//! Coordinates are scaled to integers first; predicates run in checked `i128`
//! and the whole sweep is redone with `BigInt` if anything overflows.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::ring::{cmp_frac, Ring};
use crate::exec::{map_chunks, Exec};
use crate::geometry::{Piece, Point, Scene};
use crate::scalar::{common_denominator, Scalar};

const CHUNK: usize = 64;

#[derive(Debug, Clone)]
enum IPiece {
    Point(usize),
    Segment(usize, usize),
    Polygon(Vec<usize>),
}

struct IntScene<R> {
    verts: Vec<[R; 2]>,
    /// pieces per region, as vertex indices
    regions: Vec<Vec<IPiece>>,
}

/// Vertex index table and integer scale shared by both rings.
struct Layout {
    scaled: Vec<[BigInt; 2]>,
    regions: Vec<Vec<IPiece>>,
    denom: BigInt,
}

impl Layout {
    fn new(scene: &Scene) -> Layout {
        let mut index: BTreeMap<Point, usize> = BTreeMap::new();
        for r in &scene.regions {
            for pc in &r.pieces {
                for v in pc.vertex_vec() {
                    index.entry(v).or_insert(0);
                }
            }
        }
        for (i, v) in index.values_mut().enumerate() {
            *v = i;
        }
        let denom = common_denominator(index.keys().flat_map(|p| [&p.x, &p.y]));
        let scale = |s: &Scalar| -> BigInt {
            // s * denom is integral by construction
            s.numer() * (&denom / s.denom())
        };
        let scaled = index.keys().map(|p| [scale(&p.x), scale(&p.y)]).collect();
        let regions = scene
            .regions
            .iter()
            .map(|r| {
                r.pieces
                    .iter()
                    .map(|pc| match pc {
                        Piece::Point(p) => IPiece::Point(index[p]),
                        Piece::Segment(a, b) => IPiece::Segment(index[a], index[b]),
                        Piece::Polygon(v) => IPiece::Polygon(v.iter().map(|p| index[p]).collect()),
                    })
                    .collect()
            })
            .collect();
        Layout { scaled, regions, denom }
    }

    fn ring<R: Ring>(&self) -> Option<IntScene<R>> {
        let verts = self
            .scaled
            .iter()
            .map(|[x, y]| Some([R::from_big(x)?, R::from_big(y)?]))
            .collect::<Option<Vec<_>>>()?;
        Some(IntScene { verts, regions: self.regions.clone() })
    }

    fn to_point<R: Ring>(&self, h: &Hom<R>) -> Point {
        let den = h.w.to_big() * &self.denom;
        Point::new(Scalar::from_big(h.x.to_big(), den.clone()), Scalar::from_big(h.y.to_big(), den))
    }
}

/// Line `nx*x + ny*y = c`.
#[derive(Debug, Clone)]
struct Line<R> {
    nx: R,
    ny: R,
    c: R,
    /// For two-vertex lines: the defining vertex pair, used to skip repeats.
    pair: Option<(usize, usize)>,
}

/// Homogeneous point `(x/w, y/w)` on the current line with `w > 0`; `t/w` is
/// its position along the line.
#[derive(Debug, Clone)]
struct Hom<R> {
    x: R,
    y: R,
    w: R,
    t: R,
}

impl<R: Ring> Hom<R> {
    fn cmp_pos(&self, o: &Hom<R>) -> Option<Ordering> {
        cmp_frac(&self.t, &self.w, &o.t, &o.w)
    }
}

struct Span<R> {
    region: usize,
    lo: Hom<R>,
    hi: Hom<R>,
}

/// Adjacent pair found on one line: `first`'s interval ends at `p`, the next
/// interval, belonging to `second`, starts at `q`.
struct Contact<R> {
    first: usize,
    second: usize,
    p: Hom<R>,
    q: Hom<R>,
}

fn upper_half<R: Ring>(d: [R; 2]) -> Option<[R; 2]> {
    if d[1].sign() < 0 || (d[1].sign() == 0 && d[0].sign() < 0) {
        Some([d[0].neg()?, d[1].neg()?])
    } else {
        Some(d)
    }
}

fn cross<R: Ring>(a: &[R; 2], b: &[R; 2]) -> Option<R> {
    a[0].mul(&b[1])?.sub(&a[1].mul(&b[0])?)
}

fn line_through<R: Ring>(v: &[R; 2], dir: &[R; 2], pair: Option<(usize, usize)>) -> Option<Line<R>> {
    let nx = dir[1].neg()?;
    let ny = dir[0].clone();
    let c = nx.mul(&v[0])?.add(&ny.mul(&v[1])?)?;
    Some(Line { nx, ny, c, pair })
}

fn candidate_lines<R: Ring>(verts: &[[R; 2]]) -> Option<Vec<Line<R>>> {
    let n = verts.len();
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = [verts[j][0].sub(&verts[i][0])?, verts[j][1].sub(&verts[i][1])?];
            lines.push(line_through(&verts[i], &d, Some((i, j)))?);
        }
    }
    let one = R::from_big(&BigInt::one())?;
    for (i, v) in verts.iter().enumerate() {
        let mut dirs = Vec::with_capacity(n);
        for (j, w) in verts.iter().enumerate() {
            if i != j {
                dirs.push(upper_half([w[0].sub(&v[0])?, w[1].sub(&v[1])?])?);
            }
        }
        let mut overflow = false;
        dirs.sort_by(|a, b| match cross(a, b) {
            Some(c) => 0.cmp(&c.sign()),
            None => {
                overflow = true;
                Ordering::Equal
            }
        });
        if overflow {
            return None;
        }
        let mut uniq: Vec<[R; 2]> = Vec::with_capacity(dirs.len());
        for d in dirs {
            match uniq.last() {
                Some(last) if cross(last, &d)?.sign() == 0 => {}
                _ => uniq.push(d),
            }
        }
        let k = uniq.len();
        let mut gaps = Vec::with_capacity(k);
        if k == 1 {
            gaps.push([uniq[0][1].neg()?, uniq[0][0].clone()]);
        } else if k > 1 {
            for w in uniq.windows(2) {
                gaps.push([w[0][0].add(&w[1][0])?, w[0][1].add(&w[1][1])?]);
            }
            gaps.push([uniq[k - 1][0].sub(&uniq[0][0])?, uniq[k - 1][1].sub(&uniq[0][1])?]);
        }
        for g in gaps {
            let base = line_through(v, &g, None)?;
            let (nx2, ny2, c2) = (base.nx.double()?, base.ny.double()?, base.c.double()?);
            let up = Line { nx: nx2.clone(), ny: ny2.clone(), c: c2.add(&one)?, pair: None };
            let down = Line { nx: nx2, ny: ny2, c: c2.sub(&one)?, pair: None };
            lines.push(base);
            lines.push(up);
            lines.push(down);
        }
    }
    Some(lines)
}

struct Sweeper<'a, R> {
    sc: &'a IntScene<R>,
    f: Vec<R>,
    dx: R,
    dy: R,
}

impl<'a, R: Ring> Sweeper<'a, R> {
    fn new(sc: &'a IntScene<R>) -> Self {
        Sweeper { sc, f: Vec::with_capacity(sc.verts.len()), dx: R::zero(), dy: R::zero() }
    }

    fn vertex(&self, i: usize) -> Option<Hom<R>> {
        let [x, y] = &self.sc.verts[i];
        let t = self.dx.mul(x)?.add(&self.dy.mul(y)?)?;
        Some(Hom { x: x.clone(), y: y.clone(), w: R::from_big(&BigInt::one())?, t })
    }

    fn crossing(&self, i: usize, j: usize) -> Option<Hom<R>> {
        let (p, q) = (&self.sc.verts[i], &self.sc.verts[j]);
        let (fp, fq) = (&self.f[i], &self.f[j]);
        let mut x = fp.mul(&q[0])?.sub(&fq.mul(&p[0])?)?;
        let mut y = fp.mul(&q[1])?.sub(&fq.mul(&p[1])?)?;
        let mut w = fp.sub(fq)?;
        if w.sign() < 0 {
            x = x.neg()?;
            y = y.neg()?;
            w = w.neg()?;
        }
        let t = self.dx.mul(&x)?.add(&self.dy.mul(&y)?)?;
        Some(Hom { x, y, w, t })
    }

    fn piece_span(&self, pc: &IPiece) -> Option<Option<(Hom<R>, Hom<R>)>> {
        let mut acc: Option<(Hom<R>, Hom<R>)> = None;
        let mut push = |h: Hom<R>| -> Option<()> {
            match &mut acc {
                None => acc = Some((h.clone(), h)),
                Some((lo, hi)) => {
                    if h.cmp_pos(lo)? == Ordering::Less {
                        *lo = h;
                    } else if h.cmp_pos(hi)? == Ordering::Greater {
                        *hi = h;
                    }
                }
            }
            Some(())
        };
        match pc {
            IPiece::Point(i) => {
                if self.f[*i].sign() == 0 {
                    push(self.vertex(*i)?)?;
                }
            }
            IPiece::Segment(i, j) => {
                let (si, sj) = (self.f[*i].sign(), self.f[*j].sign());
                if si == 0 {
                    push(self.vertex(*i)?)?;
                }
                if sj == 0 {
                    push(self.vertex(*j)?)?;
                }
                if si * sj < 0 {
                    push(self.crossing(*i, *j)?)?;
                }
            }
            IPiece::Polygon(v) => {
                let s0 = self.f[v[0]].sign();
                if s0 != 0 && v.iter().all(|&k| self.f[k].sign() == s0) {
                    return Some(None);
                }
                for (a, &i) in v.iter().enumerate() {
                    let j = v[(a + 1) % v.len()];
                    let (si, sj) = (self.f[i].sign(), self.f[j].sign());
                    if si == 0 {
                        push(self.vertex(i)?)?;
                    } else if si * sj < 0 {
                        push(self.crossing(i, j)?)?;
                    }
                }
            }
        }
        Some(acc)
    }

    /// `None` on overflow; an empty list for lines already covered by an
    /// earlier vertex pair.
    fn sweep(&mut self, line: &Line<R>) -> Option<Vec<Contact<R>>> {
        self.f.clear();
        for v in &self.sc.verts {
            self.f.push(line.nx.mul(&v[0])?.add(&line.ny.mul(&v[1])?)?.sub(&line.c)?);
        }
        if let Some((i, j)) = line.pair {
            if (0..j).any(|k| k != i && self.f[k].sign() == 0) {
                return Some(Vec::new());
            }
        }
        self.dx = line.ny.neg()?;
        self.dy = line.nx.clone();
        let mut spans: Vec<Span<R>> = Vec::new();
        for (region, pieces) in self.sc.regions.iter().enumerate() {
            for pc in pieces {
                if let Some((lo, hi)) = self.piece_span(pc)? {
                    spans.push(Span { region, lo, hi });
                }
            }
        }
        if spans.len() < 2 {
            return Some(Vec::new());
        }
        let mut overflow = false;
        spans.sort_by(|a, b| {
            a.lo.cmp_pos(&b.lo).unwrap_or_else(|| {
                overflow = true;
                Ordering::Equal
            })
        });
        if overflow {
            return None;
        }
        let mut out = Vec::new();
        let mut iter = spans.into_iter();
        let mut cur = iter.next().expect("nonempty");
        for s in iter {
            if s.region == cur.region {
                if s.lo.cmp_pos(&cur.hi)? != Ordering::Greater {
                    if s.hi.cmp_pos(&cur.hi)? == Ordering::Greater {
                        cur.hi = s.hi;
                    }
                } else {
                    cur = s;
                }
            } else {
                debug_assert_eq!(s.lo.cmp_pos(&cur.hi), Some(Ordering::Greater), "regions overlap");
                out.push(Contact { first: cur.region, second: s.region, p: cur.hi.clone(), q: s.lo.clone() });
                cur = s;
            }
        }
        Some(out)
    }
}

/// First witness per unordered region pair `(i, j)`, `i < j`; points are in
/// regions `i` and `j` respectively.
pub(crate) type PairWitnesses = BTreeMap<(usize, usize), (Point, Point)>;

fn all_pairs_in<R: Ring>(layout: &Layout, exec: Exec) -> Option<PairWitnesses> {
    let sc: IntScene<R> = layout.ring()?;
    let lines = candidate_lines(&sc.verts)?;
    let chunks = map_chunks(exec, &lines, CHUNK, |offset, chunk| {
        let mut sw = Sweeper::new(&sc);
        let mut found: BTreeMap<(usize, usize), (usize, Hom<R>, Hom<R>)> = BTreeMap::new();
        for (k, line) in chunk.iter().enumerate() {
            for c in sw.sweep(line)? {
                let (key, a, b) = if c.first < c.second {
                    ((c.first, c.second), c.p, c.q)
                } else {
                    ((c.second, c.first), c.q, c.p)
                };
                found.entry(key).or_insert((offset + k, a, b));
            }
        }
        Some(found)
    });
    let mut merged: BTreeMap<(usize, usize), (usize, Hom<R>, Hom<R>)> = BTreeMap::new();
    for chunk in chunks {
        for (key, val) in chunk? {
            match merged.get(&key) {
                Some(existing) if existing.0 <= val.0 => {}
                _ => {
                    merged.insert(key, val);
                }
            }
        }
    }
    Some(merged.into_iter().map(|(k, (_, a, b))| (k, (layout.to_point(&a), layout.to_point(&b)))).collect())
}

/// Visible region pairs of a valid scene with their first witnesses.
pub(crate) fn all_pairs(scene: &Scene, exec: Exec) -> PairWitnesses {
    let layout = Layout::new(scene);
    all_pairs_in::<i128>(&layout, exec)
        .or_else(|| all_pairs_in::<BigInt>(&layout, exec))
        .expect("big-integer sweep cannot overflow")
}

fn one_pair_in<R: Ring>(layout: &Layout, a: usize, b: usize) -> Option<Option<(Point, Point)>> {
    let sc: IntScene<R> = layout.ring()?;
    let lines = candidate_lines(&sc.verts)?;
    let mut sw = Sweeper::new(&sc);
    for line in &lines {
        for c in sw.sweep(line)? {
            if c.first == a && c.second == b {
                return Some(Some((layout.to_point(&c.p), layout.to_point(&c.q))));
            }
            if c.first == b && c.second == a {
                return Some(Some((layout.to_point(&c.q), layout.to_point(&c.p))));
            }
        }
    }
    Some(None)
}

/// First witness for regions `a` and `b` (indices), oriented `a -> b`.
pub(crate) fn one_pair(scene: &Scene, a: usize, b: usize) -> Option<(Point, Point)> {
    let layout = Layout::new(scene);
    one_pair_in::<i128>(&layout, a, b)
        .or_else(|| one_pair_in::<BigInt>(&layout, a, b))
        .expect("big-integer sweep cannot overflow")
}

/// Same as [`all_pairs`] but forced onto the big-integer ring.
#[cfg(test)]
pub(crate) fn all_pairs_big(scene: &Scene) -> PairWitnesses {
    all_pairs_in::<BigInt>(&Layout::new(scene), Exec::Sequential).unwrap()
}

#[cfg(test)]
pub(crate) fn candidate_count(scene: &Scene) -> usize {
    let layout = Layout::new(scene);
    candidate_lines(&layout.ring::<BigInt>().unwrap().verts).unwrap().len()
}
