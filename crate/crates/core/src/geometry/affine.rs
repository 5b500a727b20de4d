use super::point::Point;
use super::scene::{Region, Scene};
use crate::scalar::Scalar;

/// `p -> M p + t` with an invertible rational 2x2 matrix `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    m: [[Scalar; 2]; 2],
    t: [Scalar; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AffineError {
    #[error("affine map is not invertible (zero determinant)")]
    Singular,
}

impl AffineMap {
    pub fn new(m: [[Scalar; 2]; 2], t: [Scalar; 2]) -> Result<Self, AffineError> {
        let map = AffineMap { m, t };
        if map.det().is_zero() {
            return Err(AffineError::Singular);
        }
        Ok(map)
    }

    pub fn identity() -> Self {
        AffineMap {
            m: [[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]],
            t: [Scalar::zero(), Scalar::zero()],
        }
    }

    pub fn scaling(k: Scalar) -> Result<Self, AffineError> {
        AffineMap::new([[k.clone(), Scalar::zero()], [Scalar::zero(), k]], [Scalar::zero(), Scalar::zero()])
    }

    pub fn det(&self) -> Scalar {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }

    pub fn inverse(&self) -> AffineMap {
        let det = self.det();
        let m = [
            [&self.m[1][1] / &det, -(&self.m[0][1] / &det)],
            [-(&self.m[1][0] / &det), &self.m[0][0] / &det],
        ];
        let t = [
            -(&m[0][0] * &self.t[0] + &m[0][1] * &self.t[1]),
            -(&m[1][0] * &self.t[0] + &m[1][1] * &self.t[1]),
        ];
        AffineMap { m, t }
    }
}

/// Maps every point of the scene; polygons flip back to CCW when `det < 0`.
pub fn apply_affine(s: &Scene, m: &AffineMap) -> Scene {
    let flip = m.det().is_negative();
    Scene::new(
        s.regions
            .iter()
            .map(|r| Region::new(r.name.clone(), r.pieces.iter().map(|pc| pc.map_points(|p| m.apply(p), flip)).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::piece::{pieces_intersect, Piece};
    use crate::geometry::point::{orient, pt};
    use crate::geometry::scene::validate_scene;
    use proptest::prelude::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(AffineMap::new([[s(1), s(2)], [s(2), s(4)]], [s(0), s(0)]), Err(AffineError::Singular));
    }

    #[test]
    fn identity_and_scaling() {
        let scene = Scene::new(vec![
            Region::new("a", vec![Piece::Point(pt(0, 0))]),
            Region::new("b", vec![Piece::Point(pt(1, 0))]),
            Region::new("c", vec![Piece::Point(pt(2, 0))]),
        ]);
        assert_eq!(apply_affine(&scene, &AffineMap::identity()), scene);
        let doubled = apply_affine(&scene, &AffineMap::scaling(s(2)).unwrap());
        let pts: Vec<_> = doubled.regions.iter().map(|r| r.pieces[0].clone()).collect();
        assert_eq!(pts, vec![Piece::Point(pt(0, 0)), Piece::Point(pt(2, 0)), Piece::Point(pt(4, 0))]);
    }

    #[test]
    fn shear_keeps_ccw() {
        let sq = Scene::new(vec![Region::new("a", vec![Piece::Polygon(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])])]);
        let shear = AffineMap::new([[s(1), s(1)], [s(0), s(1)]], [s(0), s(0)]).unwrap();
        let out = apply_affine(&sq, &shear);
        assert_eq!(out.regions[0].pieces[0], Piece::Polygon(vec![pt(0, 0), pt(1, 0), pt(2, 1), pt(1, 1)]));
        assert!(validate_scene(&out).is_valid());
        let mirror = AffineMap::new([[s(-1), s(0)], [s(0), s(1)]], [s(0), s(0)]).unwrap();
        assert!(validate_scene(&apply_affine(&sq, &mirror)).is_valid());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = AffineMap::new([[Scalar::ratio(2, 3), s(1)], [s(-1), s(5)]], [s(7), Scalar::ratio(-1, 2)]).unwrap();
        let p = Point::new(Scalar::ratio(3, 7), s(-4));
        assert_eq!(m.inverse().apply(&m.apply(&p)), p);
    }

    fn map_strategy() -> impl Strategy<Value = AffineMap> {
        let q = (-6i64..6, 1i64..4).prop_map(|(n, d)| Scalar::ratio(n, d));
        (q.clone(), q.clone(), q.clone(), q.clone(), q.clone(), q)
            .prop_filter_map("singular", |(a, b, c, d, e, f)| AffineMap::new([[a, b], [c, d]], [e, f]).ok())
    }

    proptest! {
        #[test]
        fn preserves_incidence(
            m in map_strategy(),
            c in proptest::collection::vec(-8i64..8, 6),
            r in (-8i64..4, -8i64..4, 1i64..5, 1i64..5),
        ) {
            let (p, q, w) = (pt(c[0], c[1]), pt(c[2], c[3]), pt(c[4], c[5]));
            let collinear = orient(&p, &q, &w) == crate::geometry::point::Orientation::Collinear;
            prop_assert_eq!(collinear, orient(&m.apply(&p), &m.apply(&q), &m.apply(&w)) == crate::geometry::point::Orientation::Collinear);
            let rect = Piece::Polygon(vec![pt(r.0, r.1), pt(r.0 + r.2, r.1), pt(r.0 + r.2, r.1 + r.3), pt(r.0, r.1 + r.3)]);
            let seg = if p != q { Piece::seg(p.clone(), q.clone()) } else { Piece::Point(p.clone()) };
            let flip = m.det().is_negative();
            let before = pieces_intersect(&seg, &rect);
            let after = pieces_intersect(&seg.map_points(|x| m.apply(x), flip), &rect.map_points(|x| m.apply(x), flip));
            prop_assert_eq!(before, after);
        }
    }
}
