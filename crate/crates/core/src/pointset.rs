//! Planar points with exact coordinates and their float shadows.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[cfg(test)]
use num_traits::One;
use num_traits::Zero;

use crate::golden::{GoldenRational, Sign};

/// Which of the two invariant planes of the A4 Coxeter element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Plane {
    /// E∥, spanned by x̂ and ŷ.
    Parallel,
    /// E⊥, spanned by ẑ and ŵ.
    Perpendicular,
}

impl Plane {
    pub fn name(self) -> &'static str {
        match self {
            Plane::Parallel => "par",
            Plane::Perpendicular => "perp",
        }
    }
}

/// A fixed irrational axis normalizer `N`: the true coordinate of a point
/// with numerator `X` is `X / N`, where `N = sign · √(norm_squared)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalizer {
    pub name: &'static str,
    pub norm_squared: GoldenRational,
    /// `1 / norm_squared`.
    pub inv_square: GoldenRational,
    pub sign: Sign,
}

impl Normalizer {
    /// `(N_x, N_y)` or `(N_z, N_w)`.
    pub fn for_plane(plane: Plane) -> (Normalizer, Normalizer) {
        let mk = |name, n: (i64, i64), inv: (i64, i64), sign| Normalizer {
            name,
            norm_squared: GoldenRational::from_ints(n.0, n.1),
            inv_square: GoldenRational::from_fractions(inv.0, 10, inv.1, 10),
            sign,
        };
        match plane {
            Plane::Parallel => {
                (mk("N_x", (10, 10), (2, -1), Sign::Positive), mk("N_y", (6, -2), (2, 1), Sign::Positive))
            }
            Plane::Perpendicular => {
                (mk("N_z", (20, -10), (1, 1), Sign::Positive), mk("N_w", (4, 2), (3, -1), Sign::Negative))
            }
        }
    }

    /// Exact `(X/N_x)² + (Y/N_y)²` on `plane`.
    pub fn squared_norm(plane: Plane, x: &GoldenRational, y: &GoldenRational) -> GoldenRational {
        let (nx, ny) = Normalizer::for_plane(plane);
        nx.squared(x) + ny.squared(y)
    }

    /// `(X/N)²`, exact.
    pub fn squared(&self, numerator: &GoldenRational) -> GoldenRational {
        &numerator.square() * &self.inv_square
    }

    /// `X/N` as the nearest float, via the exact square.
    pub fn to_f64(&self, numerator: &GoldenRational) -> f64 {
        let s = numerator.sign();
        if s == Sign::Zero {
            return 0.0;
        }
        let mag = libm::sqrt(self.squared(numerator).to_f64());
        if s.is_negative() ^ self.sign.is_negative() {
            -mag
        } else {
            mag
        }
    }

    /// Compares `a/N` with `b/N`.
    pub fn cmp_values(&self, a: &GoldenRational, b: &GoldenRational) -> Ordering {
        let o = a.cmp(b);
        if self.sign.is_negative() {
            o.reverse()
        } else {
            o
        }
    }
}

/// A point of E∥ or E⊥ stored as exact numerators over the plane's
/// normalizers, with float shadows of the true coordinates.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlanarPoint {
    pub plane: Plane,
    pub x: GoldenRational,
    pub y: GoldenRational,
    pub fx: f64,
    pub fy: f64,
}

impl PlanarPoint {
    pub fn new(plane: Plane, x: GoldenRational, y: GoldenRational) -> Self {
        let (nx, ny) = Normalizer::for_plane(plane);
        let fx = nx.to_f64(&x);
        let fy = ny.to_f64(&y);
        PlanarPoint { plane, x, y, fx, fy }
    }

    pub fn origin(plane: Plane) -> Self {
        PlanarPoint::new(plane, GoldenRational::zero(), GoldenRational::zero())
    }

    /// Exact squared distance from the origin.
    pub fn norm_squared(&self) -> GoldenRational {
        Normalizer::squared_norm(self.plane, &self.x, &self.y)
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Exact order by true `(y, x)`. Points must lie in the same plane.
    pub fn cmp_yx(&self, other: &PlanarPoint) -> Ordering {
        // N_x is positive in both planes; N_y is negative on E⊥.
        let oy = self.y.cmp(&other.y);
        let oy = if self.plane == Plane::Perpendicular { oy.reverse() } else { oy };
        oy.then_with(|| self.x.cmp(&other.x))
    }

    /// Same exact coordinates.
    pub fn coincides(&self, other: &PlanarPoint) -> bool {
        self.plane == other.plane && self.x == other.x && self.y == other.y
    }
}

impl Eq for PlanarPoint {}

/// A sorted point set with free-form metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PointSet2D {
    pub points: Vec<PlanarPoint>,
    /// Ordered `(key, value)` pairs such as the generating command.
    pub metadata: Vec<(String, String)>,
    /// Number of points that coincide exactly with their predecessor.
    pub collisions: usize,
}

impl PointSet2D {
    /// Sorts by exact `(y, x)` and counts coincident points. Coincident points
    /// are kept, not merged.
    pub fn new(mut points: Vec<PlanarPoint>, metadata: Vec<(String, String)>) -> Self {
        points.sort_by(PlanarPoint::cmp_yx);
        let collisions = points.windows(2).filter(|w| w[0].coincides(&w[1])).count();
        PointSet2D { points, metadata, collisions }
    }

    pub fn empty() -> Self {
        PointSet2D::new(Vec::new(), Vec::new())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn push_meta(&mut self, key: &str, value: String) {
        self.metadata.push((String::from(key), value));
    }

    pub fn contains(&self, p: &PlanarPoint) -> bool {
        self.points.binary_search_by(|q| q.cmp_yx(p)).is_ok()
    }

    /// Same multiset of exact points.
    pub fn same_points(&self, other: &PointSet2D) -> bool {
        self.points.len() == other.points.len() && self.points.iter().zip(&other.points).all(|(a, b)| a.coincides(b))
    }

    /// Distinct exact squared radii with their multiplicities, ascending.
    pub fn radius_histogram(&self) -> Vec<(GoldenRational, usize)> {
        let mut radii: Vec<GoldenRational> = self.points.iter().map(PlanarPoint::norm_squared).collect();
        radii.sort();
        let mut out: Vec<(GoldenRational, usize)> = Vec::new();
        for r in radii {
            match out.last_mut() {
                Some((last, n)) if *last == r => *n += 1,
                _ => out.push((r, 1)),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn normalizers_match_frame() {
        let frame = crate::coxeter::GoldenFrame::a4();
        let (nx, ny) = Normalizer::for_plane(Plane::Parallel);
        let (nz, nw) = Normalizer::for_plane(Plane::Perpendicular);
        for (n, v) in [nx, ny, nz, nw].iter().zip(&frame.axes) {
            assert_eq!(n.norm_squared, v.norm_squared);
            assert_eq!(n.sign, v.sign);
            assert_eq!(&n.inv_square * &n.norm_squared, GoldenRational::one());
        }
    }

    #[test]
    fn normalizer_values() {
        let (nx, ny) = Normalizer::for_plane(Plane::Parallel);
        // N_x² = 2(2+τ)² = 10 + 10τ, N_y² = 2(3 − τ)
        assert_eq!(nx.norm_squared, GoldenRational::from_ints(10, 10));
        assert_eq!(ny.norm_squared, GoldenRational::from_ints(6, -2));
        let (nz, nw) = Normalizer::for_plane(Plane::Perpendicular);
        assert_eq!(nz.inv_square, GoldenRational::from_fractions(1, 10, 1, 10));
        assert_eq!(nw.inv_square, GoldenRational::from_fractions(3, 10, -1, 10));
        assert_eq!(nw.sign, Sign::Negative);
    }

    #[test]
    fn sorting_respects_normalizer_sign() {
        let p = |x: i64, y: i64| {
            PlanarPoint::new(Plane::Perpendicular, GoldenRational::from_integer(x), GoldenRational::from_integer(y))
        };
        let set = PointSet2D::new(vec![p(0, -1), p(0, 1), p(1, 0), p(-1, 0)], vec![]);
        let ys: Vec<f64> = set.points.iter().map(|q| q.fy).collect();
        assert!(ys.windows(2).all(|w| w[0] <= w[1]), "{ys:?}");
        assert_eq!(set.collisions, 0);
    }

    #[test]
    fn collisions_are_counted() {
        let o = PlanarPoint::origin(Plane::Parallel);
        let set = PointSet2D::new(vec![o.clone(), o], vec![]);
        assert_eq!((set.len(), set.collisions), (2, 1));
    }

    #[test]
    fn float_shadow_matches_exact_square() {
        let p = PlanarPoint::new(Plane::Parallel, GoldenRational::from_ints(3, -7), GoldenRational::from_ints(-2, 5));
        let f = p.fx * p.fx + p.fy * p.fy;
        let e = p.norm_squared().to_f64();
        assert!(((f - e) / e).abs() < 1e-14);
    }
}
