//! Cut-and-project point sets from the A4 root and weight lattices.
//!
//! A lattice point is accepted when its E⊥ component lies in a disk (the
//! window) and its E∥ component lies in a second disk bounding the patch.
//! Both tests are exact. The hot loop works in Z[τ] with `i128`
//! coefficients after clearing every denominator.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::coxeter::{cartan_inverse, Basis, Diagram, LatticeVector};
use crate::golden::{GoldenInteger, GoldenRational, Rational, Sign};
use crate::pointset::{PlanarPoint, Plane, PointSet2D};
use crate::projection::perp_squared_norm;
use crate::weyl::{voronoi_vertices, LatticeKind};
use crate::{Error, Result};

/// Default cap on the number of integer points scanned.
pub const DEFAULT_MAX_BOX: u128 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StripLattice {
    /// The A4 root lattice, scanned in root coordinates.
    Root,
    /// The A4 weight lattice, scanned in weight coordinates.
    Weight,
}

impl StripLattice {
    pub fn basis(self) -> Basis {
        match self {
            StripLattice::Root => Basis::Root,
            StripLattice::Weight => Basis::Weight,
        }
    }

    pub fn voronoi(self) -> LatticeKind {
        match self {
            StripLattice::Root => LatticeKind::A4Root,
            StripLattice::Weight => LatticeKind::A4Weight,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StripLattice::Root => "root",
            StripLattice::Weight => "weight",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WindowSource {
    RootVoronoi,
    WeightVoronoi,
    Custom,
}

impl WindowSource {
    pub fn name(self) -> &'static str {
        match self {
            WindowSource::RootVoronoi => "root-voronoi",
            WindowSource::WeightVoronoi => "weight-voronoi",
            WindowSource::Custom => "custom",
        }
    }
}

/// A closed disk in E⊥ centred at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    squared_radius: GoldenRational,
    source: WindowSource,
}

impl Window {
    pub fn new(squared_radius: GoldenRational, source: WindowSource) -> Result<Self> {
        if squared_radius.sign() != Sign::Positive {
            return Err(Error::EmptyWindow);
        }
        Ok(Window { squared_radius, source })
    }

    pub fn custom(squared_radius: GoldenRational) -> Result<Self> {
        Window::new(squared_radius, WindowSource::Custom)
    }

    pub fn squared_radius(&self) -> &GoldenRational {
        &self.squared_radius
    }

    pub fn source(&self) -> WindowSource {
        self.source
    }
}

/// The largest E⊥ squared norm over the Voronoi-cell vertices.
pub fn window_from_voronoi(lattice: StripLattice) -> Window {
    let r = voronoi_vertices(lattice.voronoi())
        .iter()
        .map(|v| perp_squared_norm(v).expect("A4 vectors"))
        .max()
        .expect("Voronoi cells have vertices");
    let source = match lattice {
        StripLattice::Root => WindowSource::RootVoronoi,
        StripLattice::Weight => WindowSource::WeightVoronoi,
    };
    Window::new(r, source).expect("Voronoi vertices are off the E∥ plane")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripConfig {
    pub lattice: StripLattice,
    pub window: Window,
    /// Squared radius of the E∥ patch.
    pub par_squared_radius: GoldenRational,
    /// Rational shift, in weight coordinates, added before projecting.
    pub offset: Option<LatticeVector>,
    pub max_box: u128,
}

impl StripConfig {
    pub fn new(lattice: StripLattice, window: Window, par_squared_radius: GoldenRational) -> Result<Self> {
        if par_squared_radius.sign() != Sign::Positive {
            return Err(Error::EmptyPatch);
        }
        Ok(StripConfig { lattice, window, par_squared_radius, offset: None, max_box: DEFAULT_MAX_BOX })
    }

    pub fn with_offset(mut self, offset: LatticeVector) -> Result<Self> {
        if offset.diagram() != Diagram::A4 {
            return Err(Error::IncompatibleVectors);
        }
        self.offset = if offset.is_zero() { None } else { Some(offset.to_weight()) };
        Ok(self)
    }

    pub fn with_max_box(mut self, max_box: u128) -> Self {
        self.max_box = max_box;
        self
    }
}

/// Smallest `k ≥ 0` with `k² ≥ r`, for `r ≥ 0` in Q(τ).
fn ceil_sqrt(r: &GoldenRational) -> Result<i64> {
    let guess = libm::sqrt(r.to_f64().max(0.0));
    if !guess.is_finite() || guess > (1u64 << 40) as f64 {
        return Err(Error::Overflow);
    }
    let mut k = libm::floor(guess) as i64;
    let sq = |k: i64| GoldenRational::from_integer(k * k);
    while k > 0 && sq(k - 1) >= *r {
        k -= 1;
    }
    while sq(k) < *r {
        k += 1;
    }
    Ok(k)
}

fn floor_rational(r: &Rational) -> Result<i64> {
    r.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

fn ceil_rational(r: &Rational) -> Result<i64> {
    r.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}

/// Integer `(p, q)` and positive `den` with `x = (p + qτ)/den`.
fn clear_denominator(x: &GoldenRational) -> (BigInt, BigInt, BigInt) {
    let den = x.a().denom().lcm(x.b().denom());
    let p = x.a().numer() * (&den / x.a().denom());
    let q = x.b().numer() * (&den / x.b().denom());
    (p, q, den)
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or(Error::Overflow)
}

/// A threshold test `den·(U²·cu + V²·cv) ≤ rhs` in Z[τ].
#[derive(Debug, Clone, Copy)]
struct Threshold {
    den: i128,
    rhs: GoldenInteger,
}

impl Threshold {
    /// For `squared_norm ≤ r` with `squared_norm = (U²·cu + V²·cv)/(10·D²)`.
    fn new(r: &GoldenRational, scale: i128) -> Result<Self> {
        let (p, q, den) = clear_denominator(r);
        let d2 = BigInt::from(scale) * BigInt::from(scale) * 10;
        let rhs = GoldenInteger::new(to_i128(&(&p * &d2))?, to_i128(&(&q * &d2))?);
        Ok(Threshold { den: to_i128(&den)?, rhs })
    }

    #[inline]
    fn accepts(&self, lhs: GoldenInteger) -> bool {
        (self.rhs - lhs.scale(self.den)).sign() != Sign::Negative
    }
}

/// Weights `10/N²` of the two axes of each plane, as elements of Z[τ].
const PAR_WEIGHTS: [GoldenInteger; 2] = [GoldenInteger::new(2, -1), GoldenInteger::new(2, 1)];
const PERP_WEIGHTS: [GoldenInteger; 2] = [GoldenInteger::new(1, 1), GoldenInteger::new(3, -1)];

/// Numerators `(X, Y, Z, W)` of `a` in weight coordinates.
#[inline]
fn numerators(a: &[i128; 4]) -> [GoldenInteger; 4] {
    let [a1, a2, a3, a4] = *a;
    [
        GoldenInteger::new(a1 - a4, a3 - a2),
        GoldenInteger::new(a1 + a4, a2 + a3),
        // σ = 1 − τ
        GoldenInteger::new(a1 - a4 + a3 - a2, a2 - a3),
        GoldenInteger::new(a1 + a4 + a2 + a3, -(a2 + a3)),
    ]
}

#[inline]
fn weighted_norm(u: GoldenInteger, v: GoldenInteger, w: &[GoldenInteger; 2]) -> GoldenInteger {
    u.square() * w[0] + v.square() * w[1]
}

/// A point accepted by the strip, with its integer lattice coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Accepted {
    /// Coordinates in the lattice's own basis (root or weight).
    pub coords: [i64; 4],
    /// `(X, Y)` numerators times the offset denominator.
    numer: [GoldenInteger; 2],
}

/// A prepared enumeration: the bounding box, the scaled offset and the two
/// threshold tests. Scanning one leading coordinate is independent of the
/// others, so callers may run `scan` in parallel.
#[derive(Debug, Clone)]
pub struct StripPlan {
    lattice: StripLattice,
    ranges: [(i64, i64); 4],
    /// Offset in weight coordinates times `scale`.
    offset: [i128; 4],
    scale: i128,
    par: Threshold,
    perp: Threshold,
    box_size: u128,
    metadata: Vec<(String, String)>,
}

impl StripPlan {
    pub fn new(config: &StripConfig) -> Result<Self> {
        let basis = config.lattice.basis();
        let offset_w: Vec<Rational> = match &config.offset {
            Some(o) => o.to_weight().into_coords(),
            None => vec![Rational::zero(); 4],
        };
        let offset_l: Vec<Rational> = match &config.offset {
            Some(o) => o.convert(basis).into_coords(),
            None => vec![Rational::zero(); 4],
        };
        let scale_big = offset_w.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scale = to_i128(&scale_big)?;
        let mut offset = [0i128; 4];
        for (o, r) in offset.iter_mut().zip(&offset_w) {
            *o = to_i128(&(r.numer() * (&scale_big / r.denom())))?;
        }

        // |c_i| ≤ √(R² g_ii) for coordinates c of a vector of squared length
        // R² = window + patch, g = C⁻¹ for root coordinates and C for weights.
        let total = config.window.squared_radius() + &config.par_squared_radius;
        let ci = cartan_inverse(Diagram::A4)?;
        let mut ranges = [(0i64, 0i64); 4];
        let mut box_size: u128 = 1;
        for i in 0..4 {
            let g = match basis {
                Basis::Root => ci.get(i, i).clone(),
                Basis::Weight => Rational::from_integer(2.into()),
            };
            let k = ceil_sqrt(&total.scale(&g))?;
            let k = Rational::from_integer(k.into());
            let lo = ceil_rational(&(-&offset_l[i] - &k))?;
            let hi = floor_rational(&(-&offset_l[i] + &k))?;
            ranges[i] = (lo, hi);
            let width = if hi >= lo { (hi - lo) as u128 + 1 } else { 0 };
            box_size = box_size.saturating_mul(width);
        }
        if box_size > config.max_box {
            return Err(Error::ResourceLimit { size: box_size, cap: config.max_box });
        }
        // Keep every product in the hot loop far from i128 overflow.
        let max_coord = ranges.iter().map(|(lo, hi)| lo.unsigned_abs().max(hi.unsigned_abs())).max().unwrap_or(0);
        let max_weight = (max_coord as u128) * if basis == Basis::Root { 4 } else { 1 };
        let max_off = offset.iter().map(|o| o.unsigned_abs()).max().unwrap_or(0);
        let bound =
            max_weight.checked_mul(scale.unsigned_abs()).and_then(|m| m.checked_add(max_off)).ok_or(Error::Overflow)?;
        let par = Threshold::new(&config.par_squared_radius, scale)?;
        let perp = Threshold::new(config.window.squared_radius(), scale)?;
        let den_max = par.den.unsigned_abs().max(perp.den.unsigned_abs());
        if bound > 1 << 30 || den_max > 1 << 30 {
            return Err(Error::Overflow);
        }

        let mut metadata = vec![
            ("lattice".to_string(), config.lattice.name().to_string()),
            ("window".to_string(), config.window.source().name().to_string()),
            ("window_r2".to_string(), config.window.squared_radius().to_string()),
            ("par_r2".to_string(), config.par_squared_radius.to_string()),
            ("box".to_string(), format!("{box_size}")),
        ];
        if let Some(o) = &config.offset {
            metadata.push(("offset".to_string(), o.to_string()));
        }
        Ok(StripPlan { lattice: config.lattice, ranges, offset, scale, par, perp, box_size, metadata })
    }

    pub fn box_size(&self) -> u128 {
        self.box_size
    }

    /// Values of the first coordinate to pass to [`StripPlan::scan`].
    pub fn leading_values(&self) -> core::ops::RangeInclusive<i64> {
        self.ranges[0].0..=self.ranges[0].1
    }

    #[inline]
    fn weight_coords(&self, c: &[i64; 4]) -> [i128; 4] {
        let c = c.map(|x| x as i128);
        let a = match self.lattice {
            StripLattice::Weight => c,
            StripLattice::Root => [2 * c[0] - c[1], -c[0] + 2 * c[1] - c[2], -c[1] + 2 * c[2] - c[3], -c[2] + 2 * c[3]],
        };
        core::array::from_fn(|i| a[i] * self.scale + self.offset[i])
    }

    /// Exact test of a single lattice point.
    pub fn test(&self, coords: &[i64; 4]) -> Option<Accepted> {
        let a = self.weight_coords(coords);
        let [x, y, z, w] = numerators(&a);
        if !self.perp.accepts(weighted_norm(z, w, &PERP_WEIGHTS)) {
            return None;
        }
        if !self.par.accepts(weighted_norm(x, y, &PAR_WEIGHTS)) {
            return None;
        }
        Some(Accepted { coords: *coords, numer: [x, y] })
    }

    /// All accepted points with the given first coordinate.
    pub fn scan(&self, c0: i64) -> Vec<Accepted> {
        let mut out = Vec::new();
        let [_, r1, r2, r3] = self.ranges;
        for c1 in r1.0..=r1.1 {
            for c2 in r2.0..=r2.1 {
                for c3 in r3.0..=r3.1 {
                    if let Some(p) = self.test(&[c0, c1, c2, c3]) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Projects accepted points into E∥ and sorts them.
    pub fn finish(&self, accepted: Vec<Accepted>) -> PointSet2D {
        let inv = Rational::new(1.into(), self.scale.into());
        let points: Vec<PlanarPoint> = accepted
            .iter()
            .map(|p| {
                let g = |v: GoldenInteger| v.to_golden().scale(&inv);
                PlanarPoint::new(Plane::Parallel, g(p.numer[0]), g(p.numer[1]))
            })
            .collect();
        let mut meta = self.metadata.clone();
        meta.push(("count".to_string(), format!("{}", points.len())));
        PointSet2D::new(points, meta)
    }

    /// Accepted lattice coordinates, sorted.
    pub fn accept_all(&self) -> Vec<Accepted> {
        let mut all: Vec<Accepted> = self.leading_values().flat_map(|c0| self.scan(c0)).collect();
        all.sort_by_key(|a| a.coords);
        all
    }
}

/// Accepted lattice points in the lattice's own coordinates, sorted.
pub fn strip_accept(config: &StripConfig) -> Result<Vec<[i64; 4]>> {
    Ok(StripPlan::new(config)?.accept_all().into_iter().map(|a| a.coords).collect())
}

/// Single-threaded strip projection.
pub fn strip_project(config: &StripConfig) -> Result<PointSet2D> {
    let plan = StripPlan::new(config)?;
    let accepted = plan.accept_all();
    Ok(plan.finish(accepted))
}

/// Weight-lattice points with `|a_i| ≤ amax` and `|Σ a_i| ≤ smax`, projected
/// onto E∥ without a window.
pub fn slab_project(amax: u32, smax: u32) -> PointSet2D {
    let r = amax as i64;
    let s = smax as i64;
    let mut points = Vec::new();
    for a1 in -r..=r {
        for a2 in -r..=r {
            for a3 in -r..=r {
                for a4 in -r..=r {
                    if (a1 + a2 + a3 + a4).abs() > s {
                        continue;
                    }
                    let [x, y, _, _] = numerators(&[a1 as i128, a2 as i128, a3 as i128, a4 as i128]);
                    points.push(PlanarPoint::new(Plane::Parallel, x.to_golden(), y.to_golden()));
                }
            }
        }
    }
    let n = points.len();
    PointSet2D::new(
        points,
        vec![
            ("amax".to_string(), format!("{amax}")),
            ("smax".to_string(), format!("{smax}")),
            ("count".to_string(), format!("{n}")),
        ],
    )
}

/// Base squared radius of the inflating decagonal rings: `(2/5)(2+τ)` for
/// the root lattice and `2/5` for the weight lattice.
pub fn ring_base(lattice: StripLattice) -> GoldenRational {
    match lattice {
        StripLattice::Root => golden_radius(0) * GoldenRational::from_ints(2, 1),
        StripLattice::Weight => golden_radius(0),
    }
}

/// `(2/5)·τ^k`, the natural unit of squared radii in E∥ and E⊥.
pub fn golden_radius(k: u32) -> GoldenRational {
    GoldenRational::from_fractions(2, 5, 0, 1) * GoldenRational::tau().pow(k)
}

/// Number of points at exactly each squared radius `base·τ^{2k}`, `k = 0..rings`.
pub fn ring_counts(points: &PointSet2D, base: &GoldenRational, rings: u32) -> Vec<(GoldenRational, usize)> {
    let hist = points.radius_histogram();
    (0..rings)
        .map(|k| {
            let r = base * &GoldenRational::tau().pow(2 * k);
            let n = hist.iter().find(|(h, _)| *h == r).map_or(0, |(_, n)| *n);
            (r, n)
        })
        .collect()
}

/// Checks `strip_accept` against a brute-force scan of an explicit box using
/// the arbitrary-precision projections.
pub fn brute_force_accept(config: &StripConfig, half_width: i64) -> Result<Vec<[i64; 4]>> {
    let basis = config.lattice.basis();
    let mut out = Vec::new();
    let r = -half_width..=half_width;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let mut v = LatticeVector::from_ints(Diagram::A4, basis, &[a, b, c, d])?;
                    if let Some(o) = &config.offset {
                        v = v.checked_add(o)?;
                    }
                    let perp = crate::projection::perp_squared_norm(&v)?;
                    let par = crate::projection::par_squared_norm(&v)?;
                    if perp <= *config.window.squared_radius() && par <= config.par_squared_radius {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{generate_group, GroupKind};

    fn root_window() -> Window {
        window_from_voronoi(StripLattice::Root)
    }

    #[test]
    fn voronoi_windows() {
        assert_eq!(*root_window().squared_radius(), golden_radius(2));
        let weight = window_from_voronoi(StripLattice::Weight);
        assert_eq!(*weight.squared_radius(), GoldenRational::from_fractions(14, 125, 22, 125));
        assert_eq!(Window::custom(GoldenRational::zero()), Err(Error::EmptyWindow));
    }

    #[test]
    fn origin_is_accepted() {
        let cfg = StripConfig::new(StripLattice::Root, root_window(), golden_radius(0)).unwrap();
        let pts = strip_project(&cfg).unwrap();
        assert!(pts.points.iter().any(PlanarPoint::is_origin));
    }

    #[test]
    fn matches_brute_force() {
        for lattice in [StripLattice::Root, StripLattice::Weight] {
            let cfg = StripConfig::new(lattice, window_from_voronoi(lattice), golden_radius(3)).unwrap();
            assert_eq!(strip_accept(&cfg).unwrap(), brute_force_accept(&cfg, 5).unwrap(), "{lattice:?}");
        }
    }

    #[test]
    fn offset_matches_brute_force() {
        let off = LatticeVector::new(
            Diagram::A4,
            Basis::Weight,
            vec![
                Rational::new(1.into(), 7.into()),
                Rational::new((-2).into(), 9.into()),
                Rational::zero(),
                Rational::new(1.into(), 3.into()),
            ],
        )
        .unwrap();
        let cfg =
            StripConfig::new(StripLattice::Root, root_window(), golden_radius(2)).unwrap().with_offset(off).unwrap();
        assert_eq!(strip_accept(&cfg).unwrap(), brute_force_accept(&cfg, 5).unwrap());
    }

    #[test]
    fn five_cells_in_root_window() {
        // ω1 and ω4 lie in the weight lattice, not the root lattice.
        let cfg = StripConfig::new(StripLattice::Weight, root_window(), golden_radius(0)).unwrap();
        let pts = strip_project(&cfg).unwrap();
        for hw in [[1, 0, 0, 0], [0, 0, 0, 1]] {
            let orbit =
                crate::weyl::orbit(&LatticeVector::from_ints(Diagram::A4, Basis::Weight, &hw).unwrap()).unwrap();
            for v in orbit {
                assert!(pts.contains(&crate::projection::project_parallel(&v).unwrap()));
            }
        }
    }

    #[test]
    fn decagonal_rings() {
        for lattice in [StripLattice::Root, StripLattice::Weight] {
            let cfg = StripConfig::new(lattice, root_window(), golden_radius(8)).unwrap();
            let pts = strip_project(&cfg).unwrap();
            for (r, n) in ring_counts(&pts, &ring_base(lattice), 3) {
                assert!(n > 0 && n % 10 == 0, "{lattice:?} {r}: {n}");
            }
        }
        let root =
            strip_project(&StripConfig::new(StripLattice::Root, root_window(), golden_radius(8)).unwrap()).unwrap();
        assert!(ring_counts(&root, &golden_radius(0), 1)[0].1 == 0);
    }

    #[test]
    fn dihedral_invariance() {
        let cfg = StripConfig::new(StripLattice::Root, root_window(), golden_radius(4)).unwrap();
        let pts = strip_project(&cfg).unwrap();
        assert_eq!(pts.collisions, 0);
        let accepted = strip_accept(&cfg).unwrap();
        for g in generate_group(GroupKind::WH2) {
            let mut image: Vec<[i64; 4]> = accepted
                .iter()
                .map(|c| {
                    let v = LatticeVector::from_ints(Diagram::A4, Basis::Root, c).unwrap();
                    let w = g.apply_vector(&v).int_coords().unwrap();
                    [w[0], w[1], w[2], w[3]]
                })
                .collect();
            image.sort();
            assert_eq!(image, accepted);
        }
    }

    #[test]
    fn monotone_in_both_radii() {
        let small = StripConfig::new(StripLattice::Root, root_window(), golden_radius(2)).unwrap();
        let big = StripConfig::new(StripLattice::Root, root_window(), golden_radius(3)).unwrap();
        let wide =
            StripConfig::new(StripLattice::Root, Window::custom(golden_radius(3)).unwrap(), golden_radius(2)).unwrap();
        let s = strip_accept(&small).unwrap();
        let b = strip_accept(&big).unwrap();
        let w = strip_accept(&wide).unwrap();
        assert!(s.iter().all(|p| b.binary_search(p).is_ok()));
        assert!(s.iter().all(|p| w.binary_search(p).is_ok()));
    }

    #[test]
    fn resource_cap() {
        let cfg = StripConfig::new(StripLattice::Root, root_window(), golden_radius(6)).unwrap().with_max_box(10);
        assert!(matches!(StripPlan::new(&cfg), Err(Error::ResourceLimit { cap: 10, .. })));
    }

    #[test]
    fn slab_counts() {
        assert_eq!(slab_project(0, 0).len(), 1);
        assert_eq!(slab_project(2, 2).len(), 381);
        assert_eq!(slab_project(3, 3).len(), 1451);
        assert_eq!(slab_project(2, 2).collisions, 0);
    }
}
