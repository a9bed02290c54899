//! Orthogonal projection of A4 lattice vectors onto E∥ and E⊥, the D5
//! action on the two planes, and the 5-cube branching into W(A4) orbits.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::coxeter::{cartan_inverse, cartan_matrix, Basis, Diagram, FrameVector, GoldenFrame, LatticeVector};
use crate::golden::{GoldenRational, Rational};
use crate::matrix::Matrix;
use crate::pointset::{Normalizer, PlanarPoint, Plane};
use crate::weyl::{generators, orbit, GroupKind, WeylElement};
use crate::{Error, Result};

fn weight_coords(v: &LatticeVector) -> Result<Vec<Rational>> {
    if v.diagram() != Diagram::A4 {
        return Err(Error::UnsupportedDiagram(v.diagram()));
    }
    Ok(v.to_weight().into_coords())
}

fn axes(plane: Plane) -> (FrameVector, FrameVector) {
    let [x, y, z, w] = GoldenFrame::a4().axes;
    match plane {
        Plane::Parallel => (x, y),
        Plane::Perpendicular => (z, w),
    }
}

/// `(X, Y)` or `(Z, W)` for rational weight coordinates.
pub(crate) fn numerators(a: &[Rational], plane: Plane) -> (GoldenRational, GoldenRational) {
    let d = &a[0] - &a[3];
    let s = &a[0] + &a[3];
    let e = &a[2] - &a[1];
    let f = &a[1] + &a[2];
    match plane {
        Plane::Parallel => (GoldenRational::new(d, e), GoldenRational::new(s, f)),
        // σ = 1 − τ
        Plane::Perpendicular => (GoldenRational::new(d + &e, -e), GoldenRational::new(s + &f, -f)),
    }
}

/// Projection numerators in weight coordinates:
/// `X = a1 − a4 + τ(a3 − a2)`, `Y = a1 + a4 + τ(a2 + a3)` on E∥ and the
/// same with σ on E⊥.
pub fn project(v: &LatticeVector, plane: Plane) -> Result<PlanarPoint> {
    let (x, y) = numerators(&weight_coords(v)?, plane);
    Ok(PlanarPoint::new(plane, x, y))
}

pub fn project_parallel(v: &LatticeVector) -> Result<PlanarPoint> {
    project(v, Plane::Parallel)
}

pub fn project_perp(v: &LatticeVector) -> Result<PlanarPoint> {
    project(v, Plane::Perpendicular)
}

/// Exact squared length of the E∥ component:
/// `[X²(2−τ) + Y²(2+τ)] / 10`.
pub fn par_squared_norm(v: &LatticeVector) -> Result<GoldenRational> {
    let (x, y) = numerators(&weight_coords(v)?, Plane::Parallel);
    Ok(Normalizer::squared_norm(Plane::Parallel, &x, &y))
}

/// Exact squared length of the E⊥ component, the golden conjugate of the
/// E∥ formula.
pub fn perp_squared_norm(v: &LatticeVector) -> Result<GoldenRational> {
    let (z, w) = numerators(&weight_coords(v)?, Plane::Perpendicular);
    Ok(Normalizer::squared_norm(Plane::Perpendicular, &z, &w))
}

/// Coefficients of the projection numerators in root coordinates, i.e.
/// `C·x̃` and `C·ỹ` (or `C·z̃`, `C·w̃`).
pub fn root_coordinate_functionals(plane: Plane) -> [[GoldenRational; 4]; 2] {
    let c = cartan_matrix(Diagram::A4).expect("A4").map(|x| GoldenRational::from_rational(x.clone()));
    let (u, w) = axes(plane);
    let f = |v: &FrameVector| {
        let r = c.apply(&v.coeffs);
        [r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()]
    };
    [f(&u), f(&w)]
}

/// Projects root coordinates `m` directly, without converting to weights.
pub fn project_root_coords(m: &[Rational], plane: Plane) -> Result<PlanarPoint> {
    if m.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: m.len() });
    }
    let [fu, fw] = root_coordinate_functionals(plane);
    let dot = |f: &[GoldenRational; 4]| -> GoldenRational { f.iter().zip(m).map(|(c, x)| c.scale(x)).sum() };
    Ok(PlanarPoint::new(plane, dot(&fu), dot(&fw)))
}

/// `2cos(2πk/5)` for `k = 0..5`: `2, τ−1, −τ, −τ, τ−1`.
pub fn twice_cos_fifths() -> [GoldenRational; 5] {
    let t = GoldenRational::tau;
    let c1 = t() - GoldenRational::one();
    [GoldenRational::from_integer(2), c1.clone(), -t(), -t(), c1]
}

/// The 5-cell `(1,0,0,0)` with its E∥ projections, ordered so that vertex
/// `k` lands on `√(2/5)·(cos 2πk/5, sin 2πk/5)`.
pub fn debruijn_vertices() -> Vec<(LatticeVector, PlanarPoint)> {
    let w1 = LatticeVector::unit(Diagram::A4, Basis::Weight, 0).expect("A4");
    let mut out: Vec<(LatticeVector, PlanarPoint)> = orbit(&w1)
        .expect("dominant")
        .into_iter()
        .map(|v| {
            let p = project_parallel(&v).expect("A4");
            (v, p)
        })
        .collect();
    let angle = |p: &PlanarPoint| {
        let a = libm::atan2(p.fy, p.fx);
        if a < -1e-9 {
            a + 2.0 * core::f64::consts::PI
        } else {
            a
        }
    };
    out.sort_by(|a, b| angle(&a.1).total_cmp(&angle(&b.1)));
    out
}

/// Generators `R1 = r1r3` and `R2 = r2r4` of W(H2) in two forms.
#[derive(Clone, Debug)]
pub struct DihedralGenerators {
    /// Right-action matrices on `(β1, β2, β3, β4)`: row `i` is the image of `β_i`.
    pub r1: Matrix<GoldenRational>,
    pub r2: Matrix<GoldenRational>,
    /// Right-action matrices on `(x̂, ŷ, ẑ, ŵ)`.
    pub r1_orth: Matrix<f64>,
    pub r2_orth: Matrix<f64>,
}

impl DihedralGenerators {
    /// Right-action matrix of "`R1` then `R2`" on `(β1..β4)`.
    pub fn product(&self) -> Matrix<GoldenRational> {
        &self.r1 * &self.r2
    }

    pub fn product_orth(&self) -> Matrix<f64> {
        &self.r1_orth * &self.r2_orth
    }
}

/// Action on root coordinates, `m ↦ C⁻¹ G C m`.
pub fn root_action(g: &WeylElement) -> Matrix<Rational> {
    let c = cartan_matrix(Diagram::A4).expect("A4");
    let ci = cartan_inverse(Diagram::A4).expect("A4");
    let w = g.weight_action().map(|x| Rational::from_integer((*x).into()));
    &(&ci * &w) * &c
}

fn golden(m: &Matrix<Rational>) -> Matrix<GoldenRational> {
    m.map(|x| GoldenRational::from_rational(x.clone()))
}

/// Right-action matrix of `g` on the (normalized) β basis.
pub fn beta_matrix(g: &WeylElement) -> Matrix<GoldenRational> {
    let frame = GoldenFrame::a4();
    let b = Matrix::from_fn(4, 4, |i, j| frame.betas[i].coeffs[j].clone());
    let act = golden(&root_action(g));
    // Row i of b·actᵀ is the image of β̃_i; express it in the β̃ rows.
    let images = &b * &act.transpose();
    // β̃1, β̃2 share a normalizer, as do β̃3, β̃4, and g preserves both planes,
    // so the matrix is the same for the normalized β.
    &images * &b.inverse().expect("β̃ rows are independent")
}

/// Right-action matrix of `g` on `(x̂, ŷ, ẑ, ŵ)`, in floats.
pub fn orthonormal_matrix(g: &WeylElement) -> Matrix<f64> {
    let frame = GoldenFrame::a4();
    let c = cartan_matrix(Diagram::A4).expect("A4").map(|x| {
        use num_traits::ToPrimitive;
        x.to_f64().unwrap_or(0.0)
    });
    let act = root_action(g).map(|x| {
        use num_traits::ToPrimitive;
        x.to_f64().unwrap_or(0.0)
    });
    let axes: Vec<[f64; 4]> = frame.axes.iter().map(FrameVector::to_f64).collect();
    Matrix::from_fn(4, 4, |i, j| {
        let img = act.apply(&axes[i]);
        c.bilinear(&img, &axes[j])
    })
}

pub fn dihedral_generators() -> DihedralGenerators {
    let g = generators(GroupKind::WH2);
    DihedralGenerators {
        r1: beta_matrix(&g[0]),
        r2: beta_matrix(&g[1]),
        r1_orth: orthonormal_matrix(&g[0]),
        r2_orth: orthonormal_matrix(&g[1]),
    }
}

/// The 2×2 float matrix `A` with `proj(g·v) = A · proj(v)` on `plane`.
pub fn planar_action(g: &WeylElement, plane: Plane) -> [[f64; 2]; 2] {
    let m = orthonormal_matrix(g);
    let o = match plane {
        Plane::Parallel => 0,
        Plane::Perpendicular => 2,
    };
    // Right action: image of axis i is Σ_j m[i][j] axis_j, so the column-vector
    // form is the transpose of the block.
    [[*m.get(o, o), *m.get(o + 1, o)], [*m.get(o, o + 1), *m.get(o + 1, o + 1)]]
}

/// Dominant representative of `a` under W(A4).
pub fn dominant_representative(a: &[i64; 4]) -> [i64; 4] {
    let c = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]];
    let mut v = *a;
    while let Some(i) = v.iter().position(|&x| x < 0) {
        let ai = v[i];
        for (vj, cij) in v.iter_mut().zip(c[i]) {
            *vj -= ai * cij;
        }
    }
    v
}

/// Vertices of `{0,1}⁵` grouped by the W(A4) orbit of their image in the
/// hyperplane model, `a_i = x_i − x_{i+1}`.
pub fn hypercube_decompose() -> BTreeMap<[i64; 4], usize> {
    let mut out = BTreeMap::new();
    for bits in 0u32..32 {
        let x: [i64; 5] = core::array::from_fn(|i| (bits >> i & 1) as i64);
        let a: [i64; 4] = core::array::from_fn(|i| x[i] - x[i + 1]);
        *out.entry(dominant_representative(&a)).or_insert(0) += 1;
    }
    out
}

/// Whether `v` lies in the lattice spanned by the simple roots.
pub fn is_root_lattice_point(v: &LatticeVector) -> bool {
    v.to_root().is_integral()
}

/// Squared norm in E∥ plus squared norm in E⊥ minus the Cartan norm; zero
/// for every vector.
pub fn pythagoras_defect(v: &LatticeVector) -> Result<GoldenRational> {
    let total = GoldenRational::from_rational(v.norm_squared());
    Ok(par_squared_norm(v)? + perp_squared_norm(v)? - total)
}
