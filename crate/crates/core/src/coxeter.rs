//! Diagram data: Cartan matrices, root/weight coordinates, quaternionic
//! embeddings of A3 and A4, and the Coxeter-plane frame.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::golden::{GoldenRational, Rational, Sign};
use crate::matrix::Matrix;
use crate::quaternion::GoldenQuaternion;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    A,
    H,
}

/// A Coxeter diagram: `A_n` for `1 ≤ n ≤ 5`, or `H_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagram {
    family: Family,
    rank: usize,
}

impl Diagram {
    pub const A3: Diagram = Diagram { family: Family::A, rank: 3 };
    pub const A4: Diagram = Diagram { family: Family::A, rank: 4 };
    pub const H2: Diagram = Diagram { family: Family::H, rank: 2 };

    pub fn a(rank: usize) -> Result<Self> {
        if (1..=5).contains(&rank) {
            Ok(Diagram { family: Family::A, rank })
        } else {
            Err(Error::InvalidRank(rank))
        }
    }

    pub fn new(family: Family, rank: usize) -> Result<Self> {
        match family {
            Family::A => Diagram::a(rank),
            Family::H if rank == 2 => Ok(Diagram::H2),
            Family::H => Err(Error::InvalidRank(rank)),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// `h = n + 1` for `A_n`, 5 for `H_2`.
    pub fn coxeter_number(self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::H => 5,
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::A => 'A',
            Family::H => 'H',
        };
        write!(f, "{}{}", letter, self.rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Basis {
    /// Coefficients `m_i` of the simple roots.
    Root,
    /// Coefficients `a_i` of the fundamental weights (Dynkin labels).
    Weight,
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn require_a(diagram: Diagram) -> Result<()> {
    if diagram.family == Family::A {
        Ok(())
    } else {
        Err(Error::UnsupportedDiagram(diagram))
    }
}

/// Tridiagonal Cartan matrix of `A_n`.
pub fn cartan_matrix(diagram: Diagram) -> Result<Matrix<Rational>> {
    require_a(diagram)?;
    let n = diagram.rank;
    Ok(Matrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => int(2),
        1 => int(-1),
        _ => int(0),
    }))
}

/// `(C⁻¹)_ij = min(i,j)·(n+1−max(i,j))/(n+1)` with 1-based indices.
pub fn cartan_inverse(diagram: Diagram) -> Result<Matrix<Rational>> {
    require_a(diagram)?;
    let n = diagram.rank as i64;
    Ok(Matrix::from_fn(diagram.rank, diagram.rank, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        Rational::new((i.min(j) * (n + 1 - i.max(j))).into(), (n + 1).into())
    }))
}

/// Gram matrix `[[2, −τ], [−τ, 2]]` of the `H_2` simple roots.
pub fn h2_gram() -> Matrix<GoldenRational> {
    let m = -GoldenRational::tau();
    Matrix::from_fn(2, 2, |i, j| if i == j { GoldenRational::from_integer(2) } else { m.clone() })
}

/// An exact vector of an `A_n` lattice in root or weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeVector {
    diagram: Diagram,
    basis: Basis,
    coords: Vec<Rational>,
}

impl LatticeVector {
    pub fn new(diagram: Diagram, basis: Basis, coords: Vec<Rational>) -> Result<Self> {
        require_a(diagram)?;
        if coords.len() != diagram.rank {
            return Err(Error::DimensionMismatch { expected: diagram.rank, got: coords.len() });
        }
        Ok(LatticeVector { diagram, basis, coords })
    }

    pub fn from_ints(diagram: Diagram, basis: Basis, coords: &[i64]) -> Result<Self> {
        LatticeVector::new(diagram, basis, coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(diagram: Diagram, basis: Basis) -> Result<Self> {
        LatticeVector::new(diagram, basis, vec![Rational::zero(); diagram.rank])
    }

    /// The `i`-th simple root or fundamental weight (0-based), in its own basis.
    pub fn unit(diagram: Diagram, basis: Basis, i: usize) -> Result<Self> {
        let mut v = LatticeVector::zero(diagram, basis)?;
        if i >= diagram.rank {
            return Err(Error::DimensionMismatch { expected: diagram.rank, got: i + 1 });
        }
        v.coords[i] = Rational::one();
        Ok(v)
    }

    pub fn diagram(&self) -> Diagram {
        self.diagram
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Rational::is_integer)
    }

    /// Integer coordinates, if all are integers that fit in `i64`.
    pub fn int_coords(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coords.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }

    pub fn convert(&self, target: Basis) -> Self {
        convert_basis(self, target)
    }

    pub fn to_weight(&self) -> Self {
        self.convert(Basis::Weight)
    }

    pub fn to_root(&self) -> Self {
        self.convert(Basis::Root)
    }

    /// Cartan inner product, converting `other` into this vector's basis.
    pub fn inner_product(&self, other: &LatticeVector) -> Result<Rational> {
        if self.diagram != other.diagram {
            return Err(Error::IncompatibleVectors);
        }
        // Pair root coordinates with weight coordinates: (Σ m_i α_i, Σ a_j ω_j) = Σ m_i a_i.
        let (m, a) = (self.to_root(), other.to_weight());
        Ok(m.coords.iter().zip(&a.coords).map(|(x, y)| x * y).sum())
    }

    pub fn norm_squared(&self) -> Rational {
        self.inner_product(self).expect("a vector is compatible with itself")
    }

    pub fn scale(&self, k: &Rational) -> Self {
        LatticeVector { coords: self.coords.iter().map(|c| c * k).collect(), ..self.clone() }
    }

    fn zip_with(&self, other: &LatticeVector, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.diagram != other.diagram {
            return Err(Error::IncompatibleVectors);
        }
        let other = other.convert(self.basis);
        Ok(LatticeVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
            ..self.clone()
        })
    }

    pub fn checked_add(&self, other: &LatticeVector) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &LatticeVector) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    /// Panics if the diagrams differ.
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        self.checked_add(rhs).expect("vectors from different diagrams")
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    /// Panics if the diagrams differ.
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        self.checked_sub(rhs).expect("vectors from different diagrams")
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { coords: self.coords.iter().map(|c| -c).collect(), ..self.clone() }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// `a = C m` and `m = C⁻¹ a`.
pub fn convert_basis(v: &LatticeVector, target: Basis) -> LatticeVector {
    if v.basis == target {
        return v.clone();
    }
    let m = match target {
        Basis::Weight => cartan_matrix(v.diagram),
        Basis::Root => cartan_inverse(v.diagram),
    }
    .expect("lattice vectors only exist for A diagrams");
    LatticeVector { diagram: v.diagram, basis: target, coords: m.apply(&v.coords) }
}

/// Factor `s` such that `s · (embed(u), embed(v))` is the Cartan inner product.
///
/// A3 quaternions are stored as-is; A4 quaternions are stored multiplied by
/// √2 so that every component lies in Q(τ).
pub fn quaternion_scale(diagram: Diagram) -> Result<Rational> {
    match (diagram.family, diagram.rank) {
        (Family::A, 3) => Ok(Rational::one()),
        (Family::A, 4) => Ok(Rational::new(1.into(), 2.into())),
        _ => Err(Error::UnsupportedDiagram(diagram)),
    }
}

/// Stored quaternions of the simple roots.
pub fn simple_roots_quaternion(diagram: Diagram) -> Result<Vec<GoldenQuaternion>> {
    let q = GoldenQuaternion::from_ints;
    match (diagram.family, diagram.rank) {
        // α1 = e1+e2, α2 = e3−e2, α3 = e2−e1
        (Family::A, 3) => Ok(vec![q(0, 1, 1, 0), q(0, 0, -1, 1), q(0, -1, 1, 0)]),
        // √2·α: −2, 1+e1+e2+e3, −2e1, e1 − σe2 − τe3
        (Family::A, 4) => Ok(vec![
            q(-2, 0, 0, 0),
            q(1, 1, 1, 1),
            q(0, -2, 0, 0),
            GoldenQuaternion::new(
                GoldenRational::zero(),
                GoldenRational::one(),
                -GoldenRational::sigma(),
                -GoldenRational::tau(),
            ),
        ]),
        _ => Err(Error::UnsupportedDiagram(diagram)),
    }
}

/// Stored quaternions of the fundamental weights, `ω_i = Σ_j (C⁻¹)_ij α_j`.
pub fn fundamental_weights_quaternion(diagram: Diagram) -> Result<Vec<GoldenQuaternion>> {
    let roots = simple_roots_quaternion(diagram)?;
    let ci = cartan_inverse(diagram)?;
    Ok((0..diagram.rank)
        .map(|i| {
            roots
                .iter()
                .enumerate()
                .fold(GoldenQuaternion::zero(), |acc, (j, r)| &acc + &r.scale_rational(ci.get(i, j)))
        })
        .collect())
}

/// Stored quaternion of a lattice vector.
pub fn embed_quaternion(v: &LatticeVector) -> Result<GoldenQuaternion> {
    let roots = simple_roots_quaternion(v.diagram)?;
    let m = v.to_root();
    Ok(roots.iter().zip(&m.coords).fold(GoldenQuaternion::zero(), |acc, (r, c)| &acc + &r.scale_rational(c)))
}

/// Inverse of [`embed_quaternion`]: weight coordinates `a_i = s·(q, α_i)`.
pub fn weight_coords_of_quaternion(diagram: Diagram, q: &GoldenQuaternion) -> Result<Option<LatticeVector>> {
    let s = GoldenRational::from_rational(quaternion_scale(diagram)?);
    let roots = simple_roots_quaternion(diagram)?;
    let mut coords = Vec::with_capacity(diagram.rank);
    for r in &roots {
        let a = &s * &q.scalar_product(r);
        if !a.is_rational() {
            return Ok(None);
        }
        coords.push(a.a().clone());
    }
    LatticeVector::new(diagram, Basis::Weight, coords).map(Some)
}

/// A direction in the A4 root space, `sign · coeffs / √norm_squared`, with
/// `coeffs` the simple-root coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrameVector {
    pub name: &'static str,
    pub coeffs: [GoldenRational; 4],
    pub norm_squared: GoldenRational,
    pub sign: Sign,
}

impl FrameVector {
    fn new(name: &'static str, coeffs: [GoldenRational; 4], sign: Sign) -> Self {
        let norm_squared = cartan_form_golden(&coeffs, &coeffs);
        FrameVector { name, coeffs, norm_squared, sign }
    }

    /// `a · coeffs` for weight coordinates `a`, the unnormalized component.
    pub fn numerator<'a>(&self, weight_coords: impl IntoIterator<Item = &'a GoldenRational>) -> GoldenRational {
        weight_coords.into_iter().zip(&self.coeffs).map(|(a, c)| a * c).sum()
    }

    pub fn to_f64(&self) -> [f64; 4] {
        let n = libm::sqrt(self.norm_squared.to_f64());
        let s = if self.sign.is_negative() { -1.0 } else { 1.0 };
        self.coeffs.clone().map(|c| s * c.to_f64() / n)
    }
}

/// `uᵀ C v` for root coefficients over Q(τ), A4 only.
pub fn cartan_form_golden(u: &[GoldenRational; 4], v: &[GoldenRational; 4]) -> GoldenRational {
    let c = cartan_matrix(Diagram::A4).expect("A4 is supported").map(|x| GoldenRational::from_rational(x.clone()));
    c.bilinear(u, v)
}

/// The exact A4 frame.
///
/// `betas` are `β̃1 = α1 + τα3`, `β̃2 = τα2 + α4` and their σ analogs, each
/// with squared normalizer `2+τ` or `2+σ`. The axes are
/// `x̂ ∝ β1 − β2`, `ŷ ∝ β1 + β2`, `ẑ ∝ β3 − β4`, `ŵ ∝ −(β3 + β4)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoldenFrame {
    pub c: GoldenRational,
    /// `(1, τ, τ, 1)`, to be divided by `√(2+τ)`.
    pub eigenvector: [GoldenRational; 4],
    pub eigenvector_norm_squared: GoldenRational,
    pub betas: [FrameVector; 4],
    pub axes: [FrameVector; 4],
}

impl GoldenFrame {
    pub fn a4() -> Self {
        let z = GoldenRational::zero;
        let o = GoldenRational::one;
        let t = GoldenRational::tau;
        let s = GoldenRational::sigma;
        let b1 = [o(), z(), t(), z()];
        let b2 = [z(), t(), z(), o()];
        let b3 = [o(), z(), s(), z()];
        let b4 = [z(), s(), z(), o()];
        let diff = |u: &[GoldenRational; 4], v: &[GoldenRational; 4]| {
            [&u[0] - &v[0], &u[1] - &v[1], &u[2] - &v[2], &u[3] - &v[3]]
        };
        let sum = |u: &[GoldenRational; 4], v: &[GoldenRational; 4]| {
            [&u[0] + &v[0], &u[1] + &v[1], &u[2] + &v[2], &u[3] + &v[3]]
        };
        let axes = [
            FrameVector::new("x", diff(&b1, &b2), Sign::Positive),
            FrameVector::new("y", sum(&b1, &b2), Sign::Positive),
            FrameVector::new("z", diff(&b3, &b4), Sign::Positive),
            FrameVector::new("w", sum(&b3, &b4), Sign::Negative),
        ];
        let betas = [
            FrameVector::new("beta1", b1, Sign::Positive),
            FrameVector::new("beta2", b2, Sign::Positive),
            FrameVector::new("beta3", b3, Sign::Positive),
            FrameVector::new("beta4", b4, Sign::Positive),
        ];
        GoldenFrame {
            c: t(),
            eigenvector: [o(), t(), t(), o()],
            eigenvector_norm_squared: GoldenRational::from_integer(2) + t(),
            betas,
            axes,
        }
    }

    /// Inner product of two frame vectors with their normalizers applied;
    /// exact whenever the product of the two normalizers is a square in Q(τ)
    /// or the unnormalized product vanishes.
    pub fn normalized_inner(u: &FrameVector, v: &FrameVector) -> Option<GoldenRational> {
        let raw = cartan_form_golden(&u.coeffs, &v.coeffs);
        if raw.is_zero() {
            return Some(raw);
        }
        if u.norm_squared != v.norm_squared {
            return None;
        }
        let signed = if (u.sign == Sign::Negative) ^ (v.sign == Sign::Negative) { -raw } else { raw };
        Some(signed * u.norm_squared.inverse().ok()?)
    }
}

/// The Coxeter-plane frame of `A_n`.
///
/// Float data is always present; `exact` is filled for A4 only, where the
/// frame lives in Q(τ).
#[derive(Clone, Debug)]
pub struct CoxeterPlaneFrame {
    pub diagram: Diagram,
    /// `2cos(π/h)`, the largest eigenvalue of the incidence matrix.
    pub c: f64,
    /// `x_i ∝ sin(iπ/h)` with `Σ_odd x_i² = Σ_even x_i² = 1`.
    pub eigenvector: Vec<f64>,
    /// Root coefficients of β1 (odd nodes) and β2 (even nodes).
    pub beta1: Vec<f64>,
    pub beta2: Vec<f64>,
    /// Root coefficients of the unit vectors `(β1−β2)/√(2(2+c))` and `(β1+β2)/√(2(2−c))`.
    pub xhat: Vec<f64>,
    pub yhat: Vec<f64>,
    pub exact: Option<GoldenFrame>,
}

pub fn coxeter_plane_frame(diagram: Diagram) -> Result<CoxeterPlaneFrame> {
    require_a(diagram)?;
    let n = diagram.rank;
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let h = diagram.coxeter_number() as f64;
    let pi = core::f64::consts::PI;
    let c = 2.0 * libm::cos(pi / h);
    let raw: Vec<f64> = (1..=n).map(|i| libm::sin(i as f64 * pi / h)).collect();
    let odd: f64 = raw.iter().step_by(2).map(|x| x * x).sum();
    let even: f64 = raw.iter().skip(1).step_by(2).map(|x| x * x).sum();
    let eigenvector: Vec<f64> =
        raw.iter().enumerate().map(|(i, x)| x / libm::sqrt(if i % 2 == 0 { odd } else { even })).collect();
    let beta1: Vec<f64> = eigenvector.iter().enumerate().map(|(i, x)| if i % 2 == 0 { *x } else { 0.0 }).collect();
    let beta2: Vec<f64> = eigenvector.iter().enumerate().map(|(i, x)| if i % 2 == 1 { *x } else { 0.0 }).collect();
    let nx = libm::sqrt(2.0 * (2.0 + c));
    let ny = libm::sqrt(2.0 * (2.0 - c));
    let xhat = beta1.iter().zip(&beta2).map(|(a, b)| (a - b) / nx).collect();
    let yhat = beta1.iter().zip(&beta2).map(|(a, b)| (a + b) / ny).collect();
    let exact = if diagram == Diagram::A4 { Some(GoldenFrame::a4()) } else { None };
    Ok(CoxeterPlaneFrame { diagram, c, eigenvector, beta1, beta2, xhat, yhat, exact })
}

/// `X C Xᵀ` for the normalized β rows; for A4 this is
/// `diag([[2,−τ],[−τ,2]], [[2,−σ],[−σ,2]])`.
pub fn block_diagonalize_check(diagram: Diagram) -> Result<Matrix<GoldenRational>> {
    if diagram != Diagram::A4 {
        return Err(Error::UnsupportedDiagram(diagram));
    }
    let frame = GoldenFrame::a4();
    let mut out = Matrix::zeros(4, 4);
    for (i, u) in frame.betas.iter().enumerate() {
        for (j, v) in frame.betas.iter().enumerate() {
            // Roots carry squared length 2.
            let e = GoldenFrame::normalized_inner(u, v).ok_or(Error::UnsupportedDiagram(diagram))?;
            out.set(i, j, &e + &e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn a4_cartan_and_inverse() {
        let c = cartan_matrix(Diagram::A4).unwrap();
        assert_eq!(c.row(0), &[q(2, 1), q(-1, 1), q(0, 1), q(0, 1)]);
        let ci = cartan_inverse(Diagram::A4).unwrap();
        let expected = [[4, 3, 2, 1], [3, 6, 4, 2], [2, 4, 6, 3], [1, 2, 3, 4]];
        for (i, row) in expected.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*ci.get(i, j), q(*v, 5));
            }
        }
        assert!((&c * &ci).is_identity());
        assert_eq!(ci, c.inverse().unwrap());
    }

    #[test]
    fn a3_inverse() {
        let ci = cartan_inverse(Diagram::A3).unwrap();
        let expected = [[3, 2, 1], [2, 4, 2], [1, 2, 3]];
        for (i, row) in expected.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*ci.get(i, j), q(*v, 4));
            }
        }
    }

    #[test]
    fn h2_has_no_rational_cartan_matrix() {
        assert_eq!(cartan_matrix(Diagram::H2), Err(Error::UnsupportedDiagram(Diagram::H2)));
        assert_eq!(*h2_gram().get(0, 1), -GoldenRational::tau());
    }

    #[test]
    fn basis_conversion_examples() {
        let hr = LatticeVector::from_ints(Diagram::A4, Basis::Root, &[1, 1, 1, 1]).unwrap();
        assert_eq!(hr.to_weight(), LatticeVector::from_ints(Diagram::A4, Basis::Weight, &[1, 0, 0, 1]).unwrap());
        let w1 = LatticeVector::from_ints(Diagram::A4, Basis::Weight, &[1, 0, 0, 0]).unwrap();
        assert_eq!(w1.to_root().coords(), &[q(4, 5), q(3, 5), q(2, 5), q(1, 5)]);
        let z = LatticeVector::zero(Diagram::A4, Basis::Root).unwrap();
        assert!(z.to_weight().is_zero());
    }

    #[test]
    fn embedding_examples() {
        let a1 = LatticeVector::unit(Diagram::A4, Basis::Root, 0).unwrap();
        assert_eq!(embed_quaternion(&a1).unwrap(), GoldenQuaternion::from_ints(-2, 0, 0, 0));
        let w1 = LatticeVector::unit(Diagram::A3, Basis::Weight, 0).unwrap();
        assert_eq!(embed_quaternion(&w1).unwrap(), GoldenQuaternion::from_ints(0, 1, 1, 1).half());
        let w1 = LatticeVector::unit(Diagram::A4, Basis::Weight, 0).unwrap();
        let expected = GoldenQuaternion::new(
            GoldenRational::from_integer(-1),
            GoldenRational::zero(),
            GoldenRational::from_fractions(2, 5, 1, 5),
            GoldenRational::from_fractions(3, 5, -1, 5),
        );
        assert_eq!(embed_quaternion(&w1).unwrap(), expected);
    }

    #[test]
    fn embedding_respects_inner_products() {
        for d in [Diagram::A3, Diagram::A4] {
            let s = GoldenRational::from_rational(quaternion_scale(d).unwrap());
            let ws = fundamental_weights_quaternion(d).unwrap();
            let rs = simple_roots_quaternion(d).unwrap();
            let ci = cartan_inverse(d).unwrap();
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    let ip = &s * &ws[i].scalar_product(&ws[j]);
                    assert_eq!(ip, GoldenRational::from_rational(ci.get(i, j).clone()));
                    let dual = &s * &ws[i].scalar_product(&rs[j]);
                    assert_eq!(dual, GoldenRational::from_integer((i == j) as i64));
                }
            }
        }
    }

    #[test]
    fn a3_weights_match_closed_forms() {
        let ws = fundamental_weights_quaternion(Diagram::A3).unwrap();
        assert_eq!(ws[1], GoldenQuaternion::from_ints(0, 0, 0, 1));
        assert_eq!(ws[2], GoldenQuaternion::from_ints(0, -1, 1, 1).half());
    }

    #[test]
    fn quaternion_round_trip() {
        let v = LatticeVector::from_ints(Diagram::A4, Basis::Weight, &[3, -1, 0, 2]).unwrap();
        let q = embed_quaternion(&v).unwrap();
        assert_eq!(weight_coords_of_quaternion(Diagram::A4, &q).unwrap(), Some(v));
    }

    #[test]
    fn a4_frame_is_orthonormal() {
        let f = GoldenFrame::a4();
        for (i, u) in f.axes.iter().enumerate() {
            for (j, v) in f.axes.iter().enumerate() {
                let e = GoldenFrame::normalized_inner(u, v).unwrap();
                assert_eq!(e, GoldenRational::from_integer((i == j) as i64), "{} {}", u.name, v.name);
            }
        }
    }

    #[test]
    fn a4_eigenvector_is_exact() {
        let f = GoldenFrame::a4();
        let c = cartan_matrix(Diagram::A4).unwrap().map(|x| GoldenRational::from_rational(x.clone()));
        let incidence = &Matrix::identity(4).map(|x: &GoldenRational| x.clone() + x.clone()) - &c;
        let lhs = incidence.apply(&f.eigenvector);
        let rhs: Vec<GoldenRational> = f.eigenvector.iter().map(|x| x * &f.c).collect();
        assert_eq!(lhs, rhs);
        let odd = &f.eigenvector[0].square() + &f.eigenvector[2].square();
        let even = &f.eigenvector[1].square() + &f.eigenvector[3].square();
        assert_eq!(odd, f.eigenvector_norm_squared);
        assert_eq!(even, f.eigenvector_norm_squared);
    }

    #[test]
    fn beta_products() {
        let f = GoldenFrame::a4();
        let [b1, b2, b3, b4] = &f.betas;
        let ip = |u, v| GoldenFrame::normalized_inner(u, v).unwrap() * GoldenRational::from_integer(2);
        assert_eq!(ip(b1, b2), -GoldenRational::tau());
        assert_eq!(ip(b3, b4), -GoldenRational::sigma());
        assert!(ip(b1, b3).is_zero());
        assert_eq!(ip(b1, b1), GoldenRational::from_integer(2));
    }

    #[test]
    fn block_diagonal_form() {
        let m = block_diagonalize_check(Diagram::A4).unwrap();
        let upper = [[m.get(0, 0), m.get(0, 1)], [m.get(1, 0), m.get(1, 1)]];
        let lower = [[m.get(2, 2), m.get(2, 3)], [m.get(3, 2), m.get(3, 3)]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(upper[i][j].conjugate(), *lower[i][j]);
                assert!(m.get(i, j + 2).is_zero() && m.get(i + 2, j).is_zero());
            }
        }
        assert_eq!(*m.get(0, 1), -GoldenRational::tau());
    }

    #[test]
    fn float_frames() {
        let a2 = coxeter_plane_frame(Diagram::a(2).unwrap()).unwrap();
        assert!((a2.c - 1.0).abs() < 1e-15);
        assert!(a2.eigenvector.iter().all(|x| (x - 1.0).abs() < 1e-15));
        let a4 = coxeter_plane_frame(Diagram::A4).unwrap();
        assert!((a4.c - crate::golden::TAU_F64).abs() < 1e-15);
        let exact = a4.exact.as_ref().unwrap();
        for (f, e) in a4.xhat.iter().zip(exact.axes[0].to_f64()) {
            assert!((f - e).abs() < 1e-14);
        }
        assert!(coxeter_plane_frame(Diagram::H2).is_err());
    }
}
