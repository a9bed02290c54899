//! Quaternions over Q(τ) and the two-sided actions `[p,q]` and `[p,q]*`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::golden::{GoldenRational, Rational, Sign};
use crate::matrix::Matrix;
use crate::{Error, Result};

/// `q0 + q1 e1 + q2 e2 + q3 e3` with golden-rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenQuaternion {
    c: [GoldenRational; 4],
}

impl GoldenQuaternion {
    pub fn new(q0: GoldenRational, q1: GoldenRational, q2: GoldenRational, q3: GoldenRational) -> Self {
        GoldenQuaternion { c: [q0, q1, q2, q3] }
    }

    pub fn from_array(c: [GoldenRational; 4]) -> Self {
        GoldenQuaternion { c }
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64, q3: i64) -> Self {
        GoldenQuaternion::new(q0.into(), q1.into(), q2.into(), q3.into())
    }

    pub fn zero() -> Self {
        GoldenQuaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        GoldenQuaternion::from_ints(1, 0, 0, 0)
    }

    /// The unit `e_i` for `i` in 0..4, with `e_0 = 1`.
    pub fn unit(i: usize) -> Self {
        let mut q = GoldenQuaternion::zero();
        q.c[i] = GoldenRational::one();
        q
    }

    pub fn components(&self) -> &[GoldenRational; 4] {
        &self.c
    }

    pub fn component(&self, i: usize) -> &GoldenRational {
        &self.c[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Quaternion conjugate `q̄`.
    pub fn conjugate(&self) -> Self {
        GoldenQuaternion::new(self.c[0].clone(), -&self.c[1], -&self.c[2], -&self.c[3])
    }

    /// Componentwise τ ↔ σ exchange.
    pub fn golden_conjugate(&self) -> Self {
        GoldenQuaternion::from_array(self.c.clone().map(|x| x.conjugate()))
    }

    /// `(p, q) = Σ p_i q_i`.
    pub fn scalar_product(&self, other: &Self) -> GoldenRational {
        self.c.iter().zip(&other.c).map(|(a, b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> GoldenRational {
        self.scalar_product(self)
    }

    pub fn scale(&self, k: &GoldenRational) -> Self {
        GoldenQuaternion::from_array(self.c.clone().map(|x| x * k))
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        GoldenQuaternion::from_array(self.c.clone().map(|x| x.scale(k)))
    }

    pub fn half(&self) -> Self {
        self.scale_rational(&Rational::new(1.into(), 2.into()))
    }

    /// Sign of the first nonzero component.
    pub fn leading_sign(&self) -> Sign {
        self.c.iter().map(GoldenRational::sign).find(|s| *s != Sign::Zero).unwrap_or(Sign::Zero)
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [self.c[0].to_f64(), self.c[1].to_f64(), self.c[2].to_f64(), self.c[3].to_f64()]
    }
}

/// Lexicographic by component, each compared numerically.
impl Ord for GoldenQuaternion {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.c.cmp(&other.c)
    }
}

impl PartialOrd for GoldenQuaternion {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Mul<&'a GoldenQuaternion> for &'a GoldenQuaternion {
    type Output = GoldenQuaternion;
    /// Hamilton product with `e_i e_j = −δ_ij + ε_ijk e_k`.
    fn mul(self, rhs: &GoldenQuaternion) -> GoldenQuaternion {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        GoldenQuaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Mul for GoldenQuaternion {
    type Output = GoldenQuaternion;
    fn mul(self, rhs: GoldenQuaternion) -> GoldenQuaternion {
        &self * &rhs
    }
}

impl<'a> Add<&'a GoldenQuaternion> for &'a GoldenQuaternion {
    type Output = GoldenQuaternion;
    fn add(self, rhs: &GoldenQuaternion) -> GoldenQuaternion {
        GoldenQuaternion::new(
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        )
    }
}

impl Add for GoldenQuaternion {
    type Output = GoldenQuaternion;
    fn add(self, rhs: GoldenQuaternion) -> GoldenQuaternion {
        &self + &rhs
    }
}

impl<'a> Sub<&'a GoldenQuaternion> for &'a GoldenQuaternion {
    type Output = GoldenQuaternion;
    fn sub(self, rhs: &GoldenQuaternion) -> GoldenQuaternion {
        self + &(-rhs)
    }
}

impl Sub for GoldenQuaternion {
    type Output = GoldenQuaternion;
    fn sub(self, rhs: GoldenQuaternion) -> GoldenQuaternion {
        &self - &rhs
    }
}

impl Neg for &GoldenQuaternion {
    type Output = GoldenQuaternion;
    fn neg(self) -> GoldenQuaternion {
        GoldenQuaternion::from_array(self.c.clone().map(|x| -x))
    }
}

impl Neg for GoldenQuaternion {
    type Output = GoldenQuaternion;
    fn neg(self) -> GoldenQuaternion {
        -&self
    }
}

impl fmt::Display for GoldenQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {}; {})", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

impl fmt::Debug for GoldenQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenQuaternion{}", self)
    }
}

/// Whether an element acts on `λ` or on `λ̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActionKind {
    /// `[p,q]: λ ↦ pλq`
    Plain,
    /// `[p,q]*: λ ↦ pλ̄q`
    Star,
}

impl ActionKind {
    pub fn flip(self) -> Self {
        match self {
            ActionKind::Plain => ActionKind::Star,
            ActionKind::Star => ActionKind::Plain,
        }
    }
}

/// `pλq` or `pλ̄q`.
pub fn apply_element(
    p: &GoldenQuaternion,
    q: &GoldenQuaternion,
    kind: ActionKind,
    lambda: &GoldenQuaternion,
) -> GoldenQuaternion {
    match kind {
        ActionKind::Plain => &(p * lambda) * q,
        ActionKind::Star => &(p * &lambda.conjugate()) * q,
    }
}

/// Reflection of `λ` in the hyperplane orthogonal to `α`: `−αλ̄α / (α, α)`.
///
/// The root does not need to be normalized, which keeps the result in Q(τ)
/// even when `|α|` is not.
pub fn reflect_through_root(alpha: &GoldenQuaternion, lambda: &GoldenQuaternion) -> Result<GoldenQuaternion> {
    let n = alpha.norm_squared();
    if n.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let inv = n.inverse()?;
    let sandwich = &(alpha * &lambda.conjugate()) * alpha;
    Ok(-sandwich.scale(&inv))
}

pub fn golden_conjugate_quat(p: &GoldenQuaternion) -> GoldenQuaternion {
    p.golden_conjugate()
}

/// A group element `[p,q]` or `[p,q]*`.
///
/// Some elements (the A3 reflections `[α/√2, −α/√2]*`) have components
/// outside Q(τ). These are stored as `(p, q)` with `inv_sqrt2` set, meaning
/// the true pair is `(p/√2, q/√2)` and the action carries an extra factor ½.
/// Composing two such elements gives an ordinary pair again.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementPair {
    p: GoldenQuaternion,
    q: GoldenQuaternion,
    kind: ActionKind,
    inv_sqrt2: bool,
}

impl ElementPair {
    pub fn new(p: GoldenQuaternion, q: GoldenQuaternion, kind: ActionKind) -> Self {
        ElementPair { p, q, kind, inv_sqrt2: false }.canonical()
    }

    /// Pair whose true components are `p/√2` and `q/√2`.
    pub fn new_scaled(p: GoldenQuaternion, q: GoldenQuaternion, kind: ActionKind) -> Self {
        ElementPair { p, q, kind, inv_sqrt2: true }.canonical()
    }

    pub fn identity() -> Self {
        ElementPair::new(GoldenQuaternion::one(), GoldenQuaternion::one(), ActionKind::Plain)
    }

    /// The reflection in `α` as `[α, −α/(α,α)]*`, not normalized.
    pub fn reflection(alpha: &GoldenQuaternion) -> Result<Self> {
        let n = alpha.norm_squared();
        if n.is_zero() {
            return Err(Error::ZeroRoot);
        }
        Ok(ElementPair::new(alpha.clone(), -alpha.scale(&n.inverse()?), ActionKind::Star))
    }

    pub fn p(&self) -> &GoldenQuaternion {
        &self.p
    }

    pub fn q(&self) -> &GoldenQuaternion {
        &self.q
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    /// True when the stored `p`, `q` are √2 times the actual components.
    pub fn is_scaled(&self) -> bool {
        self.inv_sqrt2
    }

    pub fn apply(&self, lambda: &GoldenQuaternion) -> GoldenQuaternion {
        let v = apply_element(&self.p, &self.q, self.kind, lambda);
        if self.inv_sqrt2 {
            v.half()
        } else {
            v
        }
    }

    /// Apply `self` first, then `then`.
    pub fn then(&self, then: &ElementPair) -> ElementPair {
        let (p, q) = match then.kind {
            // r(pλq)s = (rp)λ(qs)
            ActionKind::Plain => (&then.p * &self.p, &self.q * &then.q),
            // r·conj(pλq)·s = (r q̄) λ̄ (p̄ s)
            ActionKind::Star => (&then.p * &self.q.conjugate(), &self.p.conjugate() * &then.q),
        };
        let kind = match then.kind {
            ActionKind::Plain => self.kind,
            ActionKind::Star => self.kind.flip(),
        };
        // Two factors of 1/√2 on each side leave a rational 1/2 per side.
        let (p, q) = if self.inv_sqrt2 && then.inv_sqrt2 { (p.half(), q.half()) } else { (p, q) };
        ElementPair { p, q, kind, inv_sqrt2: self.inv_sqrt2 ^ then.inv_sqrt2 }.canonical()
    }

    /// `[p,q]` and `[−p,−q]` act identically; pick the one whose `p` has a
    /// positive leading component.
    fn canonical(self) -> Self {
        if self.p.leading_sign() == Sign::Negative {
            ElementPair { p: -self.p, q: -self.q, ..self }
        } else {
            self
        }
    }

    /// Matrix on quaternion coordinates; column `j` is the image of `e_j`.
    pub fn matrix(&self) -> Matrix<GoldenRational> {
        let cols: alloc::vec::Vec<GoldenQuaternion> = (0..4).map(|j| self.apply(&GoldenQuaternion::unit(j))).collect();
        Matrix::from_fn(4, 4, |i, j| cols[j].component(i).clone())
    }
}

impl fmt::Display for ElementPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.kind == ActionKind::Star { "*" } else { "" };
        if self.inv_sqrt2 {
            write!(f, "[{}, {}]{} / 2", self.p, self.q, star)
        } else {
            write!(f, "[{}, {}]{}", self.p, self.q, star)
        }
    }
}
