//! The golden field Q(τ), τ = (1+√5)/2.
//!
//! Elements are stored as `a + bτ` with arbitrary-precision rational
//! coefficients. Multiplication reduces with τ² = τ + 1, the Galois
//! conjugation sends τ to σ = 1 − τ, and ordering is decided exactly by
//! comparing squares, never through floating point.

use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

/// τ as an `f64`.
pub const TAU_F64: f64 = 1.618_033_988_749_895;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// Sign of `u + v√5`, decided exactly.
pub(crate) fn sign_of_sqrt5_form<T>(u: &T, v: &T) -> Sign
where
    T: Signed + Ord + Clone,
{
    let zero = T::zero();
    let five = T::one() + T::one() + T::one() + T::one() + T::one();
    match (u.cmp(&zero), v.cmp(&zero)) {
        (Ordering::Equal, Ordering::Equal) => Sign::Zero,
        (Ordering::Less, Ordering::Less) | (Ordering::Less, Ordering::Equal) | (Ordering::Equal, Ordering::Less) => {
            Sign::Negative
        }
        (Ordering::Greater, Ordering::Greater)
        | (Ordering::Greater, Ordering::Equal)
        | (Ordering::Equal, Ordering::Greater) => Sign::Positive,
        // u² = 5v² has no nonzero rational solution, so these never tie.
        (Ordering::Greater, Ordering::Less) => {
            let uu = u.clone() * u.clone();
            let vv = five * v.clone() * v.clone();
            Sign::from_ordering(uu.cmp(&vv))
        }
        (Ordering::Less, Ordering::Greater) => {
            let uu = u.clone() * u.clone();
            let vv = five * v.clone() * v.clone();
            Sign::from_ordering(vv.cmp(&uu))
        }
    }
}

/// An element `a + bτ` of Q(τ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenRational {
    a: Rational,
    b: Rational,
}

impl GoldenRational {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenRational { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        GoldenRational::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    /// `(a_num/a_den) + (b_num/b_den)τ`.
    ///
    /// Panics if a denominator is zero.
    pub fn from_fractions(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        GoldenRational::new(Rational::new(a_num.into(), a_den.into()), Rational::new(b_num.into(), b_den.into()))
    }

    pub fn from_rational(a: Rational) -> Self {
        GoldenRational::new(a, Rational::zero())
    }

    pub fn from_integer(a: i64) -> Self {
        GoldenRational::from_ints(a, 0)
    }

    pub fn tau() -> Self {
        GoldenRational::from_ints(0, 1)
    }

    /// σ = 1 − τ = (1 − √5)/2.
    pub fn sigma() -> Self {
        GoldenRational::from_ints(1, -1)
    }

    /// √5 = 2τ − 1.
    pub fn sqrt5() -> Self {
        GoldenRational::from_ints(-1, 2)
    }

    /// Coefficient of 1.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of τ.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate: τ ↦ σ, so `a + bτ ↦ (a + b) − bτ`.
    pub fn conjugate(&self) -> Self {
        GoldenRational::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `x · conj(x) = a² + ab − b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(GoldenRational::new(c.a / &n, c.b / n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn sign(&self) -> Sign {
        // a + bτ = ((2a + b) + b√5) / 2
        let u = &self.a + &self.a + &self.b;
        sign_of_sqrt5_form(&u, &self.b)
    }

    pub fn abs(&self) -> Self {
        if self.sign().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = GoldenRational::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GoldenRational::new(&self.a * r, &self.b * r)
    }

    /// Nearest `f64` to the exact value; not authoritative.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        // Clear denominators so the value is (U + V√5) / (2d) with U, V, d
        // integers, then approximate V√5 by an integer square root carried far
        // enough below the leading bit of |U + V√5| that rounding to f64 is
        // unaffected.
        let u = &self.a + &self.a + &self.b;
        let v = &self.b;
        let d = u.denom().lcm(v.denom());
        let un: BigInt = u.numer() * (&d / u.denom());
        let vn: BigInt = v.numer() * (&d / v.denom());
        let k = 2 * un.bits().max(vn.bits()) as usize + 64;
        let root = ((&vn * &vn * 5u32) << (2 * k)).sqrt();
        let scaled = if vn.is_negative() { -root } else { root };
        let num = (un << k) + scaled;
        let den = (d << k) * 2u32;
        Rational::new(num, den).to_f64().unwrap_or(f64::NAN)
    }
}

impl Zero for GoldenRational {
    fn zero() -> Self {
        GoldenRational::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenRational {
    fn one() -> Self {
        GoldenRational::new(Rational::one(), Rational::zero())
    }
}

impl From<i64> for GoldenRational {
    fn from(v: i64) -> Self {
        GoldenRational::from_integer(v)
    }
}

impl From<Rational> for GoldenRational {
    fn from(v: Rational) -> Self {
        GoldenRational::from_rational(v)
    }
}

impl Ord for GoldenRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl PartialOrd for GoldenRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn add(self, rhs: &GoldenRational) -> GoldenRational {
        GoldenRational::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn sub(self, rhs: &GoldenRational) -> GoldenRational {
        GoldenRational::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn mul(self, rhs: &GoldenRational) -> GoldenRational {
        // (a + bτ)(c + dτ) = (ac + bd) + (ad + bc + bd)τ
        let bd = &self.b * &rhs.b;
        GoldenRational::new(&self.a * &rhs.a + &bd, &self.a * &rhs.b + &self.b * &rhs.a + bd)
    }
}

impl<'a> Div<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    /// Panics on division by zero, like `Ratio`; use [`GoldenRational::checked_div`]
    /// to get an error instead.
    fn div(self, rhs: &GoldenRational) -> GoldenRational {
        self.checked_div(rhs).expect("division by zero in Q(τ)")
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $method(self, rhs: GoldenRational) -> GoldenRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $method(self, rhs: &GoldenRational) -> GoldenRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<GoldenRational> for &'a GoldenRational {
            type Output = GoldenRational;
            fn $method(self, rhs: GoldenRational) -> GoldenRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl AddAssign<&GoldenRational> for GoldenRational {
    fn add_assign(&mut self, rhs: &GoldenRational) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl AddAssign for GoldenRational {
    fn add_assign(&mut self, rhs: GoldenRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GoldenRational> for GoldenRational {
    fn sub_assign(&mut self, rhs: &GoldenRational) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&GoldenRational> for GoldenRational {
    fn mul_assign(&mut self, rhs: &GoldenRational) {
        *self = &*self * rhs;
    }
}

impl Neg for GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        GoldenRational::new(-self.a, -self.b)
    }
}

impl Neg for &GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        GoldenRational::new(-&self.a, -&self.b)
    }
}

impl Sum for GoldenRational {
    fn sum<I: Iterator<Item = GoldenRational>>(iter: I) -> Self {
        iter.fold(GoldenRational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a GoldenRational> for GoldenRational {
    fn sum<I: Iterator<Item = &'a GoldenRational>>(iter: I) -> Self {
        iter.fold(GoldenRational::zero(), |acc, x| acc + x)
    }
}

impl Product for GoldenRational {
    fn product<I: Iterator<Item = GoldenRational>>(iter: I) -> Self {
        iter.fold(GoldenRational::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = |f: &mut fmt::Formatter<'_>, b: &Rational| -> fmt::Result {
            if b.is_one() {
                write!(f, "τ")
            } else if b.is_integer() {
                write!(f, "{}τ", b)
            } else {
                write!(f, "({})τ", b)
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_negative() {
                    write!(f, "-")?;
                }
                coeff(f, &self.b.abs())
            }
            (false, false) => {
                write!(f, "{}", self.a)?;
                if self.b.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                coeff(f, &self.b.abs())
            }
        }
    }
}

impl fmt::Debug for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenRational({})", self)
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use alloc::string::{String, ToString};

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{GoldenRational, Rational};

    fn ratio_pair(r: &Rational) -> [String; 2] {
        [r.numer().to_string(), r.denom().to_string()]
    }

    fn parse_pair<E: serde::de::Error>(p: &[String; 2]) -> Result<Rational, E> {
        let n = p[0].parse().map_err(|_| E::custom("bad numerator"))?;
        let d: num_bigint::BigInt = p[1].parse().map_err(|_| E::custom("bad denominator"))?;
        if d == num_bigint::BigInt::from(0) {
            return Err(E::custom("zero denominator"));
        }
        Ok(Rational::new(n, d))
    }

    /// Serialized as `[[a_num, a_den], [b_num, b_den]]` with decimal strings.
    impl Serialize for GoldenRational {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            [ratio_pair(&self.a), ratio_pair(&self.b)].serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for GoldenRational {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let [a, b] = <[[String; 2]; 2]>::deserialize(d)?;
            let a = parse_pair::<D::Error>(&a)?;
            let b = parse_pair::<D::Error>(&b)?;
            if a.denom().sign() != num_bigint::Sign::Plus {
                return Err(D::Error::custom("non-canonical rational"));
            }
            Ok(GoldenRational::new(a, b))
        }
    }
}

/// An element `a + bτ` of Z[τ] with machine-integer coefficients.
///
/// Used on the hot path of lattice enumeration where every projected
/// coordinate of an integer vector is an algebraic integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GoldenInteger {
    pub a: i128,
    pub b: i128,
}

impl GoldenInteger {
    pub const ZERO: GoldenInteger = GoldenInteger { a: 0, b: 0 };

    pub const fn new(a: i128, b: i128) -> Self {
        GoldenInteger { a, b }
    }

    pub fn conjugate(self) -> Self {
        GoldenInteger::new(self.a + self.b, -self.b)
    }

    pub fn sign(self) -> Sign {
        sign_of_sqrt5_form(&(2 * self.a + self.b), &self.b)
    }

    pub fn scale(self, k: i128) -> Self {
        GoldenInteger::new(self.a * k, self.b * k)
    }

    pub fn to_golden(self) -> GoldenRational {
        GoldenRational::new(Rational::from_integer(self.a.into()), Rational::from_integer(self.b.into()))
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn checked_add(self, rhs: GoldenInteger) -> Option<Self> {
        Some(GoldenInteger::new(self.a.checked_add(rhs.a)?, self.b.checked_add(rhs.b)?))
    }

    pub fn checked_mul(self, rhs: GoldenInteger) -> Option<Self> {
        let bd = self.b.checked_mul(rhs.b)?;
        let a = self.a.checked_mul(rhs.a)?.checked_add(bd)?;
        let b = self.a.checked_mul(rhs.b)?.checked_add(self.b.checked_mul(rhs.a)?)?.checked_add(bd)?;
        Some(GoldenInteger::new(a, b))
    }

    pub fn checked_scale(self, k: i128) -> Option<Self> {
        Some(GoldenInteger::new(self.a.checked_mul(k)?, self.b.checked_mul(k)?))
    }
}

impl Add for GoldenInteger {
    type Output = GoldenInteger;
    fn add(self, rhs: GoldenInteger) -> GoldenInteger {
        GoldenInteger::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenInteger {
    type Output = GoldenInteger;
    fn sub(self, rhs: GoldenInteger) -> GoldenInteger {
        GoldenInteger::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for GoldenInteger {
    type Output = GoldenInteger;
    fn mul(self, rhs: GoldenInteger) -> GoldenInteger {
        let bd = self.b * rhs.b;
        GoldenInteger::new(self.a * rhs.a + bd, self.a * rhs.b + self.b * rhs.a + bd)
    }
}

impl Neg for GoldenInteger {
    type Output = GoldenInteger;
    fn neg(self) -> GoldenInteger {
        GoldenInteger::new(-self.a, -self.b)
    }
}
