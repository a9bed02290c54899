//! Small dense matrices over exact scalars.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::golden::{GoldenRational, Rational};
use crate::{Error, Result};

/// A commutative ring element usable as a matrix entry.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + for<'a> MulRef<'a> + for<'a> AddRef<'a>
{
}

/// `&a * &b` without consuming either side.
pub trait MulRef<'a>: Sized + 'a {
    fn mul_ref(&'a self, rhs: &'a Self) -> Self;
}

/// `&a + &b` and `&a - &b` without consuming either side.
pub trait AddRef<'a>: Sized + 'a {
    fn add_ref(&'a self, rhs: &'a Self) -> Self;
    fn sub_ref(&'a self, rhs: &'a Self) -> Self;
}

/// A scalar with (fallible) division.
pub trait Field: Scalar {
    fn try_inverse(&self) -> Option<Self>;
}

macro_rules! scalar_impl {
    ($t:ty) => {
        impl<'a> MulRef<'a> for $t {
            fn mul_ref(&'a self, rhs: &'a Self) -> Self {
                self * rhs
            }
        }
        impl<'a> AddRef<'a> for $t {
            fn add_ref(&'a self, rhs: &'a Self) -> Self {
                self + rhs
            }
            fn sub_ref(&'a self, rhs: &'a Self) -> Self {
                self - rhs
            }
        }
        impl Scalar for $t {}
    };
}

scalar_impl!(Rational);
scalar_impl!(GoldenRational);
scalar_impl!(i64);
scalar_impl!(f64);

impl Field for Rational {
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for GoldenRational {
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl Field for f64 {
    fn try_inverse(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

/// Row-major `rows × cols` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: (0..rows * cols).map(|_| T::zero()).collect() }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from nested rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn try_mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let p = self.get(i, k).mul_ref(rhs.get(k, j));
                acc = acc.add_ref(&p);
            }
            acc
        }))
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc = acc.add_ref(&a.mul_ref(b));
                }
                acc
            })
            .collect()
    }

    /// `v · self` for a row vector `v`.
    pub fn apply_right(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        (0..self.cols)
            .map(|j| {
                let mut acc = T::zero();
                for (i, b) in v.iter().enumerate() {
                    acc = acc.add_ref(&b.mul_ref(self.get(i, j)));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, exp: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `vᵀ · self · w`.
    pub fn bilinear(&self, v: &[T], w: &[T]) -> T {
        let mw = self.apply(w);
        let mut acc = T::zero();
        for (a, b) in v.iter().zip(&mw) {
            acc = acc.add_ref(&a.mul_ref(b));
        }
        acc
    }
}

impl<T: Field> Matrix<T> {
    /// Gauss-Jordan inverse; `DivisionByZero` if singular.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::DivisionByZero)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).try_inverse().ok_or(Error::DivisionByZero)?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.sub_row_multiple(r, col, &f);
                    inv.sub_row_multiple(r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, f: &T) {
        for c in 0..self.cols {
            let v = self.get(i, c).mul_ref(f);
            self.set(i, c, v);
        }
    }

    fn sub_row_multiple(&mut self, target: usize, source: usize, f: &T) {
        for c in 0..self.cols {
            let d = self.get(source, c).mul_ref(f);
            let v = self.get(target, c).sub_ref(&d);
            self.set(target, c, v);
        }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix dimensions do not match")
    }
}

impl<T: Scalar> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add_ref(rhs.get(i, j)))
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub_ref(rhs.get(i, j)))
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", e)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar + fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![q(2, 1), q(-1, 1), q(0, 1)],
            vec![q(-1, 1), q(2, 1), q(-1, 1)],
            vec![q(0, 1), q(-1, 1), q(2, 1)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(*inv.get(0, 0), q(3, 4));
    }

    #[test]
    fn singular_is_an_error() {
        let m = Matrix::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]).unwrap();
        assert_eq!(m.inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn golden_power() {
        // [[1,1],[1,0]]^n has τ as dominant eigenvalue; check the Fibonacci entry.
        let m = Matrix::from_rows(vec![vec![1i64, 1], vec![1, 0]]).unwrap();
        assert_eq!(*m.pow(10).get(0, 1), 55);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(vec![vec![1i64, 2], vec![3]]).is_err());
    }

    #[test]
    fn left_and_right_application() {
        let m = Matrix::from_rows(vec![vec![1i64, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.apply(&[1, 1]), vec![3, 7]);
        assert_eq!(m.apply_right(&[1, 1]), vec![4, 6]);
    }
}
