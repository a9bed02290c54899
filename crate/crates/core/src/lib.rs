//! Exact arithmetic for the A3/A4 root and weight lattices.
//!
//! Everything authoritative here lives in the golden field Q(τ): the
//! quaternionic embeddings of the simple roots, the Coxeter-Weyl group
//! matrices, the Coxeter-plane frame and the window tests of the strip
//! projection. Floating point values only ever appear as shadows of exact
//! values, for plotting.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and multi-threaded enumeration live in the `coxplane` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coxeter;
mod error;
pub mod golden;
pub mod matrix;
pub mod pointset;
pub mod projection;
pub mod quasilattice;
pub mod quaternion;
pub mod weyl;

pub use coxeter::{Basis, CoxeterPlaneFrame, Diagram, Family, LatticeVector};
pub use error::Error;
pub use golden::{GoldenInteger, GoldenRational, Rational, Sign};
pub use matrix::Matrix;
pub use pointset::{Normalizer, PlanarPoint, Plane, PointSet2D};
pub use quaternion::{ActionKind, ElementPair, GoldenQuaternion};
pub use weyl::{GroupKind, SymbolicVector, WeylElement};

pub type Result<T> = core::result::Result<T, Error>;
