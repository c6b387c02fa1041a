//! Exact-arithmetic representations of convex bounded polytopes.
//!
//! The crate provides three generator-based set representations together with
//! a plain vertex list:
//!
//! * [`MRep`] — a start point, a matrix of basis vectors and a `{0,1}` exponent
//!   matrix; factors range over `[0, 1]`.
//! * [`ZRep`] — the same algebraic form with factors over `[-1, 1]`.
//! * [`CRep`] — a chain form stored as start, basis and end point; the
//!   lower-triangular exponent matrix is implied.
//! * [`VRep`] — a list of points, also the ground truth for the brute-force
//!   oracle in [`oracle`].
//!
//! All scalar arithmetic is exact ([`Rational`]); floating point never enters
//! the core. Every operation is a pure function of its inputs, so values can
//! be shared freely between threads.
//!
//! The crate is `no_std` (it allocates, but performs no IO); file formats and
//! the command-line front end live in the companion `mrep-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod exponent;
mod matrix;
pub mod ops;
pub mod oracle;
mod rational;
mod rep;
mod util;
pub mod zonotope;

pub use error::Error;
pub use exponent::{BitMatrix, Block, ExponentMatrix};
pub use matrix::{Matrix, Point};
pub use rational::{ParseRationalError, Rational};
pub use rep::{CRep, MRep, Rep, SegmentList, VRep, ZRep};

/// Size limits for the exponential-cost operations.
///
/// Every operation that enumerates `2^p` factor assignments or subsets of a
/// point set checks one of these caps first and fails with
/// [`Error::CapExceeded`] instead of silently truncating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest factor count `p` for which `2^p` enumeration is attempted.
    pub max_factors: usize,
    /// Largest point list the oracle accepts.
    pub max_points: usize,
    /// Largest dimension the oracle accepts.
    pub max_dim: usize,
    /// Largest point list accepted by zonotope detection and reduction.
    pub max_zonotope_points: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_factors: 20,
            max_points: 64,
            max_dim: 6,
            max_zonotope_points: 12,
        }
    }
}
