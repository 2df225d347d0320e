//! Tropical critical points of affine matroids.
//!
//! Given a matroid `M` on `{0, ..., n}` and a special element `0` that is
//! neither a loop nor a coloop, a tropical critical point for a weight vector
//! `w` on `{1, ..., n}` is a decomposition `w = x + y` where `(0, x)` lies in
//! the Bergman fan of `M` and `y` lies in the Bergman fan of
//! `N = (M/0)^⊥`. For generic `w` there are exactly `β(M)` of them.
//!
//! The crate computes these points two ways:
//!
//! * [`critical::critical_points_fast`] builds one point per β-nbc basis for
//!   rapidly increasing `w`, by solving the intersection tree of the two
//!   flag partitions;
//! * [`critical::critical_points_oracle`] enumerates every pair of complete
//!   flags of `M` and `N` and keeps the pairs whose cones meet.
//!
//! Supporting modules cover the matroid structure ([`matroid`]), the
//! characteristic polynomial and β-nbc bases ([`invariants`]), set
//! partitions and intersection graphs ([`partitions`]), Bergman fan
//! membership ([`bergman`]) and the chamber-wise tautological classes of the
//! permutohedral fan ([`taut`]).

pub mod bergman;
pub mod critical;
mod error;
pub mod fixtures;
pub mod invariants;
pub mod matroid;
pub mod partitions;
pub mod poly;
pub mod rational;
mod subset;
pub mod taut;

pub use bergman::AffineMatroid;
pub use critical::{CriticalPoint, OracleOutcome, VerificationReport};
pub use error::{Error, Result};
pub use invariants::{FlagOfFlats, IntegerPolynomial};
pub use matroid::{Matroid, Relabeling};
pub use partitions::{IntersectionGraph, SetPartition, SignedPath};
pub use rational::{Rational, RationalVector};
pub use subset::Subset;

/// Resource caps for the exhaustive (factorial or flag-enumerating) paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for which complete flags are enumerated.
    pub max_flag_ground: usize,
    /// Largest ground set for which piecewise polynomials on the
    /// permutohedral fan are materialized.
    pub max_taut_ground: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_flag_ground: 10,
            max_taut_ground: 7,
        }
    }
}

/// Hard cap on the ground set size of the subset-sum characteristic polynomial.
pub const MAX_CHAR_POLY_GROUND: usize = 20;
