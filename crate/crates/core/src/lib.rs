//! Exact computer algebra over the discrete valuation ring Q[t]_(t) and its
//! fraction field Q(t): sparse graded polynomial arithmetic, Groebner bases,
//! Smith normal forms, t-adic saturation of graded ideals, strength
//! decompositions, and height computations.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every value is
//! immutable after construction and safe to share across threads.

pub mod dvrmod;
pub mod groebner;
pub mod heights;
pub mod par;
pub mod qlinalg;
pub mod ringcore;
pub mod saturation;
pub mod strength;
pub mod suites;
pub mod syntax;

pub use ringcore::{CoeffDomain, Homogeneity, Ideal, Monomial, Poly, Rat, RingError, RingSpec, TPoly, TRat};
