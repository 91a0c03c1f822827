//! Exact-arithmetic facial structure of convex sets.
//!
//! This crate computes, over arbitrary-precision rationals, the objects
//! that organise the combinatorial geometry of a convex set: minimal
//! faces, face lattices and maximal chains, the intrinsic core (relative
//! interior) through four equivalent membership tests, facial
//! decompositions, linear closure and boundary, support functionals and
//! proper-separation certificates. A small gallery of finitely-supported
//! sequence sets models the classical infinite-dimensional examples with
//! re-checkable algebraic witnesses.
//!
//! Everything decision-bearing is exact: there is no floating point in
//! any predicate. Core math is generic over any exact ordered-field
//! scalar (see [`scalar::Scalar`]); the aliases below fix the default
//! big-rational instantiation used by the CLI and the JSON formats.

pub mod cli;
pub mod closure;
pub mod error;
pub mod exactla;
pub mod faces;
pub mod icore;
pub mod json;
pub mod polyset;
pub mod sample;
pub mod scalar;
pub mod seqgallery;

pub use error::{Error, Result};

/// Default exact scalar: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Vector of [`Rat`].
pub type QVec = exactla::Vector<Rat>;
/// Matrix of [`Rat`].
pub type QMat = exactla::Matrix<Rat>;
/// Linear system over [`Rat`].
pub type QSystem = exactla::LinearSystem<Rat>;
/// LP outcome over [`Rat`].
pub type QLpOutcome = exactla::LpOutcome<Rat>;
/// Convex set over [`Rat`].
pub type QSet = polyset::ConvexSet<Rat>;
/// Finitely supported sequence over [`Rat`].
pub type QSeq = seqgallery::FinSeq<Rat>;
