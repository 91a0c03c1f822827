//! The scalar abstraction behind every coefficient in the crate.
//!
//! All geometric predicates here are discontinuous (a face changes when a
//! single inequality becomes tight), so scalars must support *exact*
//! comparison. The [`Scalar`] bound therefore demands `Ord + Eq`, which
//! rules out `f32`/`f64` by construction: only exact number types such as
//! [`num_rational::BigRational`] (the crate-default [`crate::Rat`]) or
//! fixed-width rationals qualify.

use std::fmt;
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, Signed};

/// An exact, totally ordered field scalar.
pub trait Scalar:
    Num + Signed + Ord + Eq + Hash + Clone + FromPrimitive + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Num + Signed + Ord + Eq + Hash + Clone + FromPrimitive + fmt::Debug + fmt::Display
{
}

/// Builds the exact fraction `n/d`.
///
/// Panics when `d == 0` or when `n`/`d` do not fit the scalar's integer
/// range (never the case for big rationals).
pub fn ratio<S: Scalar>(n: i64, d: i64) -> S {
    assert!(d != 0, "zero denominator");
    S::from_i64(n).expect("numerator out of range")
        / S::from_i64(d).expect("denominator out of range")
}

/// Shorthand for `ratio(n, 1)`.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("integer out of range")
}
