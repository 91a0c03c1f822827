//! Desk-scale executable models of classical infinite-dimensional convex
//! sets over finitely supported sequences, with algebraic witness
//! certificates in place of topological arguments.
//!
//! Four galleries live here: the box `{x : x_i ∈ [0,1]}` in the space of
//! eventually-zero sequences (empty intrinsic core), the Hilbert cube
//! `∏ [0, 1/n]` (arbitrarily long chains of faces, driven by a fixed
//! enumeration of the rationals), the ubiquitous set of sequences with
//! positive leading coordinate (linear closure is everything, intrinsic
//! core empty), and the nonnegative orthant over an infinite basis
//! (chains of minimal faces never exhaust the set). Every witness carries
//! the exact rational identity that makes it checkable and never trusts
//! its construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::Vector;
use crate::sample::floor_i64;
use crate::scalar::{ratio, Scalar};

/// A finitely supported sequence: sorted `(index, value)` pairs with
/// strictly increasing indices ≥ 1 and nonzero values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSeq<S> {
    support: Vec<(usize, S)>,
}

impl<S: Scalar> fmt::Debug for FinSeq<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, v)) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        write!(f, "}}")
    }
}

impl<S: Scalar> FinSeq<S> {
    /// Builds a sequence from arbitrary pairs: indices are merged, zero
    /// values dropped. Panics on index 0.
    pub fn new(pairs: Vec<(usize, S)>) -> Self {
        let mut map = std::collections::BTreeMap::<usize, S>::new();
        for (i, v) in pairs {
            assert!(i >= 1, "sequence indices start at 1");
            let entry = map.entry(i).or_insert_with(S::zero);
            *entry = entry.clone() + v;
        }
        FinSeq {
            support: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn zero() -> Self {
        FinSeq {
            support: Vec::new(),
        }
    }

    /// The unit sequence `e_i`.
    pub fn unit(i: usize) -> Self {
        FinSeq::new(vec![(i, S::one())])
    }

    pub fn support(&self) -> &[(usize, S)] {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Value at `index` (zero off the support).
    pub fn get(&self, index: usize) -> S {
        self.support
            .iter()
            .find(|(i, _)| *i == index)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(S::zero)
    }

    /// Largest supported index; `None` for the zero sequence.
    pub fn max_index(&self) -> Option<usize> {
        self.support.last().map(|(i, _)| *i)
    }

    /// Value at the largest supported index.
    pub fn leading_value(&self) -> Option<S> {
        self.support.last().map(|(_, v)| v.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut pairs = self.support.clone();
        pairs.extend(other.support.iter().cloned());
        FinSeq::new(pairs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, k: &S) -> Self {
        if k.is_zero() {
            return FinSeq::zero();
        }
        FinSeq {
            support: self
                .support
                .iter()
                .map(|(i, v)| (*i, v.clone() * k.clone()))
                .collect(),
        }
    }

    /// Sets one coordinate, replacing any previous value.
    pub fn with_value(&self, index: usize, value: S) -> Self {
        assert!(index >= 1);
        let mut pairs: Vec<(usize, S)> = self
            .support
            .iter()
            .filter(|(i, _)| *i != index)
            .cloned()
            .collect();
        if !value.is_zero() {
            pairs.push((index, value));
        }
        FinSeq::new(pairs)
    }

    /// Dense vector on the window `1..=window`, or `None` when the
    /// support sticks out.
    pub fn to_vector(&self, window: usize) -> Option<Vector<S>> {
        if self.max_index().is_some_and(|m| m > window) {
            return None;
        }
        let mut entries = vec![S::zero(); window];
        for (i, v) in &self.support {
            entries[i - 1] = v.clone();
        }
        Some(Vector::new(entries))
    }
}

// ---------------------------------------------------------------------------
// witnesses
// ---------------------------------------------------------------------------

/// Which gallery an emptiness witness speaks about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gallery {
    Box,
    Ubiquitous,
}

/// A self-verifying certificate.
#[derive(Clone, PartialEq, Eq)]
pub enum Witness<S> {
    /// `y` blocks every extension of the segment `[y, x]` beyond `x`: any
    /// `z` with `x ∈ (y, z)` must have `z_i = −t/(1−t) < 0` at the
    /// certificate index, hence lies outside the set.
    EmptyIcr {
        gallery: Gallery,
        x: FinSeq<S>,
        y: FinSeq<S>,
        cert_index: usize,
    },
    /// `y + t·u` has leading coordinate exactly `t`, so it belongs to the
    /// ubiquitous set for every `t ∈ (0, 1]`.
    LinMember { y: FinSeq<S>, u: FinSeq<S> },
    /// A basis index outside the union of a chain's supports: the basis
    /// vector is in the orthant but in none of the chain's faces.
    ChainGap {
        index: usize,
        chain: Vec<BTreeSet<usize>>,
    },
}

impl<S: Scalar> fmt::Debug for Witness<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::EmptyIcr {
                gallery,
                x,
                y,
                cert_index,
            } => write!(
                f,
                "EmptyIcr({gallery:?}, x={x:?}, y={y:?}, cert_index={cert_index})"
            ),
            Witness::LinMember { y, u } => write!(f, "LinMember(y={y:?}, u={u:?})"),
            Witness::ChainGap { index, chain } => {
                write!(f, "ChainGap(index={index}, chain={chain:?})")
            }
        }
    }
}

impl<S: Scalar> Witness<S> {
    /// Re-runs the exact algebra behind the certificate.
    pub fn verify(&self) -> bool {
        match self {
            Witness::EmptyIcr {
                gallery,
                x,
                y,
                cert_index,
            } => {
                let member = |s: &FinSeq<S>| match gallery {
                    Gallery::Box => box_contains(s),
                    Gallery::Ubiquitous => ubiq_contains(s),
                };
                if !member(y) || !member(x) {
                    return false;
                }
                // z = (x − t·y)/(1−t) is the only candidate completing
                // x = t·y + (1−t)·z; its certified coordinate must be
                // −t/(1−t) < 0, expelling it from the set
                for (tn, td) in [(1i64, 2i64), (1, 3)] {
                    let t: S = ratio(tn, td);
                    let one_minus = S::one() - t.clone();
                    let z = x.sub(&y.scale(&t)).scale(&(S::one() / one_minus.clone()));
                    let expected = -(t.clone() / one_minus);
                    if z.get(*cert_index) != expected || !expected.is_negative() || member(&z) {
                        return false;
                    }
                }
                true
            }
            Witness::LinMember { y, u } => {
                let Some(fresh) = u.max_index() else {
                    return false;
                };
                for (tn, td) in [(1i64, 1i64), (1, 2), (1, 7)] {
                    let t: S = ratio(tn, td);
                    let moved = y.add(&u.scale(&t));
                    let leading_ok = moved.max_index() == Some(fresh) && moved.get(fresh) == t;
                    if !leading_ok || !ubiq_contains(&moved) {
                        return false;
                    }
                }
                true
            }
            Witness::ChainGap { index, chain } => {
                for pair in chain.windows(2) {
                    if !pair[0].is_subset(&pair[1]) {
                        return false;
                    }
                }
                let e: FinSeq<S> = FinSeq::unit(*index);
                orthant_contains(&e) && chain.iter().all(|c| !c.contains(index))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// the box in c00
// ---------------------------------------------------------------------------

/// A face of the box `{x : x_i ∈ [0,1]}`: coordinates pinned at one,
/// coordinates free in `[0,1]`, everything else pinned at zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxFaceDescriptor {
    pub ones: BTreeSet<usize>,
    pub free: BTreeSet<usize>,
}

impl BoxFaceDescriptor {
    pub fn contains<S: Scalar>(&self, u: &FinSeq<S>) -> bool {
        for (i, v) in u.support() {
            if self.ones.contains(i) {
                if *v != S::one() {
                    return false;
                }
            } else if self.free.contains(i) {
                if v.is_negative() || *v > S::one() {
                    return false;
                }
            } else {
                return false; // pinned at zero but supported
            }
        }
        // pinned-at-one coordinates must actually be one
        self.ones.iter().all(|i| u.get(*i) == S::one())
    }
}

/// Membership in the box: every coordinate within `[0, 1]`.
pub fn box_contains<S: Scalar>(x: &FinSeq<S>) -> bool {
    x.support()
        .iter()
        .all(|(_, v)| !v.is_negative() && *v <= S::one())
}

/// The minimal face of a box member: free where strictly inside `(0,1)`,
/// pinned at one where equal to one, zero elsewhere.
pub fn box_minimal_face<S: Scalar>(x: &FinSeq<S>) -> Result<BoxFaceDescriptor> {
    if !box_contains(x) {
        return Err(Error::NotMember);
    }
    let mut ones = BTreeSet::new();
    let mut free = BTreeSet::new();
    for (i, v) in x.support() {
        if *v == S::one() {
            ones.insert(*i);
        } else {
            free.insert(*i);
        }
    }
    Ok(BoxFaceDescriptor { ones, free })
}

/// The blocking witness behind the box's empty intrinsic core: overwrite
/// the first coordinate past the support with one.
pub fn box_empty_icr_witness<S: Scalar>(x: &FinSeq<S>) -> Result<Witness<S>> {
    if !box_contains(x) {
        return Err(Error::NotMember);
    }
    let cert_index = x.max_index().map_or(1, |m| m + 1);
    let y = x.with_value(cert_index, S::one());
    Ok(Witness::EmptyIcr {
        gallery: Gallery::Box,
        x: x.clone(),
        y,
        cert_index,
    })
}

// ---------------------------------------------------------------------------
// the Hilbert cube
// ---------------------------------------------------------------------------

/// A face `F_c` of the Hilbert cube `∏ [0, 1/n]`: coordinate `n` ranges
/// over the full `[0, 1/n]` for `n ∈ c` and is pinned at zero otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeFaceDescriptor {
    pub full: BTreeSet<usize>,
}

impl CubeFaceDescriptor {
    pub fn contains<S: Scalar>(&self, u: &FinSeq<S>) -> bool {
        u.support()
            .iter()
            .all(|(i, v)| self.full.contains(i) && !v.is_negative() && *v <= ratio(1, *i as i64))
    }
}

/// Inclusion of Hilbert-cube faces is inclusion of their index sets.
pub fn cube_face_subset(c1: &CubeFaceDescriptor, c2: &CubeFaceDescriptor) -> bool {
    c1.full.is_subset(&c2.full)
}

/// The fixed enumeration `q_1, q_2, …` of the positive rationals used for
/// cut construction: the Calkin–Wilf sequence `q_1 = 1`,
/// `q_{k+1} = 1 / (2⌊q_k⌋ − q_k + 1)`.
pub fn calkin_wilf<S: Scalar>(count: usize) -> Vec<S> {
    let mut out = Vec::with_capacity(count);
    let mut q: S = S::one();
    for _ in 0..count {
        out.push(q.clone());
        let floor: S = crate::scalar::int(floor_i64(&q));
        q = S::one() / (floor.clone() + floor - q + S::one());
    }
    out
}

/// A chain of Hilbert-cube faces built from real cuts: threshold `t` maps
/// to `c(t) = {k ≤ N : q_k < t}`. Adjacent faces coincide when no
/// enumerated rational separates the thresholds; `strict_steps` reports
/// which steps are strict.
pub struct CubeChain {
    pub faces: Vec<CubeFaceDescriptor>,
    pub strict_steps: Vec<bool>,
}

pub fn cube_chain_from_cuts<S: Scalar>(thresholds: &[S], prefix_len: usize) -> CubeChain {
    assert!(prefix_len >= 1, "enumeration prefix must be nonempty");
    assert!(
        thresholds.windows(2).all(|w| w[0] < w[1]),
        "thresholds must be strictly increasing"
    );
    let rationals: Vec<S> = calkin_wilf(prefix_len);
    let faces: Vec<CubeFaceDescriptor> = thresholds
        .iter()
        .map(|t| CubeFaceDescriptor {
            full: rationals
                .iter()
                .enumerate()
                .filter(|(_, q)| *q < t)
                .map(|(k, _)| k + 1)
                .collect(),
        })
        .collect();
    let strict_steps = faces
        .windows(2)
        .map(|w| w[0].full.len() < w[1].full.len())
        .collect();
    CubeChain {
        faces,
        strict_steps,
    }
}

// ---------------------------------------------------------------------------
// the ubiquitous set
// ---------------------------------------------------------------------------

/// Membership in the ubiquitous set: nonzero with positive leading
/// coordinate.
pub fn ubiq_contains<S: Scalar>(x: &FinSeq<S>) -> bool {
    x.leading_value().is_some_and(|v| v.is_positive())
}

/// Why the linear closure of the ubiquitous set is everything: any `y`
/// becomes a member after adding `t·e_i` at a fresh higher index.
pub fn ubiq_lin_witness<S: Scalar>(y: &FinSeq<S>) -> Witness<S> {
    let fresh = y.max_index().map_or(1, |m| m + 1);
    Witness::LinMember {
        y: y.clone(),
        u: FinSeq::unit(fresh),
    }
}

/// Why no member is in the intrinsic core: the segment from
/// `y = x + e_{m+1}` through `x` cannot extend past `x` inside the set.
pub fn ubiq_not_icr_witness<S: Scalar>(x: &FinSeq<S>) -> Result<Witness<S>> {
    if !ubiq_contains(x) {
        return Err(Error::NotMember);
    }
    let cert_index = x.max_index().expect("member is nonzero") + 1;
    let y = x.add(&FinSeq::unit(cert_index));
    Ok(Witness::EmptyIcr {
        gallery: Gallery::Ubiquitous,
        x: x.clone(),
        y,
        cert_index,
    })
}

/// Minimal-face order of the ubiquitous set: `u` lies in the minimal face
/// of `x` exactly when `u` is a member with leading index no larger.
pub fn ubiq_minface_contains<S: Scalar>(x: &FinSeq<S>, u: &FinSeq<S>) -> Result<bool> {
    if !ubiq_contains(x) {
        return Err(Error::NotMember);
    }
    let mx = x.max_index().expect("member is nonzero");
    Ok(ubiq_contains(u) && u.max_index().is_some_and(|mu| mu <= mx))
}

// ---------------------------------------------------------------------------
// the nonnegative orthant over an infinite basis
// ---------------------------------------------------------------------------

/// Membership in the orthant: no negative coordinate.
pub fn orthant_contains<S: Scalar>(x: &FinSeq<S>) -> bool {
    x.support().iter().all(|(_, v)| !v.is_negative())
}

/// The minimal face of an orthant member is the cone over its support.
pub fn orthant_minimal_face<S: Scalar>(x: &FinSeq<S>) -> Result<BTreeSet<usize>> {
    if !orthant_contains(x) {
        return Err(Error::NotMember);
    }
    Ok(x.support().iter().map(|(i, _)| *i).collect())
}

/// For any finite chain of minimal faces, a fresh basis index whose unit
/// vector the union misses: finite evidence that no chain of minimal
/// faces exhausts the orthant.
pub fn orthant_chain_gap<S: Scalar>(chain: &[BTreeSet<usize>]) -> Result<Witness<S>> {
    for pair in chain.windows(2) {
        if !pair[0].is_subset(&pair[1]) {
            return Err(Error::ChainNotNested);
        }
    }
    let union: BTreeSet<usize> = chain.iter().flatten().copied().collect();
    let gap = (1..).find(|i| !union.contains(i)).expect("finite union");
    Ok(Witness::ChainGap {
        index: gap,
        chain: chain.to_vec(),
    })
}
