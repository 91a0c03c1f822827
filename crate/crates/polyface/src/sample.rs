//! Deterministic sampling: a documented linear congruential generator,
//! rational grids, and exact point samplers for convex sets.
//!
//! Reproducibility contract: the generator is the 64-bit LCG
//! `state ← state·6364136223846793005 + 1442695040888963407 (mod 2⁶⁴)`,
//! outputs take the high 32 bits. Every sampler consumes the stream in a
//! fixed order, so a fixed seed reproduces every sample bit for bit.

use crate::error::Result;
use crate::exactla::Vector;
use crate::polyset::{ConvexSet, VSet};
use crate::scalar::{int, Scalar};

/// The crate-wide pseudo-random generator. Seed 0 is the default
/// everywhere randomness is exposed.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 32) as u32
    }

    /// Uniform-ish draw in `0..n`; the tiny modulo bias is irrelevant for
    /// test-point generation.
    pub fn below(&mut self, n: u32) -> u32 {
        debug_assert!(n > 0);
        self.next_u32() % n
    }

    /// A rational in `[lo, hi]` with the given denominator.
    pub fn rational<S: Scalar>(&mut self, lo: i64, hi: i64, denom: i64) -> S {
        debug_assert!(hi >= lo && denom > 0);
        let steps = ((hi - lo) * denom + 1) as u32;
        let k = self.below(steps) as i64;
        crate::scalar::ratio(lo * denom + k, denom)
    }

    /// A random vector with entries in `[lo, hi]`, denominator `denom`.
    pub fn vector<S: Scalar>(&mut self, dim: usize, lo: i64, hi: i64, denom: i64) -> Vector<S> {
        Vector::new((0..dim).map(|_| self.rational(lo, hi, denom)).collect())
    }
}

/// Largest integer `≤ q`, found by exact binary search (desk-scale values).
pub fn floor_i64<S: Scalar>(q: &S) -> i64 {
    let (mut lo, mut hi) = (-(1i64 << 40), 1i64 << 40);
    // invariant: int(lo) ≤ q < int(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if int::<S>(mid) <= *q {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Smallest integer `≥ q`.
pub fn ceil_i64<S: Scalar>(q: &S) -> i64 {
    let f = floor_i64(q);
    if int::<S>(f) == *q {
        f
    } else {
        f + 1
    }
}

/// All points of the `1/denom` lattice inside the integer box
/// `[lo, hi]^dim`, in odometer order.
pub fn grid_points<S: Scalar>(dim: usize, denom: i64, lo: i64, hi: i64) -> Vec<Vector<S>> {
    let per_axis: Vec<S> = ((lo * denom)..=(hi * denom))
        .map(|k| crate::scalar::ratio(k, denom))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; dim];
    loop {
        out.push(Vector::new(
            idx.iter().map(|&i| per_axis[i].clone()).collect(),
        ));
        let mut d = 0;
        loop {
            if d == dim {
                return out;
            }
            idx[d] += 1;
            if idx[d] < per_axis.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// Grid points of the set itself: the lattice restricted by exact
/// membership. The integer box must contain the set.
pub fn grid_members<S: Scalar>(
    set: &ConvexSet<S>,
    denom: i64,
    lo: i64,
    hi: i64,
) -> Result<Vec<Vector<S>>> {
    let mut out = Vec::new();
    for p in grid_points(set.dim(), denom, lo, hi) {
        if set.contains(&p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// An exact integer bounding box of a generator-form set, ignoring rays.
pub fn integer_box<S: Scalar>(v: &VSet<S>) -> (i64, i64) {
    let mut lo = 0i64;
    let mut hi = 0i64;
    for p in v.points() {
        for e in p.iter() {
            lo = lo.min(floor_i64(e));
            hi = hi.max(ceil_i64(e));
        }
    }
    (lo, hi)
}

/// Random members of `set`: its generator points, pairwise midpoints and
/// random convex/conic combinations of the weak relaxation, filtered by
/// exact membership (the filter matters for sets with strict rows).
pub fn sample_members<S: Scalar>(
    set: &ConvexSet<S>,
    count: usize,
    rng: &mut Lcg,
) -> Result<Vec<Vector<S>>> {
    let relaxed = relaxation(set);
    let v = relaxed.to_vset()?;
    let mut candidates: Vec<Vector<S>> = v.points().to_vec();
    for i in 0..v.points().len() {
        for j in (i + 1)..v.points().len() {
            candidates.push(
                v.points()[i]
                    .add(&v.points()[j])
                    .scale(&crate::scalar::ratio(1, 2)),
            );
        }
    }
    while candidates.len() < 3 * count + v.points().len() {
        candidates.push(random_combination(&v, rng, true));
    }
    let mut out = Vec::new();
    for c in candidates {
        if out.len() >= count {
            break;
        }
        if set.contains(&c)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Random members of the intrinsic core of `set`: strictly positive
/// combinations of the relaxation's generators.
pub fn sample_icr_members<S: Scalar>(
    set: &ConvexSet<S>,
    count: usize,
    rng: &mut Lcg,
) -> Result<Vec<Vector<S>>> {
    let relaxed = relaxation(set);
    let v = relaxed.to_vset()?;
    Ok((0..count)
        .map(|_| random_combination(&v, rng, false))
        .collect())
}

/// The weak relaxation of a set (identity for generator form).
pub fn relaxation<S: Scalar>(set: &ConvexSet<S>) -> ConvexSet<S> {
    match set {
        ConvexSet::V(_) => set.clone(),
        ConvexSet::H(h) => ConvexSet::from_system(h.relaxed()),
    }
}

/// A convex combination of the generator points plus a conic combination
/// of the rays. With `allow_zero` the weights may vanish, reaching faces;
/// otherwise all weights are strictly positive, staying in the relative
/// interior.
fn random_combination<S: Scalar>(v: &VSet<S>, rng: &mut Lcg, allow_zero: bool) -> Vector<S> {
    let base = if allow_zero { 0 } else { 1 };
    let weights: Vec<i64> = v
        .points()
        .iter()
        .map(|_| base + rng.below(6) as i64)
        .collect();
    let total: i64 = weights.iter().sum();
    let (weights, total) = if total == 0 {
        (vec![1; v.points().len()], v.points().len() as i64)
    } else {
        (weights, total)
    };
    let mut x = Vector::zero(v.dim());
    for (p, w) in v.points().iter().zip(&weights) {
        x = x.add(&p.scale(&crate::scalar::ratio(*w, total)));
    }
    for r in v.rays() {
        let c: S = rng.rational(if allow_zero { 0 } else { 1 }, 3, 2);
        if !c.is_zero() {
            x = x.add(&r.scale(&c));
        }
    }
    x
}
