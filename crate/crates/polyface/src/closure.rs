//! Linear closure and boundary, support functionals, and proper
//! separation with re-checkable certificates.
//!
//! In finite dimensions one relaxation step already yields the linear
//! closure of a nonempty mixed system (the weak and strong linear
//! closures coincide), so `lin_closure` simply relaxes every strict row.
//! The sequence gallery keeps the infinite-dimensional distinction alive;
//! here it is collapsed on purpose.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{lp_solve, strict_feasible, LinearSystem, LpOutcome, Vector};
use crate::polyset::ConvexSet;
use crate::scalar::Scalar;

/// An exact, re-checkable proper-separation certificate: `φ·a ≤ α` on all
/// of `A`, `φ·b ≥ α` on all of `B`, with a strict witness pair.
#[derive(Clone, PartialEq, Eq)]
pub struct SeparationCertificate<S> {
    pub phi: Vector<S>,
    pub alpha: S,
    /// `(a, b)` with `a ∈ A`, `b ∈ B` and `φ·a < φ·b`.
    pub witness: (Vector<S>, Vector<S>),
}

impl<S: Scalar> fmt::Debug for SeparationCertificate<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SeparationCertificate(phi={:?}, alpha={}, witness=({:?}, {:?}))",
            self.phi, self.alpha, self.witness.0, self.witness.1
        )
    }
}

impl<S: Scalar> SeparationCertificate<S> {
    /// Re-verifies every claim against the generators of both sets,
    /// trusting nothing from the solving path.
    pub fn verify(&self, a: &ConvexSet<S>, b: &ConvexSet<S>) -> Result<bool> {
        if self.phi.is_zero() {
            return Ok(false);
        }
        let va = a.to_vset()?;
        let vb = b.to_vset()?;
        let below = va.points().iter().all(|p| self.phi.dot(p) <= self.alpha)
            && va.rays().iter().all(|r| !self.phi.dot(r).is_positive());
        let above = vb.points().iter().all(|p| self.phi.dot(p) >= self.alpha)
            && vb.rays().iter().all(|r| !self.phi.dot(r).is_negative());
        let (wa, wb) = &self.witness;
        let strict = self.phi.dot(wa) < self.phi.dot(wb);
        Ok(below && above && strict && a.contains(wa)? && b.contains(wb)?)
    }
}

/// The linear closure: every strict row relaxed to weak. Identity on
/// generator-form sets, which are already linearly closed.
pub fn lin_closure<S: Scalar>(set: &ConvexSet<S>) -> Result<ConvexSet<S>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(crate::sample::relaxation(set))
}

/// Membership in the linear closure.
pub fn lin_contains<S: Scalar>(set: &ConvexSet<S>, x: &Vector<S>) -> Result<bool> {
    lin_closure(set)?.contains(x)
}

/// Membership in the linear boundary `lin C ∖ icr C`.
pub fn lbd_contains<S: Scalar>(set: &ConvexSet<S>, x: &Vector<S>) -> Result<bool> {
    let closure = lin_closure(set)?;
    if !closure.contains(x)? {
        return Ok(false);
    }
    let ri = closure.to_hset()?.ri_system()?;
    Ok(!ri.satisfied_by(x))
}

/// A proper supporting functional at a boundary point: the lowest-index
/// non-implicit weak row active at `x`, certified by a relative-interior
/// witness on the slack side.
pub fn support_functional<S: Scalar>(
    set: &ConvexSet<S>,
    x: &Vector<S>,
) -> Result<SeparationCertificate<S>> {
    if !set.contains(x)? {
        return Err(Error::NotMember);
    }
    let h = set.to_hset()?;
    let implicit = h.implicit_equalities()?;
    let active = h
        .system()
        .weak
        .iter()
        .enumerate()
        .find(|(i, row)| !implicit.contains(i) && row.slack(x).is_zero());
    match active {
        None => Err(Error::IsInteriorPoint),
        Some((_, row)) => {
            let witness = h.ri_point()?;
            debug_assert!(row.slack(&witness).is_positive());
            Ok(SeparationCertificate {
                phi: row.coeffs.clone(),
                alpha: row.rhs.clone(),
                witness: (witness, x.clone()),
            })
        }
    }
}

/// Properly separates two nonempty sets with disjoint intrinsic cores.
///
/// The LP searches `(φ, α)` with `φ·a ≤ α` on `A`'s points, `φ·b ≥ α` on
/// `B`'s points, sign conditions on rays and a `±1` box on `φ`,
/// maximising the gap of the generator means; a positive optimum is
/// exactly proper separability for generator-form sets, and the returned
/// certificate re-verifies from scratch.
pub fn properly_separate<S: Scalar>(
    a: &ConvexSet<S>,
    b: &ConvexSet<S>,
) -> Result<SeparationCertificate<S>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let ha = a.to_hset()?;
    let hb = b.to_hset()?;
    if ha.is_empty() || hb.is_empty() {
        return Err(Error::EmptySet);
    }
    // icr A ∩ icr B = ∅, checked as joint strict infeasibility
    let ri_a = ha.ri_system()?;
    let ri_b = hb.ri_system()?;
    let mut joint = ri_a.clone();
    joint.weak.extend(ri_b.weak.iter().cloned());
    joint.strict.extend(ri_b.strict.iter().cloned());
    joint.eqs.extend(ri_b.eqs.iter().cloned());
    if strict_feasible(&joint)?.is_some() {
        return Err(Error::OverlappingInteriors);
    }

    let va = a.to_vset()?;
    let vb = b.to_vset()?;
    let dim = a.dim();
    // variables (φ_1 … φ_dim, α)
    let k = dim + 1;
    let mut sys = LinearSystem::new(k);
    let lift = |p: &Vector<S>, sign: S, alpha_coeff: S| -> Vector<S> {
        let mut c: Vec<S> = p.iter().map(|e| sign.clone() * e.clone()).collect();
        c.push(alpha_coeff);
        Vector::new(c)
    };
    for p in va.points() {
        sys.push_weak(lift(p, S::one(), -S::one()), S::zero()); // φ·a − α ≤ 0
    }
    for p in vb.points() {
        sys.push_weak(lift(p, -S::one(), S::one()), S::zero()); // α − φ·b ≤ 0
    }
    for r in va.rays() {
        sys.push_weak(lift(r, S::one(), S::zero()), S::zero()); // φ·r ≤ 0
    }
    for r in vb.rays() {
        sys.push_weak(lift(r, -S::one(), S::zero()), S::zero()); // −φ·r ≤ 0
    }
    for i in 0..dim {
        sys.push_weak(Vector::unit(k, i), S::one());
        sys.push_weak(Vector::unit(k, i).neg(), S::one());
    }
    // objective: mean over B's points minus mean over A's points
    let na = S::from_usize(va.points().len()).expect("count fits");
    let nb = S::from_usize(vb.points().len()).expect("count fits");
    let mut obj = vec![S::zero(); k];
    for p in vb.points() {
        for (i, e) in p.iter().enumerate() {
            obj[i] = obj[i].clone() + e.clone() / nb.clone();
        }
    }
    for p in va.points() {
        for (i, e) in p.iter().enumerate() {
            obj[i] = obj[i].clone() - e.clone() / na.clone();
        }
    }
    let outcome = lp_solve(&Vector::new(obj), &sys)?;
    let (value, point) = match outcome {
        LpOutcome::Optimal { value, point } => (value, point),
        LpOutcome::Infeasible => unreachable!("(0, 0) is always feasible"),
        LpOutcome::Unbounded { .. } => unreachable!("φ is boxed and α is pinched"),
    };
    if !value.is_positive() {
        return Err(Error::NotProperlySeparable);
    }
    let phi = Vector::new(point.as_slice()[..dim].to_vec());
    let alpha = point[dim].clone();
    // strict witness: extreme generators on each side, lowest index wins ties
    let wa = va
        .points()
        .iter()
        .min_by(|p, q| phi.dot(p).cmp(&phi.dot(q)))
        .expect("nonempty")
        .clone();
    let wb = vb
        .points()
        .iter()
        .max_by(|p, q| phi.dot(p).cmp(&phi.dot(q)))
        .expect("nonempty")
        .clone();
    let cert = SeparationCertificate {
        phi,
        alpha,
        witness: (wa, wb),
    };
    debug_assert!(cert.verify(a, b)?);
    Ok(cert)
}
