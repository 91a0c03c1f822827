//! Double-description conversions between inequality and generator form,
//! exact and deliberately desk-scale.
//!
//! The incremental step keeps the generator set irredundant with a conic
//! membership LP after every inserted row, so intermediate blow-up stays
//! tame for the certified instance sizes this crate targets; genuinely
//! large inputs are rejected instead of ground through.

use crate::error::{Error, Result};
use crate::exactla::{lp_solve, LinearSystem, LpOutcome, Vector};
use crate::scalar::Scalar;

/// Points and rays of a generator form.
pub type Generators<S> = (Vec<Vector<S>>, Vec<Vector<S>>);

/// Ambient dimension cap for conversions.
pub const DESK_DIM: usize = 4;
/// Input row / generator cap for conversions.
pub const DESK_ROWS: usize = 64;
/// Hard valve on intermediate generator counts.
const RAY_VALVE: usize = 4096;

pub fn check_desk_scale(dim: usize, n_rows: usize) -> Result<()> {
    if dim > DESK_DIM {
        return Err(Error::TooLarge(format!(
            "dimension {dim} exceeds the conversion cap {DESK_DIM}"
        )));
    }
    if n_rows > DESK_ROWS {
        return Err(Error::TooLarge(format!(
            "{n_rows} rows/generators exceed the conversion cap {DESK_ROWS}"
        )));
    }
    Ok(())
}

/// Generators of the polyhedral cone `{y : n·y ≤ 0 for every n in normals}`.
///
/// Starts from the spanning set `{±e_i}` and inserts one halfspace at a
/// time; the returned rays are normalised, deduplicated, conically
/// irredundant and sorted.
pub fn cone_rays<S: Scalar>(normals: &[Vector<S>], dim: usize) -> Result<Vec<Vector<S>>> {
    let mut rays: Vec<Vector<S>> = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        rays.push(Vector::unit(dim, i));
        rays.push(Vector::unit(dim, i).neg());
    }

    for normal in normals {
        let mut keep: Vec<Vector<S>> = Vec::new();
        let mut pos: Vec<(Vector<S>, S)> = Vec::new();
        let mut neg: Vec<(Vector<S>, S)> = Vec::new();
        for r in rays {
            let v = normal.dot(&r);
            if v.is_positive() {
                pos.push((r, v));
            } else if v.is_negative() {
                neg.push((r, v));
            } else {
                keep.push(r);
            }
        }
        for (p, vp) in &pos {
            for (n, vn) in &neg {
                // vp·n − vn·p lies on the hyperplane and inside the cone
                let combo = n.scale(vp).sub(&p.scale(vn));
                if !combo.is_zero() {
                    keep.push(combo.normalized_ray());
                }
            }
        }
        for (n, _) in neg {
            keep.push(n);
        }
        keep.sort();
        keep.dedup();
        if keep.len() > RAY_VALVE {
            return Err(Error::TooLarge(format!(
                "intermediate generator count {} exceeds the valve {RAY_VALVE}",
                keep.len()
            )));
        }
        rays = prune_conic_redundant(keep)?;
    }
    rays.sort();
    Ok(rays)
}

/// Removes rays expressible as nonnegative combinations of the others.
/// One forward pass is enough: dropping a redundant ray never makes a
/// previously kept ray redundant.
fn prune_conic_redundant<S: Scalar>(rays: Vec<Vector<S>>) -> Result<Vec<Vector<S>>> {
    let mut kept = rays;
    let mut i = 0;
    while i < kept.len() {
        if kept.len() == 1 {
            break;
        }
        let candidate = kept[i].clone();
        let others: Vec<&Vector<S>> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r)
            .collect();
        if in_conic_hull(&candidate, &others)? {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(kept)
}

/// Conic membership: does some `λ ≥ 0` give `Σ λ_j rays_j = target`?
fn in_conic_hull<S: Scalar>(target: &Vector<S>, rays: &[&Vector<S>]) -> Result<bool> {
    let k = rays.len();
    let dim = target.dim();
    let mut sys = LinearSystem::new(k);
    for coord in 0..dim {
        let coeffs: Vec<S> = rays.iter().map(|r| r[coord].clone()).collect();
        sys.push_eq(Vector::new(coeffs), target[coord].clone());
    }
    for j in 0..k {
        sys.push_weak(Vector::unit(k, j).neg(), S::zero());
    }
    Ok(matches!(
        lp_solve(&Vector::zero(k), &sys)?,
        LpOutcome::Optimal { .. }
    ))
}

/// Generator form of the polyhedron `{x : weak rows, eq rows}`:
/// `Ok(None)` when the set is empty, otherwise points and rays.
///
/// Works on the homogenisation `{(x,t) : a·x − b·t ≤ 0, e·x − f·t = 0, t ≥ 0}`;
/// rays with positive last coordinate rescale to points.
pub fn h_to_v<S: Scalar>(system: &LinearSystem<S>) -> Result<Option<Generators<S>>> {
    if !system.strict.is_empty() {
        return Err(Error::UnsupportedStrict);
    }
    check_desk_scale(system.dim, system.weak.len() + system.eqs.len())?;
    let dim = system.dim;
    let mut normals: Vec<Vector<S>> = Vec::new();
    let lift = |coeffs: &Vector<S>, rhs: &S| -> Vector<S> {
        let mut v = coeffs.as_slice().to_vec();
        v.push(-rhs.clone());
        Vector::new(v)
    };
    for r in &system.weak {
        normals.push(lift(&r.coeffs, &r.rhs));
    }
    for r in &system.eqs {
        let n = lift(&r.coeffs, &r.rhs);
        normals.push(n.neg());
        normals.push(n);
    }
    // t ≥ 0
    normals.push(Vector::unit(dim + 1, dim).neg());

    let hom_rays = cone_rays(&normals, dim + 1)?;
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for hr in hom_rays {
        let t = hr[dim].clone();
        debug_assert!(!t.is_negative());
        let x = Vector::new(hr.as_slice()[..dim].to_vec());
        if t.is_zero() {
            if !x.is_zero() {
                rays.push(x.normalized_ray());
            }
        } else {
            points.push(x.scale(&(S::one() / t)));
        }
    }
    if points.is_empty() {
        return Ok(None);
    }
    points.sort();
    points.dedup();
    rays.sort();
    rays.dedup();
    Ok(Some((points, rays)))
}

/// Inequality form of `conv(points) + cone(rays)`, via the polar cone of
/// the homogenisation. Equations come out as opposite inequality pairs.
pub fn v_to_h<S: Scalar>(
    points: &[Vector<S>],
    rays: &[Vector<S>],
    dim: usize,
) -> Result<LinearSystem<S>> {
    assert!(
        !points.is_empty(),
        "generator form needs at least one point"
    );
    check_desk_scale(dim, points.len() + rays.len())?;
    let mut gens: Vec<Vector<S>> = Vec::new();
    for p in points {
        let mut v = p.as_slice().to_vec();
        v.push(S::one());
        gens.push(Vector::new(v));
    }
    for r in rays {
        let mut v = r.as_slice().to_vec();
        v.push(S::zero());
        gens.push(Vector::new(v));
    }
    let polar = cone_rays(&gens, dim + 1)?;
    let mut sys = LinearSystem::new(dim);
    for g in polar {
        let coeffs = Vector::new(g.as_slice()[..dim].to_vec());
        let rhs = -g[dim].clone();
        if coeffs.is_zero() {
            // 0·x ≤ rhs is vacuous for rhs ≥ 0 (and rhs < 0 cannot occur:
            // every lifted generator has last coordinate ≥ 0)
            debug_assert!(!rhs.is_negative());
            continue;
        }
        sys.push_weak(coeffs, rhs);
    }
    Ok(sys)
}
