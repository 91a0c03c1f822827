//! Convex-set representations and the constructors the intrinsic-core
//! calculus operates on: Minkowski sum, scaling, translation, product,
//! linear image and positive hull.
//!
//! A set is carried either as an inequality system ([`HSet`]: weak and
//! strict inequalities plus equations) or as generators ([`VSet`]:
//! `conv(points) + cone(rays)`). V-form sets are always linearly closed;
//! an H-form set is linearly closed exactly when it has no strict rows.

pub mod dd;

use std::fmt;

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::exactla::{
    lp_solve, nullspace, span_basis, strict_feasible, LinRow, LinearSystem, LpOutcome, Matrix,
    Vector,
};
use crate::scalar::Scalar;

/// Inequality representation `{x : a_i·x ≤ b_i, c_j·x < d_j, e_k·x = f_k}`.
#[derive(Clone)]
pub struct HSet<S> {
    system: LinearSystem<S>,
    /// Indices of weak rows that hold with equality on the whole set.
    /// Write-once; only meaningful for nonempty sets.
    implicit: OnceCell<Vec<usize>>,
}

impl<S: Scalar> PartialEq for HSet<S> {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system
    }
}
impl<S: Scalar> Eq for HSet<S> {}

impl<S: Scalar> fmt::Debug for HSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HSet {:?}", self.system)
    }
}

impl<S: Scalar> HSet<S> {
    pub fn new(system: LinearSystem<S>) -> Self {
        HSet {
            system,
            implicit: OnceCell::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.system.dim
    }

    pub fn system(&self) -> &LinearSystem<S> {
        &self.system
    }

    pub fn is_linearly_closed(&self) -> bool {
        self.system.strict.is_empty()
    }

    /// The weak relaxation: every strict row becomes weak. For a nonempty
    /// set this is its linear closure.
    pub fn relaxed(&self) -> LinearSystem<S> {
        let mut sys = self.system.clone();
        let mut strict = std::mem::take(&mut sys.strict);
        sys.weak.append(&mut strict);
        sys
    }

    pub fn contains(&self, x: &Vector<S>) -> Result<bool> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        Ok(self.system.satisfied_by(x))
    }

    pub fn is_empty(&self) -> bool {
        strict_feasible(&self.system)
            .expect("well-formed system")
            .is_none()
    }

    /// Weak-row indices that are implicit equalities (tight on the whole
    /// set). Detected by one LP per row over the weak relaxation and
    /// cached. Errors on an empty set.
    pub fn implicit_equalities(&self) -> Result<&[usize]> {
        self.implicit
            .get_or_try_init(|| {
                let relaxed = self.relaxed();
                let mut out = Vec::new();
                for (i, row) in self.system.weak.iter().enumerate() {
                    match lp_solve(&row.coeffs.neg(), &relaxed)? {
                        LpOutcome::Infeasible => return Err(Error::EmptySet),
                        LpOutcome::Unbounded { .. } => {}
                        LpOutcome::Optimal { value, .. } => {
                            // min a·x = −value; tight everywhere iff it equals b
                            if -value == row.rhs {
                                out.push(i);
                            }
                        }
                    }
                }
                Ok(out)
            })
            .map(Vec::as_slice)
    }

    /// System whose solution set is the relative interior (intrinsic core)
    /// of this set: implicit equalities pinned as equations, every other
    /// inequality strict.
    pub fn ri_system(&self) -> Result<LinearSystem<S>> {
        let implicit = self.implicit_equalities()?;
        let mut sys = LinearSystem::new(self.dim());
        sys.eqs = self.system.eqs.clone();
        for (i, row) in self.system.weak.iter().enumerate() {
            if implicit.contains(&i) {
                sys.eqs.push(row.clone());
            } else {
                sys.strict.push(row.clone());
            }
        }
        sys.strict.extend(self.system.strict.iter().cloned());
        Ok(sys)
    }

    /// A point of the relative interior. Errors on an empty set.
    pub fn ri_point(&self) -> Result<Vector<S>> {
        match strict_feasible(&self.ri_system()?)? {
            Some(p) => Ok(p),
            None => Err(Error::EmptySet),
        }
    }

    /// Equality normals pinning the affine hull: the explicit equations
    /// plus the implicit-equality rows.
    pub fn affine_normals(&self) -> Result<Vec<Vector<S>>> {
        let implicit = self.implicit_equalities()?;
        let mut normals: Vec<Vector<S>> =
            self.system.eqs.iter().map(|r| r.coeffs.clone()).collect();
        for &i in implicit {
            normals.push(self.system.weak[i].coeffs.clone());
        }
        Ok(normals)
    }
}

/// Generator representation `conv(points) + cone(rays)`.
#[derive(Clone)]
pub struct VSet<S> {
    dim: usize,
    points: Vec<Vector<S>>,
    rays: Vec<Vector<S>>,
}

impl<S: Scalar> PartialEq for VSet<S> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.points == other.points && self.rays == other.rays
    }
}
impl<S: Scalar> Eq for VSet<S> {}

impl<S: Scalar> fmt::Debug for VSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "VSet dim={} points={:?} rays={:?}",
            self.dim, self.points, self.rays
        )
    }
}

impl<S: Scalar> VSet<S> {
    pub fn new(dim: usize, points: Vec<Vector<S>>, rays: Vec<Vector<S>>) -> Self {
        assert!(!points.is_empty(), "a VSet carries at least one point");
        assert!(
            points.iter().chain(&rays).all(|v| v.dim() == dim),
            "generator dimensions must match"
        );
        VSet { dim, points, rays }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vector<S>] {
        &self.points
    }

    pub fn rays(&self) -> &[Vector<S>] {
        &self.rays
    }

    /// System in the combination variables `(λ, μ)` expressing
    /// `Σ λ_i p_i + Σ μ_j r_j = target, λ ≥ 0, Σ λ = 1, μ ≥ 0`.
    pub fn combination_system(&self, target: &Vector<S>) -> LinearSystem<S> {
        let np = self.points.len();
        let nr = self.rays.len();
        let k = np + nr;
        let mut sys = LinearSystem::new(k);
        for coord in 0..self.dim {
            let mut coeffs = Vec::with_capacity(k);
            for p in &self.points {
                coeffs.push(p[coord].clone());
            }
            for r in &self.rays {
                coeffs.push(r[coord].clone());
            }
            sys.push_eq(Vector::new(coeffs), target[coord].clone());
        }
        let mut ones = vec![S::one(); np];
        ones.extend(vec![S::zero(); nr]);
        sys.push_eq(Vector::new(ones), S::one());
        for j in 0..k {
            sys.push_weak(Vector::unit(k, j).neg(), S::zero());
        }
        sys
    }

    pub fn contains(&self, x: &Vector<S>) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        let sys = self.combination_system(x);
        Ok(matches!(
            lp_solve(&Vector::zero(sys.dim), &sys)?,
            LpOutcome::Optimal { .. }
        ))
    }
}

/// A convex set in either representation.
#[derive(Clone)]
pub enum ConvexSet<S> {
    H(HSet<S>),
    V(VSet<S>),
}

impl<S: Scalar> PartialEq for ConvexSet<S> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ConvexSet::H(a), ConvexSet::H(b)) => a == b,
            (ConvexSet::V(a), ConvexSet::V(b)) => a == b,
            _ => false,
        }
    }
}
impl<S: Scalar> Eq for ConvexSet<S> {}

impl<S: Scalar> fmt::Debug for ConvexSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvexSet::H(h) => h.fmt(f),
            ConvexSet::V(v) => v.fmt(f),
        }
    }
}

impl<S: Scalar> ConvexSet<S> {
    pub fn from_system(system: LinearSystem<S>) -> Self {
        ConvexSet::H(HSet::new(system))
    }

    pub fn from_generators(dim: usize, points: Vec<Vector<S>>, rays: Vec<Vector<S>>) -> Self {
        ConvexSet::V(VSet::new(dim, points, rays))
    }

    pub fn dim(&self) -> usize {
        match self {
            ConvexSet::H(h) => h.dim(),
            ConvexSet::V(v) => v.dim(),
        }
    }

    pub fn as_h(&self) -> Option<&HSet<S>> {
        match self {
            ConvexSet::H(h) => Some(h),
            ConvexSet::V(_) => None,
        }
    }

    pub fn as_v(&self) -> Option<&VSet<S>> {
        match self {
            ConvexSet::V(v) => Some(v),
            ConvexSet::H(_) => None,
        }
    }

    pub fn is_linearly_closed(&self) -> bool {
        match self {
            ConvexSet::H(h) => h.is_linearly_closed(),
            ConvexSet::V(_) => true,
        }
    }

    pub fn contains(&self, x: &Vector<S>) -> Result<bool> {
        match self {
            ConvexSet::H(h) => h.contains(x),
            ConvexSet::V(v) => v.contains(x),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            ConvexSet::H(h) => h.is_empty(),
            ConvexSet::V(_) => false,
        }
    }

    /// This set in inequality form (a conversion for V input).
    pub fn to_hset(&self) -> Result<HSet<S>> {
        match self {
            ConvexSet::H(h) => Ok(h.clone()),
            ConvexSet::V(v) => Ok(HSet::new(dd::v_to_h(&v.points, &v.rays, v.dim)?)),
        }
    }

    /// This set in generator form. Errors on strict rows
    /// (`UnsupportedStrict`) and empty sets (`EmptySet`).
    pub fn to_vset(&self) -> Result<VSet<S>> {
        match self {
            ConvexSet::V(v) => Ok(v.clone()),
            ConvexSet::H(h) => {
                if !h.is_linearly_closed() {
                    return Err(Error::UnsupportedStrict);
                }
                match dd::h_to_v(h.system())? {
                    None => Err(Error::EmptySet),
                    Some((points, rays)) => Ok(VSet::new(h.dim(), points, rays)),
                }
            }
        }
    }

    /// Affine hull as a base point plus a direction basis.
    pub fn affine_hull(&self) -> Result<(Vector<S>, Vec<Vector<S>>)> {
        match self {
            ConvexSet::V(v) => {
                let base = v.points[0].clone();
                let mut dirs: Vec<Vector<S>> =
                    v.points.iter().skip(1).map(|p| p.sub(&base)).collect();
                dirs.extend(v.rays.iter().cloned());
                Ok((base, span_basis(&dirs)))
            }
            ConvexSet::H(h) => {
                let base = match strict_feasible(h.system())? {
                    Some(p) => p,
                    None => return Err(Error::EmptySet),
                };
                let normals = h.affine_normals()?;
                if normals.is_empty() {
                    let dim = h.dim();
                    return Ok((base, (0..dim).map(|i| Vector::unit(dim, i)).collect()));
                }
                Ok((base, nullspace(&Matrix::from_rows(normals))))
            }
        }
    }

    /// Intrinsic dimension (dimension of the affine hull).
    pub fn intrinsic_dim(&self) -> Result<usize> {
        Ok(self.affine_hull()?.1.len())
    }

    /// Minkowski sum; both operands must be obtainable in generator form.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let a = self.to_vset()?;
        let b = other.to_vset()?;
        let mut points = Vec::with_capacity(a.points.len() * b.points.len());
        for p in &a.points {
            for q in &b.points {
                points.push(p.add(q));
            }
        }
        points.sort();
        points.dedup();
        let mut rays: Vec<Vector<S>> = a.rays.iter().chain(&b.rays).cloned().collect();
        rays.sort();
        rays.dedup();
        Ok(ConvexSet::V(VSet::new(self.dim(), points, rays)))
    }

    pub fn translate(&self, t: &Vector<S>) -> Result<Self> {
        if t.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: t.dim(),
            });
        }
        match self {
            ConvexSet::V(v) => Ok(ConvexSet::V(VSet::new(
                v.dim,
                v.points.iter().map(|p| p.add(t)).collect(),
                v.rays.clone(),
            ))),
            ConvexSet::H(h) => {
                let shift = |rows: &[LinRow<S>]| -> Vec<LinRow<S>> {
                    rows.iter()
                        .map(|r| LinRow::new(r.coeffs.clone(), r.rhs.clone() + r.coeffs.dot(t)))
                        .collect()
                };
                let mut sys = LinearSystem::new(h.dim());
                sys.weak = shift(&h.system.weak);
                sys.strict = shift(&h.system.strict);
                sys.eqs = shift(&h.system.eqs);
                Ok(ConvexSet::H(HSet::new(sys)))
            }
        }
    }

    pub fn scale(&self, lambda: &S) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroScale);
        }
        match self {
            ConvexSet::V(v) => Ok(ConvexSet::V(VSet::new(
                v.dim,
                v.points.iter().map(|p| p.scale(lambda)).collect(),
                v.rays.iter().map(|r| r.scale(lambda)).collect(),
            ))),
            ConvexSet::H(h) => {
                // a·x ≤ b becomes a·x ≤ λb for λ > 0 and −a·x ≤ −λb for λ < 0
                let flip = lambda.is_negative();
                let map = |rows: &[LinRow<S>]| -> Vec<LinRow<S>> {
                    rows.iter()
                        .map(|r| {
                            let rhs = r.rhs.clone() * lambda.clone();
                            if flip {
                                LinRow::new(r.coeffs.neg(), -rhs)
                            } else {
                                LinRow::new(r.coeffs.clone(), rhs)
                            }
                        })
                        .collect()
                };
                let mut sys = LinearSystem::new(h.dim());
                sys.weak = map(&h.system.weak);
                sys.strict = map(&h.system.strict);
                sys.eqs = h
                    .system
                    .eqs
                    .iter()
                    .map(|r| LinRow::new(r.coeffs.clone(), r.rhs.clone() * lambda.clone()))
                    .collect();
                Ok(ConvexSet::H(HSet::new(sys)))
            }
        }
    }

    /// Cartesian product. Generator form when both operands carry it,
    /// block-concatenated inequality form otherwise.
    pub fn product(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (ConvexSet::V(a), ConvexSet::V(b)) => {
                let dim = a.dim + b.dim;
                let mut points = Vec::with_capacity(a.points.len() * b.points.len());
                for p in &a.points {
                    for q in &b.points {
                        points.push(p.concat(q));
                    }
                }
                let mut rays = Vec::new();
                for r in &a.rays {
                    rays.push(r.concat(&Vector::zero(b.dim)));
                }
                for r in &b.rays {
                    rays.push(Vector::zero(a.dim).concat(r));
                }
                Ok(ConvexSet::V(VSet::new(dim, points, rays)))
            }
            _ => {
                let a = self.to_hset()?;
                let b = other.to_hset()?;
                let (da, db) = (a.dim(), b.dim());
                let mut sys = LinearSystem::new(da + db);
                let left =
                    |r: &LinRow<S>| LinRow::new(r.coeffs.concat(&Vector::zero(db)), r.rhs.clone());
                let right =
                    |r: &LinRow<S>| LinRow::new(Vector::zero(da).concat(&r.coeffs), r.rhs.clone());
                sys.weak = a.system.weak.iter().map(left).collect();
                sys.weak.extend(b.system.weak.iter().map(right));
                sys.strict = a.system.strict.iter().map(left).collect();
                sys.strict.extend(b.system.strict.iter().map(right));
                sys.eqs = a.system.eqs.iter().map(left).collect();
                sys.eqs.extend(b.system.eqs.iter().map(right));
                Ok(ConvexSet::H(HSet::new(sys)))
            }
        }
    }

    /// Image under a linear map, by mapping generators.
    pub fn linear_image(&self, map: &LinearMap<S>) -> Result<Self> {
        if map.source_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: map.source_dim(),
            });
        }
        let v = self.to_vset()?;
        let points: Vec<Vector<S>> = {
            let mut ps: Vec<Vector<S>> = v.points.iter().map(|p| map.apply(p)).collect();
            ps.sort();
            ps.dedup();
            ps
        };
        let mut rays: Vec<Vector<S>> = v
            .rays
            .iter()
            .map(|r| map.apply(r))
            .filter(|r| !r.is_zero())
            .collect();
        rays.sort();
        rays.dedup();
        Ok(ConvexSet::V(VSet::new(map.target_dim(), points, rays)))
    }

    /// The positive hull `{t·x : x ∈ C, t > 0}` of a polytope not
    /// containing the origin, as a mixed system: the inequality form of
    /// `cone(C)` plus one strict row cutting off the origin.
    pub fn positive_hull(&self) -> Result<Self> {
        let v = self.to_vset()?;
        if !v.rays.is_empty() {
            return Err(Error::UnsupportedRays);
        }
        if v.contains(&Vector::zero(v.dim))? {
            return Err(Error::ContainsOrigin);
        }
        let dim = v.dim;
        dd::check_desk_scale(dim, v.points.len())?;
        let polar = dd::cone_rays(&v.points, dim)?;
        let mut sys = LinearSystem::new(dim);
        for g in polar {
            if !g.is_zero() {
                sys.push_weak(g, S::zero());
            }
        }
        // a functional strictly positive on every generator separates the
        // cone minus the origin; it exists because the cone is pointed
        let mut phi_sys = LinearSystem::new(dim);
        for p in &v.points {
            phi_sys.push_weak(p.neg(), -S::one());
        }
        let phi = match lp_solve(&Vector::zero(dim), &phi_sys)? {
            LpOutcome::Optimal { point, .. } => point,
            _ => unreachable!("0 ∉ C guarantees a separating functional"),
        };
        sys.push_strict(phi.neg(), S::zero());
        Ok(ConvexSet::H(HSet::new(sys)))
    }
}

/// An exact linear map, rows = target dimension.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> fmt::Debug for LinearMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap {:?}", self.matrix)
    }
}

impl<S: Scalar> LinearMap<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        LinearMap { matrix }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.n_cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.n_rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn apply(&self, x: &Vector<S>) -> Vector<S> {
        self.matrix.apply(x)
    }
}
