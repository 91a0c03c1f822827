//! Intrinsic-core membership through four equivalent tests, relative
//! interiors, facial decomposition, and the calculus checkers.
//!
//! The four membership routes are deliberately independent: segments
//! extend through generators, the feasible-direction cone inspects active
//! rows, the affine-core route probes ± steps along a hull basis, and the
//! minimal-face route asks whether the face collapses to the whole set.
//! `IcrMethod::All` runs every route and treats disagreement as a library
//! bug, surfacing it instead of picking a winner.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{strict_feasible, LinRow, LinearSystem, Vector};
use crate::faces::{self, FaceDescriptor};
use crate::polyset::{ConvexSet, LinearMap};
use crate::sample::{relaxation, sample_icr_members, sample_members, Lcg};
use crate::scalar::Scalar;

/// Which intrinsic-core membership test to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IcrMethod {
    /// Extend the segment from each generator through the point.
    Segments,
    /// No non-implicit inequality is active at the point.
    FeasibleCone,
    /// ± steps along every affine-hull basis direction stay inside.
    AffineCore,
    /// The minimal face of the point is the full set.
    MinFace,
    /// All four, which must agree.
    All,
}

impl IcrMethod {
    pub fn name(self) -> &'static str {
        match self {
            IcrMethod::Segments => "segments",
            IcrMethod::FeasibleCone => "feasible-cone",
            IcrMethod::AffineCore => "affine-core",
            IcrMethod::MinFace => "min-face",
            IcrMethod::All => "all",
        }
    }
}

/// Exact intrinsic-core membership of `x` in `C` by the chosen method.
pub fn icr_contains<S: Scalar>(
    set: &ConvexSet<S>,
    x: &Vector<S>,
    method: IcrMethod,
) -> Result<bool> {
    if !set.contains(x)? {
        return Err(Error::NotMember);
    }
    match method {
        IcrMethod::Segments => segments_route(set, x),
        IcrMethod::FeasibleCone => feasible_cone_route(set, x),
        IcrMethod::AffineCore => affine_core_route(set, x),
        IcrMethod::MinFace => Ok(faces::minimal_face(set, x)?.is_full_face()),
        IcrMethod::All => {
            let verdicts = vec![
                (
                    IcrMethod::Segments.name().to_string(),
                    segments_route(set, x)?,
                ),
                (
                    IcrMethod::FeasibleCone.name().to_string(),
                    feasible_cone_route(set, x)?,
                ),
                (
                    IcrMethod::AffineCore.name().to_string(),
                    affine_core_route(set, x)?,
                ),
                (
                    IcrMethod::MinFace.name().to_string(),
                    faces::minimal_face(set, x)?.is_full_face(),
                ),
            ];
            let first = verdicts[0].1;
            if verdicts.iter().all(|(_, v)| *v == first) {
                Ok(first)
            } else {
                Err(Error::MethodDisagreement { verdicts })
            }
        }
    }
}

/// For every point generator the segment from it through `x` must extend
/// strictly beyond `x`; for every ray generator a backward step along the
/// ray must stay inside.
fn segments_route<S: Scalar>(set: &ConvexSet<S>, x: &Vector<S>) -> Result<bool> {
    let v = set.to_vset()?;
    for p in v.points() {
        if !positive_step(set, x, &x.sub(p))? {
            return Ok(false);
        }
    }
    for r in v.rays() {
        if !positive_step(set, x, &r.neg())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x` is interior along the feasible-direction cone exactly when every
/// active weak row is an implicit equality.
fn feasible_cone_route<S: Scalar>(set: &ConvexSet<S>, x: &Vector<S>) -> Result<bool> {
    let h = set.to_hset()?;
    let implicit = h.implicit_equalities()?;
    for (i, row) in h.system().weak.iter().enumerate() {
        if row.slack(x).is_zero() && !implicit.contains(&i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Probes `x ± εd` for every affine-hull basis direction `d`.
fn affine_core_route<S: Scalar>(set: &ConvexSet<S>, x: &Vector<S>) -> Result<bool> {
    let (_, basis) = set.affine_hull()?;
    for d in &basis {
        if !positive_step(set, x, d)? || !positive_step(set, x, &d.neg())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is there an ε > 0 with `x + εd ∈ set`? Decided by strict feasibility
/// of a one-variable system (plus combination variables for V-form).
fn positive_step<S: Scalar>(set: &ConvexSet<S>, x: &Vector<S>, d: &Vector<S>) -> Result<bool> {
    if d.is_zero() {
        // the degenerate segment (x,x) = {x}
        return set.contains(x);
    }
    match set {
        ConvexSet::H(h) => {
            // rows over ε: a·(x + εd) (≤|<|=) b
            let mut sys = LinearSystem::new(1);
            let sub = |row: &LinRow<S>| {
                (
                    Vector::new(vec![row.coeffs.dot(d)]),
                    row.rhs.clone() - row.coeffs.dot(x),
                )
            };
            for row in &h.system().weak {
                let (c, r) = sub(row);
                sys.push_weak(c, r);
            }
            for row in &h.system().strict {
                let (c, r) = sub(row);
                sys.push_strict(c, r);
            }
            for row in &h.system().eqs {
                let (c, r) = sub(row);
                sys.push_eq(c, r);
            }
            sys.push_strict(Vector::new(vec![-S::one()]), S::zero()); // ε > 0
            sys.push_weak(Vector::new(vec![S::one()]), S::one()); // ε ≤ 1
            Ok(strict_feasible(&sys)?.is_some())
        }
        ConvexSet::V(v) => {
            // variables (ε, λ, μ): x + εd = Σλp + Σμr
            let np = v.points().len();
            let nr = v.rays().len();
            let k = 1 + np + nr;
            let mut sys = LinearSystem::new(k);
            for coord in 0..v.dim() {
                let mut coeffs = vec![-d[coord].clone()];
                for p in v.points() {
                    coeffs.push(p[coord].clone());
                }
                for r in v.rays() {
                    coeffs.push(r[coord].clone());
                }
                sys.push_eq(Vector::new(coeffs), x[coord].clone());
            }
            let mut ones = vec![S::zero()];
            ones.extend(vec![S::one(); np]);
            ones.extend(vec![S::zero(); nr]);
            sys.push_eq(Vector::new(ones), S::one());
            for j in 1..k {
                sys.push_weak(Vector::unit(k, j).neg(), S::zero());
            }
            sys.push_strict(Vector::unit(k, 0).neg(), S::zero()); // ε > 0
            sys.push_weak(Vector::unit(k, 0), S::one()); // ε ≤ 1
            Ok(strict_feasible(&sys)?.is_some())
        }
    }
}

/// The relative interior (intrinsic core) of a nonempty set as a mixed
/// system: implicit equalities pinned, every other inequality strict.
pub fn relative_interior<S: Scalar>(set: &ConvexSet<S>) -> Result<ConvexSet<S>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let h = set.to_hset()?;
    Ok(ConvexSet::from_system(h.ri_system()?))
}

/// The nonempty faces of a linearly closed desk-scale set; their relative
/// interiors partition the set. An empty set decomposes into nothing.
pub fn decompose<S: Scalar>(set: &ConvexSet<S>) -> Result<Vec<FaceDescriptor<S>>> {
    if set.is_empty() {
        return Ok(Vec::new());
    }
    let lattice = faces::face_lattice(set)?;
    Ok(lattice
        .nodes()
        .iter()
        .filter(|n| !n.is_empty_face())
        .cloned()
        .collect())
}

/// The unique face whose intrinsic core holds `x`: the minimal face.
pub fn locate<S: Scalar>(set: &ConvexSet<S>, x: &Vector<S>) -> Result<FaceDescriptor<S>> {
    faces::minimal_face(set, x)
}

/// Whether the set has a proper nonempty face; `false` exactly when the
/// set equals its intrinsic core.
pub fn has_proper_faces<S: Scalar>(set: &ConvexSet<S>) -> Result<bool> {
    if set.is_empty() {
        return Ok(false);
    }
    match set {
        ConvexSet::H(h) => {
            let implicit = h.implicit_equalities()?;
            for (i, row) in h.system().weak.iter().enumerate() {
                if implicit.contains(&i) {
                    continue;
                }
                // active anywhere on the set itself (strict rows included)
                let mut probe = h.system().clone();
                probe.push_eq(row.coeffs.clone(), row.rhs.clone());
                if strict_feasible(&probe)?.is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        ConvexSet::V(v) => {
            for p in v.points() {
                if !faces::minimal_face(set, p)?.is_full_face() {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

// ---------------------------------------------------------------------------
// calculus checking
// ---------------------------------------------------------------------------

/// Which calculus law a verdict speaks about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CalcLaw {
    Sum,
    Translate,
    Scale,
    LinearImage,
    Product,
    PositiveHull,
}

impl fmt::Display for CalcLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CalcLaw::Sum => "sum",
            CalcLaw::Translate => "translate",
            CalcLaw::Scale => "scale",
            CalcLaw::LinearImage => "linear-image",
            CalcLaw::Product => "product",
            CalcLaw::PositiveHull => "positive-hull",
        };
        f.write_str(name)
    }
}

/// A law instance: the operands it applies to.
#[derive(Clone)]
pub enum CalcCheck<S> {
    Sum(ConvexSet<S>, ConvexSet<S>),
    Translate(ConvexSet<S>, Vector<S>),
    Scale(ConvexSet<S>, S),
    LinearImage(ConvexSet<S>, LinearMap<S>),
    Product(ConvexSet<S>, ConvexSet<S>),
    PositiveHull(ConvexSet<S>),
}

impl<S> CalcCheck<S> {
    pub fn law(&self) -> CalcLaw {
        match self {
            CalcCheck::Sum(..) => CalcLaw::Sum,
            CalcCheck::Translate(..) => CalcLaw::Translate,
            CalcCheck::Scale(..) => CalcLaw::Scale,
            CalcCheck::LinearImage(..) => CalcLaw::LinearImage,
            CalcCheck::Product(..) => CalcLaw::Product,
            CalcCheck::PositiveHull(..) => CalcLaw::PositiveHull,
        }
    }
}

/// Which inclusion failed, when one did.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FailureSide {
    /// A point built from operand intrinsic cores missed the composite's.
    OperandSide,
    /// A composite intrinsic-core point admitted no operand-side witness.
    CompositeSide,
}

/// An exact counterexample to a calculus law.
#[derive(Clone, PartialEq, Eq)]
pub struct CounterExample<S> {
    pub point: Vector<S>,
    pub side: FailureSide,
}

impl<S: Scalar> fmt::Debug for CounterExample<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails on {:?}", self.point, self.side)
    }
}

/// Outcome of a sampled law check.
#[derive(Clone, PartialEq, Eq)]
pub struct CalcVerdict<S> {
    pub law: CalcLaw,
    pub holds: bool,
    pub counterexample: Option<CounterExample<S>>,
}

impl<S: Scalar> fmt::Debug for CalcVerdict<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CalcVerdict({}, holds={}, counterexample={:?})",
            self.law, self.holds, self.counterexample
        )
    }
}

/// Sampler configuration; seed 0 and denominator-bounded rational samples
/// make every verdict reproducible bit for bit.
#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    pub count: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            count: 200,
            seed: 0,
        }
    }
}

/// Verifies a calculus law membership-wise on deterministic samples from
/// both sides, returning an exact counterexample when an inclusion fails.
///
/// Strict-row operands are handled through their weak relaxations, which
/// have the same relative interiors; the closure of a Minkowski sum or a
/// linear image of polyhedral sets is the sum or image of the closures,
/// so intrinsic-core membership of the composite is exact.
pub fn check_calculus<S: Scalar>(
    check: &CalcCheck<S>,
    config: &SampleConfig,
) -> Result<CalcVerdict<S>> {
    if config.count == 0 {
        return Err(Error::EmptyInput);
    }
    let mut rng = Lcg::new(config.seed);
    match check {
        CalcCheck::Sum(a, b) => check_sum(a, b, config, &mut rng),
        CalcCheck::Translate(c, t) => check_translate(c, t, config, &mut rng),
        CalcCheck::Scale(c, lambda) => check_scale(c, lambda, config, &mut rng),
        CalcCheck::LinearImage(c, map) => check_linear_image(c, map, config, &mut rng),
        CalcCheck::Product(c, d) => check_product(c, d, config, &mut rng),
        CalcCheck::PositiveHull(c) => check_positive_hull(c, config, &mut rng),
    }
}

fn verdict<S: Scalar>(law: CalcLaw, counterexample: Option<CounterExample<S>>) -> CalcVerdict<S> {
    CalcVerdict {
        law,
        holds: counterexample.is_none(),
        counterexample,
    }
}

/// Intrinsic-core membership by direct row evaluation of the ri system.
fn icr_member<S: Scalar>(ri_sys: &LinearSystem<S>, x: &Vector<S>) -> bool {
    ri_sys.satisfied_by(x)
}

fn ri_system_of<S: Scalar>(set: &ConvexSet<S>) -> Result<LinearSystem<S>> {
    let h = set.to_hset()?;
    if h.is_empty() {
        return Err(Error::EmptySet);
    }
    h.ri_system()
}

fn composite_err(law: CalcLaw, e: Error) -> Error {
    match e {
        Error::UnsupportedStrict
        | Error::TooLarge(_)
        | Error::UnsupportedRays
        | Error::ContainsOrigin => Error::UnsupportedComposite(format!("{law} composite: {e}")),
        other => other,
    }
}

fn check_sum<S: Scalar>(
    a: &ConvexSet<S>,
    b: &ConvexSet<S>,
    config: &SampleConfig,
    rng: &mut Lcg,
) -> Result<CalcVerdict<S>> {
    let law = CalcLaw::Sum;
    // the sum of the relaxations is the closure of the sum, so its ri
    // system decides intrinsic-core membership in A + B
    let relaxed_sum = relaxation(a)
        .minkowski_sum(&relaxation(b))
        .map_err(|e| composite_err(law, e))?;
    let sum_ri = ri_system_of(&relaxed_sum)?;
    let ri_a = ri_system_of(a)?;
    let ri_b = ri_system_of(b)?;

    let n = config.count.div_ceil(2);
    for (x, y) in sample_icr_members(a, n, rng)?
        .into_iter()
        .zip(sample_icr_members(b, n, rng)?)
    {
        let z = x.add(&y);
        if !icr_member(&sum_ri, &z) {
            return Ok(verdict(
                law,
                Some(CounterExample {
                    point: z,
                    side: FailureSide::OperandSide,
                }),
            ));
        }
    }
    for z in sample_icr_members(&relaxed_sum, n, rng)? {
        if !split_exists(&ri_a, &ri_b, &z)? {
            return Ok(verdict(
                law,
                Some(CounterExample {
                    point: z,
                    side: FailureSide::CompositeSide,
                }),
            ));
        }
    }
    Ok(verdict(law, None))
}

/// Is there an `x` with `x ∈ ri_a` and `z − x ∈ ri_b`?
fn split_exists<S: Scalar>(
    ri_a: &LinearSystem<S>,
    ri_b: &LinearSystem<S>,
    z: &Vector<S>,
) -> Result<bool> {
    let dim = ri_a.dim;
    let mut joint = ri_a.clone();
    // substitute y = z − x into every row of ri_b: c·y (≤|<|=) d becomes
    // −c·x (≤|<|=) d − c·z
    for row in &ri_b.weak {
        joint.push_weak(row.coeffs.neg(), row.rhs.clone() - row.coeffs.dot(z));
    }
    for row in &ri_b.strict {
        joint.push_strict(row.coeffs.neg(), row.rhs.clone() - row.coeffs.dot(z));
    }
    for row in &ri_b.eqs {
        joint.push_eq(row.coeffs.neg(), row.rhs.clone() - row.coeffs.dot(z));
    }
    debug_assert_eq!(dim, joint.dim);
    Ok(strict_feasible(&joint)?.is_some())
}

fn check_translate<S: Scalar>(
    c: &ConvexSet<S>,
    t: &Vector<S>,
    config: &SampleConfig,
    rng: &mut Lcg,
) -> Result<CalcVerdict<S>> {
    let law = CalcLaw::Translate;
    let shifted = c.translate(t)?;
    let ri_c = ri_system_of(c)?;
    let ri_shifted = ri_system_of(&shifted)?;
    let mut points = sample_members(c, config.count.div_ceil(2), rng)?;
    points.extend(sample_icr_members(c, config.count.div_ceil(2), rng)?);
    for x in points {
        let y = x.add(t);
        let lhs = icr_member(&ri_c, &x);
        let rhs = icr_member(&ri_shifted, &y);
        if lhs != rhs {
            let side = if lhs {
                FailureSide::OperandSide
            } else {
                FailureSide::CompositeSide
            };
            return Ok(verdict(law, Some(CounterExample { point: y, side })));
        }
    }
    Ok(verdict(law, None))
}

fn check_scale<S: Scalar>(
    c: &ConvexSet<S>,
    lambda: &S,
    config: &SampleConfig,
    rng: &mut Lcg,
) -> Result<CalcVerdict<S>> {
    let law = CalcLaw::Scale;
    let scaled = c.scale(lambda)?;
    let ri_c = ri_system_of(c)?;
    let ri_scaled = ri_system_of(&scaled)?;
    let mut points = sample_members(c, config.count.div_ceil(2), rng)?;
    points.extend(sample_icr_members(c, config.count.div_ceil(2), rng)?);
    for x in points {
        let y = x.scale(lambda);
        let lhs = icr_member(&ri_c, &x);
        let rhs = icr_member(&ri_scaled, &y);
        if lhs != rhs {
            let side = if lhs {
                FailureSide::OperandSide
            } else {
                FailureSide::CompositeSide
            };
            return Ok(verdict(law, Some(CounterExample { point: y, side })));
        }
    }
    Ok(verdict(law, None))
}

fn check_linear_image<S: Scalar>(
    c: &ConvexSet<S>,
    map: &LinearMap<S>,
    config: &SampleConfig,
    rng: &mut Lcg,
) -> Result<CalcVerdict<S>> {
    let law = CalcLaw::LinearImage;
    // the image of the relaxation is the closure of the image
    let image = relaxation(c)
        .linear_image(map)
        .map_err(|e| composite_err(law, e))?;
    let ri_image = ri_system_of(&image)?;
    let ri_c = ri_system_of(c)?;

    let n = config.count.div_ceil(2);
    for x in sample_icr_members(c, n, rng)? {
        let z = map.apply(&x);
        if !icr_member(&ri_image, &z) {
            return Ok(verdict(
                law,
                Some(CounterExample {
                    point: z,
                    side: FailureSide::OperandSide,
                }),
            ));
        }
    }
    for z in sample_icr_members(&image, n, rng)? {
        // find x ∈ ri C with A·x = z
        let mut sys = ri_c.clone();
        for (row, target) in map.matrix().rows().iter().zip(z.iter()) {
            sys.push_eq(row.clone(), target.clone());
        }
        if strict_feasible(&sys)?.is_none() {
            return Ok(verdict(
                law,
                Some(CounterExample {
                    point: z,
                    side: FailureSide::CompositeSide,
                }),
            ));
        }
    }
    Ok(verdict(law, None))
}

fn check_product<S: Scalar>(
    c: &ConvexSet<S>,
    d: &ConvexSet<S>,
    config: &SampleConfig,
    rng: &mut Lcg,
) -> Result<CalcVerdict<S>> {
    let law = CalcLaw::Product;
    let prod = c.product(d).map_err(|e| composite_err(law, e))?;
    let ri_prod = ri_system_of(&prod)?;
    let ri_c = ri_system_of(c)?;
    let ri_d = ri_system_of(d)?;

    let n = config.count.div_ceil(2);
    let xs = {
        let mut v = sample_members(c, n.div_ceil(2), rng)?;
        v.extend(sample_icr_members(c, n.div_ceil(2), rng)?);
        v
    };
    let ys = {
        let mut v = sample_members(d, n.div_ceil(2), rng)?;
        v.extend(sample_icr_members(d, n.div_ceil(2), rng)?);
        v
    };
    for (x, y) in xs.iter().zip(&ys) {
        let z = x.concat(y);
        let lhs = icr_member(&ri_c, x) && icr_member(&ri_d, y);
        let rhs = icr_member(&ri_prod, &z);
        if lhs != rhs {
            let side = if lhs {
                FailureSide::OperandSide
            } else {
                FailureSide::CompositeSide
            };
            return Ok(verdict(law, Some(CounterExample { point: z, side })));
        }
    }
    Ok(verdict(law, None))
}

fn check_positive_hull<S: Scalar>(
    c: &ConvexSet<S>,
    config: &SampleConfig,
    rng: &mut Lcg,
) -> Result<CalcVerdict<S>> {
    let law = CalcLaw::PositiveHull;
    let hull = c.positive_hull().map_err(|e| composite_err(law, e))?;
    let ri_hull = ri_system_of(&hull)?;
    for x in sample_icr_members(c, config.count, rng)? {
        if !icr_member(&ri_hull, &x) {
            return Ok(verdict(
                law,
                Some(CounterExample {
                    point: x,
                    side: FailureSide::OperandSide,
                }),
            ));
        }
    }
    Ok(verdict(law, None))
}
