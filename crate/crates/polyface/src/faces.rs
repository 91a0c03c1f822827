//! Face predicates, minimal faces, face lattices and chains.
//!
//! A face is canonically identified by the set of weak inequalities that
//! hold with equality on all of it (H-form parents), or by the exact set
//! of generators lying on it (V-form parents). Canonical active sets are
//! closed under implied equalities, which makes descriptor equality
//! decidable.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactla::{
    barycenter, lp_solve, rank_of, strict_feasible, LinearSystem, LpOutcome, Vector,
};
use crate::polyset::{ConvexSet, HSet, VSet};
use crate::scalar::Scalar;

/// Cap on weak rows for whole-lattice enumeration.
const LATTICE_ROW_CAP: usize = 16;

/// Canonical identification of a face within its parent set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum FaceKind {
    Empty,
    /// Weak-row indices tight on the whole face (H-form parent), closed
    /// under implied equalities.
    ActiveSet(BTreeSet<usize>),
    /// Generators lying on the face (V-form parent).
    GeneratorSubset {
        points: BTreeSet<usize>,
        rays: BTreeSet<usize>,
    },
}

/// A face of a specific parent set.
#[derive(Clone)]
pub struct FaceDescriptor<S> {
    parent: ConvexSet<S>,
    kind: FaceKind,
    /// Intrinsic dimension of the face; `None` for the empty face.
    dim: Option<usize>,
}

impl<S: Scalar> PartialEq for FaceDescriptor<S> {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.parent == other.parent
    }
}
impl<S: Scalar> Eq for FaceDescriptor<S> {}

impl<S: Scalar> fmt::Debug for FaceDescriptor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FaceKind::Empty => write!(f, "Face(∅)"),
            FaceKind::ActiveSet(a) => write!(f, "Face(active={a:?}, dim={:?})", self.dim),
            FaceKind::GeneratorSubset { points, rays } => {
                write!(
                    f,
                    "Face(points={points:?}, rays={rays:?}, dim={:?})",
                    self.dim
                )
            }
        }
    }
}

impl<S: Scalar> FaceDescriptor<S> {
    pub fn kind(&self) -> &FaceKind {
        &self.kind
    }

    pub fn parent(&self) -> &ConvexSet<S> {
        &self.parent
    }

    /// Intrinsic dimension; `None` for the empty face.
    pub fn dim(&self) -> Option<usize> {
        self.dim
    }

    pub fn is_empty_face(&self) -> bool {
        self.kind == FaceKind::Empty
    }

    pub fn is_full_face(&self) -> bool {
        match (&self.kind, &self.parent) {
            (FaceKind::Empty, _) => false,
            (FaceKind::ActiveSet(a), ConvexSet::H(h)) => match h.implicit_equalities() {
                Ok(implicit) => a.iter().all(|i| implicit.contains(i)),
                Err(_) => false,
            },
            (FaceKind::GeneratorSubset { points, rays }, ConvexSet::V(v)) => {
                points.len() == v.points().len() && rays.len() == v.rays().len()
            }
            _ => false,
        }
    }

    /// Exact membership of `x` in this face.
    pub fn contains_point(&self, x: &Vector<S>) -> Result<bool> {
        match &self.kind {
            FaceKind::Empty => Ok(false),
            FaceKind::ActiveSet(active) => {
                let h = self.parent.as_h().expect("ActiveSet implies H parent");
                Ok(face_system(h, active).satisfied_by(x))
            }
            FaceKind::GeneratorSubset { points, .. } => {
                if points.is_empty() {
                    return Ok(false);
                }
                self.as_convex_set()?.contains(x)
            }
        }
    }

    /// The face as a convex set of its own. Errors on the empty face.
    pub fn as_convex_set(&self) -> Result<ConvexSet<S>> {
        match &self.kind {
            FaceKind::Empty => Err(Error::EmptySet),
            FaceKind::ActiveSet(active) => {
                let h = self.parent.as_h().expect("ActiveSet implies H parent");
                Ok(ConvexSet::from_system(face_system(h, active)))
            }
            FaceKind::GeneratorSubset { points, rays } => {
                let v = self
                    .parent
                    .as_v()
                    .expect("GeneratorSubset implies V parent");
                if points.is_empty() {
                    return Err(Error::EmptySet);
                }
                let pts = points.iter().map(|&i| v.points()[i].clone()).collect();
                let rys = rays.iter().map(|&j| v.rays()[j].clone()).collect();
                Ok(ConvexSet::from_generators(v.dim(), pts, rys))
            }
        }
    }

    /// A point in the relative interior of this face.
    pub fn ri_point(&self) -> Result<Vector<S>> {
        match &self.kind {
            FaceKind::Empty => Err(Error::EmptySet),
            FaceKind::ActiveSet(_) => self.as_convex_set()?.to_hset()?.ri_point(),
            FaceKind::GeneratorSubset { points, rays } => {
                let v = self
                    .parent
                    .as_v()
                    .expect("GeneratorSubset implies V parent");
                if points.is_empty() {
                    return Err(Error::EmptySet);
                }
                let pts: Vec<Vector<S>> = points.iter().map(|&i| v.points()[i].clone()).collect();
                let mut x = barycenter(&pts);
                for &j in rays {
                    x = x.add(&v.rays()[j]);
                }
                Ok(x)
            }
        }
    }

    /// Set inclusion of faces of a common parent, decided combinatorially.
    pub fn subset_of(&self, other: &Self) -> Result<bool> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(match (&self.kind, &other.kind) {
            (FaceKind::Empty, _) => true,
            (_, FaceKind::Empty) => false,
            (FaceKind::ActiveSet(a), FaceKind::ActiveSet(b)) => a.is_superset(b),
            (
                FaceKind::GeneratorSubset {
                    points: pa,
                    rays: ra,
                },
                FaceKind::GeneratorSubset {
                    points: pb,
                    rays: rb,
                },
            ) => pa.is_subset(pb) && ra.is_subset(rb),
            _ => false,
        })
    }
}

/// Inequality system of the subset of `h` where the `active` weak rows are
/// pinned to equality.
pub fn face_system<S: Scalar>(h: &HSet<S>, active: &BTreeSet<usize>) -> LinearSystem<S> {
    let sys = h.system();
    let mut out = LinearSystem::new(sys.dim);
    out.eqs = sys.eqs.clone();
    for (i, row) in sys.weak.iter().enumerate() {
        if active.contains(&i) {
            out.eqs.push(row.clone());
        } else {
            out.weak.push(row.clone());
        }
    }
    out.strict = sys.strict.clone();
    out
}

/// Closes `initial` under implied equalities on the face it cuts out.
/// Returns `None` when that face is empty.
pub fn canonical_active_set<S: Scalar>(
    h: &HSet<S>,
    initial: &BTreeSet<usize>,
) -> Result<Option<BTreeSet<usize>>> {
    let sys = face_system(h, initial);
    if strict_feasible(&sys)?.is_none() {
        return Ok(None);
    }
    // relax strict rows for the per-row LPs; tightness on the relaxation
    // coincides with tightness on the face because the face holds a point
    // satisfying every strict row strictly
    let mut relaxed = sys.clone();
    let stricts = std::mem::take(&mut relaxed.strict);
    relaxed.weak.extend(stricts);
    let mut closed = initial.clone();
    for (j, row) in h.system().weak.iter().enumerate() {
        if closed.contains(&j) {
            continue;
        }
        match lp_solve(&row.coeffs.neg(), &relaxed)? {
            LpOutcome::Unbounded { .. } => {}
            LpOutcome::Infeasible => unreachable!("face checked nonempty"),
            LpOutcome::Optimal { value, .. } => {
                if -value == row.rhs {
                    closed.insert(j);
                }
            }
        }
    }
    Ok(Some(closed))
}

fn h_face_dim<S: Scalar>(h: &HSet<S>, active: &BTreeSet<usize>) -> usize {
    let sys = h.system();
    let mut normals: Vec<Vector<S>> = sys.eqs.iter().map(|r| r.coeffs.clone()).collect();
    normals.extend(active.iter().map(|&i| sys.weak[i].coeffs.clone()));
    if normals.is_empty() {
        return sys.dim;
    }
    sys.dim - rank_of(&normals)
}

fn descriptor_from_active<S: Scalar>(
    parent: &ConvexSet<S>,
    active: BTreeSet<usize>,
) -> FaceDescriptor<S> {
    let h = parent.as_h().expect("H parent");
    let dim = h_face_dim(h, &active);
    FaceDescriptor {
        parent: parent.clone(),
        kind: FaceKind::ActiveSet(active),
        dim: Some(dim),
    }
}

fn v_face_dim<S: Scalar>(v: &VSet<S>, points: &BTreeSet<usize>, rays: &BTreeSet<usize>) -> usize {
    let mut it = points.iter();
    let first = *it.next().expect("nonempty point subset");
    let base = &v.points()[first];
    let mut dirs: Vec<Vector<S>> = it.map(|&i| v.points()[i].sub(base)).collect();
    dirs.extend(rays.iter().map(|&j| v.rays()[j].clone()));
    rank_of(&dirs)
}

/// The empty face of `parent`.
pub fn empty_face<S: Scalar>(parent: &ConvexSet<S>) -> FaceDescriptor<S> {
    FaceDescriptor {
        parent: parent.clone(),
        kind: FaceKind::Empty,
        dim: None,
    }
}

/// The full face (the set itself). Errors on an empty set.
pub fn full_face<S: Scalar>(parent: &ConvexSet<S>) -> Result<FaceDescriptor<S>> {
    match parent {
        ConvexSet::H(h) => {
            if h.is_empty() {
                return Err(Error::EmptySet);
            }
            let implicit: BTreeSet<usize> = h.implicit_equalities()?.iter().copied().collect();
            Ok(descriptor_from_active(parent, implicit))
        }
        ConvexSet::V(v) => {
            let points = (0..v.points().len()).collect();
            let rays = (0..v.rays().len()).collect();
            let dim = parent.intrinsic_dim()?;
            Ok(FaceDescriptor {
                parent: parent.clone(),
                kind: FaceKind::GeneratorSubset { points, rays },
                dim: Some(dim),
            })
        }
    }
}

/// The minimal face of `parent` containing the member point `x`.
///
/// H route: the weak rows tight at `x`, closed under implied equalities —
/// the equality subsystem of the feasible-direction cone at `x`.
/// V route: one LP per generator decides whether some representation of
/// `x` gives it positive weight.
pub fn minimal_face<S: Scalar>(parent: &ConvexSet<S>, x: &Vector<S>) -> Result<FaceDescriptor<S>> {
    if !parent.contains(x)? {
        return Err(Error::NotMember);
    }
    match parent {
        ConvexSet::H(h) => {
            let tight: BTreeSet<usize> = h
                .system()
                .weak
                .iter()
                .enumerate()
                .filter(|(_, row)| row.slack(x).is_zero())
                .map(|(i, _)| i)
                .collect();
            let canonical =
                canonical_active_set(h, &tight)?.expect("face of a member point is nonempty");
            Ok(descriptor_from_active(parent, canonical))
        }
        ConvexSet::V(v) => {
            let sys = v.combination_system(x);
            let np = v.points().len();
            let nr = v.rays().len();
            let mut points = BTreeSet::new();
            let mut rays = BTreeSet::new();
            for i in 0..np + nr {
                let positive = match lp_solve(&Vector::unit(sys.dim, i), &sys)? {
                    LpOutcome::Infeasible => unreachable!("x is a member"),
                    LpOutcome::Unbounded { .. } => true,
                    LpOutcome::Optimal { value, .. } => value.is_positive(),
                };
                if positive {
                    if i < np {
                        points.insert(i);
                    } else {
                        rays.insert(i - np);
                    }
                }
            }
            let dim = v_face_dim(v, &points, &rays);
            Ok(FaceDescriptor {
                parent: parent.clone(),
                kind: FaceKind::GeneratorSubset { points, rays },
                dim: Some(dim),
            })
        }
    }
}

/// Minimal face containing a finite point set: the minimal face of its
/// barycenter, which lies in the intrinsic core of the set's hull.
pub fn minimal_face_of_set<S: Scalar>(
    parent: &ConvexSet<S>,
    points: &[Vector<S>],
) -> Result<FaceDescriptor<S>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for p in points {
        if !parent.contains(p)? {
            return Err(Error::NotMember);
        }
    }
    minimal_face(parent, &barycenter(points))
}

/// Whether `candidate` canonically describes a face of its parent:
/// the minimal face of the candidate's own relative-interior point must
/// be the candidate itself.
pub fn is_face<S: Scalar>(parent: &ConvexSet<S>, candidate: &FaceDescriptor<S>) -> Result<bool> {
    assert!(
        &candidate.parent == parent,
        "is_face candidate must reference the queried parent"
    );
    match &candidate.kind {
        FaceKind::Empty => Ok(true),
        FaceKind::ActiveSet(active) => {
            let h = parent.as_h().expect("ActiveSet implies H parent");
            match canonical_active_set(h, active)? {
                None => Ok(false),
                Some(closed) => Ok(&closed == active),
            }
        }
        FaceKind::GeneratorSubset { points, .. } => {
            if points.is_empty() {
                return Ok(false);
            }
            let x = candidate.ri_point()?;
            if !parent.contains(&x)? {
                return Ok(false);
            }
            Ok(&minimal_face(parent, &x)? == candidate)
        }
    }
}

/// Canonical descriptor of `F ∩ G`, possibly the empty face.
pub fn face_intersection<S: Scalar>(
    f: &FaceDescriptor<S>,
    g: &FaceDescriptor<S>,
) -> Result<FaceDescriptor<S>> {
    if f.parent != g.parent {
        return Err(Error::ParentMismatch);
    }
    let parent = &f.parent;
    match (&f.kind, &g.kind) {
        (FaceKind::Empty, _) | (_, FaceKind::Empty) => Ok(empty_face(parent)),
        (FaceKind::ActiveSet(a), FaceKind::ActiveSet(b)) => {
            let h = parent.as_h().expect("H parent");
            let union: BTreeSet<usize> = a.union(b).copied().collect();
            match canonical_active_set(h, &union)? {
                None => Ok(empty_face(parent)),
                Some(closed) => Ok(descriptor_from_active(parent, closed)),
            }
        }
        (
            FaceKind::GeneratorSubset {
                points: pa,
                rays: ra,
            },
            FaceKind::GeneratorSubset {
                points: pb,
                rays: rb,
            },
        ) => {
            let points: BTreeSet<usize> = pa.intersection(pb).copied().collect();
            let rays: BTreeSet<usize> = ra.intersection(rb).copied().collect();
            if points.is_empty() {
                return Ok(empty_face(parent));
            }
            let v = parent.as_v().expect("V parent");
            let dim = v_face_dim(v, &points, &rays);
            Ok(FaceDescriptor {
                parent: parent.clone(),
                kind: FaceKind::GeneratorSubset { points, rays },
                dim: Some(dim),
            })
        }
        _ => Err(Error::ParentMismatch),
    }
}

/// The complete face lattice of a linearly closed set, ordered by
/// inclusion with the empty face at the bottom.
pub struct LatticeGraph<S> {
    nodes: Vec<FaceDescriptor<S>>,
    covers: Vec<(usize, usize)>,
}

impl<S: Scalar> LatticeGraph<S> {
    pub fn nodes(&self) -> &[FaceDescriptor<S>] {
        &self.nodes
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Index of the empty face (always 0).
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the full face (always last).
    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Inclusion-least node containing `x`.
    pub fn locate(&self, x: &Vector<S>) -> Result<usize> {
        let mut best: Option<usize> = None;
        for (i, node) in self.nodes.iter().enumerate() {
            if node.contains_point(x)? {
                let smaller = match best {
                    None => true,
                    Some(b) => node.subset_of(&self.nodes[b])?,
                };
                if smaller {
                    best = Some(i);
                }
            }
        }
        best.ok_or(Error::NotMember)
    }

    /// Every maximal chain from the empty face to the full face, in
    /// deterministic order, as node indices.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for &(lo, hi) in &self.covers {
            up[lo].push(hi);
        }
        for list in &mut up {
            list.sort_unstable();
        }
        let mut chains = Vec::new();
        let mut stack = vec![self.bottom()];
        self.walk(&up, &mut stack, &mut chains);
        chains
    }

    fn walk(&self, up: &[Vec<usize>], stack: &mut Vec<usize>, chains: &mut Vec<Vec<usize>>) {
        let last = *stack.last().expect("nonempty stack");
        if up[last].is_empty() {
            chains.push(stack.clone());
            return;
        }
        for &next in &up[last] {
            stack.push(next);
            self.walk(up, stack, chains);
            stack.pop();
        }
    }

    /// Hasse diagram in DOT form: one node per face labelled with its
    /// dimension and canonical identification, one edge per cover.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph face_lattice {\n  rankdir=BT;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let label = match &node.kind {
                FaceKind::Empty => "dim -1\\nempty".to_string(),
                FaceKind::ActiveSet(a) => {
                    let ids: Vec<String> = a.iter().map(|j| j.to_string()).collect();
                    format!(
                        "dim {}\\nactive {{{}}}",
                        node.dim.map(|d| d as i64).unwrap_or(-1),
                        ids.join(",")
                    )
                }
                FaceKind::GeneratorSubset { points, rays } => {
                    let ps: Vec<String> = points.iter().map(|j| format!("p{j}")).collect();
                    let rs: Vec<String> = rays.iter().map(|j| format!("r{j}")).collect();
                    format!(
                        "dim {}\\ngens {{{}}}",
                        node.dim.map(|d| d as i64).unwrap_or(-1),
                        ps.into_iter().chain(rs).collect::<Vec<_>>().join(",")
                    )
                }
            };
            let _ = writeln!(out, "  f{i} [label=\"{label}\"];");
        }
        for &(lo, hi) in &self.covers {
            let _ = writeln!(out, "  f{lo} -> f{hi};");
        }
        out.push_str("}\n");
        out
    }
}

/// Enumerates every face of a linearly closed, nonempty, desk-scale set.
///
/// Breadth-first from the full face, pinning one inactive inequality at a
/// time and re-canonicalising; deduplication is by canonical active set.
pub fn face_lattice<S: Scalar>(parent: &ConvexSet<S>) -> Result<LatticeGraph<S>> {
    if !parent.is_linearly_closed() {
        return Err(Error::UnsupportedStrict);
    }
    if parent.is_empty() {
        return Err(Error::EmptySet);
    }
    match parent {
        ConvexSet::H(h) => {
            let actives = enumerate_active_sets(h)?;
            let mut nodes: Vec<FaceDescriptor<S>> = vec![empty_face(parent)];
            nodes.extend(
                actives
                    .into_iter()
                    .map(|a| descriptor_from_active(parent, a)),
            );
            finish_lattice(nodes)
        }
        ConvexSet::V(v) => {
            let h = parent.to_hset()?;
            let actives = enumerate_active_sets(&h)?;
            let mut nodes: Vec<FaceDescriptor<S>> = vec![empty_face(parent)];
            for active in actives {
                let sys = face_system(&h, &active);
                let on_face = |g: &Vector<S>, as_ray: bool| -> bool {
                    sys.eqs.iter().all(|row| {
                        if as_ray {
                            row.coeffs.dot(g).is_zero()
                        } else {
                            row.slack(g).is_zero()
                        }
                    })
                };
                let points: BTreeSet<usize> = v
                    .points()
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| on_face(p, false))
                    .map(|(i, _)| i)
                    .collect();
                let rays: BTreeSet<usize> = v
                    .rays()
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| on_face(r, true))
                    .map(|(j, _)| j)
                    .collect();
                debug_assert!(
                    !points.is_empty(),
                    "a nonempty face holds a generator point"
                );
                let dim = v_face_dim(v, &points, &rays);
                nodes.push(FaceDescriptor {
                    parent: parent.clone(),
                    kind: FaceKind::GeneratorSubset { points, rays },
                    dim: Some(dim),
                });
            }
            finish_lattice(nodes)
        }
    }
}

fn enumerate_active_sets<S: Scalar>(h: &HSet<S>) -> Result<Vec<BTreeSet<usize>>> {
    let n_rows = h.system().weak.len();
    if h.dim() > crate::polyset::dd::DESK_DIM || n_rows > LATTICE_ROW_CAP {
        return Err(Error::TooLarge(format!(
            "lattice enumeration capped at dim {} and {} weak rows",
            crate::polyset::dd::DESK_DIM,
            LATTICE_ROW_CAP
        )));
    }
    let full: BTreeSet<usize> = h.implicit_equalities()?.iter().copied().collect();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    seen.insert(full.clone());
    let mut queue = VecDeque::from([full]);
    while let Some(active) = queue.pop_front() {
        for j in 0..n_rows {
            if active.contains(&j) {
                continue;
            }
            let mut trial = active.clone();
            trial.insert(j);
            if let Some(closed) = canonical_active_set(h, &trial)? {
                if seen.insert(closed.clone()) {
                    queue.push_back(closed);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Sorts nodes by (dimension, canonical key) and derives the cover
/// relation; along every cover the dimension strictly increases.
fn finish_lattice<S: Scalar>(mut nodes: Vec<FaceDescriptor<S>>) -> Result<LatticeGraph<S>> {
    nodes.sort_by(|a, b| {
        let da = a.dim.map(|d| d as i64).unwrap_or(-1);
        let db = b.dim.map(|d| d as i64).unwrap_or(-1);
        da.cmp(&db).then_with(|| a.kind.cmp(&b.kind))
    });
    nodes.dedup_by(|a, b| a.kind == b.kind);
    let n = nodes.len();
    let mut below = vec![vec![false; n]; n]; // below[i][j]: nodes[i] ⊊ nodes[j]
    for i in 0..n {
        for j in 0..n {
            if i != j && nodes[i].kind != nodes[j].kind && nodes[i].subset_of(&nodes[j])? {
                below[i][j] = true;
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        'upper: for j in 0..n {
            if !below[i][j] {
                continue;
            }
            if (0..n).any(|k| below[i][k] && below[k][j]) {
                continue 'upper;
            }
            debug_assert!(
                nodes[i].dim.map(|d| d as i64).unwrap_or(-1)
                    < nodes[j].dim.map(|d| d as i64).unwrap_or(-1),
                "cover edges must strictly increase dimension"
            );
            covers.push((i, j));
        }
    }
    covers.sort_unstable();
    Ok(LatticeGraph { nodes, covers })
}

/// The convex set `C ∖ F` for a proper nonempty face `F` of a linearly
/// closed H-form set, as a mixed system: `C`'s rows plus one strict row
/// `φ·y < β` where `φ, β` sum the face's non-implicit defining rows. The
/// cut is verified exactly before returning.
pub fn set_minus_face<S: Scalar>(
    parent: &ConvexSet<S>,
    face: &FaceDescriptor<S>,
) -> Result<ConvexSet<S>> {
    assert!(
        &face.parent == parent,
        "set_minus_face face must reference the queried parent"
    );
    let h = match parent {
        ConvexSet::H(h) if h.is_linearly_closed() => h,
        ConvexSet::H(_) => return Err(Error::UnsupportedStrict),
        // V-form sets are linearly closed and C ∖ F never is
        ConvexSet::V(_) => return Err(Error::Unrepresentable),
    };
    let FaceKind::ActiveSet(active) = &face.kind else {
        return Err(Error::NotProperFace);
    };
    let implicit: BTreeSet<usize> = h.implicit_equalities()?.iter().copied().collect();
    let cutting: Vec<usize> = active.difference(&implicit).copied().collect();
    if cutting.is_empty() {
        // the face is all of C
        return Err(Error::NotProperFace);
    }
    let sys = h.system();
    let mut phi = Vector::zero(sys.dim);
    let mut beta = S::zero();
    for &i in &cutting {
        phi = phi.add(&sys.weak[i].coeffs);
        beta = beta + sys.weak[i].rhs.clone();
    }
    // verify the cut is exact: no point of C achieves φ·y = β while any
    // contributing row stays slack
    for &i in &cutting {
        let mut check = sys.clone();
        check.push_eq(phi.clone(), beta.clone());
        check.push_strict(sys.weak[i].coeffs.clone(), sys.weak[i].rhs.clone());
        if strict_feasible(&check)?.is_some() {
            return Err(Error::Unrepresentable);
        }
    }
    let mut out = sys.clone();
    out.push_strict(phi, beta);
    Ok(ConvexSet::from_system(out))
}
