//! Shared builders for the test corpus: named desk-scale sets across
//! dimensions 1–4, random polytope generation, exact ray shooting and a
//! Fourier–Motzkin feasibility oracle independent of the simplex path.

#![allow(dead_code)]

use polyface::exactla::{LinearSystem, Vector};
use polyface::polyset::ConvexSet;
use polyface::sample::Lcg;
use polyface::scalar::{int, ratio};
use polyface::{QSet, QVec, Rat};

use num_traits::Signed;
use num_traits::Zero;

pub fn v(entries: &[i64]) -> QVec {
    Vector::new(entries.iter().map(|&e| int(e)).collect())
}

pub fn vr(entries: &[(i64, i64)]) -> QVec {
    Vector::new(entries.iter().map(|&(n, d)| ratio(n, d)).collect())
}

pub fn rat(n: i64, d: i64) -> Rat {
    ratio(n, d)
}

/// Axis-aligned box `[lo_i, hi_i]` as an H-form set; rows come in
/// (upper, lower) pairs per axis.
pub fn box_set(bounds: &[(i64, i64)]) -> QSet {
    let dim = bounds.len();
    let mut sys = LinearSystem::new(dim);
    for (i, &(lo, hi)) in bounds.iter().enumerate() {
        sys.push_weak(Vector::unit(dim, i), int(hi));
        sys.push_weak(Vector::unit(dim, i).neg(), int(-lo));
    }
    ConvexSet::from_system(sys)
}

pub fn unit_square() -> QSet {
    box_set(&[(0, 1), (0, 1)])
}

pub fn unit_cube() -> QSet {
    box_set(&[(0, 1), (0, 1), (0, 1)])
}

pub fn triangle() -> QSet {
    ConvexSet::from_system(
        LinearSystem::new(2)
            .weak_row(vec![int(-1), int(0)], int(0))
            .weak_row(vec![int(0), int(-1)], int(0))
            .weak_row(vec![int(1), int(1)], int(1)),
    )
}

pub fn diamond() -> QSet {
    ConvexSet::from_system(
        LinearSystem::new(2)
            .weak_row(vec![int(1), int(1)], int(1))
            .weak_row(vec![int(1), int(-1)], int(1))
            .weak_row(vec![int(-1), int(1)], int(1))
            .weak_row(vec![int(-1), int(-1)], int(1)),
    )
}

pub fn simplex3() -> QSet {
    ConvexSet::from_system(
        LinearSystem::new(3)
            .weak_row(vec![int(-1), int(0), int(0)], int(0))
            .weak_row(vec![int(0), int(-1), int(0)], int(0))
            .weak_row(vec![int(0), int(0), int(-1)], int(0))
            .weak_row(vec![int(1), int(1), int(1)], int(1)),
    )
}

/// `[0,1] × {0}` in the plane, written with a redundant inequality pair
/// so that implicit-equality detection has something to do.
pub fn embedded_segment() -> QSet {
    ConvexSet::from_system(
        LinearSystem::new(2)
            .weak_row(vec![int(1), int(0)], int(1))
            .weak_row(vec![int(-1), int(0)], int(0))
            .weak_row(vec![int(0), int(1)], int(0))
            .weak_row(vec![int(0), int(-1)], int(0)),
    )
}

/// The 25-set corpus behind the acceptance run: polytopes, cones and
/// degenerate lower-dimensional systems in dimensions 1 through 4.
pub fn corpus() -> Vec<(&'static str, QSet)> {
    // dimension 1
    let mut sets: Vec<(&'static str, QSet)> = vec![
        ("segment", box_set(&[(0, 1)])),
        (
            "point-1d",
            ConvexSet::from_system(LinearSystem::new(1).eq_row(vec![int(1)], int(2))),
        ),
    ];
    sets.push((
        "halfline",
        ConvexSet::from_generators(1, vec![v(&[0])], vec![v(&[1])]),
    ));
    sets.push((
        "wide-segment",
        ConvexSet::from_system(
            LinearSystem::new(1)
                .weak_row(vec![int(1)], int(2))
                .weak_row(vec![int(-1)], int(1))
                .weak_row(vec![int(2)], int(4)),
        ),
    ));
    sets.push(("line-1d", ConvexSet::from_system(LinearSystem::new(1))));
    // dimension 2
    sets.push(("square", unit_square()));
    sets.push((
        "square-v",
        ConvexSet::from_generators(
            2,
            vec![v(&[0, 0]), v(&[0, 1]), v(&[1, 0]), v(&[1, 1])],
            vec![],
        ),
    ));
    sets.push(("triangle", triangle()));
    sets.push(("diamond", diamond()));
    sets.push((
        "wedge-cone",
        ConvexSet::from_generators(2, vec![v(&[0, 0])], vec![v(&[1, 0]), v(&[1, 1])]),
    ));
    sets.push((
        "halfplane",
        ConvexSet::from_system(LinearSystem::new(2).weak_row(vec![int(0), int(-1)], int(0))),
    ));
    sets.push(("embedded-segment", embedded_segment()));
    sets.push((
        "strip",
        ConvexSet::from_system(
            LinearSystem::new(2)
                .weak_row(vec![int(0), int(1)], int(1))
                .weak_row(vec![int(0), int(-1)], int(0)),
        ),
    ));
    sets.push((
        "line-2d",
        ConvexSet::from_system(LinearSystem::new(2).eq_row(vec![int(0), int(1)], int(1))),
    ));
    sets.push((
        "point-2d",
        ConvexSet::from_generators(2, vec![vr(&[(1, 2), (1, 3)])], vec![]),
    ));
    sets.push((
        "shifted-triangle",
        ConvexSet::from_generators(2, vec![v(&[1, 1]), v(&[3, 1]), v(&[2, 3])], vec![]),
    ));
    // dimension 3
    sets.push(("cube", unit_cube()));
    sets.push(("simplex-3d", simplex3()));
    sets.push(("prism", triangle().product(&box_set(&[(0, 1)])).unwrap()));
    sets.push((
        "cone-over-square",
        ConvexSet::from_generators(
            3,
            vec![v(&[0, 0, 0])],
            vec![v(&[1, 0, 1]), v(&[0, 1, 1]), v(&[-1, 0, 1]), v(&[0, -1, 1])],
        ),
    ));
    sets.push((
        "face-plane",
        ConvexSet::from_system(
            LinearSystem::new(3)
                .weak_row(vec![int(1), int(0), int(0)], int(1))
                .weak_row(vec![int(-1), int(0), int(0)], int(0))
                .weak_row(vec![int(0), int(1), int(0)], int(1))
                .weak_row(vec![int(0), int(-1), int(0)], int(0))
                .eq_row(vec![int(0), int(0), int(1)], int(0)),
        ),
    ));
    sets.push((
        "octant",
        ConvexSet::from_system(
            LinearSystem::new(3)
                .weak_row(vec![int(-1), int(0), int(0)], int(0))
                .weak_row(vec![int(0), int(-1), int(0)], int(0))
                .weak_row(vec![int(0), int(0), int(-1)], int(0)),
        ),
    ));
    // dimension 4
    sets.push((
        "square-x-square",
        unit_square().product(&unit_square()).unwrap(),
    ));
    sets.push((
        "simplex-4d",
        ConvexSet::from_system(
            LinearSystem::new(4)
                .weak_row(vec![int(-1), int(0), int(0), int(0)], int(0))
                .weak_row(vec![int(0), int(-1), int(0), int(0)], int(0))
                .weak_row(vec![int(0), int(0), int(-1), int(0)], int(0))
                .weak_row(vec![int(0), int(0), int(0), int(-1)], int(0))
                .weak_row(vec![int(1), int(1), int(1), int(1)], int(1)),
        ),
    ));
    sets.push((
        "degenerate-4d",
        ConvexSet::from_system(
            LinearSystem::new(4)
                .weak_row(vec![int(1), int(0), int(0), int(0)], int(1))
                .weak_row(vec![int(-1), int(0), int(0), int(0)], int(0))
                .weak_row(vec![int(0), int(1), int(0), int(0)], int(0))
                .weak_row(vec![int(0), int(-1), int(0), int(0)], int(0))
                .eq_row(vec![int(0), int(0), int(1), int(1)], int(1)),
        ),
    ));
    sets.push((
        "cross-4d",
        ConvexSet::from_generators(
            4,
            vec![
                v(&[1, 0, 0, 0]),
                v(&[-1, 0, 0, 0]),
                v(&[0, 1, 0, 0]),
                v(&[0, -1, 0, 0]),
                v(&[0, 0, 1, 0]),
                v(&[0, 0, -1, 0]),
                v(&[0, 0, 0, 1]),
                v(&[0, 0, 0, -1]),
            ],
            vec![],
        ),
    ));
    assert!(sets.len() >= 25, "corpus must hold at least 25 sets");
    sets
}

/// The bounded low-dimensional subset of the corpus used for exhaustive
/// denominator-6 grid checks, with an integer box containing each set.
pub fn grid_corpus() -> Vec<(&'static str, QSet, (i64, i64))> {
    vec![
        ("segment", box_set(&[(0, 1)]), (0, 1)),
        ("wide-segment", box_set(&[(-1, 2)]), (-1, 2)),
        ("square", unit_square(), (0, 1)),
        ("triangle", triangle(), (0, 1)),
        ("diamond", diamond(), (-1, 1)),
        ("embedded-segment", embedded_segment(), (0, 1)),
        ("cube", unit_cube(), (0, 1)),
        ("simplex-3d", simplex3(), (0, 1)),
    ]
}

/// A random bounded polytope in V-form: `k` distinct points with
/// half-integer coordinates in `[lo, hi]`.
pub fn random_polytope(rng: &mut Lcg, dim: usize, k: usize, lo: i64, hi: i64) -> QSet {
    let mut points: Vec<QVec> = Vec::new();
    while points.len() < k {
        let p: QVec = rng.vector(dim, lo, hi, 2);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    ConvexSet::from_generators(dim, points, vec![])
}

/// Exact ray shooting from `w` through `x` in an H-form set without
/// strict rows: the supremum of `t ≥ 0` with `x + t(x−w)` feasible, as
/// `None` for (+∞). Both points must be members.
pub fn ray_extension(sys: &LinearSystem<Rat>, x: &QVec, w: &QVec) -> Option<Rat> {
    assert!(sys.strict.is_empty());
    let d = x.sub(w);
    let mut best: Option<Rat> = None;
    for row in &sys.eqs {
        if !row.coeffs.dot(&d).is_zero() {
            return Some(Rat::zero());
        }
    }
    for row in &sys.weak {
        let speed = row.coeffs.dot(&d);
        if speed.is_positive() {
            let slack = row.rhs.clone() - row.coeffs.dot(x);
            let t = slack / speed;
            best = Some(match best {
                None => t,
                Some(b) => b.min(t),
            });
        }
    }
    best
}

/// Does the maximal segment from `w` through `x` extend strictly past
/// `x` inside the set? (`w = x` counts via the degenerate segment.)
pub fn extends_beyond(sys: &LinearSystem<Rat>, x: &QVec, w: &QVec) -> bool {
    if x == w {
        return true;
    }
    match ray_extension(sys, x, w) {
        None => true,
        Some(t) => t.is_positive(),
    }
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin feasibility, the independent oracle for separation
// ---------------------------------------------------------------------------

/// One row `coeffs·x ≤ rhs` (or `<` when strict).
#[derive(Clone)]
pub struct FmRow {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
    pub strict: bool,
}

/// Decides `∃x` satisfying all rows by eliminating variables right to
/// left; exact, no simplex involved.
pub fn fm_feasible(mut rows: Vec<FmRow>, mut vars: usize) -> bool {
    while vars > 0 {
        let k = vars - 1;
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut rest = Vec::new();
        for row in rows {
            let c = row.coeffs[k].clone();
            if c.is_positive() {
                pos.push(row);
            } else if c.is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for p in &pos {
            for n in &neg {
                // scale p by −n_k and n by p_k, then add: coefficient at k cancels
                let a = p.coeffs[k].clone();
                let b = -n.coeffs[k].clone();
                let mut coeffs = Vec::with_capacity(k);
                for i in 0..k {
                    coeffs.push(p.coeffs[i].clone() * b.clone() + n.coeffs[i].clone() * a.clone());
                }
                rest.push(FmRow {
                    coeffs,
                    rhs: p.rhs.clone() * b + n.rhs.clone() * a,
                    strict: p.strict || n.strict,
                });
            }
        }
        for row in &mut rest {
            row.coeffs.truncate(k);
        }
        rows = rest;
        vars = k;
    }
    rows.iter().all(|row| {
        if row.strict {
            row.rhs.is_positive()
        } else {
            !row.rhs.is_negative()
        }
    })
}

/// Exhaustive proper-separation oracle in the plane: for each generator
/// of either polytope, search by Fourier–Motzkin for a separating
/// `(φ, α)` strict at that generator.
pub fn fm_properly_separable(a: &QSet, b: &QSet) -> bool {
    let va = a.to_vset().unwrap();
    let vb = b.to_vset().unwrap();
    assert!(va.rays().is_empty() && vb.rays().is_empty());
    let dim = va.dim();
    let vars = dim + 1; // (φ, α)
    let base: Vec<FmRow> = {
        let mut rows = Vec::new();
        for p in va.points() {
            let mut coeffs: Vec<Rat> = p.iter().cloned().collect();
            coeffs.push(-rat(1, 1));
            rows.push(FmRow {
                coeffs,
                rhs: Rat::zero(),
                strict: false,
            }); // φ·a − α ≤ 0
        }
        for q in vb.points() {
            let mut coeffs: Vec<Rat> = q.iter().map(|e| -e.clone()).collect();
            coeffs.push(rat(1, 1));
            rows.push(FmRow {
                coeffs,
                rhs: Rat::zero(),
                strict: false,
            }); // α − φ·b ≤ 0
        }
        rows
    };
    let strict_at = |point: &QVec, in_a: bool| -> FmRow {
        // φ·w < α (w ∈ A) or φ·w > α (w ∈ B)
        let sign: Rat = if in_a { rat(1, 1) } else { rat(-1, 1) };
        let mut coeffs: Vec<Rat> = point.iter().map(|e| sign.clone() * e.clone()).collect();
        coeffs.push(-sign);
        FmRow {
            coeffs,
            rhs: Rat::zero(),
            strict: true,
        }
    };
    for w in va.points() {
        let mut rows = base.clone();
        rows.push(strict_at(w, true));
        if fm_feasible(rows, vars) {
            return true;
        }
    }
    for w in vb.points() {
        let mut rows = base.clone();
        rows.push(strict_at(w, false));
        if fm_feasible(rows, vars) {
            return true;
        }
    }
    false
}
