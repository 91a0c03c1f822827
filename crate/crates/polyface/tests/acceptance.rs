//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the counts it actually verified. Everything is exact rational
//! arithmetic with fixed seeds; two consecutive runs produce identical
//! results bit for bit.

mod common;

use std::collections::BTreeSet;

use common::*;
use num_traits::Signed;
use polyface::cli;
use polyface::closure;
use polyface::exactla::{LinearSystem, Vector};
use polyface::faces::{self, FaceKind};
use polyface::icore::{self, CalcCheck, IcrMethod, SampleConfig};
use polyface::polyset::{ConvexSet, LinearMap};
use polyface::sample::{grid_members, sample_icr_members, sample_members, Lcg};
use polyface::scalar::{int, ratio};
use polyface::{Error, QSet, QVec, Rat};

fn ri_rows_of(set: &QSet) -> LinearSystem<Rat> {
    set.to_hset().unwrap().ri_system().unwrap()
}

/// Criterion 1: across a ≥25-set corpus and ≥500 (set, point) pairs the
/// four intrinsic-core membership routes agree with zero disagreements.
#[test]
fn criterion_1_four_definition_equivalence() {
    let corpus = corpus();
    assert!(corpus.len() >= 25);
    let mut rng = Lcg::new(0);
    let mut pairs = 0usize;
    for (name, set) in &corpus {
        let mut points =
            sample_members(set, 16, &mut rng).unwrap_or_else(|e| panic!("sampling {name}: {e}"));
        points.extend(sample_icr_members(set, 5, &mut rng).unwrap());
        for x in points {
            match icore::icr_contains(set, &x, IcrMethod::All) {
                Ok(_) => pairs += 1,
                Err(Error::MethodDisagreement { verdicts }) => {
                    panic!("criterion 1: methods disagree on {name} at {x:?}: {verdicts:?}")
                }
                Err(e) => panic!("criterion 1: {name} at {x:?}: {e}"),
            }
        }
    }
    assert!(pairs >= 500, "only {pairs} pairs checked");
    println!(
        "[PASS] criterion 1: four-definition equivalence on {} sets, {pairs} (set, point) pairs, zero disagreements",
        corpus.len()
    );
}

/// Criterion 2: on every denominator-6 grid point of the bounded corpus
/// polytopes, the active-set/generator minimal face equals the
/// brute-force union of maximal segments through the point.
#[test]
fn criterion_2_minimal_face_oracle() {
    let mut points_checked = 0usize;
    for (name, set, (lo, hi)) in grid_corpus() {
        let h = set.to_hset().unwrap();
        let grid = grid_members(&set, 6, lo, hi).unwrap();
        for x in &grid {
            let face = faces::minimal_face(&set, x).unwrap();
            for w in &grid {
                let in_face = face.contains_point(w).unwrap();
                let in_oracle = extends_beyond(h.system(), x, w);
                assert_eq!(
                    in_face, in_oracle,
                    "criterion 2: {name}: x={x:?}, w={w:?}: face={in_face} oracle={in_oracle}"
                );
            }
            points_checked += 1;
        }
    }
    println!(
        "[PASS] criterion 2: minimal-face segment-union oracle agrees on {points_checked} grid points"
    );
}

/// Criterion 3: face counts of the canonical polytopes and the maximal
/// chain length `intrinsic dim + 2` in each lattice.
#[test]
fn criterion_3_face_counts_and_chain_lengths() {
    let expectations: Vec<(&str, QSet, usize)> = vec![
        ("triangle", triangle(), 8),
        ("square", unit_square(), 10),
        ("cube", unit_cube(), 28),
    ];
    for (name, set, count) in &expectations {
        let lattice = faces::face_lattice(set).unwrap();
        assert_eq!(
            lattice.nodes().len(),
            *count,
            "criterion 3: {name} face count"
        );
    }
    // maximal chains have length d + 2 in every tested lattice
    let chain_sets: Vec<(&str, QSet)> = vec![
        ("triangle", triangle()),
        ("square", unit_square()),
        ("cube", unit_cube()),
        ("segment", box_set(&[(0, 1)])),
        ("embedded-segment", embedded_segment()),
        ("simplex-3d", simplex3()),
        (
            "point",
            ConvexSet::from_system(LinearSystem::new(1).eq_row(vec![int(1)], int(2))),
        ),
    ];
    for (name, set) in &chain_sets {
        let d = set.intrinsic_dim().unwrap();
        let lattice = faces::face_lattice(set).unwrap();
        let chains = lattice.maximal_chains();
        assert!(!chains.is_empty());
        for chain in &chains {
            assert_eq!(
                chain.len(),
                d + 2,
                "criterion 3: {name}: chain {chain:?} not of length {}",
                d + 2
            );
        }
    }
    println!(
        "[PASS] criterion 3: triangle=8, square=10, cube=28 faces; every maximal chain has length dim+2"
    );
}

/// Criterion 4: the relative interiors of the faces partition every grid
/// point of every bounded corpus polytope, and locate = minface.
#[test]
fn criterion_4_decomposition_partition() {
    let mut points_checked = 0usize;
    for (name, set, (lo, hi)) in grid_corpus() {
        let parts = icore::decompose(&set).unwrap();
        let ri_systems: Vec<LinearSystem<Rat>> = parts
            .iter()
            .map(|f| ri_rows_of(&f.as_convex_set().unwrap()))
            .collect();
        for x in grid_members(&set, 6, lo, hi).unwrap() {
            let holders: Vec<usize> = ri_systems
                .iter()
                .enumerate()
                .filter(|(_, sys)| sys.satisfied_by(&x))
                .map(|(i, _)| i)
                .collect();
            assert_eq!(
                holders.len(),
                1,
                "criterion 4: {name}: {x:?} lies in {} relative interiors",
                holders.len()
            );
            let located = icore::locate(&set, &x).unwrap();
            assert_eq!(
                located,
                faces::minimal_face(&set, &x).unwrap(),
                "criterion 4: locate != minface on {name} at {x:?}"
            );
            assert_eq!(
                &parts[holders[0]], &located,
                "criterion 4: {name}: partition face differs from locate at {x:?}"
            );
            points_checked += 1;
        }
    }
    println!(
        "[PASS] criterion 4: decomposition partitions {points_checked} grid points; locate = minface on all"
    );
}

/// Criterion 5: the intrinsic-core calculus laws hold on ≥10 operand
/// combinations each with ≥200 samples at seed 0, and the half-open
/// example reproduces `icr(C+D) = (0,1)×(0,1) ≠ C+D`.
#[test]
fn criterion_5_calculus_laws() {
    let config = SampleConfig {
        count: 200,
        seed: 0,
    };
    let mut rng = Lcg::new(7);
    let mut combos = 0usize;

    let mut run = |label: &str, check: CalcCheck<Rat>| {
        let verdict = icore::check_calculus(&check, &config)
            .unwrap_or_else(|e| panic!("criterion 5: {label}: {e}"));
        assert!(verdict.holds, "criterion 5: {label}: {verdict:?}");
        combos += 1;
    };

    // sums: random polytope pairs across dimensions, plus the half-open pair
    for i in 0..10 {
        let dim = 1 + i % 3;
        let a = random_polytope(&mut rng, dim, 2 + (i % 3), 0, 3);
        let b = random_polytope(&mut rng, dim, 2 + ((i + 1) % 3), -2, 2);
        run(&format!("sum #{i}"), CalcCheck::Sum(a, b));
    }
    let half_open = ConvexSet::from_system(
        LinearSystem::new(2)
            .strict_row(vec![int(1), int(0)], int(1))
            .strict_row(vec![int(-1), int(0)], int(0))
            .eq_row(vec![int(0), int(1)], int(0)),
    );
    let vertical = ConvexSet::from_generators(2, vec![v(&[0, 0]), v(&[0, 1])], vec![]);
    run(
        "sum half-open pair",
        CalcCheck::Sum(half_open.clone(), vertical.clone()),
    );

    // translates
    let translate_sets: Vec<(&str, QSet)> = vec![
        ("square", unit_square()),
        ("triangle", triangle()),
        ("diamond", diamond()),
        ("cube", unit_cube()),
        ("simplex", simplex3()),
        ("segment", box_set(&[(0, 1)])),
        ("embedded-segment", embedded_segment()),
        (
            "halfline",
            ConvexSet::from_generators(1, vec![v(&[0])], vec![v(&[1])]),
        ),
        (
            "wedge",
            ConvexSet::from_generators(2, vec![v(&[0, 0])], vec![v(&[1, 0]), v(&[1, 1])]),
        ),
        ("half-open", half_open.clone()),
    ];
    for (name, set) in translate_sets {
        let dim = set.dim();
        let t: QVec = rng.vector(dim, -2, 2, 3);
        run(&format!("translate {name}"), CalcCheck::Translate(set, t));
    }

    // scales with the stated factors
    for lambda in [int::<Rat>(-2), ratio(1, 3)] {
        for (name, set) in [
            ("square", unit_square()),
            ("triangle", triangle()),
            ("cube", unit_cube()),
            ("embedded-segment", embedded_segment()),
            ("half-open", half_open.clone()),
        ] {
            run(
                &format!("scale {name} by {lambda}"),
                CalcCheck::Scale(set, lambda.clone()),
            );
        }
    }

    // linear images: injective and non-injective with nonempty cores
    let maps: Vec<(&str, QSet, Vec<QVec>)> = vec![
        (
            "identity/square",
            unit_square(),
            vec![v(&[1, 0]), v(&[0, 1])],
        ),
        ("shear/square", unit_square(), vec![v(&[1, 1]), v(&[0, 1])]),
        ("embed/segment", box_set(&[(0, 1)]), vec![v(&[1]), v(&[2])]),
        ("project-x/square", unit_square(), vec![v(&[1, 0])]),
        ("project-y/triangle", triangle(), vec![v(&[0, 1])]),
        ("sum-map/diamond", diamond(), vec![v(&[1, 1])]),
        (
            "project-xy/cube",
            unit_cube(),
            vec![v(&[1, 0, 0]), v(&[0, 1, 0])],
        ),
        ("collapse/square", unit_square(), vec![v(&[0, 0])]),
        ("negate/segment", box_set(&[(0, 1)]), vec![v(&[-1])]),
        (
            "mix/simplex",
            simplex3(),
            vec![v(&[1, 1, 0]), v(&[0, 1, 1])],
        ),
    ];
    for (name, set, rows) in maps {
        let map = LinearMap::new(polyface::exactla::Matrix::from_rows(rows));
        run(
            &format!("linear-image {name}"),
            CalcCheck::LinearImage(set, map),
        );
    }

    // products staying at desk scale
    let seg = box_set(&[(0, 1)]);
    let product_pairs: Vec<(&str, QSet, QSet)> = vec![
        ("seg x seg", seg.clone(), seg.clone()),
        ("seg x square", seg.clone(), unit_square()),
        ("square x seg", unit_square(), seg.clone()),
        ("triangle x seg", triangle(), seg.clone()),
        ("seg x triangle", seg.clone(), triangle()),
        ("square x square", unit_square(), unit_square()),
        ("diamond x seg", diamond(), seg.clone()),
        ("seg x cube", seg.clone(), unit_cube()),
        ("triangle x square", triangle(), unit_square()),
        (
            "point x square",
            ConvexSet::from_system(LinearSystem::new(1).eq_row(vec![int(1)], int(2))),
            unit_square(),
        ),
    ];
    for (name, a, b) in product_pairs {
        run(&format!("product {name}"), CalcCheck::Product(a, b));
    }

    // positive hulls of origin-free polytopes
    let hull_sets: Vec<(&str, QSet)> = vec![
        (
            "offset-segment",
            ConvexSet::from_generators(2, vec![v(&[1, 1]), v(&[2, 1])], vec![]),
        ),
        (
            "simplex-face",
            ConvexSet::from_generators(2, vec![v(&[1, 0]), v(&[0, 1])], vec![]),
        ),
        (
            "lifted-point",
            ConvexSet::from_generators(2, vec![v(&[0, 1])], vec![]),
        ),
        ("shifted-triangle", {
            let t: QVec = v(&[1, 1]);
            triangle().translate(&t).unwrap()
        }),
        ("shifted-cube", {
            let t: QVec = v(&[1, 1, 1]);
            unit_cube().translate(&t).unwrap()
        }),
        ("far-segment", box_set(&[(1, 2)])),
        (
            "tilted",
            ConvexSet::from_generators(2, vec![v(&[1, 2]), v(&[2, 1]), v(&[2, 2])], vec![]),
        ),
        (
            "high-point",
            ConvexSet::from_generators(3, vec![v(&[1, 2, 3])], vec![]),
        ),
        (
            "offset-square",
            ConvexSet::from_generators(
                2,
                vec![v(&[1, 1]), v(&[2, 1]), v(&[1, 2]), v(&[2, 2])],
                vec![],
            ),
        ),
        (
            "3d-face",
            ConvexSet::from_generators(3, vec![v(&[1, 0, 1]), v(&[0, 1, 1])], vec![]),
        ),
    ];
    for (name, set) in hull_sets {
        run(
            &format!("positive-hull {name}"),
            CalcCheck::PositiveHull(set),
        );
    }

    // the half-open sum phenomenon: C + D is the half-open box
    // (0,1)×[0,1], equal to icr C + icr D only after shaving the
    // horizontal boundary: icr(C+D) is the open square, C+D is not
    let c_plus_d = ConvexSet::from_system(
        LinearSystem::new(2)
            .strict_row(vec![int(1), int(0)], int(1))
            .strict_row(vec![int(-1), int(0)], int(0))
            .weak_row(vec![int(0), int(1)], int(1))
            .weak_row(vec![int(0), int(-1)], int(0)),
    );
    let ri_cd = ri_rows_of(&c_plus_d);
    let ri_c = ri_rows_of(&half_open);
    let ri_d = ri_rows_of(&vertical);
    let mut sample_rng = Lcg::new(0);
    let mut icr_points = 0usize;
    for z in grid_members(&c_plus_d, 6, 0, 1).unwrap() {
        let in_icr = ri_cd.satisfied_by(&z);
        // icr(C+D) must be exactly the open square
        let open_square =
            z[0].is_positive() && z[0] < int(1) && z[1].is_positive() && z[1] < int(1);
        assert_eq!(in_icr, open_square, "criterion 5: icr(C+D) at {z:?}");
        if in_icr {
            icr_points += 1;
        }
    }
    // witness that C+D strictly exceeds its intrinsic core
    let boundary: QVec = vr(&[(1, 2), (0, 1)]);
    assert!(c_plus_d.contains(&boundary).unwrap());
    assert!(!ri_cd.satisfied_by(&boundary));
    // and that icr C + icr D matches icr(C+D) on sampled members
    for z in sample_icr_members(&c_plus_d, 40, &mut sample_rng).unwrap() {
        let mut joint = ri_c.clone();
        for row in ri_d.weak.iter() {
            joint.push_weak(row.coeffs.neg(), row.rhs.clone() - row.coeffs.dot(&z));
        }
        for row in ri_d.strict.iter() {
            joint.push_strict(row.coeffs.neg(), row.rhs.clone() - row.coeffs.dot(&z));
        }
        for row in ri_d.eqs.iter() {
            joint.push_eq(row.coeffs.neg(), row.rhs.clone() - row.coeffs.dot(&z));
        }
        assert!(
            polyface::exactla::strict_feasible(&joint)
                .unwrap()
                .is_some(),
            "criterion 5: {z:?} in icr(C+D) admits no split into icr C + icr D"
        );
    }
    assert!(icr_points > 0);

    println!(
        "[PASS] criterion 5: {combos} operand combinations hold at 200 samples, seed 0; icr(C+D) = (0,1)^2 ≠ C+D reproduced"
    );
}

/// Criterion 6: the closure/boundary relations on ten mixed strict/weak
/// sets, and faces of proper nonempty faces inside the linear boundary.
#[test]
fn criterion_6_closure_boundary_relations() {
    let mixed_sets: Vec<(&str, QSet)> = {
        let strict_square = ConvexSet::from_system(
            LinearSystem::new(2)
                .strict_row(vec![int(1), int(0)], int(1))
                .strict_row(vec![int(-1), int(0)], int(0))
                .strict_row(vec![int(0), int(1)], int(1))
                .strict_row(vec![int(0), int(-1)], int(0)),
        );
        vec![
            (
                "half-open-square",
                ConvexSet::from_system(
                    LinearSystem::new(2)
                        .weak_row(vec![int(1), int(0)], int(1))
                        .weak_row(vec![int(-1), int(0)], int(0))
                        .weak_row(vec![int(0), int(1)], int(1))
                        .strict_row(vec![int(0), int(-1)], int(0)),
                ),
            ),
            (
                "half-open-interval",
                ConvexSet::from_system(
                    LinearSystem::new(1)
                        .weak_row(vec![int(1)], int(1))
                        .strict_row(vec![int(-1)], int(0)),
                ),
            ),
            ("open-square", strict_square),
            (
                "open-segment-embedded",
                ConvexSet::from_system(
                    LinearSystem::new(2)
                        .strict_row(vec![int(1), int(0)], int(1))
                        .strict_row(vec![int(-1), int(0)], int(0))
                        .eq_row(vec![int(0), int(1)], int(0)),
                ),
            ),
            (
                "half-open-cube",
                ConvexSet::from_system(
                    LinearSystem::new(3)
                        .weak_row(vec![int(1), int(0), int(0)], int(1))
                        .weak_row(vec![int(-1), int(0), int(0)], int(0))
                        .weak_row(vec![int(0), int(1), int(0)], int(1))
                        .strict_row(vec![int(0), int(-1), int(0)], int(0))
                        .weak_row(vec![int(0), int(0), int(1)], int(1))
                        .strict_row(vec![int(0), int(0), int(-1)], int(0)),
                ),
            ),
            (
                "strict-triangle",
                ConvexSet::from_system(
                    LinearSystem::new(2)
                        .strict_row(vec![int(-1), int(0)], int(0))
                        .strict_row(vec![int(0), int(-1)], int(0))
                        .weak_row(vec![int(1), int(1)], int(1)),
                ),
            ),
            (
                "open-strip",
                ConvexSet::from_system(
                    LinearSystem::new(2)
                        .weak_row(vec![int(0), int(1)], int(1))
                        .strict_row(vec![int(0), int(-1)], int(0)),
                ),
            ),
            (
                "cut-wedge",
                ConvexSet::from_system(
                    LinearSystem::new(2)
                        .weak_row(vec![int(-1), int(0)], int(0))
                        .weak_row(vec![int(0), int(-1)], int(0))
                        .strict_row(vec![int(1), int(1)], int(2)),
                ),
            ),
            (
                "slab-with-plane",
                ConvexSet::from_system(
                    LinearSystem::new(3)
                        .strict_row(vec![int(1), int(0), int(0)], int(1))
                        .strict_row(vec![int(-1), int(0), int(0)], int(0))
                        .weak_row(vec![int(0), int(1), int(0)], int(1))
                        .weak_row(vec![int(0), int(-1), int(0)], int(0))
                        .eq_row(vec![int(0), int(0), int(1)], ratio(1, 2)),
                ),
            ),
            (
                "mixed-diamond",
                ConvexSet::from_system(
                    LinearSystem::new(2)
                        .weak_row(vec![int(1), int(1)], int(1))
                        .weak_row(vec![int(1), int(-1)], int(1))
                        .strict_row(vec![int(-1), int(1)], int(1))
                        .strict_row(vec![int(-1), int(-1)], int(1)),
                ),
            ),
        ]
    };
    assert_eq!(mixed_sets.len(), 10);
    let mut rng = Lcg::new(0);
    let mut samples_checked = 0usize;
    for (name, set) in &mixed_sets {
        let closure_set = closure::lin_closure(set).unwrap();
        let ri_closure = ri_rows_of(&closure_set);
        let mut samples = sample_members(&closure_set, 24, &mut rng).unwrap();
        samples.extend(sample_icr_members(set, 8, &mut rng).unwrap());

        for x in &samples {
            let in_lin = closure::lin_contains(set, x).unwrap();
            let in_set = set.contains(x).unwrap();
            let in_lbd = closure::lbd_contains(set, x).unwrap();
            let in_icr = in_lin && ri_closure.satisfied_by(x);
            assert!(in_lin, "criterion 6: {name}: sample outside closure");
            // the closure decomposes as lin C = C ∪ lbd C, and its
            // members split exactly between core and boundary
            assert!(
                in_set || in_lbd,
                "criterion 6 (closure decomposition): {name}: {x:?} in lin C but neither in C nor lbd C"
            );
            assert!(
                in_icr != in_lbd,
                "criterion 6 (core/boundary split): {name}: {x:?} icr/lbd overlap"
            );
            samples_checked += 1;
        }

        // C ⊆ lin icr C, and closing the set leaves the core unchanged
        let icr_set = icore::relative_interior(set).unwrap();
        let lin_of_icr = closure::lin_closure(&icr_set).unwrap();
        let ri_of_set = ri_rows_of(set);
        for x in sample_members(set, 16, &mut rng).unwrap() {
            assert!(
                lin_of_icr.contains(&x).unwrap(),
                "criterion 6 (core of closure): {name}: member {x:?} outside lin icr C"
            );
        }
        for x in &samples {
            assert_eq!(
                ri_closure.satisfied_by(x),
                ri_of_set.satisfied_by(x),
                "criterion 6 (core of closure): {name}: icr(lin C) != icr C at {x:?}"
            );
        }

        // aff C = aff lin C
        let (base_c, basis_c) = set.affine_hull().unwrap();
        let (base_l, basis_l) = closure_set.affine_hull().unwrap();
        assert_eq!(
            basis_c.len(),
            basis_l.len(),
            "criterion 6 (affine hull stability): {name}"
        );
        let mut all = basis_c.clone();
        all.push(base_c.sub(&base_l));
        all.extend(basis_l.iter().cloned());
        assert_eq!(
            polyface::exactla::rank_of(&all),
            basis_c.len(),
            "criterion 6 (affine hull stability): {name}: affine hulls differ"
        );

        // half-open segments from the core toward closure members stay
        // in the core
        for x in sample_icr_members(set, 4, &mut rng).unwrap() {
            for y in sample_members(&closure_set, 4, &mut rng).unwrap() {
                for k in 0..6 {
                    let t = ratio::<Rat>(k, 6);
                    let point = x.scale(&(int::<Rat>(1) - t.clone())).add(&y.scale(&t));
                    assert!(
                        ri_of_set.satisfied_by(&point),
                        "criterion 6 (half-open segment): {name}: [x,y) leaves the core at {point:?}"
                    );
                }
            }
        }
    }

    // proper nonempty faces lie inside the linear boundary
    let mut face_points = 0usize;
    for (name, set, _) in grid_corpus() {
        let lattice = faces::face_lattice(&set).unwrap();
        for (i, face) in lattice.nodes().iter().enumerate() {
            if face.is_empty_face() || i == lattice.top() {
                continue;
            }
            let mut pts = vec![face.ri_point().unwrap()];
            if let Ok(face_set) = face.as_convex_set() {
                if let Ok(vform) = face_set.to_vset() {
                    pts.extend(vform.points().iter().cloned());
                }
            }
            for p in pts {
                assert!(
                    closure::lbd_contains(&set, &p).unwrap(),
                    "criterion 6 (faces in boundary): {name}: face point {p:?} not in lbd"
                );
                face_points += 1;
            }
        }
    }

    println!(
        "[PASS] criterion 6: closure/boundary relations on 10 mixed sets ({samples_checked} samples); {face_points} proper-face points in lbd"
    );
}

/// Criterion 7: separation certificates for 100 random disjoint-core
/// polytope pairs re-verify and agree with the Fourier–Motzkin oracle;
/// overlapping pairs agree on non-separability; the touching case gives
/// a proper certificate with sup_A φ = inf_B φ.
#[test]
fn criterion_7_separation_certificates() {
    let mut rng = Lcg::new(0);
    let mut disjoint = 0usize;
    let mut overlapping = 0usize;
    while disjoint < 100 {
        let ka = 2 + rng.below(3) as usize;
        let a = random_polytope(&mut rng, 2, ka, 0, 3);
        let dx = 2 + rng.below(4) as i64;
        let kb = 2 + rng.below(3) as usize;
        let b = {
            let base = random_polytope(&mut rng, 2, kb, 0, 3);
            let t: QVec = v(&[dx, 0]);
            base.translate(&t).unwrap()
        };
        match closure::properly_separate(&a, &b) {
            Ok(cert) => {
                assert!(
                    cert.verify(&a, &b).unwrap(),
                    "criterion 7: certificate fails re-verification"
                );
                assert!(
                    fm_properly_separable(&a, &b),
                    "criterion 7: oracle disagrees on a separable pair"
                );
                disjoint += 1;
            }
            Err(Error::OverlappingInteriors) => {
                assert!(
                    !fm_properly_separable(&a, &b),
                    "criterion 7: oracle separates an overlapping-core pair"
                );
                overlapping += 1;
            }
            Err(e) => panic!("criterion 7: unexpected error {e}"),
        }
    }
    // deliberately overlapping pairs: both routes must refuse
    for i in 0..10 {
        let ka = 3 + rng.below(3) as usize;
        let a = random_polytope(&mut rng, 2, ka, 0, 3);
        let kb = 3 + rng.below(3) as usize;
        let b = random_polytope(&mut rng, 2, kb, 0, 3);
        match closure::properly_separate(&a, &b) {
            Err(Error::OverlappingInteriors) => {
                assert!(
                    !fm_properly_separable(&a, &b),
                    "criterion 7: oracle separates overlapping pair #{i}"
                );
                overlapping += 1;
            }
            Ok(cert) => {
                assert!(cert.verify(&a, &b).unwrap());
                assert!(fm_properly_separable(&a, &b));
            }
            Err(e) => panic!("criterion 7: unexpected error {e}"),
        }
    }

    // the touching case: A = [0,1]×{0}, B = [0,1]²
    let a = ConvexSet::from_generators(2, vec![v(&[0, 0]), v(&[1, 0])], vec![]);
    let b = unit_square();
    let cert = closure::properly_separate(&a, &b).unwrap();
    assert!(cert.verify(&a, &b).unwrap());
    let sup_a = a
        .to_vset()
        .unwrap()
        .points()
        .iter()
        .map(|p| cert.phi.dot(p))
        .max()
        .unwrap();
    let inf_b = b
        .to_vset()
        .unwrap()
        .points()
        .iter()
        .map(|p| cert.phi.dot(p))
        .min()
        .unwrap();
    assert_eq!(sup_a, inf_b, "criterion 7: touching case must be tight");
    assert_eq!(sup_a, cert.alpha);

    println!(
        "[PASS] criterion 7: 100 disjoint-core pairs certified and oracle-confirmed ({overlapping} overlapping pairs agreed); touching case tight"
    );
}

/// Criterion 8: gallery witnesses re-verify on random inputs; chain gaps
/// always verify for nested chains up to length 10; window truncations
/// agree with the polyhedral modules.
#[test]
fn criterion_8_gallery_witnesses() {
    use polyface::seqgallery::*;
    let mut rng = Lcg::new(0);

    let random_box_seq = |rng: &mut Lcg| -> FinSeq<Rat> {
        let n = rng.below(5) as usize;
        let mut pairs = Vec::new();
        for _ in 0..n {
            let idx = 1 + rng.below(8) as usize;
            let val: Rat = rng.rational(0, 1, 6);
            pairs.push((idx, val));
        }
        FinSeq::new(pairs)
    };
    let mut checked = 0usize;
    while checked < 50 {
        let x = random_box_seq(&mut rng);
        if !box_contains(&x) {
            continue;
        }
        let w = box_empty_icr_witness(&x).unwrap();
        assert!(w.verify(), "criterion 8: box witness fails for {x:?}");
        checked += 1;
    }

    let mut ubiq_checked = 0usize;
    while ubiq_checked < 50 {
        let n = rng.below(4) as usize;
        let mut pairs: Vec<(usize, Rat)> = Vec::new();
        for _ in 0..n {
            let idx = 1 + rng.below(6) as usize;
            let val: Rat = rng.rational(-2, 2, 3);
            pairs.push((idx, val));
        }
        let x = FinSeq::new(pairs);
        let lin = ubiq_lin_witness(&x);
        assert!(
            lin.verify(),
            "criterion 8: ubiq lin witness fails for {x:?}"
        );
        if ubiq_contains(&x) {
            let w = ubiq_not_icr_witness(&x).unwrap();
            assert!(w.verify(), "criterion 8: ubiq core witness fails for {x:?}");
        }
        ubiq_checked += 1;
    }

    // nested chains of length up to 10 always yield a verified gap
    for len in 1..=10usize {
        let mut chain: Vec<BTreeSet<usize>> = Vec::new();
        let mut current = BTreeSet::new();
        for step in 0..len {
            current.insert(1 + (step * 2) % 11);
            chain.push(current.clone());
        }
        let w = orthant_chain_gap::<Rat>(&chain).unwrap();
        assert!(w.verify(), "criterion 8: chain gap fails at length {len}");
    }

    // truncation consistency on windows of size ≤ 5
    let mut window_points = 0usize;
    for window in 1..=5usize {
        let cube = box_set(&(0..window).map(|_| (0, 1)).collect::<Vec<_>>());
        let orthant = {
            let mut sys = LinearSystem::new(window);
            for i in 0..window {
                sys.push_weak(Vector::unit(window, i).neg(), int(0));
            }
            ConvexSet::from_system(sys)
        };
        // every denominator-3 grid sequence inside the window
        for p in polyface::sample::grid_points::<Rat>(window, 3, 0, 1) {
            let seq = FinSeq::new(
                p.iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, v)| (i + 1, v))
                    .collect(),
            );
            assert_eq!(
                box_contains(&seq),
                cube.contains(&p).unwrap(),
                "criterion 8: box vs cube membership at {p:?}"
            );
            if box_contains(&seq) {
                let bf = box_minimal_face(&seq).unwrap();
                let pf = faces::minimal_face(&cube, &p).unwrap();
                let FaceKind::ActiveSet(active) = pf.kind() else {
                    panic!("H-form parent gives active sets")
                };
                // cube rows come in (upper, lower) pairs per axis
                let mut expected = BTreeSet::new();
                for i in 0..window {
                    let idx = i + 1;
                    if bf.ones.contains(&idx) {
                        expected.insert(2 * i);
                    } else if !bf.free.contains(&idx) {
                        expected.insert(2 * i + 1);
                    }
                }
                assert_eq!(
                    active, &expected,
                    "criterion 8: box face mismatch at {seq:?}"
                );
                window_points += 1;
            }
        }
        for p in polyface::sample::grid_points::<Rat>(window, 2, -1, 1) {
            let seq = FinSeq::new(
                p.iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, v)| (i + 1, v))
                    .collect(),
            );
            assert_eq!(
                orthant_contains(&seq),
                orthant.contains(&p).unwrap(),
                "criterion 8: orthant membership at {p:?}"
            );
            if orthant_contains(&seq) {
                let support = orthant_minimal_face(&seq).unwrap();
                let pf = faces::minimal_face(&orthant, &p).unwrap();
                let FaceKind::ActiveSet(active) = pf.kind() else {
                    panic!("H-form parent gives active sets")
                };
                let expected: BTreeSet<usize> = (0..window)
                    .filter(|i| !support.contains(&(i + 1)))
                    .collect();
                assert_eq!(active, &expected, "criterion 8: orthant face at {seq:?}");
            }
            // the ubiquitous set truncates to a union of strict systems,
            // one per possible leading index
            let in_union = (1..=window).any(|m| {
                let mut sys = LinearSystem::new(window);
                sys.push_strict(Vector::unit(window, m - 1).neg(), int(0));
                for j in m..window {
                    sys.push_eq(Vector::unit(window, j), int(0));
                }
                sys.satisfied_by(&p)
            });
            assert_eq!(
                ubiq_contains(&seq),
                in_union,
                "criterion 8: ubiquitous membership at {p:?}"
            );
        }
    }

    println!(
        "[PASS] criterion 8: 50 box + 50 ubiquitous witnesses re-verified; chain gaps to length 10; truncation windows ≤ 5 agree ({window_points} box faces compared)"
    );
}

/// Criterion 9: a full battery of CLI invocations is byte-identical
/// across two consecutive runs.
#[test]
fn criterion_9_cli_determinism() {
    let dir = std::env::temp_dir().join("polyface-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, content: &str| -> String {
        let path = dir.join(name);
        std::fs::write(&path, content).unwrap();
        path.to_str().unwrap().to_string()
    };
    let square = write(
        "square.json",
        r#"{"type":"hset","dim":2,"ineqs":[
            {"a":["1","0"],"b":"1","strict":false},
            {"a":["-1","0"],"b":"0","strict":false},
            {"a":["0","1"],"b":"1","strict":false},
            {"a":["0","-1"],"b":"0","strict":false}],"eqs":[]}"#,
    );
    let strip = write(
        "strip.json",
        r#"{"type":"hset","dim":2,"ineqs":[
            {"a":["1","0"],"b":"1","strict":false},
            {"a":["-1","0"],"b":"0","strict":false},
            {"a":["0","1"],"b":"1","strict":false},
            {"a":["0","-1"],"b":"0","strict":true}],"eqs":[]}"#,
    );
    let far = write(
        "far.json",
        r#"{"type":"vset","dim":2,"points":[["2","0"],["3","0"],["2","1"],["3","1"]],"rays":[]}"#,
    );
    let flat = write(
        "flat.json",
        r#"{"type":"vset","dim":2,"points":[["0","0"],["1","0"]],"rays":[]}"#,
    );
    let dot_a = dir.join("lattice-a.dot");
    let dot_b = dir.join("lattice-b.dot");

    let batteries: Vec<Vec<String>> = vec![
        vec!["minface", "--set", &square, "--point", "1/2,0"],
        vec!["minface", "--set", &square, "--point", "1/2,0", "--json"],
        vec![
            "icr-test", "--set", &square, "--point", "1/2,0", "--method", "all",
        ],
        vec!["icr-test", "--set", &square, "--point", "1/2,1/2"],
        vec!["ri", "--set", &strip, "--json"],
        vec!["chains", "--set", &square],
        vec!["decompose", "--set", &square, "--json"],
        vec!["locate", "--set", &square, "--point", "0,0", "--json"],
        vec!["separate", "--a", &square, "--b", &far, "--json"],
        vec!["separate", "--a", &flat, "--b", &square, "--json"],
        vec!["support", "--set", &square, "--point", "1/2,0", "--json"],
        vec![
            "check",
            "--law",
            "sum",
            "--set",
            &square,
            "--other",
            &flat,
            "--samples",
            "60",
            "--seed",
            "0",
        ],
        vec![
            "check",
            "--law",
            "scale",
            "--set",
            &square,
            "--lambda",
            "-2",
            "--samples",
            "60",
        ],
        vec![
            "check",
            "--law",
            "positive-hull",
            "--set",
            &far,
            "--samples",
            "60",
            "--json",
        ],
        vec!["gallery", "box-minface", "--point", "1:1,2:1/2"],
        vec!["gallery", "box-empty-icr", "--point", "5:1"],
        vec![
            "gallery",
            "cube-chain",
            "--thresholds",
            "1/2,3/2",
            "--prefix",
            "8",
        ],
        vec!["gallery", "ubiq-not-icr", "--point", "1:-5,3:2"],
        vec!["gallery", "ubiq-lin", "--point", "2:-1"],
        vec!["gallery", "orthant-chain-gap", "--chain", "1;1,2;1,2,3"],
    ]
    .into_iter()
    .map(|args| args.into_iter().map(String::from).collect())
    .collect();

    let run_battery = |dot: &std::path::Path| -> Vec<(i32, String, String)> {
        let mut results = Vec::new();
        for args in &batteries {
            let out = cli::run(args);
            results.push((out.code, out.stdout, out.stderr));
        }
        let lattice_args: Vec<String> = [
            "lattice",
            "--set",
            &square,
            "--dot",
            dot.to_str().unwrap(),
            "--json",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        let out = cli::run(&lattice_args);
        results.push((out.code, out.stdout, out.stderr));
        results
    };

    let first = run_battery(&dot_a);
    let second = run_battery(&dot_b);
    assert_eq!(
        first, second,
        "criterion 9: CLI outputs drifted between runs"
    );
    assert_eq!(
        std::fs::read(&dot_a).unwrap(),
        std::fs::read(&dot_b).unwrap(),
        "criterion 9: DOT output drifted"
    );
    // every JSON answer reparses
    for (code, stdout, _) in &first {
        if stdout.trim_start().starts_with('{') {
            serde_json::from_str::<serde_json::Value>(stdout)
                .unwrap_or_else(|e| panic!("criterion 9: unparseable JSON ({code}): {e}"));
        }
    }
    println!(
        "[PASS] criterion 9: {} CLI invocations byte-identical across two runs",
        first.len()
    );
}
