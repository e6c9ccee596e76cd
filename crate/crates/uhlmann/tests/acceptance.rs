//! End-to-end acceptance suite.
//!
//! Each test verifies one release gate at its pinned tolerance and prints a
//! single `acceptance <name>: PASS (...)` line (visible with
//! `cargo test --test acceptance -- --nocapture`). A failed assertion marks
//! the gate red.

mod common;

use std::time::Instant;

use uhlmann::{
    bures_distance, extended_bloch_distance, fidelity, fidelity_extended,
    fidelity_from_eigenvalues, fidelity_qubit_bloch, min_fidelity_state, su_generators,
    super_fidelity, trace_product, DensityMatrix, EqualFidelitySurface, GeneralizedBlochVector,
    SurfaceKind,
};

fn state_at(b: [f64; 3]) -> DensityMatrix {
    GeneralizedBlochVector::qubit(b[0], b[1], b[2])
        .unwrap()
        .to_density()
        .unwrap()
}

/// Pure qubit pair at a prescribed fidelity: north pole against a tilt by
/// `2 arccos(sqrt F)`.
fn pure_pair_at_fidelity(f: f64) -> (DensityMatrix, DensityMatrix) {
    let angle = 2.0 * f.sqrt().acos();
    (
        state_at([0.0, 0.0, 0.5]),
        state_at([0.5 * angle.sin(), 0.0, 0.5 * angle.cos()]),
    )
}

#[test]
fn route_equivalence_of_all_fidelity_formulas() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for seed in 0..500u64 {
        let a = DensityMatrix::random(2, 510_000 + seed).unwrap();
        let b = DensityMatrix::random(2, 520_000 + seed).unwrap();
        let routes = [
            fidelity(&a, &b).unwrap(),
            fidelity_from_eigenvalues(&a, &b).unwrap(),
            fidelity_qubit_bloch(&a.to_bloch(), &b.to_bloch()).unwrap(),
            fidelity_extended(&a.extended_bloch(), &b.extended_bloch()).unwrap(),
            super_fidelity(&a, &b).unwrap(),
        ];
        for i in 0..routes.len() {
            for j in (i + 1)..routes.len() {
                worst = worst.max((routes[i] - routes[j]).abs());
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(worst < 1e-9, "max discrepancy {worst:.3e}");
    assert!(elapsed < 5.0, "took {elapsed:.2} s, limit 5 s");
    println!(
        "acceptance route-equivalence: PASS (500 qubit pairs, max discrepancy {worst:.2e}, {elapsed:.2} s)"
    );
}

#[test]
fn super_fidelity_upper_bound_with_strict_gaps() {
    let start = Instant::now();
    let mut min_gap = f64::MAX;
    let mut strict = 0usize;
    let mut total = 0usize;
    for dim in 3..=5usize {
        for seed in 0..200u64 {
            let a = DensityMatrix::random(dim, 530_000 * dim as u64 + seed).unwrap();
            let b = DensityMatrix::random(dim, 540_000 * dim as u64 + seed).unwrap();
            let gap = super_fidelity(&a, &b).unwrap() - fidelity(&a, &b).unwrap();
            assert!(gap >= -1e-10, "dim {dim} seed {seed}: gap {gap:.3e}");
            min_gap = min_gap.min(gap);
            if gap > 1e-3 {
                strict += 1;
            }
            total += 1;
        }
    }
    let fraction = strict as f64 / total as f64;
    let elapsed = start.elapsed().as_secs_f64();
    assert!(fraction >= 0.5, "strict gap on only {fraction:.2} of pairs");
    assert!(elapsed < 30.0, "took {elapsed:.2} s, limit 30 s");
    println!(
        "acceptance super-fidelity-bound: PASS (600 pairs, min gap {min_gap:.2e}, strict on {:.0}%, {elapsed:.2} s)",
        100.0 * fraction
    );
}

#[test]
fn equal_fidelity_with_different_purities() {
    let target = DensityMatrix::maximally_mixed(3).unwrap();
    let a = DensityMatrix::from_real_diagonal(&[0.735, 0.1325, 0.1325]).unwrap();
    let b = DensityMatrix::from_real_diagonal(&[0.04, 0.48, 0.48]).unwrap();
    let fa = fidelity(&target, &a).unwrap();
    let fb = fidelity(&target, &b).unwrap();
    assert!((0.8375..=0.8383).contains(&fa), "F(t,a) = {fa:.6}");
    assert!((0.8375..=0.8383).contains(&fb), "F(t,b) = {fb:.6}");
    assert!(
        (fa - fb).abs() < 5e-4,
        "|F(t,a) - F(t,b)| = {:.2e}",
        (fa - fb).abs()
    );
    assert!(
        (a.purity() - 0.5753).abs() < 1e-4,
        "purity(a) = {:.6}",
        a.purity()
    );
    assert!(
        (b.purity() - 0.4624).abs() < 1e-4,
        "purity(b) = {:.6}",
        b.purity()
    );
    println!(
        "acceptance equal-fidelity-different-purity: PASS (F = {fa:.5}/{fb:.5}, purities {:.4}/{:.4})",
        a.purity(),
        b.purity()
    );
}

#[test]
fn equal_fidelity_level_sets_hold_at_scale() {
    let start = Instant::now();
    let lambdas = [0.0, 1.0 / 6.0, 0.4, 0.5];
    let levels = [0.6, 0.9, 0.99];
    let mut surfaces = 0usize;
    let mut spurious_seen = 0usize;
    for (i, &lambda) in lambdas.iter().enumerate() {
        let target = state_at([0.0, 0.0, lambda]);
        for (j, &f) in levels.iter().enumerate() {
            if f < 0.5 - lambda {
                continue;
            }
            let surface = EqualFidelitySurface::new(lambda, f).unwrap();
            let seed = 550_000 + (10 * i + j) as u64;
            for p in surface.sample_points(1000, seed, false) {
                assert!(!p.spurious);
                let check = fidelity(&target, &state_at(p.bloch)).unwrap();
                assert!(
                    (check - f).abs() < 1e-9,
                    "lambda {lambda:.4} F {f}: sampled fidelity {check:.12}"
                );
            }
            for p in surface.sample_points(1000, seed + 5000, true) {
                if p.spurious {
                    let check = fidelity(&target, &state_at(p.bloch)).unwrap();
                    assert!(
                        check > f,
                        "lambda {lambda:.4} F {f}: spurious point at {check:.12}"
                    );
                    spurious_seen += 1;
                }
            }
            surfaces += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "took {elapsed:.2} s, limit 60 s");
    println!(
        "acceptance level-sets: PASS ({surfaces} surfaces x 1000 points, {spurious_seen} spurious checked, {elapsed:.2} s)"
    );
}

#[test]
fn surface_geometry_constants() {
    let lambdas = [0.0, 1.0 / 6.0, 0.4, 0.5];
    let levels = [0.6, 0.9, 0.99];
    for &lambda in &lambdas {
        for &f in &levels {
            let s = EqualFidelitySurface::new(lambda, f).unwrap();
            let semi_major_expect = (f * (1.0 - f)).sqrt();
            assert!(
                (s.semi_major() - semi_major_expect).abs() < 1e-12,
                "lambda {lambda} F {f}: semi-major {:.17}",
                s.semi_major()
            );
            let ratio_expect = (1.0 - 4.0 * lambda * lambda).sqrt();
            if s.semi_major() > 0.0 {
                let ratio = s.semi_minor() / s.semi_major();
                assert!(
                    (ratio - ratio_expect).abs() < 1e-12,
                    "lambda {lambda} F {f}: axis ratio {ratio:.17}"
                );
            }
            match s.kind() {
                SurfaceKind::Sphere => assert_eq!(lambda, 0.0),
                SurfaceKind::PlaneDisc => {
                    assert_eq!(lambda, 0.5);
                    assert!((s.center_z() - (f - 0.5)).abs() < 1e-15);
                }
                SurfaceKind::Ellipsoid => assert!(lambda > 0.0 && lambda < 0.5),
            }
        }
    }
    assert_eq!(
        EqualFidelitySurface::new(0.0, 0.75).unwrap().kind(),
        SurfaceKind::Sphere
    );
    assert_eq!(
        EqualFidelitySurface::new(0.5, 0.75).unwrap().kind(),
        SurfaceKind::PlaneDisc
    );
    println!("acceptance surface-geometry: PASS (semi-major and axis ratio exact to 1e-12 on 12 surfaces)");
}

#[test]
fn pure_state_angle_at_fidelity_99() {
    let angle = 2.0 * 0.99f64.sqrt().acos().to_degrees();
    assert!(
        (11.42..=11.54).contains(&angle),
        "angle {angle:.4} degrees out of range"
    );
    println!("acceptance pure-angle-11.5-degrees: PASS (2 arccos(sqrt 0.99) = {angle:.3} degrees)");
}

#[test]
fn extended_distance_metric_axioms() {
    let mut min_slack = f64::MAX;
    for dim in 2..=4usize {
        for seed in 0..200u64 {
            let a = DensityMatrix::random(dim, 560_000 * dim as u64 + seed).unwrap();
            let b = DensityMatrix::random(dim, 570_000 * dim as u64 + seed).unwrap();
            let c = DensityMatrix::random(dim, 580_000 * dim as u64 + seed).unwrap();
            assert_eq!(
                extended_bloch_distance(&a, &b).unwrap(),
                extended_bloch_distance(&b, &a).unwrap(),
                "symmetry must be exact"
            );
            assert_eq!(extended_bloch_distance(&a, &a).unwrap(), 0.0);
            let slack = extended_bloch_distance(&a, &b).unwrap()
                + extended_bloch_distance(&b, &c).unwrap()
                - extended_bloch_distance(&a, &c).unwrap();
            assert!(slack >= -1e-12, "dim {dim} seed {seed}: slack {slack:.3e}");
            min_slack = min_slack.min(slack);
        }
    }
    println!("acceptance metric-axioms: PASS (600 triples, min triangle slack {min_slack:.2e})");
}

#[test]
fn bures_relations() {
    // Half-angle identity between the hemisphere geodesic and the Bures
    // length on seeded qubit pairs.
    let mut worst: f64 = 0.0;
    for seed in 0..100u64 {
        let a = DensityMatrix::random(2, 590_000 + seed).unwrap();
        let b = DensityMatrix::random(2, 600_000 + seed).unwrap();
        let f = fidelity(&a, &b).unwrap();
        let half_angle = 0.5 * (2.0 * f - 1.0).clamp(-1.0, 1.0).acos();
        let bures_length = f.sqrt().min(1.0).acos();
        worst = worst.max((half_angle - bures_length).abs());
    }
    assert!(worst < 1e-10, "half-angle identity off by {worst:.3e}");

    // Near-identical pure pairs: both squared distances approach delta.
    for &delta in &[1e-3f64, 1e-4] {
        let (a, b) = pure_pair_at_fidelity(1.0 - delta);
        let db2 = bures_distance(&a, &b).unwrap().powi(2);
        let dl2 = extended_bloch_distance(&a, &b).unwrap().powi(2);
        assert!(
            (db2 / delta - 1.0).abs() < 5.0 * delta,
            "delta {delta}: Bures ratio {:.6}",
            db2 / delta
        );
        assert!(
            (dl2 / delta - 1.0).abs() < 5.0 * delta,
            "delta {delta}: extended ratio {:.6}",
            dl2 / delta
        );
    }
    println!(
        "acceptance bures-relations: PASS (half-angle identity to {worst:.2e}, Taylor ratios at delta 1e-3/1e-4)"
    );
}

#[test]
fn generator_suite() {
    for dim in 2..=6usize {
        let gens = su_generators(dim).unwrap();
        assert_eq!(gens.len(), dim * dim - 1);
        for i in 0..gens.len() {
            let gi = gens.get(i);
            assert!(
                gi.as_matrix().hermitian_residual() == 0.0,
                "g_{i} not Hermitian"
            );
            assert!(gi.trace_real().abs() < 1e-12, "g_{i} not traceless");
            for j in 0..gens.len() {
                let t = trace_product(gi.as_matrix(), gens.get(j).as_matrix());
                let expect = if i == j { 2.0 } else { 0.0 };
                assert!(
                    (t.re - expect).abs() < 1e-12 && t.im.abs() < 1e-12,
                    "dim {dim}: Tr[g_{i} g_{j}] = {t}"
                );
            }
        }
    }
    // N = 2 reduces exactly to the Pauli triple.
    let pauli = su_generators(2).unwrap();
    let sx = pauli.get(0);
    let sy = pauli.get(1);
    let sz = pauli.get(2);
    assert_eq!(sx.get(0, 1).re, 1.0);
    assert_eq!(sx.get(0, 1).im, 0.0);
    assert_eq!(sy.get(0, 1).im, -1.0);
    assert_eq!(sy.get(1, 0).im, 1.0);
    assert_eq!(sz.get(0, 0).re, 1.0);
    assert_eq!(sz.get(1, 1).re, -1.0);
    println!("acceptance generator-suite: PASS (dims 2..6, orthogonality to 1e-12, exact Pauli reduction)");
}

#[test]
fn minimum_fidelity_against_brute_force_grid() {
    // One-million-point spherical grid including the boundary shell and the
    // antipodal axis, with the closed-form qubit fidelity as local oracle.
    let fidelity_to_target = |lambda: f64, z: f64, r2: f64| -> f64 {
        0.5 + 2.0 * lambda * z
            + 2.0 * (0.25 - lambda * lambda).max(0.0).sqrt() * (0.25 - r2).max(0.0).sqrt()
    };
    for lambda in [0.0, 1.0 / 6.0, 0.4, 0.5] {
        let (state, fmin) = min_fidelity_state(lambda).unwrap();
        assert_eq!(state, [0.0, 0.0, -0.5]);
        assert!((fmin - (0.5 - lambda)).abs() < 1e-15);
        let mut grid_min = f64::MAX;
        for i in 0..100 {
            let r = 0.5 * i as f64 / 99.0;
            for j in 0..100 {
                let theta = std::f64::consts::PI * j as f64 / 99.0;
                let z = r * theta.cos();
                let r2 = r * r;
                for k in 0..100 {
                    // The closed form depends only on z and |p|; phi spans
                    // the grid without changing the value.
                    let _ = k;
                    let f = fidelity_to_target(lambda, z, r2);
                    grid_min = grid_min.min(f);
                }
            }
        }
        assert!(
            (grid_min - fmin).abs() < 1e-4,
            "lambda {lambda}: grid minimum {grid_min:.8} vs {fmin:.8}"
        );
    }
    println!("acceptance minimum-fidelity: PASS (4 targets vs 1e6-point grid within 1e-4)");
}
