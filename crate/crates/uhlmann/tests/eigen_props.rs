//! Eigensolver properties checked against independent oracles.
//!
//! The headline check pits the Jacobi solver against a characteristic-
//! polynomial oracle: coefficients from the Faddeev-LeVerrier recurrence,
//! roots by sign-change scan plus bisection. The two share no code beyond
//! matrix multiplication.

mod common;

use common::random_hermitian;
use uhlmann::{ComplexMatrix, DensityMatrix, HermitianMatrix};

/// Coefficients of the monic characteristic polynomial
/// `x^n + c[0] x^(n-1) + ... + c[n-1]` via Faddeev-LeVerrier.
fn characteristic_polynomial(h: &HermitianMatrix) -> Vec<f64> {
    let n = h.dim();
    let a = h.as_matrix();
    let mut coeffs = Vec::with_capacity(n);
    let mut m = a.clone();
    for k in 1..=n {
        let ck = -m.trace().re / k as f64;
        coeffs.push(ck);
        if k < n {
            let shifted = m.add(&ComplexMatrix::identity(n).scale(ck));
            m = a.mul(&shifted);
        }
    }
    coeffs
}

fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    let mut value = 1.0;
    for &c in coeffs {
        value = value * x + c;
    }
    value
}

/// All real roots of the characteristic polynomial of a Hermitian matrix,
/// ascending: Gershgorin bounds, sign-change scan, bisection.
fn characteristic_roots(h: &HermitianMatrix) -> Vec<f64> {
    let n = h.dim();
    let coeffs = characteristic_polynomial(h);

    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let mut radius = 0.0;
        for j in 0..n {
            if j != i {
                radius += h.get(i, j).norm();
            }
        }
        lo = lo.min(h.get(i, i).re - radius);
        hi = hi.max(h.get(i, i).re + radius);
    }
    lo -= 1e-6;
    hi += 1e-6;

    let steps = 200_000;
    let dx = (hi - lo) / steps as f64;
    let mut roots = Vec::new();
    let mut prev_x = lo;
    let mut prev_v = eval_poly(&coeffs, lo);
    for i in 1..=steps {
        let x = lo + dx * i as f64;
        let v = eval_poly(&coeffs, x);
        if prev_v == 0.0 {
            roots.push(prev_x);
        } else if prev_v * v < 0.0 {
            let (mut a, mut b) = (prev_x, x);
            let mut fa = prev_v;
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                let fm = eval_poly(&coeffs, mid);
                if fa * fm <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push(0.5 * (a + b));
        }
        prev_x = x;
        prev_v = v;
    }
    roots
}

#[test]
fn jacobi_matches_characteristic_polynomial_oracle() {
    let rho = DensityMatrix::random(4, 42);
    let h = rho.unwrap().matrix().clone();
    let roots = characteristic_roots(&h);
    assert_eq!(roots.len(), 4, "oracle must isolate all four roots");
    let eigenvalues = h.eigh().unwrap().eigenvalues().to_vec();
    for (w, r) in eigenvalues.iter().zip(&roots) {
        assert!((w - r).abs() < 1e-8, "eigenvalue {w} vs oracle root {r}");
    }
}

#[test]
fn oracle_also_agrees_on_general_hermitian_input() {
    let h = random_hermitian(4, 42);
    let roots = characteristic_roots(&h);
    assert_eq!(roots.len(), 4, "oracle must isolate all four roots");
    let eigenvalues = h.eigh().unwrap().eigenvalues().to_vec();
    for (w, r) in eigenvalues.iter().zip(&roots) {
        assert!((w - r).abs() < 1e-8, "eigenvalue {w} vs oracle root {r}");
    }
}

#[test]
fn reconstruction_over_seeded_ensembles() {
    for dim in 2..=5usize {
        for seed in 0..200u64 {
            let h = random_hermitian(dim, 10_000 * dim as u64 + seed);
            let d = h.eigh().unwrap();
            let err = d.reconstruct().max_abs_diff(h.as_matrix());
            assert!(
                err < 1e-10,
                "dim {dim} seed {seed}: reconstruction {err:.3e}"
            );
        }
    }
}

#[test]
fn eigenvector_columns_are_orthonormal() {
    for dim in 2..=5usize {
        let h = random_hermitian(dim, 777 + dim as u64);
        let v = h.eigh().unwrap().eigenvectors().clone();
        let gram = v.adjoint().mul(&v);
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(dim)) < 1e-10);
    }
}

#[test]
fn eigenvalue_count_and_trace_sum() {
    for dim in 2..=5usize {
        for seed in 0..50u64 {
            let h = random_hermitian(dim, 3_000 * dim as u64 + seed);
            let d = h.eigh().unwrap();
            assert_eq!(d.eigenvalues().len(), dim);
            let sum: f64 = d.eigenvalues().iter().sum();
            assert!((sum - h.trace_real()).abs() < 1e-10);
            let sorted = d.eigenvalues().windows(2).all(|w| w[0] <= w[1]);
            assert!(sorted, "eigenvalues must be ascending");
        }
    }
}

#[test]
fn sqrt_chain_returns_to_the_input() {
    // Density matrices are PSD with spectrum in [0, 1]; the fourth power of
    // the double square root must reproduce them.
    for dim in 2..=5usize {
        for seed in [7u64, 8, 9] {
            let rho = DensityMatrix::random(dim, seed).unwrap();
            let h = rho.matrix();
            let quarter = h.sqrt_psd().unwrap().sqrt_psd().unwrap();
            let square = quarter.as_matrix().mul(quarter.as_matrix());
            let fourth = square.mul(&square);
            assert!(fourth.max_abs_diff(h.as_matrix()) < 1e-8);
        }
    }
}

#[test]
fn sqrt_multiplies_back_on_random_psd_input() {
    let rho = DensityMatrix::random(4, 7).unwrap();
    let r = rho.matrix().sqrt_psd().unwrap();
    let back = r.as_matrix().mul(r.as_matrix());
    assert!(back.max_abs_diff(rho.matrix().as_matrix()) < 1e-9);
}
