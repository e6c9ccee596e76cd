#![allow(dead_code)]

use num_complex::Complex64;
use uhlmann::{ComplexMatrix, HermitianMatrix, Rng};

/// Random Hermitian matrix `(G + G†)/2` with standard-normal complex Ginibre
/// entries from the crate's pinned generator.
pub fn random_hermitian(dim: usize, seed: u64) -> HermitianMatrix {
    let mut rng = Rng::new(seed);
    let mut g = ComplexMatrix::zeros(dim);
    for r in 0..dim {
        for c in 0..dim {
            g[(r, c)] = rng.normal_complex();
        }
    }
    let sym = g.add(&g.adjoint()).scale(0.5);
    HermitianMatrix::new(sym).expect("(G + G†)/2 is Hermitian")
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
