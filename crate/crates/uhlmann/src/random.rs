//! Seeded random states and unitaries for tests and sampling.
//!
//! Determinism contract: the generator is SplitMix64 (Steele, Lea, and
//! Flanagan's 64-bit mixer) feeding a Box-Muller transform for normals. Both
//! are pinned here, in this crate, so a given `(dim, seed)` produces
//! bit-identical output on every platform and in every release. Do not swap
//! the generator without regenerating every frozen test vector.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::matrix::HermitianMatrix;
use crate::state::DensityMatrix;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// SplitMix64 stream with Box-Muller normal deviates.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1), 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Uniform in (0, 1]; safe as a logarithm argument.
    fn uniform_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Two independent standard normals from one Box-Muller draw.
    pub fn normal_pair(&mut self) -> (f64, f64) {
        let r = (-2.0 * self.uniform_open().ln()).sqrt();
        let angle = TWO_PI * self.uniform();
        (r * angle.cos(), r * angle.sin())
    }

    pub fn normal(&mut self) -> f64 {
        self.normal_pair().0
    }

    /// Complex number with independent standard-normal real and imaginary
    /// parts.
    pub fn normal_complex(&mut self) -> Complex64 {
        let (re, im) = self.normal_pair();
        Complex64::new(re, im)
    }
}

/// Square matrix of independent standard-normal complex entries.
pub(crate) fn ginibre(dim: usize, rng: &mut Rng) -> ComplexMatrix {
    let mut g = ComplexMatrix::zeros(dim);
    for r in 0..dim {
        for c in 0..dim {
            g[(r, c)] = rng.normal_complex();
        }
    }
    g
}

impl DensityMatrix {
    /// Random full-rank state `G G† / Tr[G G†]` with Ginibre `G`.
    /// Deterministic for fixed `(dim, seed)`.
    pub fn random(dim: usize, seed: u64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall { dim });
        }
        let mut rng = Rng::new(seed);
        let g = ginibre(dim, &mut rng);
        let h = g.mul(&g.adjoint());
        let trace = h.trace().re;
        DensityMatrix::new(HermitianMatrix::new(h.scale(1.0 / trace))?)
    }

    /// Random pure state `|v><v|` from a normalized normal complex vector.
    /// Deterministic for fixed `(dim, seed)`.
    pub fn random_pure(dim: usize, seed: u64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall { dim });
        }
        let mut rng = Rng::new(seed);
        let v: Vec<Complex64> = (0..dim).map(|_| rng.normal_complex()).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let mut m = ComplexMatrix::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = v[r] * v[c].conj() / (norm * norm);
            }
        }
        DensityMatrix::new(HermitianMatrix::new(m)?)
    }
}

/// Random unitary built by composing a diagonal of random phases with one
/// seeded Givens-type rotation per coordinate pair (j, k), j < k.
/// Deterministic for fixed `(dim, seed)`.
pub fn random_unitary(dim: usize, seed: u64) -> Result<ComplexMatrix> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { dim });
    }
    let mut rng = Rng::new(seed);
    let mut u = ComplexMatrix::zeros(dim);
    for m in 0..dim {
        let angle = TWO_PI * rng.uniform();
        u[(m, m)] = Complex64::new(angle.cos(), angle.sin());
    }
    for j in 0..dim - 1 {
        for k in (j + 1)..dim {
            let theta = TWO_PI * rng.uniform();
            let phi = TWO_PI * rng.uniform();
            let (c, s) = (theta.cos(), theta.sin());
            let phase = Complex64::new(phi.cos(), phi.sin());
            for col in 0..dim {
                let zj = u[(j, col)];
                let zk = u[(k, col)];
                u[(j, col)] = c * zj + s * phase * zk;
                u[(k, col)] = -s * phase.conj() * zj + c * zk;
            }
        }
    }
    Ok(u)
}
