//! Density matrices, SU(N) generators, and Bloch-vector representations.
//!
//! Conventions, fixed across the whole crate:
//!
//! * Bloch components are `lambda_i = Tr[rho g_i] / 2`, so a qubit pure state
//!   sits at radius 1/2 and a general state satisfies
//!   `|lambda| <= sqrt((N-1)/(2N))`. The common radius-1 qubit convention is
//!   this one scaled by 2; the CLI exposes that as a plain scale factor.
//! * The generator basis is ordered: all symmetric pair generators
//!   `|j><k| + |k><j|` for j < k in lexicographic (j, k) order, then the
//!   antisymmetric pair generators `-i|j><k| + i|k><j|` in the same order,
//!   then the diagonal generators for m = 1..N-1. Bloch components are
//!   meaningless without this order; it is frozen.
//! * The extended Bloch vector appends
//!   `sqrt((N-1)/(2N) - |lambda|^2) = sqrt((1 - Tr[rho^2])/2)`, placing every
//!   state on a hyperhemisphere of radius `sqrt((N-1)/(2N))`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{trace_product, ComplexMatrix, HermitianMatrix};
use crate::tol;

/// Validated quantum state: Hermitian, unit trace, positive semidefinite,
/// purity within `[1/N, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: HermitianMatrix) -> Result<Self> {
        let n = matrix.dim();
        let trace = matrix.trace_real();
        let residual = (trace - 1.0).abs();
        if residual > tol::TRACE {
            return Err(Error::InvalidTrace { trace, residual });
        }
        let decomp = matrix.eigh()?;
        let min_eigenvalue = decomp.min_eigenvalue();
        if min_eigenvalue < -tol::PSD_FLOOR {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        let rho = DensityMatrix { matrix };
        let purity = rho.purity();
        if purity < 1.0 / n as f64 - tol::PURITY || purity > 1.0 + tol::PURITY {
            return Err(Error::InvalidPurity { purity, dim: n });
        }
        Ok(rho)
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        Self::new(HermitianMatrix::from_rows(rows)?)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        Self::new(HermitianMatrix::from_real_diagonal(diag)?)
    }

    /// The basis state `|index><index|`.
    pub fn pure_basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::Domain(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut diag = vec![0.0; dim];
        diag[index] = 1.0;
        Self::from_real_diagonal(&diag)
    }

    /// `I / N`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::from_real_diagonal(&vec![1.0 / dim as f64; dim])
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    /// `Tr[rho^2]`, computed as the squared Frobenius norm. Equals
    /// `1/N + 2 |lambda|^2` in terms of the Bloch vector.
    pub fn purity(&self) -> f64 {
        let n = self.dim();
        let m = self.matrix.as_matrix();
        let mut sum = 0.0;
        for r in 0..n {
            for c in 0..n {
                sum += m[(r, c)].norm_sqr();
            }
        }
        sum
    }

    /// Bloch components `Tr[rho g_i] / 2` in the frozen generator order.
    pub fn to_bloch(&self) -> GeneralizedBlochVector {
        let n = self.dim();
        let gens = su_generators(n).expect("dim >= 2 by construction");
        let components: Vec<f64> = gens
            .iter()
            .map(|g| trace_product(self.matrix.as_matrix(), g.as_matrix()).re / 2.0)
            .collect();
        GeneralizedBlochVector::new(n, components)
            .expect("a valid state stays within the Bloch ball")
    }

    /// The extended Bloch vector of this state.
    pub fn extended_bloch(&self) -> ExtendedBlochVector {
        self.to_bloch()
            .extend()
            .expect("a valid state stays within the Bloch ball")
    }
}

/// The `N^2 - 1` SU(N) generators in the frozen order described in the
/// module docs. Each is Hermitian, traceless, and the set is orthogonal
/// under `Tr[g_i g_j] = 2 delta_ij`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    dim: usize,
    generators: Vec<HermitianMatrix>,
}

impl GeneratorSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, i: usize) -> &HermitianMatrix {
        &self.generators[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HermitianMatrix> {
        self.generators.iter()
    }

    pub fn as_slice(&self) -> &[HermitianMatrix] {
        &self.generators
    }
}

/// Construct the SU(N) generator basis. For N = 2 this is exactly
/// (sigma_x, sigma_y, sigma_z).
pub fn su_generators(dim: usize) -> Result<GeneratorSet> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { dim });
    }
    let mut generators = Vec::with_capacity(dim * dim - 1);

    // Symmetric pair generators |j><k| + |k><j|.
    for j in 0..dim {
        for k in (j + 1)..dim {
            let mut m = ComplexMatrix::zeros(dim);
            m[(j, k)] = Complex64::new(1.0, 0.0);
            m[(k, j)] = Complex64::new(1.0, 0.0);
            generators.push(HermitianMatrix::new(m)?);
        }
    }
    // Antisymmetric pair generators -i|j><k| + i|k><j|.
    for j in 0..dim {
        for k in (j + 1)..dim {
            let mut m = ComplexMatrix::zeros(dim);
            m[(j, k)] = Complex64::new(0.0, -1.0);
            m[(k, j)] = Complex64::new(0.0, 1.0);
            generators.push(HermitianMatrix::new(m)?);
        }
    }
    // Diagonal generators sqrt(2/(m(m+1))) (sum_{j<=m} |j><j| - m |m+1><m+1|).
    for m_idx in 1..dim {
        let coeff = (2.0 / (m_idx as f64 * (m_idx as f64 + 1.0))).sqrt();
        let mut m = ComplexMatrix::zeros(dim);
        for j in 0..m_idx {
            m[(j, j)] = Complex64::new(coeff, 0.0);
        }
        m[(m_idx, m_idx)] = Complex64::new(-coeff * m_idx as f64, 0.0);
        generators.push(HermitianMatrix::new(m)?);
    }

    Ok(GeneratorSet { dim, generators })
}

/// Real Bloch vector in `R^(N^2 - 1)`, components in the frozen generator
/// order, length at most `sqrt((N-1)/(2N))` (pure states saturate it).
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedBlochVector {
    dim: usize,
    components: Vec<f64>,
}

impl GeneralizedBlochVector {
    pub fn new(dim: usize, components: Vec<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall { dim });
        }
        let expected = dim * dim - 1;
        if components.len() != expected {
            return Err(Error::DimensionMismatch {
                left: expected,
                right: components.len(),
            });
        }
        if let Some(i) = components.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { row: i, col: 0 });
        }
        let v = GeneralizedBlochVector { dim, components };
        let max = Self::max_norm(dim);
        if v.norm() > max + tol::BLOCH_NORM {
            return Err(Error::Domain(format!(
                "Bloch vector length {:.17} exceeds the bound {max:.17} for dimension {dim}",
                v.norm()
            )));
        }
        Ok(v)
    }

    /// Qubit shorthand for `(x, y, z)`.
    pub fn qubit(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(2, vec![x, y, z])
    }

    /// Length of the longest admissible vector, `sqrt((N-1)/(2N))`.
    pub fn max_norm(dim: usize) -> f64 {
        ((dim as f64 - 1.0) / (2.0 * dim as f64)).sqrt()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn norm_sqr(&self) -> f64 {
        self.components.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn dot(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Reconstruct the state `I/N + sum_i lambda_i g_i`.
    ///
    /// The length bound is necessary but not sufficient for N > 2; vectors
    /// that land outside the positive cone are rejected here.
    pub fn to_density(&self) -> Result<DensityMatrix> {
        let n = self.dim;
        let gens = su_generators(n)?;
        let mut m = ComplexMatrix::identity(n).scale(1.0 / n as f64);
        for (lambda, g) in self.components.iter().zip(gens.iter()) {
            m = m.add(&g.as_matrix().scale(*lambda));
        }
        DensityMatrix::new(HermitianMatrix::new(m)?).map_err(|e| match e {
            Error::NotPositiveSemidefinite { min_eigenvalue } => {
                Error::InvalidState { min_eigenvalue }
            }
            other => other,
        })
    }

    /// Append the hemisphere component `sqrt((N-1)/(2N) - |lambda|^2)`.
    ///
    /// Radicands within [`tol::DOMAIN_CLAMP`] of zero, on either side, are
    /// snapped to exactly zero: pure states land there up to roundoff, and
    /// the square root's infinite slope at zero would otherwise turn ~1e-15
    /// noise into ~1e-8 hemisphere components.
    pub fn extend(&self) -> Result<ExtendedBlochVector> {
        let bound = (self.dim as f64 - 1.0) / (2.0 * self.dim as f64);
        let radicand = bound - self.norm_sqr();
        if radicand < -tol::DOMAIN_CLAMP {
            return Err(Error::Domain(format!(
                "Bloch vector length squared {:.17} exceeds {bound:.17}",
                self.norm_sqr()
            )));
        }
        let snapped = if radicand <= tol::DOMAIN_CLAMP {
            0.0
        } else {
            radicand
        };
        let mut components = self.components.clone();
        components.push(snapped.sqrt());
        Ok(ExtendedBlochVector {
            dim: self.dim,
            components,
        })
    }
}

/// Bloch vector extended by the hemisphere component: a point on the
/// hyperhemisphere of radius `sqrt((N-1)/(2N))` in `R^(N^2)` with the last
/// component nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedBlochVector {
    dim: usize,
    components: Vec<f64>,
}

impl ExtendedBlochVector {
    pub fn new(dim: usize, components: Vec<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall { dim });
        }
        if components.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: components.len(),
            });
        }
        if let Some(i) = components.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { row: i, col: 0 });
        }
        let last = components[dim * dim - 1];
        if last < 0.0 {
            return Err(Error::Domain(format!(
                "hemisphere component must be nonnegative (got {last})"
            )));
        }
        let v = ExtendedBlochVector { dim, components };
        let radius = GeneralizedBlochVector::max_norm(dim);
        if (v.norm() - radius).abs() > tol::BLOCH_NORM {
            return Err(Error::Domain(format!(
                "extended vector norm {:.17} must equal {radius:.17}",
                v.norm()
            )));
        }
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    /// The hemisphere component, `sqrt((1 - Tr[rho^2])/2)` for a state.
    pub fn last(&self) -> f64 {
        self.components[self.components.len() - 1]
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Euclidean distance to another extended vector.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt())
    }
}
