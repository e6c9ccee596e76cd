//! Dense complex matrices and the validated Hermitian wrapper.
//!
//! Everything downstream (states, fidelities, surfaces) works on small
//! matrices, N up to ~16, so the representation is a plain row-major
//! `Vec<Complex64>` and operations are written for clarity.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from nested rows; every row must have the same length as the
    /// number of rows, and every entry must be finite.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    row: i,
                    cols: row.len(),
                });
            }
            for (j, &z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                m[(i, j)] = z;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = self.clone();
        for z in &mut out.data {
            *z *= s;
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix sum dimension mismatch");
        let mut out = self.clone();
        for (z, w) in out.data.iter_mut().zip(&rhs.data) {
            *z += w;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix difference dimension mismatch");
        let mut out = self.clone();
        for (z, w) in out.data.iter_mut().zip(&rhs.data) {
            *z -= w;
        }
        out
    }

    /// Largest entry magnitude, the max norm.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.sub(rhs).max_abs()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest deviation from conjugate symmetry, `max |a[j][k] - conj(a[k][j])|`.
    pub fn hermitian_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for k in j..n {
                let d = self[(j, k)] - self[(k, j)].conj();
                worst = worst.max(d.norm());
            }
        }
        worst
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

/// `Tr[a b]` without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    assert_eq!(a.dim(), b.dim(), "trace product dimension mismatch");
    let n = a.dim();
    let mut t = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            t += a[(i, k)] * b[(k, i)];
        }
    }
    t
}

/// Complex Hermitian matrix of dimension at least 2.
///
/// Construction checks conjugate symmetry to [`tol::HERMITICITY`] and then
/// stores the exactly symmetrized average `(a + a†)/2`, so downstream code
/// never sees sub-tolerance asymmetry.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
}

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let n = m.dim();
        if n < 2 {
            return Err(Error::DimensionTooSmall { dim: n });
        }
        for i in 0..n {
            for j in 0..n {
                let z = m[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        let residual = m.hermitian_residual();
        if residual > tol::HERMITICITY {
            return Err(Error::NotHermitian { residual });
        }
        let mut sym = m.clone();
        for i in 0..n {
            for j in 0..n {
                sym[(i, j)] = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            }
        }
        Ok(HermitianMatrix { inner: sym })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        Self::new(ComplexMatrix::from_rows(rows)?)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        if n < 2 {
            return Err(Error::DimensionTooSmall { dim: n });
        }
        let mut m = ComplexMatrix::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            if !d.is_finite() {
                return Err(Error::NonFinite { row: i, col: i });
            }
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        Ok(HermitianMatrix { inner: m })
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.inner[(r, c)]
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.inner
    }

    /// Real part of the trace; the imaginary part is identically zero for the
    /// symmetrized storage.
    pub fn trace_real(&self) -> f64 {
        self.inner.trace().re
    }
}
