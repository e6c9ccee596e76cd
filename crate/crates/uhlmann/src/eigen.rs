//! Eigendecomposition of complex Hermitian matrices and derived operations.
//!
//! The solver is a cyclic Jacobi iteration adapted to complex entries: each
//! off-diagonal element `a[p][q]` is annihilated by a 2x2 unitary built from
//! the element's phase and a real Jacobi rotation. For the matrix sizes this
//! crate targets the method is simple, dependency-free, and accurate to a
//! small multiple of machine epsilon.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::tol;

/// Result of [`HermitianMatrix::eigh`]: eigenvalues ascending, eigenvectors
/// as the columns of a unitary matrix, so that `V diag(w) V† = H`.
///
/// Eigenvectors of repeated eigenvalues are an arbitrary orthonormal basis of
/// the eigenspace; compare reconstructions, never eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `V diag(w) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply_to_eigenvalues(|w| w)
    }

    /// `V diag(f(w)) V†` for a real function of the eigenvalues.
    pub fn apply_to_eigenvalues(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut sum = Complex64::new(0.0, 0.0);
                for (k, &w) in self.eigenvalues.iter().enumerate() {
                    sum += v[(r, k)] * f(w) * v[(c, k)].conj();
                }
                out[(r, c)] = sum;
            }
        }
        out
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += a[(p, q)].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

impl HermitianMatrix {
    /// Full eigendecomposition by cyclic Jacobi sweeps.
    ///
    /// Converges when the off-diagonal Frobenius norm drops below
    /// [`tol::JACOBI_REL`] relative to the Frobenius norm of the input;
    /// failure to converge within [`tol::JACOBI_MAX_SWEEPS`] sweeps reports
    /// the remaining off-diagonal residual.
    pub fn eigh(&self) -> Result<EigenDecomposition> {
        let n = self.dim();
        let mut a = self.as_matrix().clone();
        let mut v = ComplexMatrix::identity(n);
        let threshold = tol::JACOBI_REL * a.frobenius_norm();

        let mut off = off_diagonal_norm(&a);
        let mut sweeps = 0;
        while off > threshold {
            if sweeps == tol::JACOBI_MAX_SWEEPS {
                return Err(Error::NoConvergence { off_diagonal: off });
            }
            for p in 0..n - 1 {
                for q in (p + 1)..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
            sweeps += 1;
            off = off_diagonal_norm(&a);
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));

        let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
        let mut eigenvectors = ComplexMatrix::zeros(n);
        for (c, &src) in order.iter().enumerate() {
            for r in 0..n {
                eigenvectors[(r, c)] = v[(r, src)];
            }
        }

        Ok(EigenDecomposition {
            eigenvalues,
            eigenvectors,
        })
    }

    /// Principal square root of a positive semidefinite matrix.
    ///
    /// Eigenvalues in `[-PSD_FLOOR, 0)` are clamped to zero before the root;
    /// anything more negative is an error, not a repair.
    pub fn sqrt_psd(&self) -> Result<HermitianMatrix> {
        let decomp = self.eigh()?;
        let min = decomp.min_eigenvalue();
        if min < -tol::PSD_FLOOR {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
        let root = decomp.apply_to_eigenvalues(|w| w.max(0.0).sqrt());
        HermitianMatrix::new(root)
    }

    /// True iff the smallest eigenvalue is at least `-tolerance`.
    /// A non-convergent decomposition counts as not positive semidefinite.
    pub fn is_psd(&self, tolerance: f64) -> bool {
        self.eigh()
            .map(|d| d.min_eigenvalue() >= -tolerance)
            .unwrap_or(false)
    }
}

/// Annihilate `a[p][q]` with a unitary plane rotation, applied as
/// `a <- J† a J`, accumulating `v <- v J`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = a[(p, q)];
    let babs = beta.norm();
    if babs == 0.0 {
        return;
    }
    let phase = beta / babs;
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;
    let tau = (gamma - alpha) / (2.0 * babs);
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.dim();
    // Columns p and q of a (right-multiplication by J).
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp + s * phase.conj() * akq;
        a[(k, q)] = -s * phase * akp + c * akq;
    }
    // Rows p and q of a (left-multiplication by J†).
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk + s * phase * aqk;
        a[(q, k)] = -s * phase.conj() * apk + c * aqk;
    }
    // Rounding can leave a stray imaginary part on the rotated diagonal.
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);

    // Accumulate eigenvectors.
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp + s * phase.conj() * vkq;
        v[(k, q)] = -s * phase * vkp + c * vkq;
    }
}
