//! Comparison functionals between quantum states.
//!
//! Two independent routes to the Uhlmann fidelity are provided on purpose:
//! [`fidelity`] evaluates `(Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2` with two
//! matrix square roots, while [`fidelity_from_eigenvalues`] combines the
//! overlap `Tr[rho1 rho2]` with the pairwise products of the eigenvalues of
//! the same sandwich matrix. They share almost no arithmetic, which makes
//! their agreement a strong cross-check. The qubit closed forms
//! ([`fidelity_qubit_bloch`], [`fidelity_extended`]) add two more routes.
//!
//! The super-fidelity
//! `F' = Tr[rho1 rho2] + sqrt((1 - Tr[rho1^2])(1 - Tr[rho2^2]))`
//! is an upper bound on the fidelity, exact for qubits and whenever either
//! state is pure. Its geometric meaning: `sqrt(1 - F')` is the Euclidean
//! distance between the extended Bloch vectors, a genuine metric.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{trace_product, ComplexMatrix, HermitianMatrix};
use crate::state::{DensityMatrix, ExtendedBlochVector, GeneralizedBlochVector};
use crate::tol;

/// All comparison measures for one pair of states.
///
/// `fidelity` and `super_fidelity` are clamped to [0, 1]; the `_raw` fields
/// carry the unclamped values for tolerance studies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonReport {
    pub fidelity: f64,
    pub super_fidelity: f64,
    pub d_l: f64,
    pub bures_distance: f64,
    pub inner_distance: f64,
    pub fidelity_raw: f64,
    pub super_fidelity_raw: f64,
}

fn check_dims(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<()> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch {
            left: rho1.dim(),
            right: rho2.dim(),
        });
    }
    Ok(())
}

/// Eigenvalues (ascending, clamped nonnegative) of the fidelity core
/// `sqrt(rho1) rho2 sqrt(rho1)`, computed on the range of `rho1`.
///
/// With `rho1 = V diag(w) V†` and `B = V_r diag(sqrt w_r)` built from the
/// eigenvalues above [`tol::RANK_FLOOR`], the core is the r x r matrix
/// `B† rho2 B`, which has exactly the nonzero spectrum of the full sandwich.
/// Working on the range matters: rank-deficient `rho1` (a pure state) would
/// otherwise leave kernel directions in the matrix whose ~1e-17 product
/// rounding the square root amplifies to ~3e-9 apiece — far above what the
/// genuinely-zero modes contribute, which is nothing.
fn sandwich_spectrum(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<Vec<f64>> {
    let n = rho1.dim();
    let decomp = rho1.matrix().eigh()?;
    let v = decomp.eigenvectors();
    let kept: Vec<(usize, f64)> = decomp
        .eigenvalues()
        .iter()
        .enumerate()
        .filter(|&(_, &w)| w >= tol::RANK_FLOOR)
        .map(|(i, &w)| (i, w.sqrt()))
        .collect();
    let rank = kept.len();

    // columns of B = V_r diag(sqrt w_r)
    let column = |a: usize, j: usize| -> Complex64 {
        let (col, root) = kept[a];
        v[(j, col)] * root
    };
    // T = rho2 B, n x r
    let rho2m = rho2.matrix().as_matrix();
    let mut t = vec![Complex64::new(0.0, 0.0); n * rank];
    for j in 0..n {
        for a in 0..rank {
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 0..n {
                sum += rho2m[(j, k)] * column(a, k);
            }
            t[j * rank + a] = sum;
        }
    }
    // core = B† T, r x r Hermitian PSD
    let mut core = ComplexMatrix::zeros(rank.max(2));
    for a in 0..rank {
        for b in 0..rank {
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                sum += column(a, j).conj() * t[j * rank + b];
            }
            core[(a, b)] = sum;
        }
    }
    if rank == 1 {
        return Ok(vec![core[(0, 0)].re.max(0.0)]);
    }
    let eigenvalues = HermitianMatrix::new(core)?
        .eigh()?
        .eigenvalues()
        .iter()
        .map(|&w| w.max(0.0))
        .collect();
    Ok(eigenvalues)
}

fn fidelity_raw(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    check_dims(rho1, rho2)?;
    let trace: f64 = sandwich_spectrum(rho1, rho2)?
        .iter()
        .map(|w| w.sqrt())
        .sum();
    Ok(trace * trace)
}

/// Uhlmann fidelity `(Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2`, clamped to
/// [0, 1] on return.
pub fn fidelity(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    Ok(fidelity_raw(rho1, rho2)?.clamp(0.0, 1.0))
}

/// Fidelity through the eigenvalue route:
/// `Tr[rho1 rho2] + 2 sum_{i<j} chi_i chi_j` where the `chi` are the
/// eigenvalues of `sqrt(sqrt(rho1) rho2 sqrt(rho1))`.
///
/// The overlap term is computed directly from the matrix entries, so this
/// cross-checks the trace route: the two agree only if the chi-squared sum
/// reproduces `Tr[rho1 rho2]`.
pub fn fidelity_from_eigenvalues(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    check_dims(rho1, rho2)?;
    let chi: Vec<f64> = sandwich_spectrum(rho1, rho2)?
        .iter()
        .map(|w| w.sqrt())
        .collect();
    let overlap = trace_product(rho1.matrix().as_matrix(), rho2.matrix().as_matrix()).re;
    let mut cross = 0.0;
    for i in 0..chi.len() {
        for j in (i + 1)..chi.len() {
            cross += chi[i] * chi[j];
        }
    }
    Ok(overlap + 2.0 * cross)
}

/// Clamp a square-root or arccos argument that roundoff pushed just outside
/// its domain; report anything further out.
fn clamp_into(value: f64, lo: f64, hi: f64, what: &str) -> Result<f64> {
    if value < lo - tol::DOMAIN_CLAMP || value > hi + tol::DOMAIN_CLAMP {
        return Err(Error::Domain(format!(
            "{what} = {value:.17} outside [{lo}, {hi}]"
        )));
    }
    Ok(value.clamp(lo, hi))
}

/// Qubit fidelity straight from two Bloch vectors:
/// `1/2 + 2 b1.b2 + 2 sqrt(1/4 - |b1|^2) sqrt(1/4 - |b2|^2)`.
pub fn fidelity_qubit_bloch(
    b1: &GeneralizedBlochVector,
    b2: &GeneralizedBlochVector,
) -> Result<f64> {
    if b1.dim() != 2 || b2.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: b1.dim(),
            right: b2.dim(),
        });
    }
    let r1 = clamp_into(0.25 - b1.norm_sqr(), 0.0, 0.25, "1/4 - |b1|^2")?;
    let r2 = clamp_into(0.25 - b2.norm_sqr(), 0.0, 0.25, "1/4 - |b2|^2")?;
    Ok(0.5 + 2.0 * b1.dot(b2)? + 2.0 * r1.sqrt() * r2.sqrt())
}

/// Qubit fidelity as an inner product of extended Bloch vectors,
/// `1/2 + 2 L1.L2`; algebraically equal to `1 - |L1 - L2|^2`.
pub fn fidelity_extended(l1: &ExtendedBlochVector, l2: &ExtendedBlochVector) -> Result<f64> {
    if l1.dim() != 2 || l2.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: l1.dim(),
            right: l2.dim(),
        });
    }
    Ok(0.5 + 2.0 * l1.dot(l2)?)
}

/// Mixedness `1 - Tr[rho^2]`, snapped to exactly zero for states pure to
/// machine precision. The square root applied to it has infinite slope at
/// zero, so letting ~1e-15 purity noise through would inject ~1e-8 errors
/// and break the collapse to `Tr[rho1 rho2]` for pure states.
fn mixedness(rho: &DensityMatrix, which: &str) -> Result<f64> {
    let g = clamp_into(1.0 - rho.purity(), 0.0, 1.0, which)?;
    Ok(if g <= tol::DOMAIN_CLAMP { 0.0 } else { g })
}

fn super_fidelity_raw(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    check_dims(rho1, rho2)?;
    let overlap = trace_product(rho1.matrix().as_matrix(), rho2.matrix().as_matrix()).re;
    let g1 = mixedness(rho1, "1 - Tr[rho1^2]")?;
    let g2 = mixedness(rho2, "1 - Tr[rho2^2]")?;
    Ok(overlap + (g1 * g2).sqrt())
}

/// Super-fidelity `Tr[rho1 rho2] + sqrt((1-Tr[rho1^2])(1-Tr[rho2^2]))`,
/// clamped to [0, 1] on return. Upper bound of the fidelity; equal to it
/// for qubits or when either state is pure.
pub fn super_fidelity(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    Ok(super_fidelity_raw(rho1, rho2)?.clamp(0.0, 1.0))
}

/// Euclidean distance between the extended Bloch vectors of two states.
/// Satisfies the metric axioms and equals `sqrt(1 - F')`.
pub fn extended_bloch_distance(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    check_dims(rho1, rho2)?;
    rho1.extended_bloch().distance(&rho2.extended_bloch())
}

/// Bures distance `sqrt(2 - 2 sqrt(F))`, in `[0, sqrt(2)]`.
pub fn bures_distance(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    let f = fidelity(rho1, rho2)?;
    Ok((2.0 - 2.0 * f.sqrt()).max(0.0).sqrt())
}

/// Geodesic (inner) distance between extended Bloch vectors on their
/// hyperhemisphere: `sqrt((N-1)/(2N)) arccos((N F' - 1)/(N - 1))`.
/// For qubits this is the Bures length `arccos(sqrt(F))`.
pub fn inner_distance(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    check_dims(rho1, rho2)?;
    let n = rho1.dim() as f64;
    let fp = super_fidelity(rho1, rho2)?;
    let arg = clamp_into(
        (n * fp - 1.0) / (n - 1.0),
        -1.0,
        1.0,
        "inner-distance cosine",
    )?;
    Ok(((n - 1.0) / (2.0 * n)).sqrt() * arg.acos())
}

/// Evaluate every measure once and bundle them.
pub fn compare(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<ComparisonReport> {
    check_dims(rho1, rho2)?;
    let fidelity_raw = fidelity_raw(rho1, rho2)?;
    let fidelity = fidelity_raw.clamp(0.0, 1.0);
    let super_fidelity_raw = super_fidelity_raw(rho1, rho2)?;
    let super_fidelity = super_fidelity_raw.clamp(0.0, 1.0);
    let d_l = extended_bloch_distance(rho1, rho2)?;
    let bures = (2.0 - 2.0 * fidelity.sqrt()).max(0.0).sqrt();
    let n = rho1.dim() as f64;
    let arg = clamp_into(
        (n * super_fidelity - 1.0) / (n - 1.0),
        -1.0,
        1.0,
        "inner-distance cosine",
    )?;
    let inner = ((n - 1.0) / (2.0 * n)).sqrt() * arg.acos();
    Ok(ComparisonReport {
        fidelity,
        super_fidelity,
        d_l,
        bures_distance: bures,
        inner_distance: inner,
        fidelity_raw,
        super_fidelity_raw,
    })
}
