//! Numerical tolerances used across the crate.
//!
//! Every threshold lives here with its rationale; nothing else in the crate
//! hardcodes a magic epsilon.

/// Maximum allowed asymmetry `|a[j][k] - conj(a[k][j])|` when validating a
/// Hermitian matrix. Products of well-scaled matrices stay far below this.
pub const HERMITICITY: f64 = 1e-12;

/// Maximum allowed deviation of a density-matrix trace from 1.
pub const TRACE: f64 = 1e-12;

/// Positivity floor: eigenvalues in `[-PSD_FLOOR, 0)` are treated as rounded
/// zeros and clamped; anything below fails loudly rather than being repaired.
pub const PSD_FLOOR: f64 = 1e-10;

/// Slack on the purity window `[1/N, 1]`.
pub const PURITY: f64 = 1e-12;

/// Slack on the Bloch-vector length bound and on the extended-vector norm.
pub const BLOCH_NORM: f64 = 1e-12;

/// Square-root and arccos arguments within this distance outside their
/// mathematical domain are clamped to the boundary; larger violations are
/// reported as errors since they indicate a bug, not roundoff.
pub const DOMAIN_CLAMP: f64 = 1e-12;

/// Points within this distance of the spurious-branch cutoff plane are
/// classified as genuine: the branches meet tangentially there and rounding
/// in the coordinates is of this order.
pub const CUTOFF_SLACK: f64 = 1e-12;

/// Numerical-rank floor for density-matrix spectra inside the fidelity
/// routes: eigenvalues of the *first* state below this are treated as exact
/// zeros and their directions never enter the sandwich matrix. Forming the
/// sandwich in the full basis puts matrix-product rounding (~1e-17) into the
/// kernel directions, and the square root amplifies that to ~3e-9 per mode,
/// which swamps pure-state fidelities. State eigenvalues are O(1)-scale
/// (they sum to 1) with ~1e-16 solver noise, so 1e-13 is a safe cutoff.
pub const RANK_FLOOR: f64 = 1e-13;

/// Jacobi eigensolver convergence: the off-diagonal Frobenius norm must fall
/// below `JACOBI_REL * ||H||_F`.
pub const JACOBI_REL: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; convergence is quadratic, so well-formed input
/// of the sizes this crate targets needs fewer than ten.
pub const JACOBI_MAX_SWEEPS: usize = 100;
