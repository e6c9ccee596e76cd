//! Geometry of quantum states.
//!
//! This crate converts density matrices to generalized and extended Bloch
//! vectors, evaluates the standard comparison measures between states
//! (Uhlmann fidelity by several routes, super-fidelity, Bures distance and
//! length, and the Euclidean distance between extended Bloch vectors), and
//! constructs the equal-fidelity surface around any qubit target: a sphere
//! for the maximally mixed target, a plane disc for a pure target, and an
//! oblate ellipsoid with a spurious-branch cutoff in between.
//!
//! # Conventions
//!
//! Bloch components are `Tr[rho g_i] / 2` in a frozen SU(N) generator order
//! (see [`state`]), so qubit pure states sit at radius 1/2. All numerical
//! tolerances are centralized in [`tol`]. Seeded randomness is pinned to
//! SplitMix64 + Box-Muller (see [`random`]) so test vectors never drift.
//!
//! # Example
//!
//! ```
//! use uhlmann::{DensityMatrix, compare, EqualFidelitySurface};
//!
//! let mixed = DensityMatrix::maximally_mixed(2).unwrap();
//! let pure = DensityMatrix::pure_basis(2, 0).unwrap();
//! let report = compare(&mixed, &pure).unwrap();
//! assert!((report.fidelity - 0.5).abs() < 1e-10);
//!
//! let surface = EqualFidelitySurface::new(0.4, 0.9).unwrap();
//! assert!((surface.semi_major() - 0.3).abs() < 1e-12);
//! ```

#![forbid(unsafe_code)]

pub mod eigen;
pub mod error;
pub mod matrix;
pub mod metrics;
pub mod random;
pub mod state;
pub mod surface;
pub mod tol;

pub use eigen::EigenDecomposition;
pub use error::{Error, Result};
pub use matrix::{trace_product, ComplexMatrix, HermitianMatrix};
pub use metrics::{
    bures_distance, compare, extended_bloch_distance, fidelity, fidelity_extended,
    fidelity_from_eigenvalues, fidelity_qubit_bloch, inner_distance, super_fidelity,
    ComparisonReport,
};
pub use random::{random_unitary, Rng};
pub use state::{
    su_generators, DensityMatrix, ExtendedBlochVector, GeneralizedBlochVector, GeneratorSet,
};
pub use surface::{min_fidelity_state, EqualFidelitySurface, SurfaceKind, SurfacePoint};
