//! File formats: JSON state files and Bloch-vector files, CSV point clouds.
//!
//! States are `{"dim": N, "re": [[..]], "im": [[..]]}` with row-major real
//! and imaginary parts; complex entries are never encoded as strings.
//! Vectors are `{"dim": N, "components": [..]}`. CSV uses the header
//! `x,y,z,fidelity_check,spurious`, LF line endings, and 17-significant-
//! digit floats so binary64 values round-trip losslessly.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use uhlmann::{ComplexMatrix, DensityMatrix, HermitianMatrix};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VectorFile {
    pub dim: usize,
    pub components: Vec<f64>,
}

impl StateFile {
    pub fn from_density(rho: &DensityMatrix) -> Self {
        Self::from_matrix_parts(rho.dim(), |r, c| rho.matrix().get(r, c))
    }

    pub fn from_hermitian(h: &HermitianMatrix) -> Self {
        Self::from_matrix_parts(h.dim(), |r, c| h.get(r, c))
    }

    fn from_matrix_parts(dim: usize, get: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut re = vec![vec![0.0; dim]; dim];
        let mut im = vec![vec![0.0; dim]; dim];
        for r in 0..dim {
            for c in 0..dim {
                let z = get(r, c);
                re[r][c] = z.re;
                im[r][c] = z.im;
            }
        }
        StateFile { dim, re, im }
    }

    /// Validate shape and parse into a density matrix; any violated state
    /// invariant surfaces as a domain error carrying its residual.
    pub fn to_density(&self) -> Result<DensityMatrix, CliError> {
        let rows = self.to_rows()?;
        let matrix = ComplexMatrix::from_rows(&rows).map_err(CliError::State)?;
        DensityMatrix::new(HermitianMatrix::new(matrix).map_err(CliError::State)?)
            .map_err(CliError::State)
    }

    fn to_rows(&self) -> Result<Vec<Vec<Complex64>>, CliError> {
        if self.re.len() != self.dim || self.im.len() != self.dim {
            return Err(CliError::Format(format!(
                "state file declares dim {} but has {} re rows and {} im rows",
                self.dim,
                self.re.len(),
                self.im.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.dim);
        for r in 0..self.dim {
            if self.re[r].len() != self.dim || self.im[r].len() != self.dim {
                return Err(CliError::Format(format!(
                    "state file row {r} is not length {}",
                    self.dim
                )));
            }
            rows.push(
                (0..self.dim)
                    .map(|c| Complex64::new(self.re[r][c], self.im[r][c]))
                    .collect(),
            );
        }
        Ok(rows)
    }
}

/// One CSV row of a sampled or sectioned surface. The fidelity column is
/// always recomputed through the matrix-route fidelity against the target,
/// never copied from the requested level, so emitted files are
/// self-validating.
pub struct PointRecord {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub fidelity_check: f64,
    pub spurious: bool,
}

/// Shortest exact decimal for a binary64 value: 17 significant digits.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub const CSV_HEADER: &str = "x,y,z,fidelity_check,spurious";

pub fn to_csv(records: &[PointRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 80 + CSV_HEADER.len() + 1);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_f64(r.x),
            format_f64(r.y),
            format_f64(r.z),
            format_f64(r.fidelity_check),
            u8::from(r.spurious)
        ));
    }
    out
}
