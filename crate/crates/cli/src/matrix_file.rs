//! JSON density-matrix files:
//!
//! ```json
//! { "basis": "product", "matrix": [[{"re": 1.0, "im": 0.0}, ...], ...] }
//! ```
//!
//! `matrix` is 4×4, row-major, in the order of the named basis.

use std::fs;
use std::path::Path;

use dicke_core::{BasisKind, HermitianMatrix4, Matrix4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrixFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisKind>,
    pub matrix: Vec<Vec<Entry>>,
}

impl DensityMatrixFile {
    pub fn from_matrix(m: &HermitianMatrix4, basis: BasisKind) -> Self {
        DensityMatrixFile {
            basis: Some(basis),
            matrix: m
                .entries()
                .iter()
                .map(|row| row.iter().map(|z| Entry { re: z.re, im: z.im }).collect())
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("matrix file serialises");
        fs::write(path, text + "\n").map_err(|e| CliError::io(path, e))
    }

    /// The 4×4 matrix, checked for shape and Hermiticity.
    pub fn to_hermitian(&self) -> Result<HermitianMatrix4> {
        if self.matrix.len() != 4 || self.matrix.iter().any(|r| r.len() != 4) {
            return Err(CliError::Parse(format!(
                "matrix must be 4x4, got {} rows with lengths {:?}",
                self.matrix.len(),
                self.matrix.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        let mut m = Matrix4::zeros();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                m.0[i][j] = Complex64::new(e.re, e.im);
            }
        }
        Ok(HermitianMatrix4::new(m)?)
    }
}
