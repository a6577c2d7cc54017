use std::path::{Path, PathBuf};

use dicke_core::{
    steady_state, witness_report, BasisKind, FieldKind, FieldParams, WitnessReport, XStateParams,
    X_FORM_TOL,
};

use crate::error::{CliError, Result};
use crate::matrix_file::DensityMatrixFile;
use crate::sweep::{self, SweepConfig};

/// Analyses the density matrix stored at `input`.
///
/// `basis` overrides a file that omits its basis; a file that names a
/// different basis is rejected. With neither, the product basis is assumed.
pub fn analyze(input: &Path, basis: Option<BasisKind>) -> Result<WitnessReport> {
    let file = DensityMatrixFile::load(input)?;
    let basis = match (file.basis, basis) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Usage(format!(
                "--basis {b:?} contradicts the file's basis {a:?}"
            )))
        }
        (a, b) => b.or(a).unwrap_or(BasisKind::Product),
    };
    let m = file.to_hermitian()?;
    let p = XStateParams::from_density_matrix(&m, basis, X_FORM_TOL)?;
    Ok(witness_report(&p))
}

pub struct SteadyStateArgs {
    pub kind: FieldKind,
    pub n_bar: f64,
    pub m_abs: Option<f64>,
    pub m_arg: f64,
    pub export_matrix: Option<PathBuf>,
}

pub fn steady_state_report(args: &SteadyStateArgs) -> Result<WitnessReport> {
    let m_abs = match (args.kind, args.m_abs) {
        (FieldKind::Custom, Some(m)) => m,
        (FieldKind::Custom, None) => {
            return Err(CliError::Usage("--field custom requires --m-abs".into()))
        }
        (_, Some(_)) => {
            return Err(CliError::Usage(
                "--m-abs is only accepted with --field custom".into(),
            ))
        }
        (_, None) => 0.0,
    };
    let field = FieldParams::new(args.kind, args.n_bar, m_abs, args.m_arg)?;
    let p = steady_state(&field);
    if let Some(path) = &args.export_matrix {
        DensityMatrixFile::from_matrix(&p.to_density_matrix(BasisKind::Product), BasisKind::Product)
            .save(path)?;
    }
    Ok(witness_report(&p))
}

pub fn run_sweep(config: &SweepConfig) -> Result<usize> {
    sweep::run(config)
}

pub fn render_report(report: &WitnessReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialises")
}
