//! Parameter sweeps over the photon number `N` of a driving field.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use dicke_core::{
    entanglement_report, squeezing_ku, steady_state, FieldKind, FieldParams, XStateParams,
};
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub kind: FieldKind,
    pub n_min: f64,
    pub n_max: f64,
    pub steps: usize,
    pub scale: Scale,
    /// `|M|` for custom fields; ignored otherwise.
    pub m_abs: f64,
    pub m_arg: f64,
    pub output_path: PathBuf,
    pub format: Format,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let usage = |msg: String| Err(CliError::Usage(msg));
        if !(self.n_min.is_finite() && self.n_max.is_finite()) {
            return usage("--n-min and --n-max must be finite".into());
        }
        if self.n_min >= self.n_max {
            return usage(format!(
                "--n-min ({}) must be below --n-max ({})",
                self.n_min, self.n_max
            ));
        }
        if self.n_min < 0.0 {
            return usage(format!("--n-min ({}) must be non-negative", self.n_min));
        }
        if self.steps < 2 {
            return usage(format!("--steps ({}) must be at least 2", self.steps));
        }
        if self.scale == Scale::Log && self.n_min <= 0.0 {
            return usage("log scale needs --n-min > 0".into());
        }
        Ok(())
    }

    /// Grid points, both endpoints included; geometric spacing on log scale.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|k| {
                if k == last {
                    return self.n_max;
                }
                let t = k as f64 / last as f64;
                match self.scale {
                    Scale::Linear => self.n_min + (self.n_max - self.n_min) * t,
                    Scale::Log => self.n_min * (self.n_max / self.n_min).powf(t),
                }
            })
            .collect()
    }

    fn field(&self, n_bar: f64) -> Result<FieldParams> {
        Ok(FieldParams::new(self.kind, n_bar, self.m_abs, self.m_arg)?)
    }
}

/// One grid point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub n_bar: f64,
    pub rho_gg: f64,
    pub rho_ee: f64,
    pub rho_ss: f64,
    pub re_rho_eg: f64,
    pub im_rho_eg: f64,
    pub negativity_e: f64,
    pub xi_ku: f64,
    pub theta_opt: f64,
    pub criterion_coherence: bool,
    pub criterion_population: bool,
}

pub const CSV_HEADER: &str = "n_bar,rho_gg,rho_ee,rho_ss,re_rho_eg,im_rho_eg,negativity_e,xi_ku,theta_opt,criterion_coherence,criterion_population";

impl SweepRow {
    pub fn from_state(n_bar: f64, p: &XStateParams) -> Self {
        let ent = entanglement_report(p);
        let sq = squeezing_ku(p);
        SweepRow {
            n_bar,
            rho_gg: p.rho_gg(),
            rho_ee: p.rho_ee(),
            rho_ss: p.rho_ss(),
            re_rho_eg: p.rho_eg().re,
            im_rho_eg: p.rho_eg().im,
            negativity_e: ent.negativity_e,
            xi_ku: sq.xi_ku,
            theta_opt: sq.theta_opt,
            criterion_coherence: ent.criterion_coherence,
            criterion_population: ent.criterion_population,
        }
    }

    /// The row's state fields as validated parameters.
    pub fn state(&self) -> dicke_core::Result<XStateParams> {
        XStateParams::new(
            self.rho_gg,
            self.rho_ee,
            self.rho_ss,
            num_complex::Complex64::new(self.re_rho_eg, self.im_rho_eg),
        )
    }

    fn write_csv(&self, out: &mut String) {
        let f = |x: f64| format!("{x:.16e}");
        let b = |x: bool| if x { "1" } else { "0" };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            f(self.n_bar),
            f(self.rho_gg),
            f(self.rho_ee),
            f(self.rho_ss),
            f(self.re_rho_eg),
            f(self.im_rho_eg),
            f(self.negativity_e),
            f(self.xi_ku),
            f(self.theta_opt),
            b(self.criterion_coherence),
            b(self.criterion_population),
        )
        .expect("writing to a String cannot fail");
    }
}

pub fn compute_rows(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let grid = config.grid();
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "grid points are not strictly increasing; reduce --steps".into(),
        ));
    }
    grid.into_iter()
        .map(|n| Ok(SweepRow::from_state(n, &steady_state(&config.field(n)?))))
        .collect()
}

pub fn render(rows: &[SweepRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::with_capacity(256 * (rows.len() + 1));
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in rows {
                r.write_csv(&mut out);
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialise") + "\n",
    }
}

/// Computes the sweep and writes it to `config.output_path`.
///
/// Output goes to a sibling `.partial` file first and is renamed into place,
/// so a failed run leaves no truncated output behind.
pub fn run(config: &SweepConfig) -> Result<usize> {
    let rows = compute_rows(config)?;
    write_atomically(&config.output_path, &render(&rows, config.format))?;
    Ok(rows.len())
}

fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let mut partial = path.as_os_str().to_owned();
    partial.push(".partial");
    let partial = PathBuf::from(partial);
    let result = fs::write(&partial, contents).and_then(|_| fs::rename(&partial, path));
    if let Err(e) = result {
        let _ = fs::remove_file(&partial);
        return Err(CliError::io(path, e));
    }
    Ok(())
}
