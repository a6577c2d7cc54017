//! Steady states of the two-atom Dicke system driven by a broadband squeezed
//! vacuum with mean photon number `N` and two-photon correlation `M`.
//!
//! With `D = 3N² + 3N + 1 − 3|M|²` the nonzero elements are
//!
//! ```text
//! ρ_ee  = [N²(2N+1) − (2N−1)|M|²] / [(2N+1) D]
//! ρ_ss  = [N(N+1) − |M|²] / D
//! |ρ_eg| = |M| / [(2N+1) D]
//! ```
//!
//! and `arg ρ_eg = arg M`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dicke::{collective, XStateParams};
use crate::error::{Error, Result};
use crate::qcore::{ComplexScalar, StateVector4};

const BOUND_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    /// `M = 0`
    Thermal,
    /// `|M| = N`
    #[serde(rename = "classical")]
    ClassicalSqueezed,
    /// `|M| = √(N(N+1))`
    #[serde(rename = "quantum")]
    QuantumSqueezed,
    /// Any `|M| ≤ √(N(N+1))`.
    Custom,
}

/// Driving-field descriptor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldParams {
    n_bar: f64,
    m_corr: ComplexScalar,
    kind: FieldKind,
}

impl FieldParams {
    pub fn thermal(n_bar: f64) -> Result<Self> {
        Self::named(n_bar, FieldKind::Thermal, 0.0)
    }

    pub fn classical(n_bar: f64, m_arg: f64) -> Result<Self> {
        Self::named(n_bar, FieldKind::ClassicalSqueezed, m_arg)
    }

    pub fn quantum(n_bar: f64, m_arg: f64) -> Result<Self> {
        Self::named(n_bar, FieldKind::QuantumSqueezed, m_arg)
    }

    pub fn custom(n_bar: f64, m_corr: ComplexScalar) -> Result<Self> {
        check_n(n_bar)?;
        if !m_corr.is_finite() {
            return Err(Error::UnphysicalField(format!("M = {m_corr} is not finite")));
        }
        let bound = (n_bar * (n_bar + 1.0)).sqrt();
        if m_corr.norm() > bound + BOUND_TOL {
            return Err(Error::UnphysicalField(format!(
                "|M| = {} exceeds sqrt(N(N+1)) = {bound}",
                m_corr.norm()
            )));
        }
        Ok(FieldParams {
            n_bar,
            m_corr,
            kind: FieldKind::Custom,
        })
    }

    /// Builds a field of the given kind. `m_abs` is only read for
    /// [`FieldKind::Custom`]; the named kinds fix `|M|` themselves.
    pub fn new(kind: FieldKind, n_bar: f64, m_abs: f64, m_arg: f64) -> Result<Self> {
        match kind {
            FieldKind::Custom => {
                if m_abs < 0.0 {
                    return Err(Error::UnphysicalField(format!("|M| = {m_abs} is negative")));
                }
                Self::custom(n_bar, Complex64::from_polar(m_abs, m_arg))
            }
            kind => Self::named(n_bar, kind, m_arg),
        }
    }

    fn named(n_bar: f64, kind: FieldKind, m_arg: f64) -> Result<Self> {
        check_n(n_bar)?;
        if !m_arg.is_finite() {
            return Err(Error::UnphysicalField(format!("arg M = {m_arg} is not finite")));
        }
        let m_abs = match kind {
            FieldKind::Thermal => 0.0,
            FieldKind::ClassicalSqueezed => n_bar,
            FieldKind::QuantumSqueezed => (n_bar * (n_bar + 1.0)).sqrt(),
            FieldKind::Custom => unreachable!("custom fields carry an explicit M"),
        };
        Ok(FieldParams {
            n_bar,
            m_corr: Complex64::from_polar(m_abs, m_arg),
            kind,
        })
    }

    pub fn n_bar(&self) -> f64 {
        self.n_bar
    }

    pub fn m_corr(&self) -> ComplexScalar {
        self.m_corr
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// `|M|²`, evaluated from `N` for the named kinds so no square root is
    /// squared back.
    fn m_abs_sq(&self) -> f64 {
        let n = self.n_bar;
        match self.kind {
            FieldKind::Thermal => 0.0,
            FieldKind::ClassicalSqueezed => n * n,
            FieldKind::QuantumSqueezed => n * (n + 1.0),
            FieldKind::Custom => self.m_corr.norm_sqr(),
        }
    }

    /// `N(N+1) − |M|²`, the distance from perfect correlation.
    fn correlation_deficit(&self) -> f64 {
        let n = self.n_bar;
        match self.kind {
            FieldKind::Thermal => n * (n + 1.0),
            FieldKind::ClassicalSqueezed => n,
            FieldKind::QuantumSqueezed => 0.0,
            FieldKind::Custom => (n * (n + 1.0) - self.m_abs_sq()).max(0.0),
        }
    }
}

fn check_n(n_bar: f64) -> Result<()> {
    if !(n_bar.is_finite() && n_bar >= 0.0) {
        return Err(Error::UnphysicalField(format!(
            "N = {n_bar} must be finite and non-negative"
        )));
    }
    Ok(())
}

/// Steady state under broadband driving by `f`.
pub fn steady_state(f: &FieldParams) -> XStateParams {
    let n = f.n_bar;
    let deficit = f.correlation_deficit();
    // D = 3N² + 3N + 1 − 3|M|² = 1 + 3·deficit; shared by all three elements
    let denom = 1.0 + 3.0 * deficit;
    let two_n_plus_1 = 2.0 * n + 1.0;

    // N²(2N+1) − (2N−1)|M|² rewritten as N + (2N−1)·deficit
    let rho_ee = (n + (2.0 * n - 1.0) * deficit) / (two_n_plus_1 * denom);
    let rho_ss = deficit / denom;
    let rho_eg_abs = f.m_corr.norm() / (two_n_plus_1 * denom);
    let rho_eg = Complex64::from_polar(rho_eg_abs, f.m_corr.arg());
    let rho_gg = 1.0 - rho_ee - rho_ss;

    XStateParams::new(rho_gg, rho_ee, rho_ss, rho_eg)
        .expect("steady state of a physical field is a valid X state")
}

/// `N(1−2N) / ((2N+1)(3N+1))`, equal to `2|ρ_eg| − ρ_ss` for the classical
/// squeezed field. Positive exactly when `N < 1/2`.
pub fn classical_witness_parameter(n_bar: f64) -> f64 {
    n_bar * (1.0 - 2.0 * n_bar) / ((2.0 * n_bar + 1.0) * (3.0 * n_bar + 1.0))
}

/// Pure steady state `(√(N+1)|g⟩ + √N|e⟩)/√(2N+1)` of the quantum squeezed
/// field, in the collective basis.
pub fn quantum_pure_state(n_bar: f64) -> StateVector4 {
    let norm = 2.0 * n_bar + 1.0;
    let mut a = [Complex64::new(0.0, 0.0); 4];
    a[collective::G] = Complex64::new(((n_bar + 1.0) / norm).sqrt(), 0.0);
    a[collective::E] = Complex64::new((n_bar / norm).sqrt(), 0.0);
    StateVector4::normalized(a).expect("nonzero amplitude on |g>")
}
