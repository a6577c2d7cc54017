//! Entanglement and spin-squeezing witnesses for two-atom X states.
//!
//! Entanglement is measured by the negativity of the partial transpose,
//! `E = max(0, −2 Σ μ₋)`. Its closed-form spectrum splits into a
//! coherence pair `μ₁± = ρ_ss/2 ± |ρ_eg|` and a population pair
//! `μ₂± = ½[(ρ_ee+ρ_gg) ± √((ρ_ee−ρ_gg)² + ρ_ss²)]`, giving two independent
//! entanglement criteria. Squeezing is measured against the coherent-state
//! limit with the mean spin along `z`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::dicke::{spectral_decompose, XStateParams};
use crate::error::{Error, Result};
use crate::qcore::{self, ComplexScalar, HermitianMatrix4, Matrix4};

/// Number of atoms.
pub const N_ATOMS: f64 = 2.0;

/// Below this |⟨S_z⟩| the Wineland parameter is reported as undefined.
pub const MEAN_SPIN_EPS: f64 = 1e-9;

const PHYSICAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Transposes the indices of one atom of a product-basis matrix.
pub fn partial_transpose(m: &HermitianMatrix4, subsystem: Subsystem) -> HermitianMatrix4 {
    let mut out = Matrix4::zeros();
    for row in 0..4 {
        for col in 0..4 {
            let (a1, a2) = (row >> 1, row & 1);
            let (b1, b2) = (col >> 1, col & 1);
            let (r, c) = match subsystem {
                Subsystem::First => ((b1 << 1) | a2, (a1 << 1) | b2),
                Subsystem::Second => ((a1 << 1) | b2, (b1 << 1) | a2),
            };
            out.0[row][col] = m[(r, c)];
        }
    }
    HermitianMatrix4::new(out).expect("partial transpose of a Hermitian matrix is Hermitian")
}

/// Partial-transpose spectrum of an X state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PtEigenvalues {
    pub mu_1p: f64,
    pub mu_1m: f64,
    pub mu_2p: f64,
    pub mu_2m: f64,
}

impl PtEigenvalues {
    pub fn sorted(&self) -> [f64; 4] {
        let mut v = [self.mu_1p, self.mu_1m, self.mu_2p, self.mu_2m];
        v.sort_by(f64::total_cmp);
        v
    }
}

pub fn pt_eigenvalues_closed_form(p: &XStateParams) -> PtEigenvalues {
    let coherence = p.rho_eg().norm();
    let half_ss = 0.5 * p.rho_ss();
    let pop_mean = 0.5 * (p.rho_ee() + p.rho_gg());
    let pop_gap = 0.5 * ((p.rho_ee() - p.rho_gg()).powi(2) + p.rho_ss().powi(2)).sqrt();
    PtEigenvalues {
        mu_1p: half_ss + coherence,
        mu_1m: half_ss - coherence,
        mu_2p: pop_mean + pop_gap,
        mu_2m: pop_mean - pop_gap,
    }
}

/// `max(0, −2 Σ_{μ<0} μ)`
pub fn negativity(eigenvalues: &[f64]) -> f64 {
    let s: f64 = eigenvalues.iter().filter(|&&m| m < 0.0).sum();
    (-2.0 * s).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub negativity_e: f64,
    pub mu: PtEigenvalues,
    /// `|ρ_eg| > ρ_ss/2`, driven by the two-photon coherence.
    pub criterion_coherence: bool,
    /// `ρ_ss > 2√(ρ_ee ρ_gg)`, driven by the populations alone.
    pub criterion_population: bool,
}

pub fn entanglement_report(p: &XStateParams) -> EntanglementReport {
    let mu = pt_eigenvalues_closed_form(p);
    EntanglementReport {
        negativity_e: negativity(&[mu.mu_1p, mu.mu_1m, mu.mu_2p, mu.mu_2m]),
        mu,
        criterion_coherence: mu.mu_1m < 0.0,
        criterion_population: mu.mu_2m < 0.0,
    }
}

/// Collective spin operators `S_k = ½(σ_k⊗I + I⊗σ_k)` in the product basis,
/// with `|e⟩` as the `σ_z = +1` state.
pub fn collective_spin_operators() -> [Matrix4; 3] {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let id = [[one, z], [z, one]];
    let paulis = [
        [[z, one], [one, z]],
        [[z, -i], [i, z]],
        [[one, z], [z, -one]],
    ];
    paulis.map(|s| {
        (Matrix4::kron2(&s, &id) + Matrix4::kron2(&id, &s)).scale(Complex64::new(0.5, 0.0))
    })
}

/// First and second moments of the collective spin in the `x`–`y` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinMoments {
    pub mean_sx: f64,
    pub mean_sy: f64,
    pub mean_sz: f64,
    sx2: f64,
    sy2: f64,
    /// `⟨S_x S_y + S_y S_x⟩`
    sxy: f64,
}

impl SpinMoments {
    /// Variance of `S_θ = cos θ S_x + sin θ S_y`.
    pub fn variance_at(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        let second = c * c * self.sx2 + s * s * self.sy2 + c * s * self.sxy;
        let mean = c * self.mean_sx + s * self.mean_sy;
        second - mean * mean
    }
}

/// Spin moments by direct operator algebra on a product-basis density matrix.
pub fn spin_moments(m: &HermitianMatrix4) -> Result<SpinMoments> {
    let trace = m.trace();
    if (trace - 1.0).abs() > PHYSICAL_TOL {
        return Err(Error::NotPhysical(format!("trace is {trace}, not 1")));
    }
    if !qcore::is_positive_semidefinite(m, PHYSICAL_TOL) {
        return Err(Error::NotPhysical("not positive semidefinite".into()));
    }
    let [sx, sy, sz] = collective_spin_operators();
    let ev = |op: &Matrix4| m.expectation(op).re;
    Ok(SpinMoments {
        mean_sx: ev(&sx),
        mean_sy: ev(&sy),
        mean_sz: ev(&sz),
        sx2: ev(&(sx * sx)),
        sy2: ev(&(sy * sy)),
        sxy: ev(&((sx * sy) + (sy * sx))),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezingResult {
    /// Kitagawa–Ueda parameter `2·min_θ Var(S_θ)`.
    pub xi_ku: f64,
    /// Measurement angle in `[0, π)` that minimises the variance.
    pub theta_opt: f64,
    /// Wineland parameter, absent when `⟨S_z⟩` vanishes.
    pub xi_wineland: Option<f64>,
}

impl SqueezingResult {
    pub fn is_squeezed(&self) -> bool {
        self.xi_ku < 1.0
    }
}

/// Angle of maximum squeezing. For an X state
/// `2 Var(S_θ) = 1 + ρ_ss + 2|ρ_eg| cos(2θ + arg ρ_eg)`.
pub fn optimal_angle(rho_eg: ComplexScalar) -> f64 {
    ((PI - rho_eg.arg()) / 2.0).rem_euclid(PI)
}

pub fn squeezing_ku(p: &XStateParams) -> SqueezingResult {
    SqueezingResult {
        xi_ku: xi_ku(p),
        theta_opt: optimal_angle(p.rho_eg()),
        xi_wineland: squeezing_wineland(p).ok(),
    }
}

fn xi_ku(p: &XStateParams) -> f64 {
    1.0 + p.rho_ss() - 2.0 * p.rho_eg().norm()
}

/// `N_a · min_θ Var(S_θ) / ⟨S_z⟩²`
pub fn squeezing_wineland(p: &XStateParams) -> Result<f64> {
    let mean_sz = p.rho_ee() - p.rho_gg();
    if mean_sz.abs() <= MEAN_SPIN_EPS {
        return Err(Error::MeanSpinZero);
    }
    let min_variance = 0.5 * xi_ku(p);
    Ok(N_ATOMS * min_variance / (mean_sz * mean_sz))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralProbabilities {
    pub pi_plus: f64,
    pub pi_minus: f64,
    pub pi_s: f64,
    pub pi_a: f64,
}

/// Everything the crate can say about one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessReport {
    pub state: XStateParams,
    pub entanglement: EntanglementReport,
    pub squeezing: SqueezingResult,
    pub spectral: SpectralProbabilities,
}

pub fn witness_report(p: &XStateParams) -> WitnessReport {
    let d = spectral_decompose(p);
    WitnessReport {
        state: *p,
        entanglement: entanglement_report(p),
        squeezing: squeezing_ku(p),
        spectral: SpectralProbabilities {
            pi_plus: d.pi_plus,
            pi_minus: d.pi_minus,
            pi_s: d.pi_s,
            pi_a: d.pi_a,
        },
    }
}
