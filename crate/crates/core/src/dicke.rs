//! Two-atom Dicke states: collective basis, the X-form density matrix and its
//! spectral decomposition.
//!
//! Product-basis order is `|e₁e₂⟩, |e₁g₂⟩, |g₁e₂⟩, |g₁g₂⟩`; collective-basis
//! order is `|e⟩, |s⟩, |a⟩, |g⟩` with
//!
//! ```text
//! |s⟩ = (|e₁g₂⟩ + |g₁e₂⟩)/√2      |a⟩ = (|e₁g₂⟩ − |g₁e₂⟩)/√2
//! ```

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{self, ComplexScalar, HermitianMatrix4, Matrix4, StateVector4};

/// Default tolerance for recognising the X-form sparsity pattern.
pub const X_FORM_TOL: f64 = 1e-10;

const PARAM_TOL: f64 = 1e-12;

/// Product-basis indices.
pub mod product {
    pub const EE: usize = 0;
    pub const EG: usize = 1;
    pub const GE: usize = 2;
    pub const GG: usize = 3;
    pub const LABELS: [&str; 4] = ["|e1e2>", "|e1g2>", "|g1e2>", "|g1g2>"];
}

/// Collective-basis indices.
pub mod collective {
    pub const E: usize = 0;
    pub const S: usize = 1;
    pub const A: usize = 2;
    pub const G: usize = 3;
    pub const LABELS: [&str; 4] = ["|e>", "|s>", "|a>", "|g>"];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Product,
    Collective,
}

impl BasisKind {
    pub fn labels(self) -> [&'static str; 4] {
        match self {
            BasisKind::Product => product::LABELS,
            BasisKind::Collective => collective::LABELS,
        }
    }
}

/// Rows are the collective states expanded in the product basis, so
/// `ρ_collective = W ρ_product W†`.
pub fn collective_change_of_basis() -> Matrix4 {
    let r = FRAC_1_SQRT_2;
    Matrix4::from_real([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, r, r, 0.0],
        [0.0, r, -r, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// Re-expresses `m` from one basis in another.
pub fn collective_basis_transform(
    m: &HermitianMatrix4,
    from: BasisKind,
    to: BasisKind,
) -> HermitianMatrix4 {
    let w = collective_change_of_basis();
    match (from, to) {
        (BasisKind::Product, BasisKind::Collective) => m.conjugate_by(&w),
        (BasisKind::Collective, BasisKind::Product) => m.conjugate_by(&w.adjoint()),
        _ => *m,
    }
}

/// Populations of `|g⟩, |e⟩, |s⟩` and the two-photon coherence `ρ_eg = ⟨e|ρ|g⟩`.
///
/// The antisymmetric state is unpopulated and there are no one-photon
/// coherences. Instances always satisfy
///
/// * each population lies in `[0, 1]` and they sum to one within 1e-12;
/// * `|ρ_eg|² ≤ ρ_ee ρ_gg + 1e-12`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XStateParams {
    rho_gg: f64,
    rho_ee: f64,
    rho_ss: f64,
    #[serde(serialize_with = "qcore::serialize_complex")]
    rho_eg: ComplexScalar,
}

impl XStateParams {
    pub fn new(rho_gg: f64, rho_ee: f64, rho_ss: f64, rho_eg: ComplexScalar) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidStateParams(msg));
        if ![rho_gg, rho_ee, rho_ss, rho_eg.re, rho_eg.im]
            .iter()
            .all(|x| x.is_finite())
        {
            return invalid("non-finite value".into());
        }
        for (name, x) in [("rho_gg", rho_gg), ("rho_ee", rho_ee), ("rho_ss", rho_ss)] {
            if !(-PARAM_TOL..=1.0 + PARAM_TOL).contains(&x) {
                return invalid(format!("{name} = {x} lies outside [0, 1]"));
            }
        }
        let (rho_gg, rho_ee, rho_ss) = (
            rho_gg.clamp(0.0, 1.0),
            rho_ee.clamp(0.0, 1.0),
            rho_ss.clamp(0.0, 1.0),
        );
        let trace = rho_gg + rho_ee + rho_ss;
        if (trace - 1.0).abs() > PARAM_TOL {
            return invalid(format!("populations sum to {trace}, not 1"));
        }
        if rho_eg.norm_sqr() > rho_ee * rho_gg + PARAM_TOL {
            return invalid(format!(
                "|rho_eg|^2 = {} exceeds rho_ee*rho_gg = {}",
                rho_eg.norm_sqr(),
                rho_ee * rho_gg
            ));
        }
        Ok(XStateParams {
            rho_gg,
            rho_ee,
            rho_ss,
            rho_eg,
        })
    }

    pub fn ground() -> Self {
        XStateParams {
            rho_gg: 1.0,
            rho_ee: 0.0,
            rho_ss: 0.0,
            rho_eg: Complex64::new(0.0, 0.0),
        }
    }

    pub fn rho_gg(&self) -> f64 {
        self.rho_gg
    }

    pub fn rho_ee(&self) -> f64 {
        self.rho_ee
    }

    pub fn rho_ss(&self) -> f64 {
        self.rho_ss
    }

    pub fn rho_eg(&self) -> ComplexScalar {
        self.rho_eg
    }

    /// `ρ_ge = conj(ρ_eg)`
    pub fn rho_ge(&self) -> ComplexScalar {
        self.rho_eg.conj()
    }

    pub fn to_density_matrix(&self, basis: BasisKind) -> HermitianMatrix4 {
        let mut m = Matrix4::zeros();
        let re = |x: f64| Complex64::new(x, 0.0);
        match basis {
            BasisKind::Product => {
                use product::*;
                m.0[EE][EE] = re(self.rho_ee);
                m.0[GG][GG] = re(self.rho_gg);
                m.0[EE][GG] = self.rho_eg;
                m.0[GG][EE] = self.rho_ge();
                let half = re(0.5 * self.rho_ss);
                for i in [EG, GE] {
                    for j in [EG, GE] {
                        m.0[i][j] = half;
                    }
                }
            }
            BasisKind::Collective => {
                use collective::*;
                m.0[E][E] = re(self.rho_ee);
                m.0[S][S] = re(self.rho_ss);
                m.0[G][G] = re(self.rho_gg);
                m.0[E][G] = self.rho_eg;
                m.0[G][E] = self.rho_ge();
            }
        }
        HermitianMatrix4::new(m).expect("X-form matrix is Hermitian by construction")
    }

    /// Recovers the parameters from a density matrix.
    ///
    /// Fails with [`Error::NotXForm`] when an entry outside the X pattern
    /// exceeds `tol` (one-photon coherences, antisymmetric population or an
    /// unequal central block), and with [`Error::NotPhysical`] when the trace
    /// or positivity checks fail.
    pub fn from_density_matrix(m: &HermitianMatrix4, basis: BasisKind, tol: f64) -> Result<Self> {
        check_x_pattern(m, basis, tol)?;

        let trace = m.trace();
        if (trace - 1.0).abs() > tol {
            return Err(Error::NotPhysical(format!("trace is {trace}, not 1")));
        }
        let min_eig = qcore::eigen_hermitian(m).min_eigenvalue();
        if min_eig < -tol {
            return Err(Error::NotPhysical(format!(
                "not positive semidefinite (min eigenvalue {min_eig:e})"
            )));
        }

        let c = collective_basis_transform(m, basis, BasisKind::Collective);
        use collective::*;
        let rho_ee = c[(E, E)].re.max(0.0) / trace;
        let rho_ss = c[(S, S)].re.max(0.0) / trace;
        let rho_gg = c[(G, G)].re.max(0.0) / trace;
        let mut rho_eg = c[(E, G)] / trace;
        let bound = (rho_ee * rho_gg).sqrt();
        if rho_eg.norm() > bound {
            rho_eg *= bound / rho_eg.norm();
        }
        XStateParams::new(rho_gg, rho_ee, rho_ss, rho_eg)
    }
}

fn check_x_pattern(m: &HermitianMatrix4, basis: BasisKind, tol: f64) -> Result<()> {
    let labels = basis.labels();
    let not_x = |i: usize, j: usize, magnitude: f64| Error::NotXForm {
        position: format!("({}, {})", labels[i], labels[j]),
        magnitude,
    };
    let allowed: &[(usize, usize)] = match basis {
        BasisKind::Product => {
            use product::*;
            &[
                (EE, EE),
                (EE, GG),
                (GG, EE),
                (GG, GG),
                (EG, EG),
                (EG, GE),
                (GE, EG),
                (GE, GE),
            ]
        }
        BasisKind::Collective => {
            use collective::*;
            &[(E, E), (E, G), (G, E), (G, G), (S, S)]
        }
    };
    for i in 0..4 {
        for j in 0..4 {
            let z = m[(i, j)].norm();
            if !allowed.contains(&(i, j)) && z > tol {
                return Err(not_x(i, j, z));
            }
        }
    }
    if basis == BasisKind::Product {
        // the central block must be (ρ_ss/2)·[[1,1],[1,1]]; anything else
        // means population or coherence on |a⟩
        use product::*;
        let reference = m[(EG, EG)];
        for (i, j) in [(GE, GE), (EG, GE), (GE, EG)] {
            let dev = (m[(i, j)] - reference).norm();
            if dev > tol {
                return Err(not_x(i, j, dev));
            }
        }
    }
    Ok(())
}

/// Eigenstates and probabilities of an X-form density matrix.
///
/// Vectors are expressed in the collective basis. `psi_plus`/`psi_minus` are
/// the two-photon states in the `{|e⟩, |g⟩}` plane.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub psi_plus: StateVector4,
    pub psi_minus: StateVector4,
    pub psi_s: StateVector4,
    pub psi_a: StateVector4,
    pub pi_plus: f64,
    pub pi_minus: f64,
    pub pi_s: f64,
    pub pi_a: f64,
}

impl SpectralDecomposition {
    pub fn pairs(&self) -> [(f64, StateVector4); 4] {
        [
            (self.pi_plus, self.psi_plus),
            (self.pi_minus, self.psi_minus),
            (self.pi_s, self.psi_s),
            (self.pi_a, self.psi_a),
        ]
    }

    /// `Σ_k Π_k |Ψ_k⟩⟨Ψ_k|` in the requested basis.
    pub fn reconstruct(&self, basis: BasisKind) -> HermitianMatrix4 {
        let m = self.pairs().iter().fold(Matrix4::zeros(), |acc, (p, v)| {
            acc + v.projector().as_matrix().scale(Complex64::new(*p, 0.0))
        });
        let m = HermitianMatrix4::new(m).expect("sum of weighted projectors is Hermitian");
        collective_basis_transform(&m, BasisKind::Collective, basis)
    }
}

/// Closed-form diagonalisation of the X-form density matrix.
pub fn spectral_decompose(p: &XStateParams) -> SpectralDecomposition {
    let (gg, ee, eg) = (p.rho_gg, p.rho_ee, p.rho_eg);
    let mean = 0.5 * (gg + ee);
    let half_gap = 0.5 * ((gg - ee).powi(2) + 4.0 * eg.norm_sqr()).sqrt();
    let pi_plus = mean + half_gap;
    let pi_minus = mean - half_gap;

    let in_eg_plane = |e: ComplexScalar, g: ComplexScalar| {
        let mut a = [Complex64::new(0.0, 0.0); 4];
        a[collective::E] = e;
        a[collective::G] = g;
        a
    };
    let re = |x: f64| Complex64::new(x, 0.0);

    // Each eigenvalue has two algebraically equivalent eigenvector forms. One
    // of them vanishes when ρ_eg = 0, depending on whether ρ_ee or ρ_gg is
    // larger; take whichever is better conditioned.
    let eigvec = |lambda: f64| {
        let a = in_eg_plane(eg, re(lambda - ee));
        let b = in_eg_plane(re(lambda - gg), eg.conj());
        let norm = |v: &[ComplexScalar; 4]| v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        StateVector4::normalized(if norm(&a) >= norm(&b) { a } else { b })
    };

    let psi_plus = eigvec(pi_plus)
        .unwrap_or_else(|| StateVector4::basis(collective::G))
        .with_phase_convention();
    let psi_minus = match eigvec(pi_minus) {
        Some(v) if psi_plus.inner(&v).norm() < 1e-8 => v,
        // degenerate: complete psi_plus to an orthonormal pair
        _ => {
            let x = psi_plus.amplitudes();
            StateVector4::normalized(in_eg_plane(
                -x[collective::G].conj(),
                x[collective::E].conj(),
            ))
            .expect("psi_plus is normalised")
        }
    }
    .with_phase_convention();

    SpectralDecomposition {
        psi_plus,
        psi_minus,
        psi_s: StateVector4::basis(collective::S),
        psi_a: StateVector4::basis(collective::A),
        pi_plus,
        pi_minus,
        pi_s: p.rho_ss,
        pi_a: 0.0,
    }
}
