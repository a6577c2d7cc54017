//! Entanglement and spin squeezing in the two-atom Dicke model.
//!
//! The crate works with two-atom density matrices of X form (populations of
//! `|g⟩`, `|e⟩`, `|s⟩` plus the two-photon coherence `ρ_eg`) and provides
//!
//! * [`qcore`]: 4×4 complex linear algebra and a Jacobi eigensolver;
//! * [`dicke`]: the collective basis, [`XStateParams`] and its spectral decomposition;
//! * [`witness`]: partial-transpose negativity, the coherence and population
//!   entanglement criteria, and spin-squeezing parameters;
//! * [`fields`]: analytic steady states under thermal and squeezed-vacuum driving.

#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

pub mod dicke;
pub mod error;
pub mod fields;
pub mod qcore;
pub mod witness;

pub use dicke::{
    collective_basis_transform, spectral_decompose, BasisKind, SpectralDecomposition,
    XStateParams, X_FORM_TOL,
};
pub use error::{Error, Result};
pub use fields::{
    classical_witness_parameter, quantum_pure_state, steady_state, FieldKind, FieldParams,
};
pub use qcore::{
    eigen_hermitian, is_positive_semidefinite, matmul, ComplexScalar, EigenDecomposition4,
    HermitianMatrix4, Matrix4, StateVector4,
};
pub use witness::{
    entanglement_report, partial_transpose, pt_eigenvalues_closed_form, spin_moments,
    squeezing_ku, squeezing_wineland, witness_report, EntanglementReport, PtEigenvalues,
    SpinMoments, SqueezingResult, Subsystem, WitnessReport,
};
