#![allow(clippy::needless_range_loop)]

use std::f64::consts::PI;

use dicke_core::dicke::collective;
use dicke_core::{
    collective_basis_transform, eigen_hermitian, entanglement_report, partial_transpose,
    pt_eigenvalues_closed_form, spectral_decompose, spin_moments, squeezing_ku, steady_state,
    BasisKind, ComplexScalar, FieldKind, FieldParams, HermitianMatrix4, Matrix4, Subsystem,
    XStateParams, X_FORM_TOL,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn x_state() -> impl Strategy<Value = XStateParams> {
    (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64, -PI..PI).prop_map(|(ss, frac, r, phase)| {
        let ee = (1.0 - ss) * frac;
        let gg = 1.0 - ss - ee;
        let eg = Complex64::from_polar(r * (ee * gg).sqrt(), phase);
        XStateParams::new(gg, ee, ss, eg).unwrap()
    })
}

fn complex() -> impl Strategy<Value = ComplexScalar> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn hermitian() -> impl Strategy<Value = HermitianMatrix4> {
    proptest::array::uniform4(proptest::array::uniform4(complex())).prop_map(|rows| {
        let a = Matrix4(rows);
        HermitianMatrix4::new(a + a.adjoint()).unwrap()
    })
}

/// Product of Givens rotations with complex phases on every index pair.
fn givens_unitary() -> impl Strategy<Value = Matrix4> {
    proptest::collection::vec((-PI..PI, -PI..PI), 6).prop_map(|angles| {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut u = Matrix4::identity();
        for (&(p, q), &(theta, phi)) in pairs.iter().zip(&angles) {
            let mut g = Matrix4::identity();
            let (s, c) = theta.sin_cos();
            g.0[p][p] = Complex64::new(c, 0.0);
            g.0[q][q] = Complex64::new(c, 0.0);
            g.0[p][q] = Complex64::from_polar(-s, phi);
            g.0[q][p] = Complex64::from_polar(s, -phi);
            u = u * g;
        }
        u
    })
}

fn weighted_projectors(pairs: &[(f64, dicke_core::StateVector4)]) -> Matrix4 {
    pairs.iter().fold(Matrix4::zeros(), |acc, (w, v)| {
        acc + v.projector().as_matrix().scale(Complex64::new(*w, 0.0))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn eigensolver_reconstructs_input(m in hermitian()) {
        let e = eigen_hermitian(&m);
        prop_assert!(e.reconstruct().max_abs_diff(m.as_matrix()) < 1e-9);
        for k in 0..4 {
            for j in 0..k {
                prop_assert!(e.eigenvectors[j].inner(&e.eigenvectors[k]).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn eigenvalues_invariant_under_unitary_conjugation(m in hermitian(), u in givens_unitary()) {
        prop_assert!((u * u.adjoint()).max_abs_diff(&Matrix4::identity()) < 1e-12);
        let a = eigen_hermitian(&m).eigenvalues;
        let b = eigen_hermitian(&m.conjugate_by(&u)).eigenvalues;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn density_matrix_round_trip(p in x_state()) {
        for basis in [BasisKind::Product, BasisKind::Collective] {
            let m = p.to_density_matrix(basis);
            prop_assert!((m.trace() - 1.0).abs() < 1e-12);
            let q = XStateParams::from_density_matrix(&m, basis, X_FORM_TOL).unwrap();
            prop_assert!((q.rho_gg() - p.rho_gg()).abs() < 1e-12);
            prop_assert!((q.rho_ee() - p.rho_ee()).abs() < 1e-12);
            prop_assert!((q.rho_ss() - p.rho_ss()).abs() < 1e-12);
            prop_assert!((q.rho_eg() - p.rho_eg()).norm() < 1e-12);
        }
    }

    #[test]
    fn basis_transform_matches_direct_construction(p in x_state()) {
        let prod = p.to_density_matrix(BasisKind::Product);
        let coll = collective_basis_transform(&prod, BasisKind::Product, BasisKind::Collective);
        prop_assert!(coll.as_matrix().max_abs_diff(p.to_density_matrix(BasisKind::Collective).as_matrix()) < 1e-15);
        let a = eigen_hermitian(&prod).eigenvalues;
        let b = eigen_hermitian(&coll).eigenvalues;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn spectral_decomposition_invariants(p in x_state()) {
        let d = spectral_decompose(&p);
        prop_assert_eq!(d.pi_a, 0.0);
        prop_assert!((d.pi_plus + d.pi_minus + d.pi_s + d.pi_a - 1.0).abs() < 1e-12);
        let vs = [d.psi_plus, d.psi_minus, d.psi_s, d.psi_a];
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { 1.0 } else { 0.0 };
                prop_assert!((vs[i].inner(&vs[j]).norm() - expected).abs() < 1e-10);
            }
        }
        for basis in [BasisKind::Product, BasisKind::Collective] {
            let r = d.reconstruct(basis);
            prop_assert!(r.as_matrix().max_abs_diff(p.to_density_matrix(basis).as_matrix()) < 1e-10);
        }
    }

    #[test]
    fn spectral_decomposition_matches_eigensolver(p in x_state()) {
        let d = spectral_decompose(&p);
        let e = eigen_hermitian(&p.to_density_matrix(BasisKind::Collective));
        let mut closed = [d.pi_plus, d.pi_minus, d.pi_s, d.pi_a];
        closed.sort_by(f64::total_cmp);
        for (x, y) in closed.iter().zip(&e.eigenvalues) {
            prop_assert!((x - y).abs() < 1e-9);
        }
        // compare per-eigenvalue spectral projectors so degeneracies are harmless
        for &(pi, _) in d.pairs().iter() {
            let closed_proj = weighted_projectors(
                &d.pairs().iter().filter(|(q, _)| (q - pi).abs() < 1e-9).map(|&(_, v)| (1.0, v)).collect::<Vec<_>>(),
            );
            let numeric: Vec<_> = e.eigenvalues.iter().zip(&e.eigenvectors)
                .filter(|(l, _)| (*l - pi).abs() < 1e-9)
                .map(|(_, v)| (1.0, *v))
                .collect();
            prop_assert!(closed_proj.max_abs_diff(&weighted_projectors(&numeric)) < 1e-8);
        }
    }

    #[test]
    fn closed_form_pt_spectrum_matches_eigensolver(p in x_state()) {
        let m = p.to_density_matrix(BasisKind::Product);
        let closed = pt_eigenvalues_closed_form(&p).sorted();
        for sub in [Subsystem::First, Subsystem::Second] {
            let numeric = eigen_hermitian(&partial_transpose(&m, sub)).eigenvalues;
            for (x, y) in closed.iter().zip(&numeric) {
                prop_assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn entanglement_report_invariants(p in x_state()) {
        let r = entanglement_report(&p);
        prop_assert!((0.0..=1.0).contains(&r.negativity_e));
        prop_assert!(r.mu.mu_1p >= 0.0 && r.mu.mu_2p >= 0.0);
        prop_assert!(!(r.criterion_coherence && r.criterion_population));
        prop_assert_eq!(r.negativity_e > 0.0, r.criterion_coherence || r.criterion_population);
        prop_assert_eq!(r.criterion_coherence, p.rho_eg().norm() > 0.5 * p.rho_ss());
        prop_assert_eq!(
            r.criterion_population,
            p.rho_ss() > 2.0 * (p.rho_ee() * p.rho_gg()).sqrt()
        );
    }

    #[test]
    fn squeezing_implies_coherence_criterion(p in x_state()) {
        let s = squeezing_ku(&p);
        prop_assert!(s.xi_ku >= 0.0);
        if s.is_squeezed() {
            prop_assert!(entanglement_report(&p).criterion_coherence);
        }
    }

    #[test]
    fn x_states_have_no_transverse_mean_spin(p in x_state()) {
        let m = spin_moments(&p.to_density_matrix(BasisKind::Product)).unwrap();
        prop_assert!(m.mean_sx.abs() < 1e-12);
        prop_assert!(m.mean_sy.abs() < 1e-12);
        prop_assert!((m.mean_sz - (p.rho_ee() - p.rho_gg())).abs() < 1e-12);
    }

    #[test]
    fn optimal_angle_minimises_variance(p in x_state()) {
        let s = squeezing_ku(&p);
        let m = spin_moments(&p.to_density_matrix(BasisKind::Product)).unwrap();
        let at_opt = m.variance_at(s.theta_opt);
        prop_assert!((2.0 * at_opt - s.xi_ku).abs() < 1e-12);
        for k in 0..360 {
            let theta = k as f64 * PI / 180.0;
            let v = m.variance_at(theta);
            prop_assert!(v >= 0.0);
            prop_assert!(at_opt <= v + 1e-12);
        }
    }

    #[test]
    fn phase_of_coherence_only_rotates_the_angle(p in x_state(), shift in -1.0..1.0f64) {
        let rotated = XStateParams::new(
            p.rho_gg(), p.rho_ee(), p.rho_ss(),
            p.rho_eg() * Complex64::from_polar(1.0, shift),
        ).unwrap();
        let (a, b) = (entanglement_report(&p), entanglement_report(&rotated));
        prop_assert!((a.negativity_e - b.negativity_e).abs() < 1e-15);
        let (sa, sb) = (squeezing_ku(&p), squeezing_ku(&rotated));
        prop_assert!((sa.xi_ku - sb.xi_ku).abs() < 1e-15);
        if p.rho_eg().norm() > 1e-9 {
            // angles live on a circle of period π
            let d = (sb.theta_opt - sa.theta_opt + shift / 2.0).rem_euclid(PI);
            prop_assert!(d.min(PI - d) < 1e-9);
        }
    }
}

#[test]
fn degenerate_spectrum_compared_by_subspace() {
    let p = XStateParams::new(0.35, 0.35, 0.3, Complex64::new(0.0, 0.0)).unwrap();
    let d = spectral_decompose(&p);
    assert!((d.pi_plus - d.pi_minus).abs() < 1e-15);
    let closed = weighted_projectors(&[(1.0, d.psi_plus), (1.0, d.psi_minus)]);
    let e = eigen_hermitian(&p.to_density_matrix(BasisKind::Collective));
    let numeric: Vec<_> = e
        .eigenvalues
        .iter()
        .zip(&e.eigenvectors)
        .filter(|(l, _)| (**l - 0.35).abs() < 1e-10)
        .map(|(_, v)| (1.0, *v))
        .collect();
    assert_eq!(numeric.len(), 2);
    assert!(closed.max_abs_diff(&weighted_projectors(&numeric)) < 1e-12);
    let mut expected = Matrix4::zeros();
    expected.0[collective::E][collective::E] = Complex64::new(1.0, 0.0);
    expected.0[collective::G][collective::G] = Complex64::new(1.0, 0.0);
    assert!(closed.max_abs_diff(&expected) < 1e-15);
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| lo * (hi / lo).powf(k as f64 / (n - 1) as f64))
        .collect()
}

#[test]
fn steady_states_are_physical_on_a_log_grid() {
    for n in log_grid(1e-3, 1e3, 61) {
        for kind in [
            FieldKind::Thermal,
            FieldKind::ClassicalSqueezed,
            FieldKind::QuantumSqueezed,
        ] {
            let p = steady_state(&FieldParams::new(kind, n, 0.0, 0.3).unwrap());
            let m = p.to_density_matrix(BasisKind::Product);
            assert!((m.trace() - 1.0).abs() < 1e-12);
            assert!(dicke_core::is_positive_semidefinite(&m, 1e-10), "{kind:?} N={n}");
        }
        let custom = FieldParams::custom(n, Complex64::from_polar(0.5 * n, 1.0)).unwrap();
        let m = steady_state(&custom).to_density_matrix(BasisKind::Product);
        assert!(dicke_core::is_positive_semidefinite(&m, 1e-10));
    }
}

#[test]
fn thermal_field_never_entangles_or_squeezes() {
    for n in log_grid(1e-3, 1e3, 61) {
        let p = steady_state(&FieldParams::thermal(n).unwrap());
        let r = entanglement_report(&p);
        assert_eq!(r.negativity_e, 0.0);
        assert!(!r.criterion_coherence && !r.criterion_population);
        assert!(squeezing_ku(&p).xi_ku >= 1.0);
    }
}

#[test]
fn classical_field_entangles_only_below_half_a_photon() {
    for n in log_grid(1e-3, 1e3, 121) {
        let p = steady_state(&FieldParams::classical(n, 0.0).unwrap());
        let r = entanglement_report(&p);
        let param = dicke_core::classical_witness_parameter(n);
        assert!(!r.criterion_population);
        assert_eq!(r.negativity_e > 0.0, n < 0.5, "N={n}");
        assert!((r.negativity_e - param.max(0.0)).abs() < 1e-12);
        if param > 0.0 {
            assert!((squeezing_ku(&p).xi_ku - (1.0 - param)).abs() < 1e-12);
        }
    }
}

#[test]
fn quantum_field_entanglement_grows_with_intensity() {
    let mut last_e = 0.0;
    for n in log_grid(1e-3, 1e3, 121) {
        let p = steady_state(&FieldParams::quantum(n, 0.0).unwrap());
        let e = entanglement_report(&p).negativity_e;
        let xi = squeezing_ku(&p).xi_ku;
        assert!(e > last_e);
        assert!(xi < 1.0);
        assert!((e - (1.0 - xi)).abs() < 1e-12);
        last_e = e;
    }
}
