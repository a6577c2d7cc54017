//! Fixed-size complex linear algebra for two-qubit operators.
//!
//! Everything here is 4×4: matrices, state vectors and a cyclic Jacobi
//! eigensolver for Hermitian matrices. The solver is the numerical reference
//! against which the closed-form spectra elsewhere in the crate are checked.

use std::ops::{Add, Index, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Amplitude type used for every matrix and vector element.
pub type ComplexScalar = Complex64;

/// Deviation from Hermiticity accepted when constructing a [`HermitianMatrix4`].
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigenvalues closer than this are treated as one degenerate cluster.
pub const DEGENERACY_TOL: f64 = 1e-10;

const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 100;

const ZERO: ComplexScalar = Complex64::new(0.0, 0.0);
const ONE: ComplexScalar = Complex64::new(1.0, 0.0);

/// A general complex 4×4 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[ComplexScalar; 4]; 4]);

impl Matrix4 {
    pub fn zeros() -> Self {
        Matrix4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::from_real_diag([1.0; 4])
    }

    pub fn from_real_diag(d: [f64; 4]) -> Self {
        let mut m = Self::zeros();
        for (k, &x) in d.iter().enumerate() {
            m.0[k][k] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = Complex64::new(rows[i][j], 0.0);
            }
        }
        m
    }

    /// Kronecker product of two 2×2 matrices, first factor on the high index bit.
    pub fn kron2(a: &[[ComplexScalar; 2]; 2], b: &[[ComplexScalar; 2]; 2]) -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
            }
        }
        m
    }

    /// `|v⟩⟨w|`
    pub fn outer(v: &[ComplexScalar; 4], w: &[ComplexScalar; 4]) -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = v[i] * w[j].conj();
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> ComplexScalar {
        (0..4).map(|k| self.0[k][k]).sum()
    }

    pub fn scale(&self, s: ComplexScalar) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|z| *z *= s);
        m
    }

    pub fn apply(&self, v: &[ComplexScalar; 4]) -> [ComplexScalar; 4] {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix4) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    s += self.0[i][j].norm_sqr();
                }
            }
        }
        s.sqrt()
    }

    fn max_hermitian_deviation(&self) -> (usize, usize, f64) {
        let mut worst = (0, 0, 0.0);
        for i in 0..4 {
            for j in i..4 {
                let d = (self.0[i][j] - self.0[j][i].conj()).norm();
                if d > worst.2 {
                    worst = (i, j, d);
                }
            }
        }
        worst
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = ComplexScalar;

    fn index(&self, (i, j): (usize, usize)) -> &ComplexScalar {
        &self.0[i][j]
    }
}

impl Mul for &Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: &Matrix4) -> Matrix4 {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        m
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: Matrix4) -> Matrix4 {
        #[allow(clippy::op_ref)]
        let m = &self * &rhs;
        m
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;

    fn add(mut self, rhs: Matrix4) -> Matrix4 {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl Add for &Matrix4 {
    type Output = Matrix4;

    fn add(self, rhs: &Matrix4) -> Matrix4 {
        *self + *rhs
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;

    fn sub(mut self, rhs: Matrix4) -> Matrix4 {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] -= rhs.0[i][j];
            }
        }
        self
    }
}

/// Serialises a complex scalar as `{"re": .., "im": ..}`.
pub fn serialize_complex<S: serde::Serializer>(
    z: &ComplexScalar,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut s = serializer.serialize_struct("Complex", 2)?;
    s.serialize_field("re", &z.re)?;
    s.serialize_field("im", &z.im)?;
    s.end()
}

/// Standard matrix product.
pub fn matmul(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    a * b
}

/// A 4×4 Hermitian matrix.
///
/// Construction checks Hermiticity to within [`HERMITIAN_TOL`] and then stores
/// the exactly symmetrised matrix `(m + m†)/2`, so the lower triangle is always
/// the conjugate of the upper one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix4(Matrix4);

impl HermitianMatrix4 {
    pub fn new(m: Matrix4) -> Result<Self> {
        let (row, col, deviation) = m.max_hermitian_deviation();
        if !m.0.iter().flatten().all(|z| z.is_finite()) {
            return Err(Error::NotPhysical("matrix has non-finite entries".into()));
        }
        if deviation > HERMITIAN_TOL {
            return Err(Error::NonHermitianInput {
                row,
                col,
                deviation,
            });
        }
        Ok(Self::symmetrized(&m))
    }

    pub fn from_real_diag(d: [f64; 4]) -> Self {
        HermitianMatrix4(Matrix4::from_real_diag(d))
    }

    fn symmetrized(m: &Matrix4) -> Self {
        let mut h = Matrix4::zeros();
        for i in 0..4 {
            h.0[i][i] = Complex64::new(m.0[i][i].re, 0.0);
            for j in (i + 1)..4 {
                let z = (m.0[i][j] + m.0[j][i].conj()) * 0.5;
                h.0[i][j] = z;
                h.0[j][i] = z.conj();
            }
        }
        HermitianMatrix4(h)
    }

    pub fn as_matrix(&self) -> &Matrix4 {
        &self.0
    }

    pub fn entries(&self) -> &[[ComplexScalar; 4]; 4] {
        &self.0 .0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    /// `u · self · u†`
    pub fn conjugate_by(&self, u: &Matrix4) -> HermitianMatrix4 {
        Self::symmetrized(&((u * &self.0) * u.adjoint()))
    }

    /// `Tr(self²)`, the purity when `self` is a density matrix.
    pub fn purity(&self) -> f64 {
        (self.0 * self.0).trace().re
    }

    /// `Tr(self · op)`
    pub fn expectation(&self, op: &Matrix4) -> ComplexScalar {
        (&self.0 * op).trace()
    }
}

impl Index<(usize, usize)> for HermitianMatrix4 {
    type Output = ComplexScalar;

    fn index(&self, idx: (usize, usize)) -> &ComplexScalar {
        &self.0[idx]
    }
}

/// A normalised 4-component state vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector4([ComplexScalar; 4]);

impl StateVector4 {
    /// Normalises `amplitudes`; `None` for the zero vector.
    pub fn normalized(amplitudes: [ComplexScalar; 4]) -> Option<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return None;
        }
        Some(StateVector4(amplitudes.map(|z| z / norm)))
    }

    pub fn basis(k: usize) -> Self {
        let mut a = [ZERO; 4];
        a[k] = ONE;
        StateVector4(a)
    }

    pub fn amplitudes(&self) -> &[ComplexScalar; 4] {
        &self.0
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector4) -> ComplexScalar {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn projector(&self) -> HermitianMatrix4 {
        HermitianMatrix4::symmetrized(&Matrix4::outer(&self.0, &self.0))
    }

    /// Rotates the global phase so the largest-magnitude entry is real and
    /// positive. The first entry within 1e-12 of the maximum wins ties.
    pub fn with_phase_convention(&self) -> Self {
        let max = self.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let k = self
            .0
            .iter()
            .position(|z| z.norm() >= max - 1e-12)
            .unwrap_or(0);
        let pivot = self.0[k];
        if pivot.norm() == 0.0 {
            return *self;
        }
        let phase = pivot.conj() / pivot.norm();
        let mut a = self.0.map(|z| z * phase);
        a[k] = Complex64::new(a[k].norm(), 0.0);
        StateVector4(a)
    }
}

/// Full spectral decomposition of a Hermitian 4×4 matrix.
///
/// Eigenvalues are ascending; `eigenvectors[k]` belongs to `eigenvalues[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition4 {
    pub eigenvalues: [f64; 4],
    pub eigenvectors: [StateVector4; 4],
}

impl EigenDecomposition4 {
    /// `Σ_k λ_k |v_k⟩⟨v_k|`
    pub fn reconstruct(&self) -> Matrix4 {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .fold(Matrix4::zeros(), |acc, (&l, v)| {
                acc + v.projector().as_matrix().scale(Complex64::new(l, 0.0))
            })
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Diagonalises `m` with cyclic complex Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below 1e-14 or after
/// 100 sweeps. Eigenvectors follow the phase convention of
/// [`StateVector4::with_phase_convention`]; inside a degenerate cluster they
/// are re-orthonormalised, so only the cluster's subspace is meaningful.
pub fn eigen_hermitian(m: &HermitianMatrix4) -> EigenDecomposition4 {
    let mut a = *m.as_matrix();
    let mut v = Matrix4::identity();

    for _ in 0..JACOBI_MAX_SWEEPS {
        if a.off_diagonal_norm() < JACOBI_OFF_DIAGONAL_TOL {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut pairs: Vec<(f64, [ComplexScalar; 4])> = (0..4)
        .map(|k| (a.0[k][k].re, [v.0[0][k], v.0[1][k], v.0[2][k], v.0[3][k]]))
        .collect();
    for pair in pairs.iter_mut() {
        pair.1 = *StateVector4(pair.1).with_phase_convention().amplitudes();
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then_with(|| lex_cmp(&x.1, &y.1)));

    orthonormalize_clusters(&mut pairs);

    EigenDecomposition4 {
        eigenvalues: [pairs[0].0, pairs[1].0, pairs[2].0, pairs[3].0],
        eigenvectors: [0, 1, 2, 3].map(|k| StateVector4(pairs[k].1)),
    }
}

/// One Jacobi rotation annihilating `a[p][q]`, accumulated into `v`.
fn rotate(a: &mut Matrix4, v: &mut Matrix4, p: usize, q: usize) {
    let apq = a.0[p][q];
    let r = apq.norm();
    if r < f64::MIN_POSITIVE {
        return;
    }
    let phase = apq.conj() / r; // e^{-iφ}
    let app = a.0[p][p].re;
    let aqq = a.0[q][q].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    // U = diag(1, e^{-iφ}) · [[c, s], [-s, c]] on the (p, q) plane.
    let u00 = Complex64::new(c, 0.0);
    let u01 = Complex64::new(s, 0.0);
    let u10 = phase * -s;
    let u11 = phase * c;

    for k in 0..4 {
        let (akp, akq) = (a.0[k][p], a.0[k][q]);
        a.0[k][p] = akp * u00 + akq * u10;
        a.0[k][q] = akp * u01 + akq * u11;
        let (vkp, vkq) = (v.0[k][p], v.0[k][q]);
        v.0[k][p] = vkp * u00 + vkq * u10;
        v.0[k][q] = vkp * u01 + vkq * u11;
    }
    for k in 0..4 {
        let (apk, aqk) = (a.0[p][k], a.0[q][k]);
        a.0[p][k] = u00.conj() * apk + u10.conj() * aqk;
        a.0[q][k] = u01.conj() * apk + u11.conj() * aqk;
    }
    a.0[p][q] = ZERO;
    a.0[q][p] = ZERO;
    a.0[p][p] = Complex64::new(a.0[p][p].re, 0.0);
    a.0[q][q] = Complex64::new(a.0[q][q].re, 0.0);
}

fn lex_cmp(x: &[ComplexScalar; 4], y: &[ComplexScalar; 4]) -> std::cmp::Ordering {
    x.iter()
        .zip(y)
        .map(|(a, b)| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

fn orthonormalize_clusters(pairs: &mut [(f64, [ComplexScalar; 4])]) {
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && pairs[end].0 - pairs[end - 1].0 < DEGENERACY_TOL {
            end += 1;
        }
        if end - start > 1 {
            for i in start..end {
                let mut w = pairs[i].1;
                for j in start..i {
                    let u = StateVector4(pairs[j].1);
                    let overlap = u.inner(&StateVector4(w));
                    for k in 0..4 {
                        w[k] -= u.0[k] * overlap;
                    }
                }
                if let Some(n) = StateVector4::normalized(w) {
                    pairs[i].1 = *n.with_phase_convention().amplitudes();
                }
            }
        }
        start = end;
    }
}

/// True iff the smallest eigenvalue of `m` is at least `-tol`.
pub fn is_positive_semidefinite(m: &HermitianMatrix4, tol: f64) -> bool {
    eigen_hermitian(m).min_eigenvalue() >= -tol
}
