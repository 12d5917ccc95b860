//! Complex quaternion algebra ℍ_ℂ.
//!
//! A complex quaternion is a scalar-vector pair z = (z⁴, 𝐳) with all four
//! components in ℂ and basis units obeying eᵢ² = −1, eᵢeⱼ = εᵢⱼᵏeₖ. The
//! algebra is isomorphic to M₂(ℂ) through e₁ ↦ iσ₁, e₂ ↦ −iσ₂, e₃ ↦ iσ₃,
//! which is how determinants, inverses and square roots are defined here.

use num_complex::Complex64;
use thiserror::Error;

use crate::mat::{self, C2, C4};

#[derive(Debug, Error, PartialEq)]
pub enum QuatError {
    /// det z vanished relative to the size of z, so z has no inverse.
    #[error("complex quaternion is not invertible (|det| = {det_abs:e})")]
    NonInvertible { det_abs: f64 },
    /// A Hermitian square root was requested for a matrix with an
    /// eigenvalue at or below the positivity threshold.
    #[error("matrix is not positive definite (min eigenvalue = {min_eig:e})")]
    NotPositiveDefinite { min_eig: f64 },
}

/// Complex 3-vector dot product, analytically continued (no conjugation).
pub fn vdot(a: &[Complex64; 3], b: &[Complex64; 3]) -> Complex64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Complex 3-vector cross product, analytically continued.
pub fn vcross(a: &[Complex64; 3], b: &[Complex64; 3]) -> [Complex64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// An element of ℍ_ℂ: scalar part `s` (= z⁴) and vector part `v` (= 𝐳).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexQuaternion {
    pub s: Complex64,
    pub v: [Complex64; 3],
}

pub type Quat = ComplexQuaternion;

impl ComplexQuaternion {
    pub const fn new(s: Complex64, v: [Complex64; 3]) -> Self {
        Self { s, v }
    }

    pub fn zero() -> Self {
        Self::scalar(Complex64::new(0.0, 0.0))
    }

    pub fn one() -> Self {
        Self::scalar(Complex64::new(1.0, 0.0))
    }

    pub fn scalar(s: Complex64) -> Self {
        Self { s, v: [Complex64::new(0.0, 0.0); 3] }
    }

    pub fn real_scalar(s: f64) -> Self {
        Self::scalar(Complex64::new(s, 0.0))
    }

    pub fn vector(v: [Complex64; 3]) -> Self {
        Self { s: Complex64::new(0.0, 0.0), v }
    }

    pub fn real_vector(v: [f64; 3]) -> Self {
        Self::vector([
            Complex64::new(v[0], 0.0),
            Complex64::new(v[1], 0.0),
            Complex64::new(v[2], 0.0),
        ])
    }

    /// The basis unit eᵢ, i ∈ {0,1,2}.
    pub fn e(i: usize) -> Self {
        let mut v = [Complex64::new(0.0, 0.0); 3];
        v[i] = Complex64::new(1.0, 0.0);
        Self::vector(v)
    }

    pub fn from_components(c: [Complex64; 4]) -> Self {
        // component order (z¹, z², z³, z⁴)
        Self { s: c[3], v: [c[0], c[1], c[2]] }
    }

    pub fn components(&self) -> [Complex64; 4] {
        [self.v[0], self.v[1], self.v[2], self.s]
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.s
    }

    pub fn vector_part(&self) -> Self {
        Self::vector(self.v)
    }

    /// Complex conjugate z̄ (componentwise conjugation).
    pub fn conj(&self) -> Self {
        Self {
            s: self.s.conj(),
            v: [self.v[0].conj(), self.v[1].conj(), self.v[2].conj()],
        }
    }

    /// Quaternionic conjugate z̃ = (z⁴, −𝐳).
    pub fn quat_conj(&self) -> Self {
        Self { s: self.s, v: [-self.v[0], -self.v[1], -self.v[2]] }
    }

    /// Adjoint z* = conj(z̃) = (z̄⁴, −𝐳̄).
    pub fn adjoint(&self) -> Self {
        self.quat_conj().conj()
    }

    /// The matrix-picture conjugate z^cc, with Z(z^cc) the entrywise
    /// conjugate of Z(z); equals −e₂ z̄ e₂.
    pub fn cc(&self) -> Self {
        Self {
            s: self.s.conj(),
            v: [-self.v[0].conj(), self.v[1].conj(), -self.v[2].conj()],
        }
    }

    /// det z = (z¹)² + (z²)² + (z³)² + (z⁴)².
    pub fn det(&self) -> Complex64 {
        self.s * self.s + vdot(&self.v, &self.v)
    }

    /// Hermitian square norm Σ|z^a|² (used for scale-aware thresholds).
    pub fn herm_norm_sq(&self) -> f64 {
        self.s.norm_sqr() + self.v.iter().map(|c| c.norm_sqr()).sum::<f64>()
    }

    /// Largest component magnitude.
    pub fn max_abs(&self) -> f64 {
        self.components().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.components().iter().all(|c| c.im.abs() <= tol)
    }

    pub fn is_pure_vector(&self, tol: f64) -> bool {
        self.s.norm() <= tol
    }

    /// z⁻¹ = z̃ / det z. Fails when |det z| < 1e-12·(1 + ‖z‖²), which
    /// signals a null quaternion at the working precision.
    pub fn inverse(&self) -> Result<Self, QuatError> {
        let det = self.det();
        let threshold = 1e-12 * (1.0 + self.herm_norm_sq());
        if det.norm() < threshold {
            return Err(QuatError::NonInvertible { det_abs: det.norm() });
        }
        Ok(self.quat_conj() * det.inv())
    }

    /// 2×2 matrix picture Z(z) of Eq-style e₁ ↦ iσ₁, e₂ ↦ −iσ₂, e₃ ↦ iσ₃.
    pub fn to_matrix(&self) -> Matrix2C {
        let i = Complex64::new(0.0, 1.0);
        Matrix2C([
            [self.s + i * self.v[2], i * self.v[0] - self.v[1]],
            [i * self.v[0] + self.v[1], self.s - i * self.v[2]],
        ])
    }

    pub fn from_matrix(m: &Matrix2C) -> Self {
        let i = Complex64::new(0.0, 1.0);
        let half = Complex64::new(0.5, 0.0);
        let s = (m.0[0][0] + m.0[1][1]) * half;
        let z3 = (m.0[0][0] - m.0[1][1]) * half / i;
        let z1 = (m.0[0][1] + m.0[1][0]) * half / i;
        let z2 = (m.0[1][0] - m.0[0][1]) * half;
        Self { s, v: [z1, z2, z3] }
    }

    /// Square root of a quaternion whose matrix picture is Hermitian
    /// positive definite (real scalar part, purely imaginary vector part).
    pub fn sqrt_hermitian(&self) -> Result<Self, QuatError> {
        let m = self.to_matrix().hermitian_sqrt()?;
        Ok(Self::from_matrix(&m))
    }
}

impl std::ops::Add for ComplexQuaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            s: self.s + rhs.s,
            v: [self.v[0] + rhs.v[0], self.v[1] + rhs.v[1], self.v[2] + rhs.v[2]],
        }
    }
}

impl std::ops::Sub for ComplexQuaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            s: self.s - rhs.s,
            v: [self.v[0] - rhs.v[0], self.v[1] - rhs.v[1], self.v[2] - rhs.v[2]],
        }
    }
}

impl std::ops::Neg for ComplexQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self { s: -self.s, v: [-self.v[0], -self.v[1], -self.v[2]] }
    }
}

impl std::ops::Mul for ComplexQuaternion {
    type Output = Self;
    /// Quaternion product (z⁴z′⁴ − 𝐳·𝐳′, z⁴𝐳′ + z′⁴𝐳 + 𝐳×𝐳′).
    fn mul(self, rhs: Self) -> Self {
        let scalar = self.s * rhs.s - vdot(&self.v, &rhs.v);
        let cross = vcross(&self.v, &rhs.v);
        let v = [
            self.s * rhs.v[0] + rhs.s * self.v[0] + cross[0],
            self.s * rhs.v[1] + rhs.s * self.v[1] + cross[1],
            self.s * rhs.v[2] + rhs.s * self.v[2] + cross[2],
        ];
        Self { s: scalar, v }
    }
}

impl std::ops::Mul<Complex64> for ComplexQuaternion {
    type Output = Self;
    fn mul(self, rhs: Complex64) -> Self {
        Self {
            s: self.s * rhs,
            v: [self.v[0] * rhs, self.v[1] * rhs, self.v[2] * rhs],
        }
    }
}

impl std::ops::Mul<f64> for ComplexQuaternion {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self * Complex64::new(rhs, 0.0)
    }
}

/// Row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2C(pub C2);

impl Matrix2C {
    pub fn identity() -> Self {
        Self(mat::c2_identity())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(mat::c2_mul(&self.0, &other.0))
    }

    pub fn det(&self) -> Complex64 {
        mat::c2_det(&self.0)
    }

    pub fn adjoint(&self) -> Self {
        Self(mat::c2_adjoint(&self.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(mat::c2_sub(&self.0, &other.0))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut m = self.0;
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e *= c;
            }
        }
        Self(m)
    }

    pub fn inf_norm(&self) -> f64 {
        mat::c2_inf_norm(&self.0)
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Hermitian positive-definite square root,
    /// S = (M + √(det M)·1) / √(tr M + 2√(det M)).
    pub fn hermitian_sqrt(&self) -> Result<Self, QuatError> {
        let eigs = mat::c2_hermitian_eigenvalues(&self.0);
        if eigs[0] <= 1e-12 {
            return Err(QuatError::NotPositiveDefinite { min_eig: eigs[0] });
        }
        let det = self.det().re.sqrt();
        let denom = (self.trace().re + 2.0 * det).sqrt();
        let mut m = self.0;
        m[0][0] += Complex64::new(det, 0.0);
        m[1][1] += Complex64::new(det, 0.0);
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e /= Complex64::new(denom, 0.0);
            }
        }
        Ok(Self(m))
    }
}

/// 2×2 matrix with complex quaternionic entries (the 4×4 picture in blocks).
#[derive(Debug, Clone, Copy)]
pub struct QuatMatrix2 {
    pub a: ComplexQuaternion,
    pub b: ComplexQuaternion,
    pub c: ComplexQuaternion,
    pub d: ComplexQuaternion,
}

impl QuatMatrix2 {
    pub fn new(a: Quat, b: Quat, c: Quat, d: Quat) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(Quat::one(), Quat::zero(), Quat::zero(), Quat::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { a: self.a + o.a, b: self.b + o.b, c: self.c + o.c, d: self.d + o.d }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { a: self.a - o.a, b: self.b - o.b, c: self.c - o.c, d: self.d - o.d }
    }

    pub fn neg(&self) -> Self {
        Self { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn scale(&self, f: Complex64) -> Self {
        Self { a: self.a * f, b: self.b * f, c: self.c * f, d: self.d * f }
    }

    pub fn max_abs(&self) -> f64 {
        [self.a, self.b, self.c, self.d]
            .iter()
            .map(|q| q.max_abs())
            .fold(0.0, f64::max)
    }

    /// Commutator [self, o].
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// The associated 4×4 complex matrix (each block through Z).
    pub fn to_complex4(&self) -> C4 {
        let blocks = [
            [self.a.to_matrix(), self.b.to_matrix()],
            [self.c.to_matrix(), self.d.to_matrix()],
        ];
        let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
        for bi in 0..2 {
            for bj in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        out[2 * bi + i][2 * bj + j] = blocks[bi][bj].0[i][j];
                    }
                }
            }
        }
        out
    }

    /// Determinant of the associated 4×4 matrix via the quaternionic block
    /// formulas, choosing the first invertible pivot; falls back to the
    /// 4×4 complex determinant when all blocks are degenerate.
    pub fn block_det(&self) -> Complex64 {
        if let Ok(ai) = self.a.inverse() {
            return self.a.det() * (self.d - self.c * ai * self.b).det();
        }
        if let Ok(bi) = self.b.inverse() {
            return self.b.det() * (self.c - self.d * bi * self.a).det();
        }
        if let Ok(ci) = self.c.inverse() {
            return self.c.det() * (self.b - self.a * ci * self.d).det();
        }
        if let Ok(di) = self.d.inverse() {
            return self.d.det() * (self.a - self.b * di * self.c).det();
        }
        mat::c4_det(&self.to_complex4())
    }

    /// All four block-determinant formulas that apply (pivot invertible),
    /// for cross-checks.
    pub fn block_det_all(&self) -> Vec<Complex64> {
        let mut out = Vec::new();
        if let Ok(ai) = self.a.inverse() {
            out.push(self.a.det() * (self.d - self.c * ai * self.b).det());
        }
        if let Ok(bi) = self.b.inverse() {
            out.push(self.b.det() * (self.c - self.d * bi * self.a).det());
        }
        if let Ok(ci) = self.c.inverse() {
            out.push(self.c.det() * (self.b - self.a * ci * self.d).det());
        }
        if let Ok(di) = self.d.inverse() {
            out.push(self.d.det() * (self.a - self.b * di * self.c).det());
        }
        out
    }
}
