//! The Sp(4,ℝ) group engine in complex quaternionic form.
//!
//! Group elements are 2×2 quaternionic blocks g = [[a, b], [−b̄, ā]] with
//! aa* − bb* = 1 and a b̃ = −b ã. The module provides the one-parameter
//! subgroups of the time-space-Lorentz decomposition, membership and
//! composition, the Γ-embedding of the AdS₄ pseudo-sphere with the induced
//! two-to-one homomorphism onto SO₀(2,3), the TSL and Cartan
//! factorizations, Lie-algebra generators, the Möbius action on 𝒟⁽³⁾ and
//! the complex symplectic picture.

use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

use crate::domain::DomainPoint;
use crate::mat::{self, C4, R5};
use crate::quat::{Quat, QuatMatrix2};

#[derive(Debug, Error, PartialEq)]
pub enum Sp4Error {
    #[error("bad subgroup parameter: {0}")]
    BadParam(String),
    #[error("point violates the pseudo-sphere constraint (residual {residual:e})")]
    OffShell { residual: f64 },
    #[error("TSL factor fails the Lorentz-subgroup conditions (residual {residual:e})")]
    DecompositionOutOfRange { residual: f64 },
    #[error("Möbius denominator is singular (|det| = {det_abs:e})")]
    SingularDenominator { det_abs: f64 },
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const I: Complex64 = Complex64::new(0.0, 1.0);

fn check_unit_vector(u: &[f64; 3]) -> Result<(), Sp4Error> {
    let n: f64 = u.iter().map(|x| x * x).sum();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Sp4Error::BadParam(format!("direction has norm² {n}")));
    }
    Ok(())
}

/// A group element, stored through its first block row (a, b).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub a: Quat,
    pub b: Quat,
}

impl GroupElement {
    pub fn new(a: Quat, b: Quat) -> Self {
        Self { a, b }
    }

    pub fn identity() -> Self {
        Self::new(Quat::one(), Quat::zero())
    }

    /// Time rotation h(θ) = diag(e^{iθ/2}, e^{−iθ/2}).
    pub fn time(theta: f64) -> Self {
        Self::new(Quat::scalar((I * (theta / 2.0)).exp()), Quat::zero())
    }

    /// Spatial hyperbolic rotation s(ρ, û).
    pub fn space(rho: f64, u_hat: [f64; 3]) -> Result<Self, Sp4Error> {
        if rho < 0.0 {
            return Err(Sp4Error::BadParam(format!("negative rho {rho}")));
        }
        check_unit_vector(&u_hat)?;
        let a = Quat::real_scalar((rho / 2.0).cosh());
        let b = Quat::real_vector(u_hat) * (rho / 2.0).sinh();
        Ok(Self::new(a, b))
    }

    /// Space rotation r(ξ) = diag(ξ, ξ) for a unit real quaternion ξ.
    pub fn rotation(xi: Quat) -> Result<Self, Sp4Error> {
        if !xi.is_real(1e-10) {
            return Err(Sp4Error::BadParam("rotation parameter must be real".into()));
        }
        let det = xi.det();
        if (det - c(1.0, 0.0)).norm() > 1e-10 {
            return Err(Sp4Error::BadParam(format!("rotation quaternion norm² {det}")));
        }
        Ok(Self::new(xi, Quat::zero()))
    }

    /// Lorentz boost λ(ν, v̂) with rapidity ν and direction v̂.
    pub fn boost(nu: f64, v_hat: [f64; 3]) -> Result<Self, Sp4Error> {
        if nu < 0.0 {
            return Err(Sp4Error::BadParam(format!("negative rapidity {nu}")));
        }
        check_unit_vector(&v_hat)?;
        let a = Quat::real_scalar((nu / 2.0).cosh());
        let b = Quat::real_vector(v_hat) * (I * (nu / 2.0).sinh());
        Ok(Self::new(a, b))
    }

    /// Membership residuals (‖aa* − bb* − 1‖∞, ‖a b̃ + b ã‖∞).
    pub fn membership_residuals(&self) -> (f64, f64) {
        let r1 = (self.a * self.a.adjoint() - self.b * self.b.adjoint() - Quat::one()).max_abs();
        let r2 = (self.a * self.b.quat_conj() + self.b * self.a.quat_conj()).max_abs();
        (r1, r2)
    }

    pub fn is_member(&self, tol: f64) -> bool {
        let (r1, r2) = self.membership_residuals();
        r1 < tol && r2 < tol
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            self.a * other.a - self.b * other.b.conj(),
            self.a * other.b + self.b * other.a.conj(),
        )
    }

    /// g⁻¹ = [[a*, b̃], [−b*, ã]].
    pub fn inverse(&self) -> Self {
        Self::new(self.a.adjoint(), self.b.quat_conj())
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.a, -self.b)
    }

    pub fn to_quat_matrix(&self) -> QuatMatrix2 {
        QuatMatrix2::new(self.a, self.b, -self.b.conj(), self.a.conj())
    }

    /// The involution 𝔦(g) = ᵗg̃ = [[ã, −b*], [b̃, a*]].
    pub fn transpose_tilde(&self) -> QuatMatrix2 {
        QuatMatrix2::new(
            self.a.quat_conj(),
            -self.b.adjoint(),
            self.b.quat_conj(),
            self.a.adjoint(),
        )
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.a - other.a).max_abs().max((self.b - other.b).max_abs())
    }

    /// Möbius action 𝐳 ↦ (a𝐳 + b)(−b̄𝐳 + ā)⁻¹ on the bounded domain.
    pub fn mobius(&self, z: &DomainPoint) -> Result<DomainPoint, Sp4Error> {
        let zq = z.as_quat();
        let denom = -self.b.conj() * zq + self.a.conj();
        let det = denom.det();
        if det.norm() < 1e-12 {
            return Err(Sp4Error::SingularDenominator { det_abs: det.norm() });
        }
        let denom_inv = denom
            .inverse()
            .map_err(|_| Sp4Error::SingularDenominator { det_abs: det.norm() })?;
        let w = (self.a * zq + self.b) * denom_inv;
        // the scalar part vanishes identically for members
        DomainPoint::from_quat(&w, 1e-8 * (1.0 + w.max_abs()))
            .map_err(|_| Sp4Error::SingularDenominator { det_abs: det.norm() })
    }

    /// The algebraically equivalent form (𝐳 b* + a*)⁻¹(𝐳 ã − b̃).
    pub fn mobius_alt(&self, z: &DomainPoint) -> Result<DomainPoint, Sp4Error> {
        let zq = z.as_quat();
        let denom = zq * self.b.adjoint() + self.a.adjoint();
        let det = denom.det();
        let denom_inv = denom
            .inverse()
            .map_err(|_| Sp4Error::SingularDenominator { det_abs: det.norm() })?;
        let w = denom_inv * (zq * self.a.quat_conj() - self.b.quat_conj());
        DomainPoint::from_quat(&w, 1e-8 * (1.0 + w.max_abs()))
            .map_err(|_| Sp4Error::SingularDenominator { det_abs: det.norm() })
    }

    /// det(−b̄𝐳 + ā), the Möbius denominator determinant (the automorphy
    /// factor of the discrete-series action).
    pub fn mobius_denominator(&self, z: &DomainPoint) -> Complex64 {
        (-self.b.conj() * z.as_quat() + self.a.conj()).det()
    }
}

/// A point of the AdS₄ pseudo-sphere in ℝ^{2,3} coordinates (y⁵,y⁰,𝐲).
#[derive(Debug, Clone, Copy)]
pub struct AdSPoint {
    pub y5: f64,
    pub y0: f64,
    pub y: [f64; 3],
    pub kappa: f64,
}

impl AdSPoint {
    pub fn new(y5: f64, y0: f64, y: [f64; 3], kappa: f64) -> Self {
        Self { y5, y0, y, kappa }
    }

    /// The origin y_⊙ = (κ⁻¹, 0, 𝟎).
    pub fn base_point(kappa: f64) -> Self {
        Self::new(1.0 / kappa, 0.0, [0.0; 3], kappa)
    }

    pub fn coords(&self) -> [f64; 5] {
        [self.y5, self.y0, self.y[0], self.y[1], self.y[2]]
    }

    /// (y⁵)² + (y⁰)² − ‖𝐲‖² − κ⁻², relative to κ⁻².
    pub fn shell_residual(&self) -> f64 {
        let q = self.y5 * self.y5 + self.y0 * self.y0
            - self.y.iter().map(|x| x * x).sum::<f64>();
        let r2 = 1.0 / (self.kappa * self.kappa);
        (q - r2).abs() / r2
    }
}

/// Global coordinates (θ, ρ, û) for AdS₄.
#[derive(Debug, Clone, Copy)]
pub struct AdSChart {
    pub theta: f64,
    pub rho: f64,
    pub u_hat: [f64; 3],
}

impl AdSChart {
    pub fn to_point(&self, kappa: f64) -> AdSPoint {
        let r = 1.0 / kappa;
        AdSPoint::new(
            r * self.theta.cos() * self.rho.cosh(),
            r * self.theta.sin() * self.rho.cosh(),
            [
                r * self.u_hat[0] * self.rho.sinh(),
                r * self.u_hat[1] * self.rho.sinh(),
                r * self.u_hat[2] * self.rho.sinh(),
            ],
            kappa,
        )
    }

    pub fn from_point(p: &AdSPoint) -> Self {
        let n = p.y.iter().map(|x| x * x).sum::<f64>().sqrt();
        let rho = (p.kappa * n).asinh();
        let theta = p.y0.atan2(p.y5);
        let u_hat = if n > 0.0 {
            [p.y[0] / n, p.y[1] / n, p.y[2] / n]
        } else {
            [0.0, 0.0, 1.0]
        };
        Self { theta, rho, u_hat }
    }
}

/// Γ(y) = [[y₊, 𝐲], [−𝐲, y₋]] with y± = y⁵ ± i y⁰, as a quaternionic
/// block matrix. The input must lie on the pseudo-sphere.
pub fn gamma_embed(p: &AdSPoint) -> Result<QuatMatrix2, Sp4Error> {
    let res = p.shell_residual();
    if res > 1e-8 {
        return Err(Sp4Error::OffShell { residual: res });
    }
    Ok(gamma_embed_r23(&p.coords()))
}

/// The same block matrix for an arbitrary point of ℝ^{2,3} (the embedding
/// is linear; the group action below makes sense off shell).
pub fn gamma_embed_r23(y: &[f64; 5]) -> QuatMatrix2 {
    let yp = Quat::scalar(c(y[0], y[1]));
    let ym = Quat::scalar(c(y[0], -y[1]));
    let yv = Quat::real_vector([y[2], y[3], y[4]]);
    QuatMatrix2::new(yp, yv, -yv, ym)
}

/// Linear action of g on ℝ^{2,3}: Γ(y′) = g Γ(y) ᵗg̃.
pub fn act_r23(g: &GroupElement, y: &[f64; 5]) -> [f64; 5] {
    let gamma = gamma_embed_r23(y);
    let out = g.to_quat_matrix().mul(&gamma).mul(&g.transpose_tilde());
    let yp = out.a.s;
    [yp.re, yp.im, out.b.v[0].re, out.b.v[1].re, out.b.v[2].re]
}

/// Spacetime action on a pseudo-sphere point.
pub fn act_spacetime(g: &GroupElement, p: &AdSPoint) -> Result<AdSPoint, Sp4Error> {
    let res = p.shell_residual();
    if res > 1e-8 {
        return Err(Sp4Error::OffShell { residual: res });
    }
    let y = act_r23(g, &p.coords());
    Ok(AdSPoint::new(y[0], y[1], [y[2], y[3], y[4]], p.kappa))
}

/// 5×5 real matrix of the image of g in SO₀(2,3), index order (5,0,1,2,3).
#[derive(Debug, Clone, Copy)]
pub struct SO23Matrix(pub R5);

pub fn eta_23() -> R5 {
    let mut m = [[0.0; 5]; 5];
    m[0][0] = 1.0;
    m[1][1] = 1.0;
    m[2][2] = -1.0;
    m[3][3] = -1.0;
    m[4][4] = -1.0;
    m
}

impl SO23Matrix {
    /// ‖ᵀR η R − η‖∞.
    pub fn metric_residual(&self) -> f64 {
        let eta = eta_23();
        let prod = mat::r5_mul(&mat::r5_mul(&mat::r5_transpose(&self.0), &eta), &self.0);
        mat::r5_inf_norm(&mat::r5_sub(&prod, &eta))
    }

    pub fn det(&self) -> f64 {
        mat::r5_det(&self.0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(mat::r5_mul(&self.0, &other.0))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        mat::r5_inf_norm(&mat::r5_sub(&self.0, &other.0))
    }
}

/// The two-to-one homomorphism Sp(4,ℝ) → SO₀(2,3), columns obtained by
/// acting on the basis points of ℝ^{2,3}.
pub fn to_so23(g: &GroupElement) -> SO23Matrix {
    let mut m = [[0.0; 5]; 5];
    for col in 0..5 {
        let mut e = [0.0; 5];
        e[col] = 1.0;
        let img = act_r23(g, &e);
        for (row, val) in img.iter().enumerate() {
            m[row][col] = *val;
        }
    }
    SO23Matrix(m)
}

/// Time-space-Lorentz factors of g = h(θ) s(ρ,û) r(ξ) λ(ν,v̂).
#[derive(Debug, Clone)]
pub struct TSLFactors {
    pub theta: f64,
    pub rho: f64,
    pub u_hat: [f64; 3],
    pub xi: Quat,
    pub nu: f64,
    pub v_hat: [f64; 3],
}

impl TSLFactors {
    pub fn assemble(&self) -> Result<GroupElement, Sp4Error> {
        let h = GroupElement::time(self.theta);
        let s = GroupElement::space(self.rho, self.u_hat)?;
        let r = GroupElement::rotation(self.xi)?;
        let l = GroupElement::boost(self.nu, self.v_hat)?;
        Ok(h.compose(&s).compose(&r).compose(&l))
    }
}

/// TSL decomposition, valid in a neighbourhood of the identity: read
/// (θ,ρ,û) off g·𝔦(g), divide off the spacetime factor j, and extract the
/// Lorentz parameters from l = j⁻¹ g.
pub fn tsl_decompose(g: &GroupElement) -> Result<TSLFactors, Sp4Error> {
    let m = g.to_quat_matrix().mul(&g.transpose_tilde());
    // (1,1) entry is the scalar e^{iθ} cosh ρ; (1,2) is û sinh ρ. Reading
    // ρ off the real off-diagonal vector keeps small ρ fully conditioned
    // (acosh of the modulus would lose half the digits near identity).
    let top = m.a.s;
    let theta = top.im.atan2(top.re);
    let sv = [m.b.v[0].re, m.b.v[1].re, m.b.v[2].re];
    let sinhrho: f64 = sv.iter().map(|x| x * x).sum::<f64>().sqrt();
    let rho = sinhrho.asinh();
    let u_hat = if sinhrho > 0.0 {
        [sv[0] / sinhrho, sv[1] / sinhrho, sv[2] / sinhrho]
    } else {
        [1.0, 0.0, 0.0]
    };
    let j = GroupElement::time(theta).compose(&GroupElement::space(rho, u_hat)?);
    let l = j.inverse().compose(g);
    // Lorentz-subgroup conditions a_l = ā_l, b_l = −b̄_l
    let res = (l.a - l.a.conj())
        .max_abs()
        .max((l.b + l.b.conj()).max_abs());
    if res > 1e-8 {
        return Err(Sp4Error::DecompositionOutOfRange { residual: res });
    }
    // a_l = ξ cosh(ν/2), b_l = i ξ v̂ sinh(ν/2); project roundoff residue
    // away before rebuilding unit-normalized factors
    let a_real = Quat::new(
        c(l.a.s.re, 0.0),
        [c(l.a.v[0].re, 0.0), c(l.a.v[1].re, 0.0), c(l.a.v[2].re, 0.0)],
    );
    let xi = a_real * (1.0 / a_real.det().re.max(1.0).sqrt());
    // b_l/i = ξ v̂ sinh(ν/2): read sinh(ν/2) and v̂ off the projected vector
    let w = xi.quat_conj() * l.b * c(0.0, -1.0);
    let res_v = w.s.norm().max(w.v.iter().map(|x| x.im.abs()).fold(0.0, f64::max));
    if res_v > 1e-8 {
        return Err(Sp4Error::DecompositionOutOfRange { residual: res_v });
    }
    let wv = [w.v[0].re, w.v[1].re, w.v[2].re];
    let sinhhalf: f64 = wv.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nu = 2.0 * sinhhalf.asinh();
    let v_hat = if sinhhalf > 0.0 {
        [wv[0] / sinhhalf, wv[1] / sinhhalf, wv[2] / sinhhalf]
    } else {
        [1.0, 0.0, 0.0]
    };
    Ok(TSLFactors { theta, rho, u_hat, xi, nu, v_hat })
}

/// Cartan factors g = p(𝐳)·k(u), with 𝐳 = b ā⁻¹ ∈ 𝒟⁽³⁾ and u unitary.
#[derive(Debug, Clone)]
pub struct CartanFactors {
    pub z: DomainPoint,
    pub u: Quat,
}

impl CartanFactors {
    pub fn assemble(&self) -> GroupElement {
        cartan_p(&self.z).compose(&cartan_k(&self.u))
    }
}

/// The Hermitian factor p(𝐳).
pub fn cartan_p(z: &DomainPoint) -> GroupElement {
    let zq = z.as_quat();
    let q = Quat::one() + zq * zq.conj();
    let w = q
        .sqrt_hermitian()
        .expect("1 + z z̄ is positive definite inside the domain");
    let winv = w.inverse().expect("positive definite");
    GroupElement::new(winv, zq * winv.conj())
}

/// The unitary factor k(u) = diag(u, ū).
pub fn cartan_k(u: &Quat) -> GroupElement {
    GroupElement::new(*u, Quat::zero())
}

/// Cartan decomposition of a group element (always defined: aa* is
/// positive definite for members).
pub fn cartan_decompose(g: &GroupElement) -> CartanFactors {
    let abar_inv = g
        .a
        .conj()
        .inverse()
        .expect("block a of a group element is invertible");
    let zq = g.b * abar_inv;
    let z = DomainPoint::from_quat(&zq, 1e-8 * (1.0 + zq.max_abs()))
        .expect("b ā⁻¹ is a pure vector for members");
    let q = Quat::one() + zq * zq.conj();
    let w = q.sqrt_hermitian().expect("positive definite inside the domain");
    let u = w * g.a;
    CartanFactors { z, u }
}

/// Which Lie-algebra generator of the TSL one-parameter subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Time translations, X₀.
    X0,
    /// Space translations Xᵢ, i ∈ {0,1,2}.
    X(usize),
    /// Space rotations Yᵢ.
    Y(usize),
    /// Lorentz boosts Zᵢ.
    Z(usize),
}

/// The constant block matrix of a generator.
pub fn generator_matrix(which: Generator) -> QuatMatrix2 {
    let half = c(0.5, 0.0);
    match which {
        Generator::X0 => QuatMatrix2::new(
            Quat::scalar(I * half),
            Quat::zero(),
            Quat::zero(),
            Quat::scalar(-I * half),
        ),
        Generator::X(i) => {
            let e = Quat::e(i) * half;
            QuatMatrix2::new(Quat::zero(), e, -e, Quat::zero())
        }
        Generator::Y(i) => {
            let e = Quat::e(i) * half;
            QuatMatrix2::new(e, Quat::zero(), Quat::zero(), e)
        }
        Generator::Z(i) => {
            let e = Quat::e(i) * (I * half);
            QuatMatrix2::new(Quat::zero(), e, e, Quat::zero())
        }
    }
}

/// N_{αβ} in the so(2,3) labelling, indices over (5,0,1,2,3) mapped to
/// 0..5 as [5, 0, 1, 2, 3]. Antisymmetric: N_{βα} = −N_{αβ}.
pub fn n_generator(alpha: usize, beta: usize) -> QuatMatrix2 {
    assert!(alpha < 5 && beta < 5 && alpha != beta);
    if alpha > beta {
        return n_generator(beta, alpha).neg();
    }
    // here alpha < beta with the index order (5,0,1,2,3)
    match (alpha, beta) {
        (0, 1) => generator_matrix(Generator::X0),
        (0, i) => generator_matrix(Generator::X(i - 2)),
        (1, i) => generator_matrix(Generator::Z(i - 2)),
        (i, j) => {
            // N_{ij} = −ε_{ij}^k Y_k for spatial i<j
            let (si, sj) = (i - 2, j - 2);
            let k = 3 - si - sj;
            let sign = if (si + 1) % 3 == sj { -1.0 } else { 1.0 };
            generator_matrix(Generator::Y(k)).scale(c(sign, 0.0))
        }
    }
}

/// η over the index order (5,0,1,2,3).
pub fn eta_value(alpha: usize) -> f64 {
    if alpha < 2 {
        1.0
    } else {
        -1.0
    }
}

/// Complex symplectic picture g′ = T g T with T = diag(1, i e₂); g′
/// satisfies g′ 𝒥 ᵗg′ = 𝒥.
pub fn complex_symplectic_form(g: &GroupElement) -> C4 {
    let t = QuatMatrix2::new(
        Quat::one(),
        Quat::zero(),
        Quat::zero(),
        Quat::e(1) * I,
    );
    t.mul(&g.to_quat_matrix()).mul(&t).to_complex4()
}

/// ‖g′ 𝒥 ᵗg′ − 𝒥‖∞ for the complex symplectic picture of g.
pub fn symplectic_residual(g: &GroupElement) -> f64 {
    let gp = complex_symplectic_form(g);
    let mut j = [[c(0.0, 0.0); 4]; 4];
    j[0][2] = c(1.0, 0.0);
    j[1][3] = c(1.0, 0.0);
    j[2][0] = c(-1.0, 0.0);
    j[3][1] = c(-1.0, 0.0);
    let lhs = mat::c4_mul(&mat::c4_mul(&gp, &j), &mat::c4_transpose(&gp));
    mat::c4_inf_norm(&mat::c4_sub(&lhs, &j))
}

/// Uniformly random unit vector on 𝕊².
pub fn random_unit_vector(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let n: f64 = v.iter().map(|x| x * x).sum();
        if n > 1e-4 && n < 1.0 {
            let s = n.sqrt();
            return [v[0] / s, v[1] / s, v[2] / s];
        }
    }
}

/// Uniformly random unit real quaternion (an SU(2) element).
pub fn random_su2(rng: &mut impl Rng) -> Quat {
    loop {
        let q = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let n: f64 = q.iter().map(|x| x * x).sum();
        if n > 1e-4 && n < 1.0 {
            let s = n.sqrt();
            return Quat::new(c(q[3] / s, 0.0), [c(q[0] / s, 0.0), c(q[1] / s, 0.0), c(q[2] / s, 0.0)]);
        }
    }
}

/// A random one-parameter subgroup element with parameters bounded by
/// `scale` (membership is then automatic).
pub fn random_subgroup_element(rng: &mut impl Rng, scale: f64) -> GroupElement {
    match rng.gen_range(0..4) {
        0 => GroupElement::time(rng.gen_range(-scale..scale)),
        1 => GroupElement::space(rng.gen_range(0.0..scale), random_unit_vector(rng)).unwrap(),
        2 => GroupElement::rotation(random_su2(rng)).unwrap(),
        _ => GroupElement::boost(rng.gen_range(0.0..scale), random_unit_vector(rng)).unwrap(),
    }
}

/// A random word of subgroup elements — the crate's generic group sampler.
pub fn random_group_element(rng: &mut impl Rng, word_len: usize, scale: f64) -> GroupElement {
    let mut g = GroupElement::identity();
    for _ in 0..word_len {
        g = g.compose(&random_subgroup_element(rng, scale));
    }
    g
}
