//! Geometry of the bounded domain 𝒟⁽³⁾ of pure-vector complex quaternions.
//!
//! 𝒟⁽³⁾ = { 𝐳 ∈ ℂ³ : ρ⁺ = ‖𝐳‖² + ‖𝐳×𝐳̄‖ < 1 } is the phase space of a
//! massive test particle. This module provides membership, the Bergman
//! kernel, the Kähler metric in closed form, the invariant measure,
//! Poisson brackets for smooth observables and quasi-Monte-Carlo sampling.

use num_complex::Complex64;
use thiserror::Error;

use crate::mat::{self, C3};
use crate::qmc::BallSampler;
use crate::quat::{vcross, vdot, Quat};

/// Euclidean volume of 𝒟⁽³⁾ (a quarter of the volume of the unit ball in ℝ⁶).
pub const VOLUME: f64 = std::f64::consts::PI
    * std::f64::consts::PI
    * std::f64::consts::PI
    / 24.0;

#[derive(Debug, Error, PartialEq)]
pub enum DomainError {
    #[error("point is not a pure-vector quaternion (|scalar| = {scalar_abs:e})")]
    NotPureVector { scalar_abs: f64 },
    #[error("metric is numerically singular (condition number {cond:e})")]
    SingularMetric { cond: f64 },
}

/// A point 𝐳 = 𝐱 + i𝐲 of ℂ³, carried as a pure-vector complex quaternion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainPoint {
    v: [Complex64; 3],
}

impl DomainPoint {
    pub fn new(v: [Complex64; 3]) -> Self {
        Self { v }
    }

    pub fn origin() -> Self {
        Self::new([Complex64::new(0.0, 0.0); 3])
    }

    pub fn from_real(x: [f64; 3], y: [f64; 3]) -> Self {
        Self::new([
            Complex64::new(x[0], y[0]),
            Complex64::new(x[1], y[1]),
            Complex64::new(x[2], y[2]),
        ])
    }

    /// Accepts a quaternion whose scalar part vanishes to within `tol`.
    pub fn from_quat(q: &Quat, tol: f64) -> Result<Self, DomainError> {
        if q.s.norm() > tol {
            return Err(DomainError::NotPureVector { scalar_abs: q.s.norm() });
        }
        Ok(Self::new(q.v))
    }

    pub fn components(&self) -> [Complex64; 3] {
        self.v
    }

    pub fn as_quat(&self) -> Quat {
        Quat::vector(self.v)
    }

    pub fn x(&self) -> [f64; 3] {
        [self.v[0].re, self.v[1].re, self.v[2].re]
    }

    pub fn y(&self) -> [f64; 3] {
        [self.v[0].im, self.v[1].im, self.v[2].im]
    }

    /// ‖𝐳‖² = Σ|zⁱ|².
    pub fn norm_sq(&self) -> f64 {
        self.v.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Holomorphic quadratic 𝐳·𝐳 (no conjugation).
    pub fn dot_self(&self) -> Complex64 {
        vdot(&self.v, &self.v)
    }

    /// Spectral radii (ρ⁺, ρ⁻) of the non-negative matrix 𝐙𝐙†.
    pub fn spectral_radii(&self) -> (f64, f64) {
        let zbar = [self.v[0].conj(), self.v[1].conj(), self.v[2].conj()];
        let cross = vcross(&self.v, &zbar);
        let cross_norm = cross.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let n = self.norm_sq();
        (n + cross_norm, n - cross_norm)
    }

    pub fn contains(&self) -> bool {
        self.spectral_radii().0 < 1.0
    }

    /// det 𝐳 = 𝐳·𝐳 as a complex scalar.
    pub fn det(&self) -> Complex64 {
        self.dot_self()
    }
}

/// det(1 + 𝐳 𝐳̄′) for two domain points.
pub fn det_one_plus(z: &DomainPoint, zp: &DomainPoint) -> Complex64 {
    (Quat::one() + z.as_quat() * zp.as_quat().conj()).det()
}

/// det(1 + 𝐳 𝐳̄) by the closed form σ⁺σ⁻ (product of boundary factors).
pub fn det_one_plus_self_sigma(z: &DomainPoint) -> f64 {
    let (rp, rm) = z.spectral_radii();
    (1.0 - rp) * (1.0 - rm)
}

/// det(1 + 𝐳 𝐳̄) by the alternative closed form 1 + |det 𝐳|² − 2‖𝐳‖².
pub fn det_one_plus_self_alt(z: &DomainPoint) -> f64 {
    1.0 + z.det().norm_sqr() - 2.0 * z.norm_sq()
}

/// Bergman kernel K(𝐳,𝐳̄′) = (1/V)[det(1+𝐳𝐳̄′)]⁻³.
pub fn bergman_kernel(z: &DomainPoint, zp: &DomainPoint) -> Complex64 {
    let d = det_one_plus(z, zp);
    (d * d * d).inv() / VOLUME
}

/// Density of the invariant measure, (1/V)[det(1+𝐳𝐳̄)]⁻³.
pub fn invariant_measure_density(z: &DomainPoint) -> f64 {
    let d = det_one_plus_self_sigma(z);
    1.0 / (VOLUME * d * d * d)
}

/// The Hermitian metric tensor h at a point, h_{ij} dzⁱ dz̄ʲ.
#[derive(Debug, Clone, Copy)]
pub struct MetricTensor(pub C3);

impl MetricTensor {
    pub fn hermiticity_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                r = r.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        r
    }

    pub fn eigenvalues(&self) -> [f64; 3] {
        mat::c3_hermitian_eigenvalues(&self.0)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.eigenvalues()[0] > 0.0
    }

    pub fn inverse(&self) -> Result<C3, DomainError> {
        let eigs = self.eigenvalues();
        let cond = eigs[2].abs() / eigs[0].abs().max(1e-300);
        if cond > 1e12 {
            return Err(DomainError::SingularMetric { cond });
        }
        mat::c3_inverse(&self.0).ok_or(DomainError::SingularMetric { cond })
    }
}

/// Kähler metric in the real closed form (components of 𝐳 = 𝐱 + i𝐲).
pub fn kaehler_metric(z: &DomainPoint) -> MetricTensor {
    let x = z.x();
    let y = z.y();
    let nx: f64 = x.iter().map(|a| a * a).sum();
    let ny: f64 = y.iter().map(|a| a * a).sum();
    let xy: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
    let delta = det_one_plus_self_sigma(z);
    let pref = 24.0 / (delta * delta);
    let mut h = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                let re = 0.25 * delta + 2.0 * x[i] * x[i] * ny + 2.0 * y[i] * y[i] * nx
                    - 4.0 * x[i] * y[i] * xy;
                h[i][j] = Complex64::new(pref * re, 0.0);
            } else {
                let re = 2.0 * x[i] * x[j] * ny + 2.0 * y[i] * y[j] * nx
                    - 2.0 * (x[i] * y[j] + x[j] * y[i]) * xy;
                let im = (x[i] * y[j] - x[j] * y[i]) * (1.0 - nx - ny);
                h[i][j] = Complex64::new(pref * re, pref * im);
            }
        }
    }
    MetricTensor(h)
}

/// Kähler metric in the holomorphic/antiholomorphic closed form; the two
/// routes agree and are cross-checked in tests.
pub fn kaehler_metric_complex(z: &DomainPoint) -> MetricTensor {
    let zc = z.components();
    let zb = [zc[0].conj(), zc[1].conj(), zc[2].conj()];
    let zz = vdot(&zc, &zc);
    let zbzb = zz.conj();
    let nsq = Complex64::new(z.norm_sq(), 0.0);
    let delta = Complex64::new(det_one_plus_self_sigma(z), 0.0);
    let pref = Complex64::new(12.0, 0.0) / (delta * delta);
    let mut h = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                h[i][j] = pref
                    * (delta * 0.5 - zc[i] * zc[i] * zbzb - zb[i] * zb[i] * zz
                        + 2.0 * zc[i] * zb[i] * nsq);
            } else {
                h[i][j] = pref
                    * (zb[i] * zc[j] - zc[i] * zb[j] - zc[i] * zc[j] * zbzb
                        - zb[i] * zb[j] * zz
                        + 2.0 * zc[i] * zb[j] * nsq);
            }
        }
    }
    MetricTensor(h)
}

/// A smooth (not necessarily holomorphic) observable on the domain,
/// supplied as a value together with its Wirtinger gradients.
pub trait Observable {
    fn value(&self, z: &DomainPoint) -> Complex64;
    /// Returns (∂f/∂zⁱ, ∂f/∂z̄ⁱ).
    fn gradient(&self, z: &DomainPoint) -> ([Complex64; 3], [Complex64; 3]);
}

/// Observable backed by closures.
pub struct FnObservable<V, G>
where
    V: Fn(&DomainPoint) -> Complex64,
    G: Fn(&DomainPoint) -> ([Complex64; 3], [Complex64; 3]),
{
    pub value: V,
    pub grad: G,
}

impl<V, G> Observable for FnObservable<V, G>
where
    V: Fn(&DomainPoint) -> Complex64,
    G: Fn(&DomainPoint) -> ([Complex64; 3], [Complex64; 3]),
{
    fn value(&self, z: &DomainPoint) -> Complex64 {
        (self.value)(z)
    }
    fn gradient(&self, z: &DomainPoint) -> ([Complex64; 3], [Complex64; 3]) {
        (self.grad)(z)
    }
}

/// Central-difference Wirtinger gradient of a scalar function, for
/// cross-checking analytic gradients and for observables given only by
/// their values. Step `h` is applied to the real and imaginary parts.
pub fn fd_gradient<F: Fn(&DomainPoint) -> Complex64>(
    f: &F,
    z: &DomainPoint,
    h: f64,
) -> ([Complex64; 3], [Complex64; 3]) {
    let mut dz = [Complex64::new(0.0, 0.0); 3];
    let mut dzbar = [Complex64::new(0.0, 0.0); 3];
    let i = Complex64::new(0.0, 1.0);
    for k in 0..3 {
        let mut zp = z.components();
        let mut zm = z.components();
        zp[k] += Complex64::new(h, 0.0);
        zm[k] -= Complex64::new(h, 0.0);
        let dfdx = (f(&DomainPoint::new(zp)) - f(&DomainPoint::new(zm))) / (2.0 * h);
        let mut zp = z.components();
        let mut zm = z.components();
        zp[k] += Complex64::new(0.0, h);
        zm[k] -= Complex64::new(0.0, h);
        let dfdy = (f(&DomainPoint::new(zp)) - f(&DomainPoint::new(zm))) / (2.0 * h);
        dz[k] = 0.5 * (dfdx - i * dfdy);
        dzbar[k] = 0.5 * (dfdx + i * dfdy);
    }
    (dz, dzbar)
}

/// Direct central-difference estimate of ∂²f/∂zⁱ∂z̄ʲ for a real-valued f,
/// assembled from second derivatives over the six real coordinates:
/// ∂ᵢ∂̄ⱼ = ¼[∂ₓᵢ∂ₓⱼ + ∂ᵧᵢ∂ᵧⱼ + i(∂ₓᵢ∂ᵧⱼ − ∂ᵧᵢ∂ₓⱼ)].
pub fn fd_mixed_wirtinger<F: Fn(&DomainPoint) -> f64>(
    f: &F,
    z: &DomainPoint,
    i: usize,
    j: usize,
    h: f64,
) -> Complex64 {
    // coordinate index 0..6: (component, re/im)
    let shift = |z: &DomainPoint, coord: usize, amount: f64| -> DomainPoint {
        let mut c = z.components();
        if coord < 3 {
            c[coord] += Complex64::new(amount, 0.0);
        } else {
            c[coord - 3] += Complex64::new(0.0, amount);
        }
        DomainPoint::new(c)
    };
    let second = |a: usize, b: usize| -> f64 {
        if a == b {
            (f(&shift(z, a, h)) - 2.0 * f(z) + f(&shift(z, a, -h))) / (h * h)
        } else {
            (f(&shift(&shift(z, a, h), b, h)) - f(&shift(&shift(z, a, h), b, -h))
                - f(&shift(&shift(z, a, -h), b, h))
                + f(&shift(&shift(z, a, -h), b, -h)))
                / (4.0 * h * h)
        }
    };
    let xx = second(i, j);
    let yy = second(i + 3, j + 3);
    let xy = second(i, j + 3);
    let yx = second(i + 3, j);
    0.25 * Complex64::new(xx + yy, xy - yx)
}

/// The single-term bracket exactly as the closed 2-form suggests:
/// −(i/2) h^{ij} ∂f/∂zⁱ ∂g/∂z̄ʲ. Exposed for comparison; it is not
/// antisymmetric on non-holomorphic observables.
pub fn poisson_bracket_printed(
    f: &dyn Observable,
    g: &dyn Observable,
    z: &DomainPoint,
) -> Result<Complex64, DomainError> {
    let hinv = kaehler_metric(z).inverse()?;
    let (df, _) = f.gradient(z);
    let (_, dgbar) = g.gradient(z);
    // h^{ij} pairs the antiholomorphic slot of h⁻¹ with ∂f: the
    // contraction h⁻¹[j][i] ∂ᵢf ∂̄ⱼg is the one that inverts h_{ij}dzⁱdz̄ʲ
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            acc += hinv[j][i] * df[i] * dgbar[j];
        }
    }
    Ok(Complex64::new(0.0, -0.5) * acc)
}

/// Antisymmetrized two-term bracket with the same normalization as
/// [`poisson_bracket_printed`].
pub fn poisson_bracket_antisym(
    f: &dyn Observable,
    g: &dyn Observable,
    z: &DomainPoint,
) -> Result<Complex64, DomainError> {
    Ok(poisson_bracket_printed(f, g, z)? - poisson_bracket_printed(g, f, z)?)
}

/// Poisson bracket of observables on the massive orbit with label ℓ,
/// normalized so that the basic observables close on the Lie commutator
/// table ({k⁰, αⁱ} = βⁱ and companions). The orbit label rescales the
/// symplectic structure pulled back to the domain, hence the explicit
/// parameter.
pub fn poisson_bracket(
    f: &dyn Observable,
    g: &dyn Observable,
    z: &DomainPoint,
    ell: f64,
) -> Result<Complex64, DomainError> {
    Ok(poisson_bracket_antisym(f, g, z)? * Complex64::new(-6.0 / ell, 0.0))
}

/// Low-discrepancy sample of `n` points of 𝒟⁽³⁾ together with the number
/// of unit-ball candidates consumed (for the acceptance-rate statistic).
pub fn sample_with_stats(n: usize, seed: u64) -> (Vec<DomainPoint>, usize) {
    let mut sampler = BallSampler::new(seed);
    let mut pts = Vec::with_capacity(n);
    let mut tried = 0usize;
    while pts.len() < n {
        let z = DomainPoint::new(sampler.next_point());
        tried += 1;
        if z.contains() {
            pts.push(z);
        }
    }
    (pts, tried)
}

/// Low-discrepancy sample of `n` points of 𝒟⁽³⁾ (rejection from the unit
/// ball of ℝ⁶; the acceptance rate is ≈ 1/4).
pub fn sample(n: usize, seed: u64) -> Vec<DomainPoint> {
    sample_with_stats(n, seed).0
}

/// Sample restricted to spectral radius ρ⁺ ≤ `rho_max`.
pub fn sample_within(n: usize, seed: u64, rho_max: f64) -> Vec<DomainPoint> {
    let mut sampler = BallSampler::new(seed);
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let z = DomainPoint::new(sampler.next_point());
        if z.spectral_radii().0 <= rho_max {
            pts.push(z);
        }
    }
    pts
}
