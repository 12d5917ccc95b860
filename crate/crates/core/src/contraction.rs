//! The two contraction limits as numerical convergence experiments: the
//! null-curvature (Poincaré) limit on the weighted Bargmann-Fock space
//! evaluated on the purely imaginary slice, and the non-relativistic
//! Newton-Hooke limit (c → ∞, κ → 0, cκ = ω) on the dilated domain,
//! each compared against the closed-form limit actions.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::domain::DomainPoint;
use crate::poly::VectorPolynomial;
use crate::quat::Quat;
use crate::repn::{dspin, RepParams, RepnError};
use crate::sp4::GroupElement;
use crate::specfun::HalfInt;

#[derive(Debug, Error, PartialEq)]
pub enum ContractionError {
    #[error("evaluation point leaves the dilated domain (ρ⁺ = {rho:e})")]
    DomainViolation { rho: f64 },
    #[error(transparent)]
    Repn(#[from] RepnError),
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// ς(κ) = mc/(ħκ) + 3/2 + (s−1/2)²·ħκ/(2mc), the AdS representation
/// parameter tied to a Minkowski mass (the unspecified O(κ²/c²) remainder
/// is dropped).
pub fn varsigma_of(kappa: f64, light_speed: f64, mass: f64, spin: HalfInt, hbar: f64) -> f64 {
    let mc = mass * light_speed;
    let shift = spin.value() - 0.5;
    mc / (hbar * kappa) + 1.5 + shift * shift * hbar * kappa / (2.0 * mc)
}

/// The four one-parameter subgroups entering the sweeps, with their
/// physical parameters held fixed along a κ-schedule.
#[derive(Debug, Clone, Serialize)]
pub enum SubgroupChoice {
    /// time translation by t (group parameter θ = κct)
    Time { t: f64 },
    /// space translation by x along û (group parameter ρ = κx)
    Space { x: f64, u_hat: [f64; 3] },
    /// space rotation by a unit real quaternion (κ-independent)
    Rotation { xi: [f64; 4] },
    /// boost of velocity 𝔳 (rapidity from tanh(ν/2) = ‖𝔳‖/c)
    Boost { v: [f64; 3] },
}

impl SubgroupChoice {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Time { .. } => "time",
            Self::Space { .. } => "space",
            Self::Rotation { .. } => "rotation",
            Self::Boost { .. } => "boost",
        }
    }

    pub fn xi_quat(raw: [f64; 4]) -> Quat {
        Quat::new(
            c(raw[3], 0.0),
            [c(raw[0], 0.0), c(raw[1], 0.0), c(raw[2], 0.0)],
        )
    }

    /// The group element at curvature κ and light speed c.
    pub fn element(&self, kappa: f64, light_speed: f64) -> GroupElement {
        match self {
            Self::Time { t } => GroupElement::time(kappa * light_speed * t),
            Self::Space { x, u_hat } => {
                GroupElement::space(kappa * x, *u_hat).expect("unit direction")
            }
            Self::Rotation { xi } => {
                GroupElement::rotation(Self::xi_quat(*xi)).expect("unit quaternion")
            }
            Self::Boost { v } => {
                let speed = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
                if speed == 0.0 {
                    return GroupElement::identity();
                }
                let nu = 2.0 * (speed / light_speed).atanh();
                let v_hat = [v[0] / speed, v[1] / speed, v[2] / speed];
                GroupElement::boost(nu, v_hat).expect("unit direction")
            }
        }
    }
}

/// A function of the weighted Bargmann-Fock space: the analytic kernel f̌
/// dressed by the weight-regular factor
/// [det(1+𝐳𝐳̄)/det(1+𝐳𝐳̃)]^{(ς+s)/2}, which is exactly 1 on the purely
/// imaginary slice.
#[derive(Debug, Clone)]
pub struct WeightedFunction {
    pub base: VectorPolynomial,
}

impl WeightedFunction {
    pub fn new(base: VectorPolynomial) -> Self {
        Self { base }
    }

    /// The weight-regular factor at a point.
    pub fn weight_factor(z: &DomainPoint, params: &RepParams) -> Complex64 {
        let zq = z.as_quat();
        let num = (Quat::one() + zq * zq.conj()).det();
        let den = (Quat::one() + zq * zq.quat_conj()).det();
        let ratio = num / den;
        // exponent is large along sweeps while ln(ratio) → 0; the
        // exponential form keeps this stable
        (0.5 * (params.varsigma + params.spin.value()) * ratio.ln()).exp()
    }

    pub fn eval(&self, z: &DomainPoint, params: &RepParams) -> Vec<Complex64> {
        let w = Self::weight_factor(z, params);
        self.base.eval(&z.components()).iter().map(|v| v * w).collect()
    }
}

/// The weighted action
/// [det(−b𝐳̄+a)/det(−b̄𝐳+ā)]^{(ς+s)/2} D^s(𝐳b*+a*) F(g⁻¹◇𝐳), with (a,b)
/// the blocks of g⁻¹; the determinant ratio is a pure phase.
pub fn weighted_uir_apply(
    g: &GroupElement,
    f: &WeightedFunction,
    z: &DomainPoint,
    params: &RepParams,
) -> Result<Vec<Complex64>, ContractionError> {
    let gi = g.inverse();
    let (a, b) = (gi.a, gi.b);
    let zq = z.as_quat();
    let den = (-b.conj() * zq + a.conj()).det();
    if den.norm() < 1e-12 {
        return Err(RepnError::SingularDenominator { det_abs: den.norm() }.into());
    }
    let num = (-b * zq.conj() + a).det();
    let phase = (0.5 * (params.varsigma + params.spin.value()) * (num / den).ln()).exp();
    let dmat = dspin(params.spin, &(zq * b.adjoint() + a.adjoint()));
    let w = gi
        .mobius(z)
        .map_err(|_| RepnError::SingularDenominator { det_abs: den.norm() })?;
    let inner = f.eval(&w, params);
    let mut out = vec![c(0.0, 0.0); inner.len()];
    for (r, row) in dmat.iter().enumerate() {
        for (col, m) in row.iter().enumerate() {
            out[r] += m * inner[col];
        }
    }
    Ok(out.iter().map(|v| v * phase).collect())
}

/// Physical constants carried along a contraction sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepConstants {
    pub mass: f64,
    pub hbar: f64,
    /// speed of light for the Poincaré sweep; for the Newton-Hooke sweep
    /// the speed varies as c = ω/κ and this field carries ω instead
    pub c_or_omega: f64,
}

/// The κ-schedule of a contraction experiment.
#[derive(Debug, Clone, Serialize)]
pub struct ContractionSchedule {
    pub kappas: Vec<f64>,
    pub constants: SweepConstants,
    pub subgroup: SubgroupChoice,
    pub spin_twice: i32,
}

impl ContractionSchedule {
    /// The default grid κ ∈ {10⁻¹, 10⁻¹·⁵, …, 10⁻⁴}.
    pub fn default_kappas() -> Vec<f64> {
        (0..7).map(|k| 10f64.powf(-1.0 - 0.5 * k as f64)).collect()
    }
}

/// The closed-form null-curvature limit of the weighted action for each
/// subgroup, evaluated at a purely imaginary slice point.
pub fn poincare_limit_reference(
    subgroup: &SubgroupChoice,
    constants: &SweepConstants,
    spin: HalfInt,
    base: &VectorPolynomial,
    z: &DomainPoint,
) -> Vec<Complex64> {
    let (mass, hbar, light) = (constants.mass, constants.hbar, constants.c_or_omega);
    let mc = mass * light;
    match subgroup {
        SubgroupChoice::Time { t } => {
            let phase = (-I * (mass * light * light * t / hbar)).exp();
            base.eval(&z.components()).iter().map(|v| v * phase).collect()
        }
        SubgroupChoice::Space { x, u_hat } => {
            // e^{−(û𝐳+𝐳û) mcx/2ħ} with û𝐳+𝐳û = −2 û·𝐳
            let uz: Complex64 = u_hat
                .iter()
                .zip(&z.components())
                .map(|(u, zc)| zc * *u)
                .sum();
            let factor = (uz * (mc * x / hbar)).exp();
            base.eval(&z.components()).iter().map(|v| v * factor).collect()
        }
        SubgroupChoice::Rotation { xi } => {
            let xiq = SubgroupChoice::xi_quat(*xi);
            let moved = xiq.quat_conj() * z.as_quat() * xiq;
            let inner = base.eval(&[moved.v[0], moved.v[1], moved.v[2]]);
            let dmat = dspin(spin, &xiq);
            let mut out = vec![c(0.0, 0.0); inner.len()];
            for (r, row) in dmat.iter().enumerate() {
                for (col, m) in row.iter().enumerate() {
                    out[r] += m * inner[col];
                }
            }
            out
        }
        SubgroupChoice::Boost { v } => {
            let speed_sq = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            let theta = 1.0 / (1.0 - speed_sq / (light * light)).sqrt();
            let vq = Quat::real_vector(*v) * (theta / light);
            let zq = z.as_quat();
            let arg_num = zq * theta - vq * I;
            let arg_den = Quat::scalar(c(theta, 0.0)) - vq * zq * I;
            let moved = arg_num * arg_den.inverse().expect("inside the domain");
            let inner = base.eval(&[moved.v[0], moved.v[1], moved.v[2]]);
            let dmat = dspin(spin, &(Quat::scalar(c(theta, 0.0)) - zq * vq * I));
            let mut out = vec![c(0.0, 0.0); inner.len()];
            for (r, row) in dmat.iter().enumerate() {
                for (col, m) in row.iter().enumerate() {
                    out[r] += m * inner[col];
                }
            }
            out
        }
    }
}

/// One row of a sweep table.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub kappa: f64,
    pub sup_error: f64,
}

/// Result of a convergence sweep: per-κ sup errors, a fitted convergence
/// order when the errors are above roundoff, and whether the subgroup is
/// realized exactly at every κ.
#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub subgroup: String,
    pub records: Vec<SweepRecord>,
    pub fitted_order: Option<f64>,
    pub exact: bool,
}

impl SweepResult {
    pub fn strictly_decreasing(&self) -> bool {
        self.records.windows(2).all(|w| w[1].sup_error < w[0].sup_error)
    }

    pub fn endpoint_error(&self) -> f64 {
        self.records.last().map(|r| r.sup_error).unwrap_or(f64::NAN)
    }

    fn fit_order(records: &[SweepRecord]) -> Option<f64> {
        let pts: Vec<(f64, f64)> = records
            .iter()
            .filter(|r| r.sup_error > 1e-13)
            .map(|r| (r.kappa.ln(), r.sup_error.ln()))
            .collect();
        if pts.len() < 3 {
            return None;
        }
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        Some((n * sxy - sx * sy) / (n * sxx - sx * sx))
    }
}

/// Default slice evaluation points −i𝐱 with 𝐱 sampled once in the ball.
pub fn default_slice_points(n: usize, seed: u64, radius: f64) -> Vec<DomainPoint> {
    crate::domain::sample_within(n, seed, radius * radius)
        .into_iter()
        .map(|z| {
            // project onto a real ball point, then rotate to the slice
            let x = z.x();
            DomainPoint::new([c(0.0, -x[0]), c(0.0, -x[1]), c(0.0, -x[2])])
        })
        .collect()
}

/// Null-curvature sweep: for each κ, the sup over the evaluation points
/// of |weighted action − limit formula|.
pub fn poincare_sweep(
    schedule: &ContractionSchedule,
    base: &VectorPolynomial,
    points: &[DomainPoint],
) -> Result<SweepResult, ContractionError> {
    let spin = HalfInt::from_twice(schedule.spin_twice);
    let light = schedule.constants.c_or_omega;
    let f = WeightedFunction::new(base.clone());
    let mut records = Vec::new();
    for &kappa in &schedule.kappas {
        let varsigma = varsigma_of(
            kappa,
            light,
            schedule.constants.mass,
            spin,
            schedule.constants.hbar,
        );
        let params = RepParams { varsigma, spin };
        let g = schedule.subgroup.element(kappa, light);
        let mut sup = 0.0f64;
        for z in points {
            let got = weighted_uir_apply(&g, &f, z, &params)?;
            let want =
                poincare_limit_reference(&schedule.subgroup, &schedule.constants, spin, base, z);
            for (a, b) in got.iter().zip(&want) {
                sup = sup.max((a - b).norm());
            }
        }
        records.push(SweepRecord { kappa, sup_error: sup });
    }
    let exact = records.iter().all(|r| r.sup_error < 1e-12);
    let fitted_order = SweepResult::fit_order(&records);
    Ok(SweepResult {
        subgroup: schedule.subgroup.name().to_string(),
        records,
        fitted_order,
        exact,
    })
}

/// The dilated action on 𝒟⁽³⁾_ℜ:
/// [det(−b̄𝔷/ℜ+ā)]^{−ς−s} D^s(𝔷b*/ℜ + a*) f((a𝔷+ℜb)(−b̄𝔷/ℜ+ā)⁻¹).
pub fn dilated_uir_apply(
    g: &GroupElement,
    base: &VectorPolynomial,
    zfrak: &[Complex64; 3],
    dilation: f64,
    params: &RepParams,
) -> Result<Vec<Complex64>, ContractionError> {
    let scaled = DomainPoint::new([
        zfrak[0] / dilation,
        zfrak[1] / dilation,
        zfrak[2] / dilation,
    ]);
    if !scaled.contains() {
        return Err(ContractionError::DomainViolation {
            rho: scaled.spectral_radii().0,
        });
    }
    let gi = g.inverse();
    let (a, b) = (gi.a, gi.b);
    let zq = Quat::vector(*zfrak);
    let den_q = -b.conj() * zq * (1.0 / dilation) + a.conj();
    let den = den_q.det();
    if den.norm() < 1e-12 {
        return Err(RepnError::SingularDenominator { det_abs: den.norm() }.into());
    }
    let factor = (-(params.varsigma + params.spin.value()) * den.ln()).exp();
    let dmat = dspin(
        params.spin,
        &(zq * b.adjoint() * (1.0 / dilation) + a.adjoint()),
    );
    let moved = (a * zq + b * dilation) * den_q.inverse().expect("checked above");
    let inner = base.eval(&[moved.v[0], moved.v[1], moved.v[2]]);
    let mut out = vec![c(0.0, 0.0); inner.len()];
    for (r, row) in dmat.iter().enumerate() {
        for (col, m) in row.iter().enumerate() {
            out[r] += m * inner[col];
        }
    }
    Ok(out.iter().map(|v| v * factor).collect())
}

/// Closed-form Newton-Hooke limit actions (the time case already carries
/// the compensating phase e^{imc²t/ħ}).
pub fn nh_limit_reference(
    subgroup: &SubgroupChoice,
    constants: &SweepConstants,
    spin: HalfInt,
    base: &VectorPolynomial,
    zfrak: &[Complex64; 3],
) -> Vec<Complex64> {
    let (mass, hbar, omega) = (constants.mass, constants.hbar, constants.c_or_omega);
    match subgroup {
        SubgroupChoice::Time { t } => {
            let phase = (-I * (1.5 * omega * t)).exp();
            let rot = (-I * (omega * t)).exp();
            let arg = [zfrak[0] * rot, zfrak[1] * rot, zfrak[2] * rot];
            base.eval(&arg).iter().map(|v| v * phase).collect()
        }
        SubgroupChoice::Space { x, u_hat } => {
            let scale = (mass * omega / 2.0).sqrt();
            let uz: Complex64 = u_hat.iter().zip(zfrak).map(|(u, zc)| zc * *u).sum();
            // −(1/2ħ)[(û𝔷+𝔷û)√(mω/2)x + mωx²/2] with û𝔷+𝔷û = −2û·𝔷
            let exponent = (uz * (scale * x) - mass * omega * x * x / 4.0) / hbar;
            let factor = exponent.exp();
            let arg = [
                zfrak[0] - c(u_hat[0] * scale * x, 0.0),
                zfrak[1] - c(u_hat[1] * scale * x, 0.0),
                zfrak[2] - c(u_hat[2] * scale * x, 0.0),
            ];
            base.eval(&arg).iter().map(|v| v * factor).collect()
        }
        SubgroupChoice::Rotation { xi } => {
            let xiq = SubgroupChoice::xi_quat(*xi);
            let moved = xiq.quat_conj() * Quat::vector(*zfrak) * xiq;
            let inner = base.eval(&[moved.v[0], moved.v[1], moved.v[2]]);
            let dmat = dspin(spin, &xiq);
            let mut out = vec![c(0.0, 0.0); inner.len()];
            for (r, row) in dmat.iter().enumerate() {
                for (col, m) in row.iter().enumerate() {
                    out[r] += m * inner[col];
                }
            }
            out
        }
        SubgroupChoice::Boost { v } => {
            let vz: Complex64 = v.iter().zip(zfrak).map(|(vi, zc)| zc * *vi).sum();
            let vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            // (1/ħ)[−(m/ω)𝔳·𝔳 + i(𝔳𝔷+𝔷𝔳)√(m/2ω)] with 𝔳𝔷+𝔷𝔳 = −2𝔳·𝔷
            let exponent =
                (c(-mass * vv / omega, 0.0) - 2.0 * I * vz * (mass / (2.0 * omega)).sqrt()) / hbar;
            let factor = exponent.exp();
            let shift = (2.0 * mass / omega).sqrt();
            let arg = [
                zfrak[0] - I * (v[0] * shift),
                zfrak[1] - I * (v[1] * shift),
                zfrak[2] - I * (v[2] * shift),
            ];
            base.eval(&arg).iter().map(|v2| v2 * factor).collect()
        }
    }
}

/// Newton-Hooke sweep with cκ = ω held fixed; the time subgroup carries
/// the compensating phase e^{imc²t/ħ}.
pub fn nh_sweep(
    schedule: &ContractionSchedule,
    base: &VectorPolynomial,
    points: &[[Complex64; 3]],
) -> Result<SweepResult, ContractionError> {
    let spin = HalfInt::from_twice(schedule.spin_twice);
    let omega = schedule.constants.c_or_omega;
    let (mass, hbar) = (schedule.constants.mass, schedule.constants.hbar);
    let mut records = Vec::new();
    for &kappa in &schedule.kappas {
        let light = omega / kappa;
        let varsigma = varsigma_of(kappa, light, mass, spin, hbar);
        let params = RepParams { varsigma, spin };
        let dilation = (2.0 * mass * light / kappa).sqrt();
        let g = schedule.subgroup.element(kappa, light);
        let compensation = match schedule.subgroup {
            SubgroupChoice::Time { t } => (I * (mass * light * light * t / hbar)).exp(),
            _ => c(1.0, 0.0),
        };
        let mut sup = 0.0f64;
        for zfrak in points {
            let got = dilated_uir_apply(&g, base, zfrak, dilation, &params)?;
            let want =
                nh_limit_reference(&schedule.subgroup, &schedule.constants, spin, base, zfrak);
            for (a, b) in got.iter().zip(&want) {
                sup = sup.max((a * compensation - b).norm());
            }
        }
        records.push(SweepRecord { kappa, sup_error: sup });
    }
    let exact = records.iter().all(|r| r.sup_error < 1e-12);
    let fitted_order = SweepResult::fit_order(&records);
    Ok(SweepResult {
        subgroup: schedule.subgroup.name().to_string(),
        records,
        fitted_order,
        exact,
    })
}

/// Default fixed evaluation points 𝔷 ∈ ℂ³ for the Newton-Hooke sweep.
pub fn default_nh_points(n: usize, seed: u64, scale: f64) -> Vec<[Complex64; 3]> {
    crate::domain::sample(n, seed)
        .into_iter()
        .map(|z| {
            let v = z.components();
            [v[0] * scale, v[1] * scale, v[2] * scale]
        })
        .collect()
}

/// Exact Gaussian inner product of polynomial sections on ℂ³,
/// (f₁,f₂) = (πħ)⁻³ ∫ f₁†f₂ e^{−‖𝔷‖²/ħ} d𝔷, via monomial moments
/// ⟨𝔷^a, 𝔷^b⟩ = δ_{ab} Π aᵢ! ħ^{|a|}.
pub fn gaussian_inner_product(
    f1: &VectorPolynomial,
    f2: &VectorPolynomial,
    hbar: f64,
) -> Complex64 {
    let mut acc = c(0.0, 0.0);
    for (p1, p2) in f1.comps.iter().zip(&f2.comps) {
        for (e1, c1) in p1.terms() {
            for (e2, c2) in p2.terms() {
                if e1 == e2 {
                    let mut weight = 1.0;
                    for k in 0..3 {
                        weight *= crate::specfun::factorial(e1[k] as i64);
                    }
                    weight *= hbar.powi((e1[0] + e1[1] + e1[2]) as i32);
                    acc += c1.conj() * c2 * weight;
                }
            }
        }
    }
    acc
}

/// The Newton-Hooke Hamiltonian H f = ħω(𝔷·∇)f + (mc² + (3/2)ħω) f.
pub fn nh_hamiltonian(
    f: &VectorPolynomial,
    mass: f64,
    light_speed: f64,
    omega: f64,
    hbar: f64,
) -> VectorPolynomial {
    let mut euler = VectorPolynomial::zero(f.dim());
    for i in 0..3 {
        euler = euler.add(
            &f.derivative(i)
                .mul_poly(&crate::poly::MultiPoly::var(i)),
        );
    }
    let rest = mass * light_speed * light_speed + 1.5 * hbar * omega;
    euler.scale(c(hbar * omega, 0.0)).add(&f.scale(c(rest, 0.0)))
}
