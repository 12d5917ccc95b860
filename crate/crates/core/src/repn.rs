//! Discrete-series representation engine on Bargmann-Fock spaces of
//! holomorphic ℂ^{2s+1}-valued functions over the bounded domain:
//! normalization constants, the group action with its automorphy factor,
//! infinitesimal generators as exact polynomial operators, spin matrices,
//! Casimir operators, inner products by quasi-Monte-Carlo, and the
//! reproducing kernel.

use num_complex::Complex64;
use thiserror::Error;

use crate::domain::{self, DomainPoint};
use crate::poly::{
    spin_identity, MultiPoly, OpFactor, PolyOperator, SpinMatrix, VectorPolynomial,
};
use crate::qmc::BallSampler;
use crate::quat::Quat;
use crate::sp4::GroupElement;
use crate::specfun::{wigner_d_matrix, HalfInt};

#[derive(Debug, Error, PartialEq)]
pub enum RepnError {
    #[error("representation parameter out of range: {0}")]
    OutOfRange(String),
    #[error("singular automorphy denominator (|det| = {det_abs:e})")]
    SingularDenominator { det_abs: f64 },
}

/// Discrete-series labels (ς, s); the standard inner product needs
/// ς > s + 2.
#[derive(Debug, Clone, Copy)]
pub struct RepParams {
    pub varsigma: f64,
    pub spin: HalfInt,
}

impl RepParams {
    pub fn new(varsigma: f64, spin: HalfInt) -> Result<Self, RepnError> {
        if varsigma <= spin.value() + 1.0 {
            return Err(RepnError::OutOfRange(format!(
                "need ς > s + 1, got ς = {varsigma}, s = {}",
                spin.value()
            )));
        }
        Ok(Self { varsigma, spin })
    }

    pub fn dim(&self) -> usize {
        (self.spin.twice() + 1) as usize
    }

    /// Rest energy ħcκ·ς carried by the lowest weight.
    pub fn rest_energy(&self, hbar: f64, light_speed: f64, kappa: f64) -> f64 {
        hbar * light_speed * kappa * self.varsigma
    }
}

/// 𝒩(ς,s) = (8/π³)(ς−3/2)(ς+s−1)(ς−s−2); defined for ς > s+2 and fixed
/// by the requirement that the constant top-slot section e_ss has unit
/// norm. The closed form follows from the exact radial moments of the
/// domain, ∫σ₊^p σ₋^q d𝐳 = (π³/4)/[(p+1)(p+2)(p+q+3)], by telescoping
/// the SU(2) character sum; it reduces to (ς−3/2)(ς−1)(ς−2) at s = 0.
pub fn normalization(varsigma: f64, spin: HalfInt) -> Result<f64, RepnError> {
    let s = spin.value();
    if varsigma <= s + 2.0 {
        return Err(RepnError::OutOfRange(format!(
            "normalization needs ς > s + 2, got ς = {varsigma}, s = {s}"
        )));
    }
    Ok(normalization_factor_raw(varsigma, s))
}

/// The raw normalization factor (kept separate so the vanishing at
/// ς = s + 2 can be asserted without tripping the range check).
pub fn normalization_factor_raw(varsigma: f64, s: f64) -> f64 {
    8.0 / std::f64::consts::PI.powi(3)
        * (varsigma - 1.5)
        * (varsigma + s - 1.0)
        * (varsigma - s - 2.0)
}

/// Spin matrices (S₁, S₂, S₃) in the descending basis (top slot ρ = s);
/// they satisfy [Sᵢ, Sⱼ] = iεᵢⱼᵏSₖ exactly.
pub fn spin_matrices(spin: HalfInt) -> (SpinMatrix, SpinMatrix, SpinMatrix) {
    let dim = (spin.twice() + 1) as usize;
    let s = spin.value();
    let zero = Complex64::new(0.0, 0.0);
    let mut s1 = vec![vec![zero; dim]; dim];
    let mut s2 = vec![vec![zero; dim]; dim];
    let mut s3 = vec![vec![zero; dim]; dim];
    let m_of = |row: usize| s - row as f64;
    for row in 0..dim {
        let m = m_of(row);
        s3[row][row] = Complex64::new(m, 0.0);
        // m′ = m − 1 lives one row below in the descending order; the
        // S₂ phases are the ladder-operator ones, which close on
        // [Sᵢ,Sⱼ] = iεᵢⱼᵏSₖ (the printed table has them transposed)
        if row + 1 < dim {
            let lower = 0.5 * ((s + m) * (s - m + 1.0)).sqrt();
            s1[row][row + 1] = Complex64::new(lower, 0.0);
            s2[row][row + 1] = Complex64::new(0.0, -lower);
        }
        if row > 0 {
            let raise = 0.5 * ((s - m) * (s + m + 1.0)).sqrt();
            s1[row][row - 1] = Complex64::new(raise, 0.0);
            s2[row][row - 1] = Complex64::new(0.0, raise);
        }
    }
    (s1, s2, s3)
}

/// Index pair (α, β) over the order (5, 0, 1, 2, 3), as used by the
/// generators; α ≠ β.
pub type IndexPair = (usize, usize);

fn euler_plus(varsigma_shift: f64) -> PolyOperator {
    // z·∇ + shift
    let mut op = PolyOperator::from_word(
        Complex64::new(varsigma_shift, 0.0),
        Vec::new(),
    );
    for i in 0..3 {
        op = op.add(&PolyOperator::from_word(
            Complex64::new(1.0, 0.0),
            vec![OpFactor::MulZ(i), OpFactor::Diff(i)],
        ));
    }
    op
}

fn zdotz_poly() -> MultiPoly<3> {
    MultiPoly::<3>::var(0)
        .pow(2)
        .add(&MultiPoly::var(1).pow(2))
        .add(&MultiPoly::var(2).pow(2))
}

/// The self-adjoint generator L_{αβ} as an exact polynomial operator on
/// ℂ^{2s+1}-valued polynomials. Indices over (5,0,1,2,3) mapped to 0..5;
/// antisymmetric in (α, β).
pub fn generator(pair: IndexPair, params: &RepParams) -> PolyOperator {
    let (alpha, beta) = pair;
    assert!(alpha < 5 && beta < 5 && alpha != beta);
    if alpha > beta {
        return generator((beta, alpha), params).scale(Complex64::new(-1.0, 0.0));
    }
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let (s1, s2, s3) = spin_matrices(params.spin);
    let spins = [s1, s2, s3];
    let vs = params.varsigma;
    match (alpha, beta) {
        // L₅₀ = (z·∇ + ς)·1
        (0, 1) => euler_plus(vs),
        // L₅ᵢ = i[(1+z·z)/2 ∂ᵢ − zⁱ(ς+z·∇)] + ε_{ijk} zʲ S_k; the scalar
        // shift is ς alone — differentiating the group action shows the
        // +s printed alongside it cancels against the D-factor's trace
        (0, bi) => {
            let idx = bi - 2;
            let half_one_plus = MultiPoly::constant(Complex64::new(0.5, 0.0))
                .add(&zdotz_poly().scale(Complex64::new(0.5, 0.0)));
            let mut op = PolyOperator::from_word(
                i,
                vec![
                    OpFactor::MulPoly(std::sync::Arc::new(half_one_plus)),
                    OpFactor::Diff(idx),
                ],
            );
            op = op.add(
                &PolyOperator::from_word(one, vec![OpFactor::MulZ(idx)])
                    .compose(&euler_plus(vs))
                    .scale(-i),
            );
            for j in 0..3 {
                for k in 0..3 {
                    let eps = levi_civita(idx, j, k);
                    if eps != 0.0 {
                        op = op.add(&PolyOperator::from_word(
                            Complex64::new(eps, 0.0),
                            vec![
                                OpFactor::MulZ(j),
                                OpFactor::Spin(std::sync::Arc::new(spins[k].clone())),
                            ],
                        ));
                    }
                }
            }
            op
        }
        // L₀ᵢ = −[(1−z·z)/2 ∂ᵢ + zⁱ(ς+z·∇)] − i ε_{ijk} zʲ S_k
        (1, bi) => {
            let idx = bi - 2;
            let half_one_minus = MultiPoly::constant(Complex64::new(0.5, 0.0))
                .sub(&zdotz_poly().scale(Complex64::new(0.5, 0.0)));
            let mut op = PolyOperator::from_word(
                -one,
                vec![
                    OpFactor::MulPoly(std::sync::Arc::new(half_one_minus)),
                    OpFactor::Diff(idx),
                ],
            );
            op = op.add(
                &PolyOperator::from_word(one, vec![OpFactor::MulZ(idx)])
                    .compose(&euler_plus(vs))
                    .scale(-one),
            );
            for j in 0..3 {
                for k in 0..3 {
                    let eps = levi_civita(idx, j, k);
                    if eps != 0.0 {
                        op = op.add(&PolyOperator::from_word(
                            -i * eps,
                            vec![
                                OpFactor::MulZ(j),
                                OpFactor::Spin(std::sync::Arc::new(spins[k].clone())),
                            ],
                        ));
                    }
                }
            }
            op
        }
        // L_{ij} = i(zⁱ∂ⱼ − zʲ∂ᵢ) − ε_{ijk} S_k
        (ai, bi) => {
            let (x, y) = (ai - 2, bi - 2);
            let mut op = PolyOperator::from_word(i, vec![OpFactor::MulZ(x), OpFactor::Diff(y)]);
            op = op.add(&PolyOperator::from_word(
                -i,
                vec![OpFactor::MulZ(y), OpFactor::Diff(x)],
            ));
            for k in 0..3 {
                let eps = levi_civita(x, y, k);
                if eps != 0.0 {
                    op = op.add(&PolyOperator::from_word(
                        Complex64::new(-eps, 0.0),
                        vec![OpFactor::Spin(std::sync::Arc::new(spins[k].clone()))],
                    ));
                }
            }
            op
        }
    }
}

pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn eta(alpha: usize) -> f64 {
    if alpha < 2 {
        1.0
    } else {
        -1.0
    }
}

/// Quadratic Casimir with ⟨Q¹⟩ = ς(ς−3) + s(s+1):
/// Q¹ = Σ_{α<β} η^{αα}η^{ββ} L_{αβ}² (the sign convention is fixed by the
/// eigenvalue, and verified against it in tests).
pub fn casimir_q1(params: &RepParams) -> PolyOperator {
    let mut op = PolyOperator::zero();
    for alpha in 0..5 {
        for beta in (alpha + 1)..5 {
            let l = generator((alpha, beta), params);
            let w = eta(alpha) * eta(beta);
            op = op.add(&l.compose(&l).scale(Complex64::new(w, 0.0)));
        }
    }
    op
}

/// All 5-index Levi-Civita values with ε_{50123} = +1 in the (5,0,1,2,3)
/// order (index 0 ↔ 5).
fn eps5(perm: [usize; 5]) -> f64 {
    let mut p = perm;
    let mut sign = 1.0;
    for i in 0..5 {
        if p[i] == i {
            continue;
        }
        let Some(j) = (i + 1..5).find(|&j| p[j] == i) else {
            return 0.0;
        };
        p.swap(i, j);
        sign = -sign;
    }
    if p == [0, 1, 2, 3, 4] {
        sign
    } else {
        0.0
    }
}

/// The Pauli-Lubanski-style component W_α = −(1/8) ε_{αβγδη} L^{βγ}L^{δη}.
pub fn pauli_lubanski(alpha: usize, params: &RepParams) -> PolyOperator {
    let mut generators = std::collections::BTreeMap::new();
    for a in 0..5 {
        for b in 0..5 {
            if a != b {
                generators.insert((a, b), generator((a, b), params));
            }
        }
    }
    let mut op = PolyOperator::zero();
    let rest: Vec<usize> = (0..5).filter(|&x| x != alpha).collect();
    // sum over permutations (β,γ,δ,η) of the remaining four indices
    fn perms_of(items: &[usize]) -> Vec<Vec<usize>> {
        if items.len() == 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for (k, &x) in items.iter().enumerate() {
            let mut rest: Vec<usize> = items.to_vec();
            rest.remove(k);
            for mut tail in perms_of(&rest) {
                let mut v = vec![x];
                v.append(&mut tail);
                out.push(v);
            }
        }
        out
    }
    for p in perms_of(&rest) {
        let (b, g, d, e) = (p[0], p[1], p[2], p[3]);
        let eps = eps5([alpha, b, g, d, e]);
        if eps == 0.0 {
            continue;
        }
        // raise the four indices
        let w = eps * eta(b) * eta(g) * eta(d) * eta(e);
        let term = generators[&(b, g)]
            .compose(&generators[&(d, e)])
            .scale(Complex64::new(-w / 8.0, 0.0));
        op = op.add(&term);
    }
    op
}

/// Quartic Casimir with ⟨Q²⟩ = −(ς−1)(ς−2)s(s+1):
/// Q² = Σ_α η^{αα} W_α ∘ W_α (the overall sign is pinned by the
/// eigenvalue, as is the ε-orientation inside W).
pub fn casimir_q2(params: &RepParams) -> PolyOperator {
    let mut op = PolyOperator::zero();
    for alpha in 0..5 {
        let w = pauli_lubanski(alpha, params);
        op = op.add(&w.compose(&w).scale(Complex64::new(eta(alpha), 0.0)));
    }
    op
}

/// D^s(q) for a complex quaternion argument, as a dense spin matrix.
pub fn dspin(spin: HalfInt, q: &Quat) -> SpinMatrix {
    if spin.twice() == 0 {
        spin_identity(1)
    } else {
        wigner_d_matrix(spin, q)
    }
}

/// A holomorphic vector polynomial dressed by a word of group elements;
/// evaluation applies the discrete-series action right-to-left.
#[derive(Debug, Clone)]
pub struct TransformedFunction {
    pub base: VectorPolynomial,
    pub word: Vec<GroupElement>,
}

impl TransformedFunction {
    pub fn new(base: VectorPolynomial) -> Self {
        Self { base, word: Vec::new() }
    }

    pub fn acted_by(&self, g: &GroupElement) -> Self {
        let mut word = vec![*g];
        word.extend(self.word.iter().cloned());
        Self { base: self.base.clone(), word }
    }
}

/// Pointwise evaluation of (U(g)F)(𝐳) for the discrete-series action:
/// [det(−b̄𝐳+ā)]^{−ς−s} D^s(𝐳b*+a*) F(g⁻¹◇𝐳), with (a,b) the blocks of
/// g⁻¹ and principal-branch complex powers.
pub fn uir_apply(
    g: &GroupElement,
    f: &TransformedFunction,
    z: &DomainPoint,
    params: &RepParams,
) -> Result<Vec<Complex64>, RepnError> {
    evaluate(&f.acted_by(g), z, params)
}

/// Evaluation of a transformed function at a point.
pub fn evaluate(
    f: &TransformedFunction,
    z: &DomainPoint,
    params: &RepParams,
) -> Result<Vec<Complex64>, RepnError> {
    if f.word.is_empty() {
        return Ok(f.base.eval(&z.components()));
    }
    let g = &f.word[0];
    let rest = TransformedFunction {
        base: f.base.clone(),
        word: f.word[1..].to_vec(),
    };
    let gi = g.inverse();
    let (a, b) = (gi.a, gi.b);
    let zq = z.as_quat();
    let denom = (-b.conj() * zq + a.conj()).det();
    if denom.norm() < 1e-12 {
        return Err(RepnError::SingularDenominator { det_abs: denom.norm() });
    }
    let factor = denom.powf(-(params.varsigma + params.spin.value()));
    let dmat = dspin(params.spin, &(zq * b.adjoint() + a.adjoint()));
    let w = gi
        .mobius(z)
        .map_err(|_| RepnError::SingularDenominator { det_abs: denom.norm() })?;
    let inner = evaluate(&rest, &w, params)?;
    let mut out = vec![Complex64::new(0.0, 0.0); inner.len()];
    for (r, row) in dmat.iter().enumerate() {
        for (c, m) in row.iter().enumerate() {
            out[r] += m * inner[c];
        }
    }
    Ok(out.iter().map(|v| v * factor).collect())
}

/// QMC estimate of the Bargmann-Fock inner product
/// (f₁,f₂) = 𝒩(ς,s) ∫ f₁† D^s((1+𝐳𝐳̄)⁻¹) f₂ [det(1+𝐳𝐳̄)]^{ς+s−3} d𝐳,
/// returning (estimate, batch standard error).
pub fn inner_product<F1, F2>(
    f1: &F1,
    f2: &F2,
    params: &RepParams,
    n_samples: usize,
    seed: u64,
) -> Result<(Complex64, f64), RepnError>
where
    F1: Fn(&DomainPoint) -> Vec<Complex64>,
    F2: Fn(&DomainPoint) -> Vec<Complex64>,
{
    let norm = normalization(params.varsigma, params.spin)?;
    let mut sampler = BallSampler::new(seed);
    let n_batches = 16usize;
    let mut batch_means = vec![Complex64::new(0.0, 0.0); n_batches];
    let mut total = 0usize;
    let mut tried = 0usize;
    let weight_exp = params.varsigma + params.spin.value() - 3.0;
    while total < n_samples {
        let z = DomainPoint::new(sampler.next_point());
        tried += 1;
        if !z.contains() {
            continue;
        }
        let zq = z.as_quat();
        let q = (Quat::one() + zq * zq.conj())
            .inverse()
            .expect("1 + z z̄ is invertible inside the domain");
        let dmat = dspin(params.spin, &q);
        let v1 = f1(&z);
        let v2 = f2(&z);
        let mut sandwich = Complex64::new(0.0, 0.0);
        for (r, row) in dmat.iter().enumerate() {
            for (c, m) in row.iter().enumerate() {
                sandwich += v1[r].conj() * m * v2[c];
            }
        }
        let det = domain::det_one_plus_self_sigma(&z);
        let value = sandwich * det.powf(weight_exp);
        batch_means[total % n_batches] += value;
        total += 1;
    }
    // uniform measure on the ball restricted to the domain: the integral
    // over the domain is (ball volume) × mean over ball candidates, and
    // rejected candidates contribute zero
    let ball_volume = std::f64::consts::PI.powi(3) / 6.0;
    let scale = norm * ball_volume / tried as f64;
    let mean: Complex64 = batch_means.iter().sum::<Complex64>() * scale;
    let per_batch: Vec<Complex64> = batch_means
        .iter()
        .map(|b| *b * (scale * n_batches as f64))
        .collect();
    let var = per_batch
        .iter()
        .map(|b| (b - mean).norm_sqr())
        .sum::<f64>()
        / (n_batches as f64 - 1.0);
    let stderr = (var / n_batches as f64).sqrt();
    Ok((mean, stderr))
}

/// Reproducing kernel K^{(ς,s)}(𝐳,𝐳̄′) = [det(1+𝐳𝐳̄′)]^{−ς−s} D^s(1+𝐳𝐳̄′).
pub fn reproducing_kernel(params: &RepParams, z: &DomainPoint, zp: &DomainPoint) -> SpinMatrix {
    let q = Quat::one() + z.as_quat() * zp.as_quat().conj();
    let factor = q.det().powf(-(params.varsigma + params.spin.value()));
    let d = dspin(params.spin, &q);
    d.iter()
        .map(|row| row.iter().map(|m| m * factor).collect())
        .collect()
}

#[cfg(test)]
#[path = "repn_tests.rs"]
mod tests;
