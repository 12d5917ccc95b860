//! Kernel-expansion machinery of the bounded domain: the coefficients
//! a_{λ,l,k}, the separating expansion of [det(1+𝐳𝐳̄′)]^{−λ}, and the
//! orthonormal scalar, spin, and Onofri-style bases built from it.

use num_complex::Complex64;

use super::{
    clebsch, factorial, gamma, gegenbauer_poly_in_z3, HalfInt, SolidHarmonicTable, SpecFunError,
};
use crate::domain::DomainPoint;
use crate::poly::MultiPoly;

/// Scalar basis label ν = (l, k, m) with 0 ≤ k ≤ ⌊l/2⌋ and
/// 2k−l ≤ m ≤ l−2k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndex {
    pub l: u32,
    pub k: u32,
    pub m: i32,
}

impl BasisIndex {
    pub fn validate(&self) -> Result<(), SpecFunError> {
        let (l, k, m) = (self.l as i32, self.k as i32, self.m);
        if k > l / 2 || m < 2 * k - l || m > l - 2 * k {
            return Err(SpecFunError::IndexOutOfRange(format!("{self:?}")));
        }
        Ok(())
    }

    /// All labels with l ≤ l_max.
    pub fn enumerate(l_max: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for l in 0..=l_max {
            for k in 0..=(l / 2) {
                let span = (l - 2 * k) as i32;
                for m in -span..=span {
                    out.push(Self { l, k, m });
                }
            }
        }
        out
    }
}

/// Spin basis label (l, k, J, M) with |l−2k−s| ≤ J ≤ l−2k+s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinBasisIndex {
    pub l: u32,
    pub k: u32,
    /// total angular momentum, twice-value
    pub j2: i32,
    /// its projection, twice-value
    pub m2: i32,
}

impl SpinBasisIndex {
    pub fn validate(&self, s: HalfInt) -> Result<(), SpecFunError> {
        let (l, k) = (self.l as i32, self.k as i32);
        let lr = 2 * (l - 2 * k);
        if k > l / 2
            || self.j2 < (lr - s.twice()).abs()
            || self.j2 > lr + s.twice()
            || self.m2.abs() > self.j2
            || (self.j2 - s.twice()).rem_euclid(2) != lr.rem_euclid(2) % 2
        {
            return Err(SpecFunError::IndexOutOfRange(format!("{self:?}")));
        }
        Ok(())
    }

    pub fn enumerate(l_max: u32, s: HalfInt) -> Vec<Self> {
        let mut out = Vec::new();
        for l in 0..=l_max {
            for k in 0..=(l / 2) {
                let lr = 2 * (l - 2 * k) as i32;
                let j_lo = (lr - s.twice()).abs();
                let j_hi = lr + s.twice();
                let mut j2 = j_lo;
                while j2 <= j_hi {
                    for m2 in (-j2..=j2).step_by(2) {
                        out.push(Self { l, k, j2, m2 });
                    }
                    j2 += 2;
                }
            }
        }
        out
    }
}

/// a_{λ,l,k} = 2^{2λ−1} π Γ(k+λ−1/2) Γ(λ+l−k) / (Γ(2λ−1) k! Γ(l−k+3/2)).
pub fn kernel_coeff(lambda: f64, l: u32, k: u32) -> Result<f64, SpecFunError> {
    let (l, k) = (l as f64, k as f64);
    let num = gamma(k + lambda - 0.5)? * gamma(lambda + l - k)?;
    let den = gamma(2.0 * lambda - 1.0)? * factorial(k as i64) * gamma(l - k + 1.5)?;
    Ok(2.0f64.powf(2.0 * lambda - 1.0) * std::f64::consts::PI * num / den)
}

/// The Γ(2λ−1)-free product form of a_{λ,l,k}, valid for any λ away from
/// the Γ(l−k+3/2) poles:
/// a = 2π^{3/2} · Π_{m<k}(λ−1/2+m) · Π_{m<l−k}(λ+m) / (k! Γ(l−k+3/2)).
pub fn kernel_coeff_general(lambda: f64, l: u32, k: u32) -> f64 {
    let mut prod = 1.0;
    for m in 0..k {
        prod *= lambda - 0.5 + m as f64;
    }
    for m in 0..(l - k) {
        prod *= lambda + m as f64;
    }
    2.0 * std::f64::consts::PI.powf(1.5) * prod
        / (factorial(k as i64) * gamma((l - k) as f64 + 1.5).expect("positive argument"))
}

/// Scalar basis element F^λ_ν(𝐳) = √a_{λ,l,k} (𝐳·𝐳)^k 𝒴_{l−2k,m}(𝐳).
pub fn scalar_basis(
    idx: &BasisIndex,
    lambda: f64,
    table: &SolidHarmonicTable,
    z: &DomainPoint,
) -> Result<Complex64, SpecFunError> {
    idx.validate()?;
    let a = kernel_coeff(lambda, idx.l, idx.k)?;
    let zz = z.dot_self();
    let mut pw = Complex64::new(1.0, 0.0);
    for _ in 0..idx.k {
        pw *= zz;
    }
    let y = table.eval((idx.l - 2 * idx.k) as i32, idx.m, &z.components());
    Ok(a.sqrt() * pw * y)
}

/// Spin basis element F^{(ς,s)}_{l,k,J,M}(𝐳) ∈ ℂ^{2s+1}, built from the
/// weight-(ς+s) coefficients and Clebsch-Gordan-coupled solid harmonics.
pub fn spin_basis(
    idx: &SpinBasisIndex,
    varsigma: f64,
    s: HalfInt,
    table: &SolidHarmonicTable,
    z: &DomainPoint,
) -> Result<Vec<Complex64>, SpecFunError> {
    idx.validate(s)?;
    let a = kernel_coeff(varsigma + s.value(), idx.l, idx.k)?;
    let zz = z.dot_self();
    let mut pw = Complex64::new(a.sqrt(), 0.0);
    for _ in 0..idx.k {
        pw *= zz;
    }
    let lr = (idx.l - 2 * idx.k) as i32;
    let dim = (s.twice() + 1) as usize;
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (slot, rho) in s.projections().rev().enumerate() {
        let tm = idx.m2 - rho.twice();
        if tm % 2 != 0 {
            continue;
        }
        let m = tm / 2;
        if m.abs() > lr {
            continue;
        }
        let cg = clebsch(
            s,
            rho,
            HalfInt::from_int(lr),
            HalfInt::from_int(m),
            HalfInt::from_twice(idx.j2),
            HalfInt::from_twice(idx.m2),
        );
        if cg != 0.0 {
            out[slot] = pw * cg * table.eval(lr, m, &z.components());
        }
    }
    Ok(out)
}

/// Partial sum of the separating expansion of [det(1+𝐳𝐳̄′)]^{−λ} over
/// l ≤ l_max.
pub fn kernel_expand(
    lambda: f64,
    z: &DomainPoint,
    zp: &DomainPoint,
    l_max: u32,
    table: &SolidHarmonicTable,
) -> Result<Complex64, SpecFunError> {
    assert!(table.l_max >= l_max as i32);
    let zz = z.dot_self();
    let zpzp = zp.dot_self();
    let zc = z.components();
    let zpc = zp.components();
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..=l_max {
        for k in 0..=(l / 2) {
            let a = kernel_coeff(lambda, l, k)?;
            let lr = (l - 2 * k) as i32;
            let mut zzk = Complex64::new(1.0, 0.0);
            let mut zpzpk = Complex64::new(1.0, 0.0);
            for _ in 0..k {
                zzk *= zz;
                zpzpk *= zpzp;
            }
            for m in -lr..=lr {
                let y = table.eval(lr, m, &zc);
                let yp = table.eval(lr, m, &zpc);
                acc += a * zzk * y * (zpzpk * yp).conj();
            }
        }
    }
    Ok(acc)
}

/// Direct enumeration of the Onofri index set for given s′:
/// k′ = 0..s′, m′ = −k′..k′ with k′−m′ even.
pub fn onofri_indices_direct(s_pr: u32) -> Vec<(u32, i32)> {
    let mut out = Vec::new();
    for k in 0..=s_pr {
        for m in -(k as i32)..=(k as i32) {
            if (k as i32 - m).rem_euclid(2) == 0 {
                out.push((k, m));
            }
        }
    }
    out
}

/// The reordered enumeration: m′ = −s′..s′, k′ = |m′|..s′ with k′−m′
/// even. (The companion description of the same set; the lower bound
/// must be |m′|, a plain 0 would add invalid labels.)
pub fn onofri_indices_reordered(s_pr: u32) -> Vec<(u32, i32)> {
    let mut out = Vec::new();
    for m in -(s_pr as i32)..=(s_pr as i32) {
        for k in (m.unsigned_abs())..=s_pr {
            if (k as i32 - m).rem_euclid(2) == 0 {
                out.push((k, m));
            }
        }
    }
    out
}

/// Onofri-style basis element φ_{s′m′k′} with weight λ.
pub fn onofri_basis(
    s_pr: u32,
    m_pr: i32,
    k_pr: u32,
    lambda: f64,
    z: &DomainPoint,
) -> Result<Complex64, SpecFunError> {
    if k_pr > s_pr || m_pr.unsigned_abs() > k_pr || (k_pr as i32 - m_pr).rem_euclid(2) != 0 {
        return Err(SpecFunError::IndexOutOfRange(format!(
            "onofri index (s'={s_pr}, m'={m_pr}, k'={k_pr})"
        )));
    }
    // original labels: l = s′, m = k′, n = (k′ − m′)/2
    let (l, m) = (s_pr as f64, k_pr as f64);
    let n = ((k_pr as i32 - m_pr) / 2) as f64;
    let norm = 2.0f64.powi(k_pr as i32) * gamma(lambda + m)?
        / (gamma(lambda)? * gamma(lambda - 0.5)?)
        * (gamma(2.0 * lambda - 1.0)? * gamma(l - m + 1.0)? * gamma(lambda - 0.5 + n)?
            * gamma(lambda - 0.5 + m - n)?
            * (2.0 * lambda + 2.0 * m - 1.0)
            / (gamma(l + 2.0 * lambda + m)? * gamma(n + 1.0)? * gamma(m - n + 1.0)?))
        .sqrt();
    let zc = z.components();
    let i = Complex64::new(0.0, 1.0);
    let plus = zc[0] + i * zc[1];
    let minus = zc[0] - i * zc[1];
    let mut ladder = Complex64::new(1.0, 0.0);
    for _ in 0..((k_pr as i32 + m_pr) / 2) {
        ladder *= plus;
    }
    for _ in 0..((k_pr as i32 - m_pr) / 2) {
        ladder *= minus;
    }
    let geg = gegenbauer_poly_in_z3((s_pr - k_pr) as usize, lambda + k_pr as f64).eval(&zc);
    Ok(norm * ladder * geg)
}

/// Partial sum Σ_{s′≤s_max} Σ_{(k′,m′)} φ φ̄′ of the Onofri expansion of
/// [det(1+𝐳𝐳̄′)]^{−λ}.
pub fn onofri_expand(
    lambda: f64,
    z: &DomainPoint,
    zp: &DomainPoint,
    s_max: u32,
) -> Result<Complex64, SpecFunError> {
    let mut acc = Complex64::new(0.0, 0.0);
    for s_pr in 0..=s_max {
        for (k, m) in onofri_indices_direct(s_pr) {
            let a = onofri_basis(s_pr, m, k, lambda, z)?;
            let b = onofri_basis(s_pr, m, k, lambda, zp)?;
            acc += a * b.conj();
        }
    }
    Ok(acc)
}
