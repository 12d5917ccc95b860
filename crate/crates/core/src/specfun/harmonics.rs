//! Associated Legendre functions, spherical harmonics, and their solid
//! and holomorphic extensions, with Gauss-Legendre quadrature support.
//!
//! The Legendre functions here carry no Condon-Shortley factor; the
//! (−1)^m sits in front of the spherical harmonic.

use num_complex::Complex64;

use super::{clebsch, factorial, HalfInt, SpecFunError};
use crate::poly::MultiPoly;

/// Associated Legendre P_l^m(x) without the Condon-Shortley phase,
/// extended to negative m by P_l^{−m} = (−1)^m (l−m)!/(l+m)! P_l^m.
pub fn assoc_legendre(l: i32, m: i32, x: f64) -> Result<f64, SpecFunError> {
    if m.abs() > l || l < 0 || !(-1.0..=1.0).contains(&x) {
        return Err(SpecFunError::IndexOutOfRange(format!("P_{l}^{m}({x})")));
    }
    if m < 0 {
        let mm = -m;
        let sign = if mm % 2 == 0 { 1.0 } else { -1.0 };
        let ratio = factorial((l - mm) as i64) / factorial((l + mm) as i64);
        return Ok(sign * ratio * assoc_legendre(l, mm, x)?);
    }
    // P_m^m = (2m−1)!! (1−x²)^{m/2}, then upward recurrence in l
    let mut pmm = 1.0;
    if m > 0 {
        let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
        let mut fact = 1.0;
        for _ in 0..m {
            pmm *= fact * s;
            fact += 2.0;
        }
    }
    if l == m {
        return Ok(pmm);
    }
    let mut pm1 = pmm;
    let mut p = x * (2 * m + 1) as f64 * pmm;
    for ll in (m + 2)..=l {
        let next = (x * ((2 * ll - 1) as f64) * p - ((ll + m - 1) as f64) * pm1)
            / ((ll - m) as f64);
        pm1 = p;
        p = next;
    }
    Ok(p)
}

/// The closed form of P_l^m(cos θ) as a finite Γ-ratio sum (the same
/// branch of coefficients that powers the solid harmonics), kept as an
/// independent route for cross-checks.
pub fn assoc_legendre_closed_form(l: i32, m: i32, theta: f64) -> f64 {
    assert!((0..=l).contains(&m));
    let ct = theta.cos();
    let st = theta.sin();
    let mut acc = 0.0;
    for k in m..=l {
        if (l - k) % 2 != 0 {
            continue;
        }
        acc += gamma_ratio_half(k, l) * ct.powi(k - m)
            / (factorial((l - k) as i64) * factorial((k - m) as i64));
    }
    2.0f64.powi(l) * st.powi(m) * acc
}

/// Γ((k+l+1)/2) / Γ((k−l+1)/2) as an exact rising product of l factors.
fn gamma_ratio_half(k: i32, l: i32) -> f64 {
    let base = (k - l + 1) as f64 / 2.0;
    let mut acc = 1.0;
    for j in 0..l {
        acc *= base + j as f64;
    }
    acc
}

/// Spherical harmonic Y_lm(θ, φ) in the convention
/// Y_lm = (−1)^m √((2l+1)(l−m)!/4π(l+m)!) P_l^m(cos θ) e^{imφ}.
pub fn spherical_harmonic(l: i32, m: i32, theta: f64, phi: f64) -> Result<Complex64, SpecFunError> {
    if m.abs() > l {
        return Err(SpecFunError::IndexOutOfRange(format!("Y_{l}{m}")));
    }
    let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let norm = ((2 * l + 1) as f64 * factorial((l - m) as i64)
        / (4.0 * std::f64::consts::PI * factorial((l + m) as i64)))
    .sqrt();
    let p = assoc_legendre(l, m, theta.cos())?;
    let phase = Complex64::new(0.0, m as f64 * phi).exp();
    Ok(phase * (sign * norm * p))
}

/// Solid spherical harmonic 𝒴_lm as an exact polynomial in (z¹,z²,z³);
/// on real arguments it equals rˡ Y_lm.
pub fn solid_harmonic_poly(l: i32, m: i32) -> Result<MultiPoly<3>, SpecFunError> {
    if m.abs() > l || l < 0 {
        return Err(SpecFunError::IndexOutOfRange(format!("solid Y_{l}{m}")));
    }
    let i = Complex64::new(0.0, 1.0);
    let z1 = MultiPoly::<3>::var(0);
    let z2 = MultiPoly::<3>::var(1);
    let z3 = MultiPoly::<3>::var(2);
    let zz = z1.pow(2).add(&z2.pow(2)).add(&z3.pow(2)); // 𝐳·𝐳
    let mm = m.abs();
    // (z¹ ± iz²)^{|m|} with + for m ≥ 0
    let ladder = if m >= 0 {
        z1.add(&z2.scale(i))
    } else {
        z1.sub(&z2.scale(i))
    };
    // for m ≥ 0 the harmonic carries (−1)^m; for m < 0 the conjugation
    // rule cancels it, leaving a plain positive normalization
    let sign = if m >= 0 && mm % 2 != 0 { -1.0 } else { 1.0 };
    let norm = ((2 * l + 1) as f64 * factorial((l - mm) as i64)
        / (4.0 * std::f64::consts::PI * factorial((l + mm) as i64)))
    .sqrt();
    let mut acc = MultiPoly::<3>::zero();
    for k in mm..=l {
        if (l - k) % 2 != 0 {
            continue;
        }
        let coeff = gamma_ratio_half(k, l)
            / (factorial((k - mm) as i64) * factorial((l - k) as i64));
        let term = z3
            .pow((k - mm) as usize)
            .mul(&zz.pow(((l - k) / 2) as usize))
            .scale(Complex64::new(coeff, 0.0));
        acc = acc.add(&term);
    }
    Ok(ladder
        .pow(mm as usize)
        .mul(&acc)
        .scale(Complex64::new(sign * norm * 2.0f64.powi(l), 0.0)))
}

/// rˡ Y_lm(r̂) on a real 3-vector, through the polynomial route.
pub fn solid_harmonic_real(l: i32, m: i32, r: [f64; 3]) -> Result<Complex64, SpecFunError> {
    let p = solid_harmonic_poly(l, m)?;
    Ok(p.eval(&[
        Complex64::new(r[0], 0.0),
        Complex64::new(r[1], 0.0),
        Complex64::new(r[2], 0.0),
    ]))
}

/// Cached solid-harmonic polynomials for all l ≤ l_max, |m| ≤ l.
pub struct SolidHarmonicTable {
    pub l_max: i32,
    polys: Vec<Vec<MultiPoly<3>>>,
}

impl SolidHarmonicTable {
    pub fn new(l_max: i32) -> Self {
        let mut polys = Vec::new();
        for l in 0..=l_max {
            let mut row = Vec::new();
            for m in -l..=l {
                row.push(solid_harmonic_poly(l, m).expect("valid index"));
            }
            polys.push(row);
        }
        Self { l_max, polys }
    }

    pub fn poly(&self, l: i32, m: i32) -> &MultiPoly<3> {
        &self.polys[l as usize][(m + l) as usize]
    }

    pub fn eval(&self, l: i32, m: i32, z: &[Complex64; 3]) -> Complex64 {
        self.poly(l, m).eval(z)
    }
}

/// Holomorphic spinor (vector) solid harmonic 𝒴_{slJM}(𝐳) ∈ ℂ^{2s+1},
/// coupling the spin basis to 𝒴_lm with Clebsch-Gordan coefficients.
/// Component index 0 is ρ = s (descending).
pub fn spinor_solid_harmonic(
    s: HalfInt,
    l: i32,
    j_tot: HalfInt,
    m_tot: HalfInt,
    table: &SolidHarmonicTable,
    z: &[Complex64; 3],
) -> Vec<Complex64> {
    let dim = (s.twice() + 1) as usize;
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (slot, rho) in s.projections().rev().enumerate() {
        let tm = m_tot.twice() - rho.twice();
        if tm % 2 != 0 {
            continue;
        }
        let m = tm / 2;
        if m.abs() > l {
            continue;
        }
        let cg = clebsch(
            s,
            rho,
            HalfInt::from_int(l),
            HalfInt::from_int(m),
            j_tot,
            m_tot,
        );
        if cg != 0.0 {
            out[slot] += cg * table.eval(l, m, z);
        }
    }
    out
}

/// Gauss-Legendre nodes and weights on [−1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for k in 0..n {
        // Tricomi-style initial guess
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // evaluate P_n and P_n' by recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let mut p0 = 1.0;
        let mut p1 = x;
        for j in 2..=n {
            let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        nodes[k] = x;
        weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}
