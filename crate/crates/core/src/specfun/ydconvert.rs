//! Linear relations between holomorphic solid spherical harmonics and
//! the Wigner D polynomials, in both directions, verified as exact
//! polynomial identities.

use num_complex::Complex64;

use super::{factorial, solid_harmonic_poly, threej, wigner_d_poly, HalfInt, SpecFunError};
use crate::poly::MultiPoly;

fn inv_sigma(tj: i32, tm: i32) -> f64 {
    (factorial(((tj - tm) / 2) as i64) * factorial(((tj + tm) / 2) as i64)).sqrt()
}

/// i^{n} for integer n (the phase (−1)^{m} continued to half-integer m).
fn quarter_phase(n: i32) -> Complex64 {
    match n.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// 𝒴_lm rebuilt from the D^{l/2} polynomials (a polynomial in
/// (z¹,z²,z³,z⁴) whose z⁴-dependence cancels):
/// σ^l_m 𝒴_lm = 2^{−l} √((2l+1)/4π) Σ_{m₂−m₁=m} (−1)^{m₁}
///              σ^{l/2}_{m₁m₂} D^{l/2}_{m₁m₂}(z⁴,𝐳),
/// with the phase continued to half-integer m₁ as i^{2m₁}. (The σ powers
/// here are fixed by inverting the D-from-Y expansion with the stretched
/// 3-j closed form; solving the linear system coefficientwise confirms
/// them through l = 4.)
pub fn y_from_d_poly(l: i32, m: i32) -> Result<MultiPoly<4>, SpecFunError> {
    if m.abs() > l || l < 0 {
        return Err(SpecFunError::IndexOutOfRange(format!("y_from_d l={l} m={m}")));
    }
    let j = HalfInt::from_twice(l);
    let norm = ((2 * l + 1) as f64 / (4.0 * std::f64::consts::PI)).sqrt()
        * inv_sigma(2 * l, 2 * m)
        / 2.0f64.powi(l);
    let mut acc = MultiPoly::<4>::zero();
    for m1 in j.projections() {
        let m2 = HalfInt::from_twice(m1.twice() + 2 * m);
        if m2.twice().abs() > l {
            continue;
        }
        // (−1)^{m₁} continued as i^{2m₁}
        let phase = quarter_phase(m1.twice());
        let coeff = phase / (inv_sigma(l, m1.twice()) * inv_sigma(l, m2.twice()));
        let d = wigner_d_poly(j, m1, m2)?;
        acc = acc.add(&d.scale(coeff));
    }
    Ok(acc.scale(Complex64::new(norm, 0.0)))
}

/// D^{l/2}_{m₁m₂}(𝐳) (pure-vector argument) rebuilt from solid harmonics:
/// √(4π) Σ_{l′ ≡ l (2)} (−1)^{l′+m₂} 2^{l′} √(2l′+1) √((l−l′)!/(l+l′+1)!)
///   [((l+l′)/2)!/((l−l′)/2)!] (l/2 l/2 l′; m₁ −m₂ m′) (𝐳·𝐳)^{(l−l′)/2} 𝒴_{l′m′}.
pub fn d_from_y_poly(l: i32, m1: HalfInt, m2: HalfInt) -> Result<MultiPoly<3>, SpecFunError> {
    if m1.twice().abs() > l || m2.twice().abs() > l {
        return Err(SpecFunError::IndexOutOfRange(format!("d_from_y l={l}")));
    }
    let j = HalfInt::from_twice(l);
    let m_pr2 = m2.twice() - m1.twice();
    if m_pr2 % 2 != 0 {
        return Err(SpecFunError::IndexOutOfRange("m₂−m₁ must be an integer".into()));
    }
    let m_pr = m_pr2 / 2;
    let zz = MultiPoly::<3>::var(0)
        .pow(2)
        .add(&MultiPoly::var(1).pow(2))
        .add(&MultiPoly::var(2).pow(2));
    let mut acc = MultiPoly::<3>::zero();
    let mut l_pr = l % 2;
    while l_pr <= l {
        if m_pr.abs() <= l_pr {
            // (−1)^{l′+m₂} continued as (−1)^{l′} i^{2m₂}
            let phase = quarter_phase(2 * l_pr + m2.twice());
            let w = threej(
                j,
                j,
                HalfInt::from_int(l_pr),
                m1,
                -m2,
                HalfInt::from_int(m_pr),
            );
            if w != 0.0 {
                let coeff = 2.0f64.powi(l_pr)
                    * ((2 * l_pr + 1) as f64).sqrt()
                    * (factorial((l - l_pr) as i64) / factorial((l + l_pr + 1) as i64)).sqrt()
                    * factorial(((l + l_pr) / 2) as i64)
                    / factorial(((l - l_pr) / 2) as i64);
                let term = solid_harmonic_poly(l_pr, m_pr)?
                    .mul(&zz.pow(((l - l_pr) / 2) as usize))
                    .scale(phase * (coeff * w));
                acc = acc.add(&term);
            }
        }
        l_pr += 2;
    }
    Ok(acc.scale(Complex64::new((4.0 * std::f64::consts::PI).sqrt(), 0.0)))
}

/// Restriction of a 4-variable polynomial to z⁴ = 0.
pub fn restrict_z4_zero(p: &MultiPoly<4>) -> MultiPoly<3> {
    let mut out = MultiPoly::<3>::zero();
    for (e, c) in p.terms() {
        if e[3] == 0 {
            out.add_term([e[0], e[1], e[2]], *c);
        }
    }
    out
}
