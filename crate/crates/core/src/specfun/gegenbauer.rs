//! Gegenbauer polynomials by recurrence, their generating function, and
//! the (𝐳·𝐳)-weighted polynomial form used by the Onofri basis.

use num_complex::Complex64;

use super::factorial;
use crate::poly::MultiPoly;

/// C_l^λ(t) by the three-term recurrence; λ may be any real (negative
/// integer λ truncates the generating series, the recurrence itself is
/// unaffected).
pub fn gegenbauer(l: usize, lambda: f64, t: f64) -> f64 {
    match l {
        0 => 1.0,
        1 => 2.0 * lambda * t,
        _ => {
            let mut cm2 = 1.0;
            let mut cm1 = 2.0 * lambda * t;
            for n in 1..l {
                let c = (2.0 * (n as f64 + lambda) * t * cm1
                    - (n as f64 + 2.0 * lambda - 1.0) * cm2)
                    / (n as f64 + 1.0);
                cm2 = cm1;
                cm1 = c;
            }
            cm1
        }
    }
}

/// Partial sum Σ_{l≤l_max} uˡ C_l^λ(t) of the generating function
/// (1 + u² − 2ut)^{−λ}.
pub fn generating_function_partial(lambda: f64, u: f64, t: f64, l_max: usize) -> f64 {
    (0..=l_max).map(|l| u.powi(l as i32) * gegenbauer(l, lambda, t)).sum()
}

/// The homogeneous polynomial (𝐳·𝐳)^{n/2} C_n^λ(z³/√(𝐳·𝐳)) of degree n
/// in (z¹,z²,z³): the Gegenbauer parity makes every term polynomial.
pub fn gegenbauer_poly_in_z3(n: usize, lambda: f64) -> MultiPoly<3> {
    let z3 = MultiPoly::<3>::var(2);
    let zz = MultiPoly::<3>::var(0)
        .pow(2)
        .add(&MultiPoly::var(1).pow(2))
        .add(&MultiPoly::var(2).pow(2));
    // C_n^λ(t) = Σ_q (−1)^q [Π_{m<n−q}(λ+m)] / (q!(n−2q)!) (2t)^{n−2q}
    let mut acc = MultiPoly::<3>::zero();
    for q in 0..=(n / 2) {
        let mut rising = 1.0;
        for m in 0..(n - q) {
            rising *= lambda + m as f64;
        }
        let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = sign * rising * 2.0f64.powi((n - 2 * q) as i32)
            / (factorial(q as i64) * factorial((n - 2 * q) as i64));
        let term = z3.pow(n - 2 * q).mul(&zz.pow(q)).scale(Complex64::new(coeff, 0.0));
        acc = acc.add(&term);
    }
    acc
}
