//! Wigner 3-j symbols and Clebsch-Gordan coefficients via the Racah sum,
//! in the all-real convention.

use super::{factorial, pairwise_sum, HalfInt};

fn triangle_ok(tj1: i32, tj2: i32, tj3: i32) -> bool {
    tj3 >= (tj1 - tj2).abs() && tj3 <= tj1 + tj2 && (tj1 + tj2 + tj3) % 2 == 0
}

/// Wigner 3-j symbol (j₁ j₂ j₃; m₁ m₂ m₃). Selection-rule violations
/// return exactly zero.
pub fn threej(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    m3: HalfInt,
) -> f64 {
    let (tj1, tj2, tj3) = (j1.twice(), j2.twice(), j3.twice());
    let (tm1, tm2, tm3) = (m1.twice(), m2.twice(), m3.twice());
    if tm1 + tm2 + tm3 != 0
        || !triangle_ok(tj1, tj2, tj3)
        || tm1.abs() > tj1
        || tm2.abs() > tj2
        || tm3.abs() > tj3
        || (tj1 + tm1) % 2 != 0
        || (tj2 + tm2) % 2 != 0
        || (tj3 + tm3) % 2 != 0
    {
        return 0.0;
    }
    // all of these are non-negative integers now
    let f = |t: i32| -> f64 { factorial((t / 2) as i64) };
    let delta = (f(tj1 + tj2 - tj3) * f(tj1 - tj2 + tj3) * f(-tj1 + tj2 + tj3)
        / f(tj1 + tj2 + tj3 + 2))
    .sqrt();
    let norm = (f(tj1 + tm1) * f(tj1 - tm1) * f(tj2 + tm2) * f(tj2 - tm2) * f(tj3 + tm3)
        * f(tj3 - tm3))
    .sqrt();
    // summation bounds keep every factorial argument non-negative
    let s_min = 0.max(-(tj3 - tj2 + tm1) / 2).max(-(tj3 - tj1 - tm2) / 2);
    let s_max = ((tj1 + tj2 - tj3) / 2)
        .min((tj1 - tm1) / 2)
        .min((tj2 + tm2) / 2);
    let mut terms = Vec::new();
    for s in s_min..=s_max {
        let denom = factorial(s as i64)
            * factorial(((tj2 + tm2) / 2 - s) as i64)
            * factorial(((tj1 - tm1) / 2 - s) as i64)
            * factorial(((tj3 - tj2 + tm1) / 2 + s) as i64)
            * factorial(((tj3 - tj1 - tm2) / 2 + s) as i64)
            * factorial(((tj1 + tj2 - tj3) / 2 - s) as i64);
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        terms.push(sign / denom);
    }
    let phase = if (tj1 - tj2 - tm3) / 2 % 2 == 0 { 1.0 } else { -1.0 };
    phase * delta * norm * pairwise_sum(&terms)
}

/// Closed form of the stretched symbol (l₁ l₂ l₃; 0 0 0); vanishes for
/// odd l₁+l₂+l₃.
pub fn threej_000(l1: i32, l2: i32, l3: i32) -> f64 {
    let j = l1 + l2 + l3;
    if j % 2 != 0 || !triangle_ok(2 * l1, 2 * l2, 2 * l3) {
        return 0.0;
    }
    let g = j / 2;
    let sign = if g % 2 == 0 { 1.0 } else { -1.0 };
    let sqrt = (factorial((j - 2 * l1) as i64) * factorial((j - 2 * l2) as i64)
        * factorial((j - 2 * l3) as i64)
        / factorial((j + 1) as i64))
    .sqrt();
    sign * sqrt * factorial(g as i64)
        / (factorial((g - l1) as i64) * factorial((g - l2) as i64) * factorial((g - l3) as i64))
}

/// Clebsch-Gordan coefficient (j₁m₁ j₂m₂ | j₁j₂ j₃m₃), all-real.
pub fn clebsch(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    j3: HalfInt,
    m3: HalfInt,
) -> f64 {
    let phase_pow = (j1.twice() - j2.twice() + m3.twice()) / 2;
    let phase = if phase_pow.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    phase * ((j3.twice() + 1) as f64).sqrt() * threej(j1, j2, j3, m1, m2, -m3)
}
