//! Wigner D matrix elements extended holomorphically to complex
//! quaternions (Talman phase convention), as values, matrices, and exact
//! polynomials, plus the two addition expansions and the multiplication
//! rule.

use num_complex::Complex64;

use super::{factorial, HalfInt, SpecFunError};
use crate::poly::MultiPoly;
use crate::quat::Quat;

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn cpow(base: Complex64, n: i32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        acc *= base;
    }
    acc
}

fn check_indices(j: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<(), SpecFunError> {
    let (tj, tm1, tm2) = (j.twice(), m1.twice(), m2.twice());
    if tj < 0
        || tm1.abs() > tj
        || tm2.abs() > tj
        || (tj + tm1) % 2 != 0
        || (tj + tm2) % 2 != 0
    {
        return Err(SpecFunError::IndexOutOfRange(format!(
            "D^{}_{{{},{}}}",
            j.value(),
            m1.value(),
            m2.value()
        )));
    }
    Ok(())
}

/// D^j_{m₁m₂}(z) for a complex quaternion argument: a homogeneous
/// polynomial of degree 2j in the components, reducing to the SU(2)
/// matrix elements on unit real quaternions.
pub fn wigner_d(j: HalfInt, m1: HalfInt, m2: HalfInt, z: &Quat) -> Result<Complex64, SpecFunError> {
    check_indices(j, m1, m2)?;
    let i = Complex64::new(0.0, 1.0);
    let a = z.s + i * z.v[2]; // z⁴ + iz³
    let b = z.s - i * z.v[2]; // z⁴ − iz³
    let c = -z.v[1] + i * z.v[0]; // −z² + iz¹
    let d = z.v[1] + i * z.v[0]; // z² + iz¹
    let (tj, tm1, tm2) = (j.twice(), m1.twice(), m2.twice());
    let pref = (factorial(((tj + tm1) / 2) as i64)
        * factorial(((tj - tm1) / 2) as i64)
        * factorial(((tj + tm2) / 2) as i64)
        * factorial(((tj - tm2) / 2) as i64))
    .sqrt();
    let sign = if ((tm1 - tm2) / 2).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let t_min = 0.max((tm1 - tm2) / 2);
    let t_max = ((tj - tm2) / 2).min((tj + tm1) / 2);
    let mut acc = czero();
    for t in t_min..=t_max {
        let ea = (tj - tm2) / 2 - t;
        let eb = (tj + tm1) / 2 - t;
        let ec = t + (tm2 - tm1) / 2;
        let ed = t;
        let denom = factorial(ea as i64) * factorial(eb as i64) * factorial(ec as i64)
            * factorial(ed as i64);
        acc += cpow(a, ea) * cpow(b, eb) * cpow(c, ec) * cpow(d, ed) / denom;
    }
    Ok(acc * (sign * pref))
}

/// The full (2j+1)×(2j+1) matrix D^j(z), rows and columns ordered with
/// m = j first (descending).
pub fn wigner_d_matrix(j: HalfInt, z: &Quat) -> Vec<Vec<Complex64>> {
    let dim = (j.twice() + 1) as usize;
    let mut m = vec![vec![czero(); dim]; dim];
    for (r, m1) in j.projections().rev().enumerate() {
        for (c, m2) in j.projections().rev().enumerate() {
            m[r][c] = wigner_d(j, m1, m2, z).expect("valid indices");
        }
    }
    m
}

/// D^j_{m₁m₂} as an exact polynomial in the four components
/// (z¹, z², z³, z⁴).
pub fn wigner_d_poly(
    j: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
) -> Result<MultiPoly<4>, SpecFunError> {
    check_indices(j, m1, m2)?;
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    // linear forms as polynomials over (z¹, z², z³, z⁴)
    let z1 = MultiPoly::<4>::var(0);
    let z2 = MultiPoly::<4>::var(1);
    let z3 = MultiPoly::<4>::var(2);
    let z4 = MultiPoly::<4>::var(3);
    let a = z4.add(&z3.scale(i));
    let b = z4.sub(&z3.scale(i));
    let c = z1.scale(i).sub(&z2);
    let d = z2.add(&z1.scale(i));
    let (tj, tm1, tm2) = (j.twice(), m1.twice(), m2.twice());
    let pref = (factorial(((tj + tm1) / 2) as i64)
        * factorial(((tj - tm1) / 2) as i64)
        * factorial(((tj + tm2) / 2) as i64)
        * factorial(((tj - tm2) / 2) as i64))
    .sqrt();
    let sign = if ((tm1 - tm2) / 2).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let t_min = 0.max((tm1 - tm2) / 2);
    let t_max = ((tj - tm2) / 2).min((tj + tm1) / 2);
    let mut acc = MultiPoly::<4>::zero();
    for t in t_min..=t_max {
        let ea = ((tj - tm2) / 2 - t) as usize;
        let eb = ((tj + tm1) / 2 - t) as usize;
        let ec = (t + (tm2 - tm1) / 2) as usize;
        let ed = t as usize;
        let denom = factorial(ea as i64) * factorial(eb as i64) * factorial(ec as i64)
            * factorial(ed as i64);
        let term = a.pow(ea).mul(&b.pow(eb)).mul(&c.pow(ec)).mul(&d.pow(ed));
        acc = acc.add(&term.scale(one / denom));
    }
    Ok(acc.scale(Complex64::new(sign * pref, 0.0)))
}

fn sigma(j: HalfInt, m: HalfInt) -> f64 {
    1.0 / (factorial(((j.twice() - m.twice()) / 2) as i64)
        * factorial(((j.twice() + m.twice()) / 2) as i64))
    .sqrt()
}

/// Residual of the finite addition expansion of D^j(z+z′) against its
/// factorized right-hand side.
pub fn check_add1(z: &Quat, zp: &Quat, j: HalfInt, m1: HalfInt, m2: HalfInt) -> f64 {
    let lhs = sigma(j, m1)
        * sigma(j, m2)
        * wigner_d(j, m1, m2, &(*z + *zp)).expect("valid indices");
    let mut rhs = czero();
    for tjp in 0..=j.twice() {
        let jp = HalfInt::from_twice(tjp);
        let jr = j - jp;
        for m1p in jp.projections() {
            for m2p in jp.projections() {
                let m1r = m1 - m1p;
                let m2r = m2 - m2p;
                if m1r.twice().abs() > jr.twice() || m2r.twice().abs() > jr.twice() {
                    continue;
                }
                rhs += sigma(jr, m1r)
                    * sigma(jr, m2r)
                    * wigner_d(jr, m1r, m2r, z).expect("valid indices")
                    * sigma(jp, m1p)
                    * sigma(jp, m2p)
                    * wigner_d(jp, m1p, m2p, zp).expect("valid indices");
            }
        }
    }
    (Complex64::new(lhs.re, lhs.im) - rhs).norm()
}

/// Residual of the inverse-argument addition expansion,
/// truncated at j′ ≤ `jp_max`; requires ‖z‖ < ‖z′‖ for convergence.
pub fn check_add2(
    z: &Quat,
    zp: &Quat,
    j: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    jp_max: HalfInt,
) -> f64 {
    let sum = *z + *zp;
    let lhs = wigner_d(j, m1, m2, &sum.inverse().expect("invertible sum"))
        .expect("valid indices")
        / (sigma(j, m1) * sigma(j, m2))
        / sum.det();
    let zp_inv = zp.inverse().expect("invertible z'");
    let det_zp = zp.det();
    let mut rhs = czero();
    for tjp in 0..=jp_max.twice() {
        let jp = HalfInt::from_twice(tjp);
        let jsum = j + jp;
        let sign = if tjp % 2 == 0 { 1.0 } else { -1.0 }; // (−1)^{2j′}
        for m1p in jp.projections() {
            for m2p in jp.projections() {
                let mm1 = m1 + m2p;
                let mm2 = m2 + m1p;
                if mm1.twice().abs() > jsum.twice() || mm2.twice().abs() > jsum.twice() {
                    continue;
                }
                rhs += sign
                    * sigma(jp, m1p)
                    * sigma(jp, m2p)
                    * wigner_d(jp, m1p, m2p, z).expect("valid indices")
                    / (sigma(jsum, mm1) * sigma(jsum, mm2))
                    / det_zp
                    * wigner_d(jsum, mm1, mm2, &zp_inv).expect("valid indices");
            }
        }
    }
    (lhs - rhs).norm()
}

/// Residual of the multiplication rule D^j(zz′) = D^j(z)·D^j(z′) at the
/// given entry.
pub fn check_mult(z: &Quat, zp: &Quat, j: HalfInt, m1: HalfInt, m2: HalfInt) -> f64 {
    let lhs = wigner_d(j, m1, m2, &(*z * *zp)).expect("valid indices");
    let mut rhs = czero();
    for mp in j.projections() {
        rhs += wigner_d(j, m1, mp, z).expect("valid indices")
            * wigner_d(j, mp, m2, zp).expect("valid indices");
    }
    (lhs - rhs).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::sp4::random_su2;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_quat(rng: &mut impl Rng) -> Quat {
        Quat::new(
            c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            [
                c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ],
        )
    }

    #[test]
    fn spin_half_matrix() {
        // D^{1/2}(z) = [[z⁴−iz³, −z²−iz¹], [z²−iz¹, z⁴+iz¹...]]
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let z = random_quat(&mut rng);
        let i = c64(0.0, 1.0);
        let m = wigner_d_matrix(HalfInt::from_twice(1), &z);
        assert!((m[0][0] - (z.s - i * z.v[2])).norm() < 1e-15);
        assert!((m[0][1] - (-z.v[1] - i * z.v[0])).norm() < 1e-15);
        assert!((m[1][0] - (z.v[1] - i * z.v[0])).norm() < 1e-15);
        assert!((m[1][1] - (z.s + i * z.v[2])).norm() < 1e-15);
    }

    #[test]
    fn identity_and_homogeneity() {
        for tj in 0..=8 {
            let j = HalfInt::from_twice(tj);
            let m = wigner_d_matrix(j, &Quat::one());
            for (r, row) in m.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    let expect = if r == c { 1.0 } else { 0.0 };
                    assert!((v - c64(expect, 0.0)).norm() < 1e-14);
                }
            }
            // D^j(λz) = λ^{2j} D^j(z)
            let mut rng = ChaCha8Rng::seed_from_u64(tj as u64);
            let z = random_quat(&mut rng);
            let lambda = c64(0.7, -0.4);
            let scaled = z * lambda;
            for m1 in j.projections() {
                for m2 in j.projections() {
                    let lhs = wigner_d(j, m1, m2, &scaled).unwrap();
                    let rhs = cpow(lambda, tj) * wigner_d(j, m1, m2, &z).unwrap();
                    assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
                }
            }
        }
    }

    #[test]
    fn unitary_on_su2() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for tj in 1..=8 {
            let j = HalfInt::from_twice(tj);
            let xi = random_su2(&mut rng);
            let m = wigner_d_matrix(j, &xi);
            let dim = m.len();
            for r in 0..dim {
                for c in 0..dim {
                    let mut acc = czero();
                    for k in 0..dim {
                        acc += m[k][r].conj() * m[k][c];
                    }
                    let expect = if r == c { 1.0 } else { 0.0 };
                    assert!((acc - c64(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn harmonic_polynomials() {
        // Σ_a ∂²/∂(z^a)² D^j = 0 exactly on coefficients
        for tj in 0..=8 {
            let j = HalfInt::from_twice(tj);
            for m1 in j.projections() {
                for m2 in j.projections() {
                    let p = wigner_d_poly(j, m1, m2).unwrap();
                    let lap = p.laplacian();
                    assert!(
                        lap.max_coeff() < 1e-11 * (1.0 + p.max_coeff()),
                        "D^{tj}/2 not harmonic"
                    );
                    // polynomial evaluation agrees with the direct value
                    let mut rng = ChaCha8Rng::seed_from_u64((tj * 100) as u64);
                    let z = random_quat(&mut rng);
                    let v1 = p.eval(&[z.v[0], z.v[1], z.v[2], z.s]);
                    let v2 = wigner_d(j, m1, m2, &z).unwrap();
                    assert!((v1 - v2).norm() < 1e-11 * (1.0 + v2.norm()));
                }
            }
        }
    }

    #[test]
    fn multiplication_rule_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for tj in 0..=6 {
            let j = HalfInt::from_twice(tj);
            let z = random_quat(&mut rng);
            let zp = random_quat(&mut rng);
            // z′ = 1 makes the rule an identity check
            for m1 in j.projections() {
                for m2 in j.projections() {
                    assert!(check_mult(&z, &Quat::one(), j, m1, m2) < 1e-12);
                    let scale = z.max_abs().powi(tj) * zp.max_abs().powi(tj);
                    assert!(check_mult(&z, &zp, j, m1, m2) < 1e-11 * (1.0 + scale));
                }
            }
        }
    }

    #[test]
    fn addition_expansions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // finite sum at j = 1: exact
        let j = HalfInt::from_int(1);
        for _ in 0..20 {
            let z = random_quat(&mut rng);
            let zp = random_quat(&mut rng);
            for m1 in j.projections() {
                for m2 in j.projections() {
                    assert!(check_add1(&z, &zp, j, m1, m2) < 1e-12);
                }
            }
        }
        // truncated inverse expansion with ‖z‖/‖z′‖ = 0.3: unit real
        // quaternions make every matrix norm coincide with the scale
        let z = random_su2(&mut rng) * 0.3;
        let zp = random_su2(&mut rng);
        let j = HalfInt::from_twice(1);
        for m1 in j.projections() {
            for m2 in j.projections() {
                let res8 = check_add2(&z, &zp, j, m1, m2, HalfInt::from_twice(16));
                let res10 = check_add2(&z, &zp, j, m1, m2, HalfInt::from_twice(20));
                // geometric tail in (‖z‖/‖z′‖)² per unit of j′
                assert!(res8 < 1e-7, "truncated expansion residual {res8}");
                assert!(res10 < 1e-8, "deeper truncation residual {res10}");
                assert!(res10 < 0.05 * res8 + 1e-13, "tail not geometric");
            }
        }
        // a genuinely complex pair converges as well
        let z = random_quat(&mut rng) * 0.1;
        let zp = random_quat(&mut rng);
        let res = check_add2(&z, &zp, j, HalfInt::from_twice(1), HalfInt::from_twice(-1), HalfInt::from_twice(20));
        assert!(res < 1e-8, "complex-pair expansion residual {res}");
    }
}
