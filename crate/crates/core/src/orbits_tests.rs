use super::*;
use crate::c64;
use crate::domain::{fd_gradient, poisson_bracket, sample_within, DomainPoint};
use crate::sp4::{random_group_element, random_su2, random_unit_vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn moment_map_examples() {
    // base point
    let p = moment_map(&DomainPoint::origin(), 2.5);
    assert_eq!(p.element.k0, 2.5);
    assert_eq!(p.element.sigma, [0.0; 3]);
    assert_eq!(p.element.alpha, [0.0; 3]);
    assert_eq!(p.element.beta, [0.0; 3]);

    // purely real 𝐱: 𝛓 = 0 and 𝐤 purely imaginary
    let z = DomainPoint::from_real([0.3, -0.1, 0.2], [0.0; 3]);
    let p = moment_map(&z, 1.0);
    assert_eq!(p.element.sigma, [0.0; 3]);
    assert_eq!(p.element.alpha, [0.0; 3]);
    assert!(p.element.beta.iter().any(|b| b.abs() > 0.1));

    for z in sample_within(200, 21, 0.9) {
        let p = moment_map(&z, 1.7);
        let (r1, r2) = p.constraint_residuals();
        assert!(r1 < 1e-11 && r2 < 1e-11, "orbit constraints: {r1} {r2}");
        assert!(p.poori_residual() < 1e-12);
    }
}

#[test]
fn sigma_is_real_from_moment_map() {
    // 𝐳×𝐳̄ is purely imaginary, so the raw complex 𝛓 has no real defect
    for z in sample_within(100, 23, 0.95) {
        let zc = z.components();
        let zb = [zc[0].conj(), zc[1].conj(), zc[2].conj()];
        let cr = vcross(&zc, &zb);
        for comp in cr {
            assert!(comp.re.abs() < 1e-13);
        }
    }
}

#[test]
fn inverse_moment_map_round_trips() {
    let p = OrbitPoint {
        element: AlgebraElement::new(3.0, [0.0; 3], [0.0; 3], [0.0; 3]),
        ell: 3.0,
    };
    let z = inverse_moment_map(&p).unwrap();
    assert!(z.as_quat().max_abs() < 1e-15);

    let mut worst = 0.0f64;
    for z in sample_within(1000, 29, 0.9) {
        let p = moment_map(&z, 1.3);
        let back = inverse_moment_map(&p).unwrap();
        for i in 0..3 {
            worst = worst.max((back.components()[i] - z.components()[i]).norm());
        }
    }
    assert!(worst < 1e-11, "round-trip error {worst}");
}

#[test]
fn adjoint_transport_scalar_matches_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let ell = 0.9;
    // ρ = ν = 0 is the seed element
    let x0 = adjoint_transport_scalar(0.0, [1.0, 0.0, 0.0], 0.0, [0.0, 1.0, 0.0], ell);
    assert_eq!(x0.k0, ell);
    assert_eq!(x0.sigma, [0.0; 3]);

    for _ in 0..100 {
        let rho = rng.gen_range(0.0..1.2);
        let nu = rng.gen_range(0.0..1.2);
        let u = random_unit_vector(&mut rng);
        let v = random_unit_vector(&mut rng);
        let x = adjoint_transport_scalar(rho, u, nu, v, ell);
        assert!((x.k0 - ell * rho.cosh() * nu.cosh()).abs() < 1e-12);

        let g = GroupElement::space(rho, u)
            .unwrap()
            .compose(&GroupElement::boost(nu, v).unwrap());
        let seed = AlgebraElement::new(ell, [0.0; 3], [0.0; 3], [0.0; 3]);
        let y = coadjoint_conjugate(&g, &seed);
        assert!((x.k0 - y.k0).abs() < 1e-12);
        for i in 0..3 {
            assert!((x.sigma[i] - y.sigma[i]).abs() < 1e-12);
            assert!((x.alpha[i] - y.alpha[i]).abs() < 1e-12);
            assert!((x.beta[i] - y.beta[i]).abs() < 1e-12);
        }
        // determinant of the matrix is (ℓ²)²
        let det = x.to_matrix().block_det();
        assert!((det - c64(ell.powi(4), 0.0)).norm() < 1e-11);
        // Killing-form scalar tr(XX) = −2ℓ², with the trace taken from
        // the block matrix (4×4 trace is twice the quaternionic one)
        let sq = x.to_matrix().mul(&x.to_matrix());
        let tr = (sq.a.s + sq.d.s).re;
        assert!((tr + 2.0 * ell * ell).abs() < 1e-11, "tr(XX) = {tr}");
        // orbit constraints are satisfied
        let op = OrbitPoint { element: x, ell };
        let (r1, r2) = op.constraint_residuals();
        assert!(r1 < 1e-11 && r2 < 1e-11);
    }
}

#[test]
fn coadjoint_closed_forms_match_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..200 {
        let x = AlgebraElement::new(
            rng.gen_range(0.5..2.0),
            [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
            [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
            [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
        );
        let g = random_group_element(&mut rng, 4, 1.0);
        let via_form = coadjoint_transform(&g, &x);
        let via_conj = coadjoint_conjugate(&g, &x);
        assert!((via_form.k0 - via_conj.k0).abs() < 1e-11);
        for i in 0..3 {
            assert!((via_form.sigma[i] - via_conj.sigma[i]).abs() < 1e-11);
            assert!((via_form.alpha[i] - via_conj.alpha[i]).abs() < 1e-11);
            assert!((via_form.beta[i] - via_conj.beta[i]).abs() < 1e-11);
        }
        // identity leaves x fixed
        let fixed = coadjoint_transform(&GroupElement::identity(), &x);
        assert_eq!(fixed, x);
    }
}

#[test]
fn subgroup_specializations_match_general_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let x = AlgebraElement::new(
            rng.gen_range(0.5..2.0),
            [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
            [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
            [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
        );
        let actions = [
            SubgroupAction::Time(rng.gen_range(-2.0..2.0)),
            SubgroupAction::Rotation(random_su2(&mut rng)),
            SubgroupAction::Space(rng.gen_range(0.0..1.5), random_unit_vector(&mut rng)),
            SubgroupAction::Boost(rng.gen_range(0.0..1.5), random_unit_vector(&mut rng)),
        ];
        for action in actions {
            let special = subgroup_coadjoint(&action, &x);
            let general = coadjoint_transform(&action.group_element(), &x);
            assert!(
                (special.k0 - general.k0).abs() < 1e-11,
                "{action:?} k0 mismatch"
            );
            for i in 0..3 {
                assert!((special.sigma[i] - general.sigma[i]).abs() < 1e-11, "{action:?} sigma");
                assert!((special.alpha[i] - general.alpha[i]).abs() < 1e-11, "{action:?} alpha");
                assert!((special.beta[i] - general.beta[i]).abs() < 1e-11, "{action:?} beta");
            }
        }
        // ν = 0 boost is the identity action
        let trivial = subgroup_coadjoint(&SubgroupAction::Boost(0.0, [1.0, 0.0, 0.0]), &x);
        assert_eq!(trivial, x);
        // boost moves k⁰ by the printed rule
        let nu = 0.6;
        let v = random_unit_vector(&mut rng);
        let boosted = subgroup_coadjoint(&SubgroupAction::Boost(nu, v), &x);
        assert!((boosted.k0 - (x.k0 * nu.cosh() + rdot(&x.alpha, &v) * nu.sinh())).abs() < 1e-13);
        // space translation likewise
        let rho = 0.4;
        let u = random_unit_vector(&mut rng);
        let moved = subgroup_coadjoint(&SubgroupAction::Space(rho, u), &x);
        assert!((moved.k0 - (x.k0 * rho.cosh() - rdot(&x.beta, &u) * rho.sinh())).abs() < 1e-13);
    }
}

#[test]
fn coadjoint_preserves_orbit_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let ell = 1.1;
    for _ in 0..100 {
        let z = sample_within(1, rng.gen_range(0..10_000), 0.9)[0];
        let mut p = moment_map(&z, ell);
        for _ in 0..8 {
            let g = random_group_element(&mut rng, 1, 1.0);
            p = OrbitPoint { element: coadjoint_transform(&g, &p.element), ell };
        }
        let (r1, r2) = p.constraint_residuals();
        assert!(r1 < 1e-10 && r2 < 1e-10, "invariants drifted: {r1} {r2}");
        let det = p.element.to_matrix().block_det();
        assert!((det - c64(ell.powi(4), 0.0)).norm() < 1e-10);
    }
}

#[test]
fn energy_solver_examples() {
    // rest case
    let (e, _) = energy_solve([0.0; 3], [0.0; 3], 2.0, 3.0, 0.5).unwrap();
    assert!((e - 2.0 * 9.0).abs() < 1e-12);

    // κ → 0 recovers the mass shell
    let p = [0.4, -0.2, 0.1];
    let (e, _) = energy_solve([1.0, 2.0, -0.5], p, 1.5, 2.0, 1e-9).unwrap();
    let shell = (1.5f64.powi(2) * 16.0 + 4.0 * rnorm_sq(&p)).sqrt();
    assert!((e - shell).abs() < 1e-6);

    // 𝐥 = 0, large c: matches the oscillator expansion to O(1/c²)
    let q = [0.3, 0.6, -0.2];
    let p = q.map(|x| 0.7 * x); // parallel, so 𝐥 = 0
    let mass = 1.2;
    let omega = 0.8;
    for cval in [10.0, 20.0, 40.0] {
        // hold ω = cκ fixed while c grows
        let kap = omega / cval;
        let (e, _) = energy_solve(q, p, mass, cval, kap).unwrap();
        let approx = energy_large_c(q, p, mass, cval, kap);
        let gap = (e - approx).abs();
        assert!(gap < 20.0 / (cval * cval * cval * cval), "c={cval}: gap {gap}");
    }

    // rotational branch: E_rot ≈ ω‖𝐥‖ for large c
    let q = [1.0, 0.0, 0.0];
    let p = [0.0, 0.3, 0.0];
    let cval = 100.0;
    let kap = 0.9 / cval;
    let (_, erot) = energy_solve(q, p, 1.0, cval, kap).unwrap();
    let omega = cval * kap;
    let l = rcross(&q, &p);
    assert!((erot - omega * rnorm_sq(&l).sqrt()).abs() < 1e-3);
}

#[test]
fn flat_limit_examples() {
    assert_eq!(flat_limit_z([0.0; 3], 1.0, 1.0), [0.0; 3]);
    // ‖𝐩‖ → ∞ pushes toward the boundary of the ball
    let mut prev = 0.0;
    for steps in 1..8 {
        let p = [10.0f64.powi(steps), 0.0, 0.0];
        let x = flat_limit_z(p, 1.0, 1.0);
        let n = rnorm_sq(&x).sqrt();
        assert!(n < 1.0 && n > prev);
        prev = n;
    }
    assert!(prev > 0.999);
}

#[test]
fn flat_limit_boost_agreement() {
    // mobius_act(r(ξ)λ(ν,v̂), 𝐱∘(p)) = 𝐱∘(Λ(ξ)Λ(ν,v̂)p)
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let mass = 1.3;
    let cval: f64 = 2.0;
    for _ in 0..200 {
        let p = [
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
        ];
        let nu = rng.gen_range(0.0..1.5);
        let v = random_unit_vector(&mut rng);
        let xi = random_su2(&mut rng);
        let x0 = flat_limit_z(p, mass, cval);

        // Möbius route through the −i chart twist
        let g = GroupElement::rotation(xi)
            .unwrap()
            .compose(&GroupElement::boost(nu, v).unwrap());
        let moved = flat_ball_action(&g, x0).unwrap();

        // Lorentz route on the mass shell
        let e = (mass * mass * cval.powi(4) + cval * cval * rnorm_sq(&p)).sqrt();
        let e_over_c = e / cval;
        let vp = rdot(&v, &p);
        let boost_gain = e_over_c * nu.sinh() - (1.0 - nu.cosh()) * vp;
        let e_over_c_new = e_over_c * nu.cosh() + vp * nu.sinh();
        let pb: [f64; 3] = [
            p[0] + boost_gain * v[0],
            p[1] + boost_gain * v[1],
            p[2] + boost_gain * v[2],
        ];
        let rot = xi * Quat::real_vector(pb) * xi.quat_conj();
        let p_new = [rot.v[0].re, rot.v[1].re, rot.v[2].re];
        let e_new = e_over_c_new * cval;
        let x_new = p_new.map(|pi| -pi * cval / (e_new + mass * cval * cval));

        for i in 0..3 {
            assert!(
                (moved[i] - x_new[i]).abs() < 1e-10,
                "boost agreement failed: {} vs {}",
                moved[i],
                x_new[i]
            );
        }
    }
}

#[test]
fn spin_transport_and_classification() {
    // untransported element
    let p = spin_transport(0.0, [1.0, 0.0, 0.0], 0.0, [0.0, 1.0, 0.0], Quat::one(), 1.5, 0.7);
    assert!((p.k0 - 1.5).abs() < 1e-14);
    assert!((p.sigma[2] - 0.7).abs() < 1e-14);
    assert!(p.sigma[0].abs() < 1e-14 && p.sigma[1].abs() < 1e-14);
    assert!(p.k.iter().all(|c| c.norm() < 1e-14));

    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..100 {
        let rho = rng.gen_range(0.0..1.0);
        let nu = rng.gen_range(0.0..1.0);
        let u = random_unit_vector(&mut rng);
        let v = random_unit_vector(&mut rng);
        // ξ⁽³̸⁾: unit real quaternion with no e₃ component
        let phi = rng.gen_range(0.0..std::f64::consts::PI);
        let psi = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        let xi = Quat::new(
            c64(phi.cos(), 0.0),
            [c64(phi.sin() * psi.cos(), 0.0), c64(phi.sin() * psi.sin(), 0.0), c64(0.0, 0.0)],
        );
        let ell = rng.gen_range(0.5..2.0);
        let jay = rng.gen_range(0.2..2.0);
        let p = spin_transport(rho, u, nu, v, xi, ell, jay);
        let (ra, rb) = p.constraint_residuals();
        assert!(ra < 1e-9 && rb < 1e-9, "spin constraints: {ra} {rb}");
    }

    // rotation-only transport keeps the componentwise split of case (ii)
    let mut rng = ChaCha8Rng::seed_from_u64(54);
    for _ in 0..50 {
        let phi = rng.gen_range(0.0..std::f64::consts::PI);
        let psi = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        let xi = Quat::new(
            c64(phi.cos(), 0.0),
            [c64(phi.sin() * psi.cos(), 0.0), c64(phi.sin() * psi.sin(), 0.0), c64(0.0, 0.0)],
        );
        let (ell, jay) = (1.7, 0.6);
        let p = spin_transport(0.0, [1.0, 0.0, 0.0], 0.0, [0.0, 1.0, 0.0], xi, ell, jay);
        assert_eq!(p.classify(), SpinOrbitCase::Ii);
        let nk: f64 = p.k.iter().map(|c| c.norm_sqr()).sum();
        assert!((ell * ell - (p.k0 * p.k0 - nk)).abs() < 1e-10);
        assert!((jay * jay - rnorm_sq(&p.sigma)).abs() < 1e-10);
        // the spin axis is the rotated e₃
        let axis = spin_axis(&xi);
        for i in 0..3 {
            assert!((p.sigma[i] - jay * axis[i]).abs() < 1e-12);
        }
    }

    // ℓ = ȷ: case (i) with ℓ² = (k⁰)² − ‖𝐤‖² = ‖𝛓‖² at the seed slice
    let xi = Quat::new(c64(0.8, 0.0), [c64(0.6, 0.0), c64(0.0, 0.0), c64(0.0, 0.0)]);
    let p = spin_transport(0.0, [0.0, 1.0, 0.0], 0.0, [1.0, 0.0, 0.0], xi, 1.1, 1.1);
    assert_eq!(p.classify(), SpinOrbitCase::I);
    let nk: f64 = p.k.iter().map(|c| c.norm_sqr()).sum();
    assert!((p.k0 * p.k0 - nk - 1.1f64 * 1.1).abs() < 1e-10);
    assert!((rnorm_sq(&p.sigma) - 1.1f64 * 1.1).abs() < 1e-10);

    // case (iii) labels data whose split runs the other way
    let swapped = SpinOrbitPoint {
        k0: 0.6,
        sigma: [0.0, 0.0, 1.7],
        k: [c64(0.0, 0.0); 3],
        ell: 1.7,
        jay: 0.6,
    };
    assert_eq!(swapped.classify(), SpinOrbitCase::Iii);
}

#[test]
fn orbit_observable_gradients_match_fd() {
    let ell = 1.4;
    let coords = [
        OrbitCoordinate::K0,
        OrbitCoordinate::Sigma(0),
        OrbitCoordinate::Sigma(2),
        OrbitCoordinate::Alpha(1),
        OrbitCoordinate::Beta(0),
        OrbitCoordinate::Beta(2),
    ];
    for z in sample_within(30, 59, 0.8) {
        for coord in coords {
            let obs = OrbitObservable::new(coord, ell);
            let f = |w: &DomainPoint| obs.value(w);
            let (fd_dz, fd_dzbar) = fd_gradient(&f, &z, 1e-6);
            let (dz, dzbar) = obs.gradient(&z);
            for i in 0..3 {
                assert!(
                    (dz[i] - fd_dz[i]).norm() < 1e-6 * (1.0 + dz[i].norm()),
                    "{coord:?} dz mismatch"
                );
                assert!(
                    (dzbar[i] - fd_dzbar[i]).norm() < 1e-6 * (1.0 + dzbar[i].norm()),
                    "{coord:?} dzbar mismatch"
                );
            }
        }
    }
}

#[test]
fn poisson_brackets_close_on_the_orbit_table() {
    let ell = 1.25;
    let obs = |coord| OrbitObservable::new(coord, ell);
    let eps = |a: usize, b: usize, c: usize| -> f64 {
        match (a, b, c) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
            _ => 0.0,
        }
    };
    for z in sample_within(50, 61, 0.7) {
        let value = |coord: OrbitCoordinate| obs(coord).value(&z).re;
        let pb = |f: OrbitCoordinate, g: OrbitCoordinate| -> f64 {
            let out = poisson_bracket(&obs(f), &obs(g), &z, ell).unwrap();
            assert!(out.im.abs() < 1e-9 * (1.0 + out.re.abs()));
            out.re
        };
        let scale = 1.0 + ell * ell;
        for i in 0..3 {
            // {k⁰, αⁱ} = βⁱ and {k⁰, βⁱ} = −αⁱ
            assert!(
                (pb(OrbitCoordinate::K0, OrbitCoordinate::Alpha(i))
                    - value(OrbitCoordinate::Beta(i)))
                .abs()
                    < 1e-6 * scale
            );
            assert!(
                (pb(OrbitCoordinate::K0, OrbitCoordinate::Beta(i))
                    + value(OrbitCoordinate::Alpha(i)))
                .abs()
                    < 1e-6 * scale
            );
            // {k⁰, ςⁱ} = 0
            assert!(pb(OrbitCoordinate::K0, OrbitCoordinate::Sigma(i)).abs() < 1e-6 * scale);
            for j in 0..3 {
                // {αⁱ, βʲ} = −δᵢⱼ k⁰
                let expect = if i == j { -value(OrbitCoordinate::K0) } else { 0.0 };
                assert!(
                    (pb(OrbitCoordinate::Alpha(i), OrbitCoordinate::Beta(j)) - expect).abs()
                        < 1e-6 * scale
                );
                if i != j {
                    let k = 3 - i - j;
                    // {ςᵃ, ςᵇ} = ε_abc ςᶜ (so {ς^k, ς^j} = −ς^i on cyclic triples)
                    assert!(
                        (pb(OrbitCoordinate::Sigma(i), OrbitCoordinate::Sigma(j))
                            - eps(i, j, k) * value(OrbitCoordinate::Sigma(k)))
                        .abs()
                            < 1e-6 * scale
                    );
                    // {αᵃ, ςᵇ} = ε_abc αᶜ
                    assert!(
                        (pb(OrbitCoordinate::Alpha(i), OrbitCoordinate::Sigma(j))
                            - eps(i, j, k) * value(OrbitCoordinate::Alpha(k)))
                        .abs()
                            < 1e-6 * scale
                    );
                    // {ςᵃ, βᵇ} = ε_abc βᶜ (so {ς^k, β^i} = β^j on cyclic triples)
                    assert!(
                        (pb(OrbitCoordinate::Sigma(i), OrbitCoordinate::Beta(j))
                            - eps(i, j, k) * value(OrbitCoordinate::Beta(k)))
                        .abs()
                            < 1e-6 * scale
                    );
                    // {αᵃ, αᵇ} = {βᵃ, βᵇ} = −ε_abc ςᶜ
                    assert!(
                        (pb(OrbitCoordinate::Alpha(i), OrbitCoordinate::Alpha(j))
                            + eps(i, j, k) * value(OrbitCoordinate::Sigma(k)))
                        .abs()
                            < 1e-6 * scale
                    );
                    assert!(
                        (pb(OrbitCoordinate::Beta(i), OrbitCoordinate::Beta(j))
                            + eps(i, j, k) * value(OrbitCoordinate::Sigma(k)))
                        .abs()
                            < 1e-6 * scale
                    );
                }
            }
        }
        // {f, const} = 0
        let konst = crate::domain::FnObservable {
            value: |_: &DomainPoint| c64(4.2, 0.0),
            grad: |_: &DomainPoint| ([c64(0.0, 0.0); 3], [c64(0.0, 0.0); 3]),
        };
        let out = poisson_bracket(&obs(OrbitCoordinate::K0), &konst, &z, ell).unwrap();
        assert!(out.norm() < 1e-12);
    }
}
