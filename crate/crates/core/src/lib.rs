//! Numerical engine for the Sp(4,ℝ) relativity of anti-de Sitter spacetime.
//!
//! The crate is organised in layers:
//!
//! * [`quat`] — complex quaternion algebra ℍ_ℂ and its 2×2 matrix picture,
//! * [`sp4`] — the Sp(4,ℝ) group: membership, decompositions, homomorphism
//!   onto SO₀(2,3) and the Möbius action on the bounded domain,
//! * [`domain`] — geometry of the Cartan domain 𝒟⁽³⁾ (Bergman kernel,
//!   Kähler metric, invariant measure, Poisson brackets, sampling),
//! * [`orbits`] — classical massive scalar/spin coadjoint orbits and the
//!   moment map,
//! * [`specfun`] — Wigner D polynomials, 3-j symbols, spherical and solid
//!   harmonics, Gegenbauer polynomials and kernel expansions,
//! * [`poly`] — sparse multivariate polynomials and operator words used by
//!   the representation engine,
//! * [`repn`] — discrete-series representations on Bargmann-Fock spaces,
//! * [`contraction`] — Poincaré and Newton-Hooke contraction sweeps,
//! * [`flatgroups`] — reference Poincaré and Newton-Hooke group machinery,
//! * [`verify`] — the named residual checks shared by the CLI and the
//!   acceptance suite.

pub mod contraction;
pub mod domain;
pub mod flatgroups;
pub mod mat;
pub mod orbits;
pub mod poly;
pub mod qmc;
pub mod quat;
pub mod repn;
pub mod sp4;
pub mod specfun;
pub mod verify;

pub use num_complex::Complex64;

/// Convenience constructor for a complex scalar.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
