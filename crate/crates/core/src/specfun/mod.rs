//! Special-function stack: Wigner D polynomials on complex quaternions,
//! 3-j symbols and Clebsch-Gordan coefficients, associated Legendre
//! functions and (solid) spherical harmonics with their holomorphic
//! extensions, Gegenbauer polynomials, and the kernel-expansion machinery
//! of the bounded domain.
//!
//! Conventions in force throughout the crate:
//! * D matrices follow Talman's phase convention; for a unit real
//!   quaternion ξ, D^{1/2}(ξ) is the complex conjugate of the defining
//!   2×2 matrix picture Z(ξ), and D^j(zz′) = D^j(z)D^j(z′) holds for all
//!   complex quaternions.
//! * Associated Legendre functions are taken without the Condon-Shortley
//!   factor; the (−1)^m sits in front of the spherical harmonic itself.
//!   Several references (e.g. the NIST handbook) put the (−1)^m inside
//!   P_l^m instead; the composed Y_lm agrees with the usual physics one.
//! * 3-j symbols are all real; Clebsch-Gordan coefficients follow from
//!   (j₁m₁j₂m₂|j₁j₂j₃m₃) = (−1)^{j₁−j₂+m₃}√(2j₃+1)·3j(j₁,j₂,j₃;m₁,m₂,−m₃).

mod gegenbauer;
mod harmonics;
mod kernel;
mod threej;
mod wigner;
mod ydconvert;

pub use gegenbauer::{gegenbauer, gegenbauer_poly_in_z3, generating_function_partial};
pub use harmonics::{
    assoc_legendre, assoc_legendre_closed_form, gauss_legendre, solid_harmonic_poly,
    solid_harmonic_real, spherical_harmonic, spinor_solid_harmonic, SolidHarmonicTable,
};
pub use kernel::{
    kernel_coeff, kernel_coeff_general, kernel_expand, onofri_basis, onofri_indices_direct,
    onofri_indices_reordered, scalar_basis, spin_basis, BasisIndex, SpinBasisIndex,
};
pub use threej::{clebsch, threej, threej_000};
pub use ydconvert::{d_from_y_poly, restrict_z4_zero, y_from_d_poly};
pub use wigner::{
    check_add1, check_add2, check_mult, wigner_d, wigner_d_matrix, wigner_d_poly,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpecFunError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("gamma function pole at {arg}")]
    PoleAtGamma { arg: f64 },
}

/// Half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    pub const fn from_int(n: i32) -> Self {
        Self { twice: 2 * n }
    }

    pub const fn twice(&self) -> i32 {
        self.twice
    }

    pub fn value(&self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }

    /// The projection range −j..j in steps of one, as twice-values.
    pub fn projections(&self) -> impl DoubleEndedIterator<Item = HalfInt> {
        let j = self.twice;
        (0..=j.max(0)).map(move |k| HalfInt::from_twice(-j + 2 * k))
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        Self::from_twice(self.twice + rhs.twice)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        Self::from_twice(self.twice - rhs.twice)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> Self {
        Self::from_twice(-self.twice)
    }
}

/// n! with the exact integer path for n ≤ 33 and ln Γ beyond.
pub fn factorial(n: i64) -> f64 {
    assert!(n >= 0, "negative factorial argument {n}");
    const TABLE_LEN: usize = 34;
    static TABLE: std::sync::OnceLock<[f64; TABLE_LEN]> = std::sync::OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = [0.0; TABLE_LEN];
        let mut acc: u128 = 1;
        t[0] = 1.0;
        for k in 1..TABLE_LEN {
            acc *= k as u128;
            t[k] = acc as f64;
        }
        t
    });
    if (n as usize) < TABLE_LEN {
        table[n as usize]
    } else {
        ln_gamma(n as f64 + 1.0).exp()
    }
}

/// ln Γ(x) for x > 0 (Lanczos, ~15 significant digits).
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs a positive argument, got {x}");
    const G: f64 = 7.0;
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection keeps small positive arguments accurate
        return (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln()
            - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Γ(x) for real x away from the poles; returns an error at nonpositive
/// integers.
pub fn gamma(x: f64) -> Result<f64, SpecFunError> {
    if x <= 0.0 && (x - x.round()).abs() < 1e-12 {
        return Err(SpecFunError::PoleAtGamma { arg: x });
    }
    if x > 0.0 {
        Ok(ln_gamma(x).exp())
    } else {
        // reflection formula
        let s = (std::f64::consts::PI * x).sin();
        Ok(std::f64::consts::PI / (s * ln_gamma(1.0 - x).exp()))
    }
}

/// Pairwise (cascade) summation, used for the alternating Racah sums.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => {
            let (a, b) = values.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}
