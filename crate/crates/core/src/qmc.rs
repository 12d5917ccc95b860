//! Quasi-Monte-Carlo support: a seeded Halton sequence and its
//! measure-preserving map onto the unit ball of ℂ³ ≅ ℝ⁶.
//!
//! A uniform point of the ball is built from six Halton coordinates: two
//! give a uniform point (λ₁,λ₂,λ₃) of the 2-simplex, three give phases,
//! one gives the radial factor, and zⱼ = √(s·λⱼ)·e^{2πiθⱼ} with s = u^{1/3}
//! (the squared moduli of a uniform ball point are uniform on the corner
//! simplex). The seed enters as a start offset, keeping runs reproducible.

use num_complex::Complex64;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Radical-inverse of `n` in base `b`, in [0, 1).
fn radical_inverse(mut n: u64, b: u64) -> f64 {
    let mut inv = 0.0;
    let mut denom = 1.0;
    while n > 0 {
        denom *= b as f64;
        inv += (n % b) as f64 / denom;
        n /= b;
    }
    inv
}

/// Six-dimensional Halton sequence with a seed-dependent start index.
pub struct Halton {
    index: u64,
}

impl Halton {
    pub fn new(seed: u64) -> Self {
        // skip the correlated initial segment and decorrelate seeds
        Self { index: 64 + seed.wrapping_mul(982_451_653) % 100_000_007 }
    }

    pub fn next_point(&mut self) -> [f64; 6] {
        self.index += 1;
        let mut u = [0.0; 6];
        for (k, p) in PRIMES.iter().enumerate() {
            u[k] = radical_inverse(self.index, *p);
        }
        u
    }
}

/// Low-discrepancy points uniform on the open unit ball of ℂ³.
pub struct BallSampler {
    halton: Halton,
}

impl BallSampler {
    pub fn new(seed: u64) -> Self {
        Self { halton: Halton::new(seed) }
    }

    pub fn next_point(&mut self) -> [Complex64; 3] {
        let u = self.halton.next_point();
        // uniform 2-simplex weights from two uniforms by sorted gaps
        let (a, b) = if u[0] <= u[1] { (u[0], u[1]) } else { (u[1], u[0]) };
        let lambda = [a, b - a, 1.0 - b];
        let s = u[5].cbrt();
        let mut z = [Complex64::new(0.0, 0.0); 3];
        for j in 0..3 {
            let rho = (s * lambda[j]).sqrt();
            let theta = 2.0 * std::f64::consts::PI * u[2 + j];
            z[j] = Complex64::new(rho * theta.cos(), rho * theta.sin());
        }
        z
    }
}
