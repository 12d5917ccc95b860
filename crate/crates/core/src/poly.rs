//! Sparse multivariate polynomials over ℂ and the operator words built
//! from them.
//!
//! `MultiPoly<N>` is an exact coefficient map keyed by exponent vectors;
//! identities between special functions are compared coefficientwise on
//! this representation rather than pointwise. `VectorPolynomial` carries
//! ℂ^{2s+1}-valued polynomials in (z¹,z²,z³) and `PolyOperator` the
//! first-order differential/multiplication/spin words acting on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Sparse polynomial in `N` complex variables.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<const N: usize> {
    terms: BTreeMap<[u16; N], Complex64>,
}

impl<const N: usize> Default for MultiPoly<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> MultiPoly<N> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = Self::zero();
        if c != czero() {
            p.terms.insert([0; N], c);
        }
        p
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// The coordinate polynomial z_i.
    pub fn var(i: usize) -> Self {
        let mut exps = [0u16; N];
        exps[i] = 1;
        Self::monomial(exps, Complex64::new(1.0, 0.0))
    }

    pub fn monomial(exps: [u16; N], coeff: Complex64) -> Self {
        let mut p = Self::zero();
        if coeff != czero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn add_term(&mut self, exps: [u16; N], coeff: Complex64) {
        let entry = self.terms.entry(exps).or_insert_with(czero);
        *entry += coeff;
        if entry.norm() == 0.0 {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        if c == czero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, *v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for k in 0..N {
                    e[k] += eb[k];
                }
                out.add_term(e, *ca * *cb);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut en = *e;
                en[var] -= 1;
                out.add_term(en, *c * (e[var] as f64));
            }
        }
        out
    }

    /// Σᵢ ∂²/∂zᵢ² over all N variables.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..N {
            out = out.add(&self.derivative(i).derivative(i));
        }
        out
    }

    pub fn eval(&self, z: &[Complex64; N]) -> Complex64 {
        let mut acc = czero();
        for (e, c) in &self.terms {
            let mut term = *c;
            for k in 0..N {
                for _ in 0..e[k] {
                    term *= z[k];
                }
            }
            acc += term;
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16; N], &Complex64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|x| *x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_coeff()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_coeff() <= tol
    }

    /// Embeds into a polynomial with one extra trailing variable.
    pub fn extend<const M: usize>(&self) -> MultiPoly<M> {
        assert!(M >= N);
        let mut out = MultiPoly::<M>::zero();
        for (e, c) in &self.terms {
            let mut em = [0u16; M];
            em[..N].copy_from_slice(e);
            out.add_term(em, *c);
        }
        out
    }
}

/// All monomial exponent vectors in 3 variables of total degree ≤ `max`.
pub fn monomials_up_to(max: usize) -> Vec<[u16; 3]> {
    let mut out = Vec::new();
    for d in 0..=max {
        for i in 0..=d {
            for j in 0..=(d - i) {
                out.push([i as u16, j as u16, (d - i - j) as u16]);
            }
        }
    }
    out
}

/// Dense (2s+1)×(2s+1) complex matrix acting on the spin components.
pub type SpinMatrix = Vec<Vec<Complex64>>;

pub fn spin_identity(dim: usize) -> SpinMatrix {
    let mut m = vec![vec![czero(); dim]; dim];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    m
}

pub fn spin_mul(a: &SpinMatrix, b: &SpinMatrix) -> SpinMatrix {
    let n = a.len();
    let mut out = vec![vec![czero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = czero();
            for k in 0..n {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn spin_sub(a: &SpinMatrix, b: &SpinMatrix) -> SpinMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn spin_scale(a: &SpinMatrix, c: Complex64) -> SpinMatrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn spin_max_abs(a: &SpinMatrix) -> f64 {
    a.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
}

/// A ℂ^{2s+1}-valued polynomial in (z¹,z²,z³); component 0 is the top
/// spin slot ρ = s.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorPolynomial {
    pub comps: Vec<MultiPoly<3>>,
}

impl VectorPolynomial {
    pub fn new(comps: Vec<MultiPoly<3>>) -> Self {
        Self { comps }
    }

    pub fn zero(dim: usize) -> Self {
        Self { comps: vec![MultiPoly::zero(); dim] }
    }

    /// The constant basis vector e_{sρ} (1 in the slot for ρ).
    pub fn basis_vector(dim: usize, slot: usize) -> Self {
        let mut v = Self::zero(dim);
        v.comps[slot] = MultiPoly::one();
        v
    }

    /// A scalar polynomial placed in every...: a single-component carrier
    /// for spin zero.
    pub fn scalar(p: MultiPoly<3>) -> Self {
        Self { comps: vec![p] }
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn mul_poly(&self, p: &MultiPoly<3>) -> Self {
        Self { comps: self.comps.iter().map(|q| q.mul(p)).collect() }
    }

    pub fn derivative(&self, var: usize) -> Self {
        Self { comps: self.comps.iter().map(|p| p.derivative(var)).collect() }
    }

    pub fn apply_matrix(&self, m: &SpinMatrix) -> Self {
        let dim = self.dim();
        assert_eq!(m.len(), dim, "spin matrix dimension mismatch");
        let mut comps = vec![MultiPoly::zero(); dim];
        for (i, row) in m.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                comps[i] = comps[i].add(&self.comps[j].scale(*c));
            }
        }
        Self { comps }
    }

    pub fn eval(&self, z: &[Complex64; 3]) -> Vec<Complex64> {
        self.comps.iter().map(|p| p.eval(z)).collect()
    }

    pub fn max_coeff(&self) -> f64 {
        self.comps.iter().map(|p| p.max_coeff()).fold(0.0, f64::max)
    }

    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        self.comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.max_coeff_diff(b))
            .fold(0.0, f64::max)
    }

    pub fn degree(&self) -> usize {
        self.comps.iter().map(|p| p.degree()).max().unwrap_or(0)
    }
}

/// Elementary factors of an operator word, applied right to left.
#[derive(Debug, Clone)]
pub enum OpFactor {
    /// Multiplication by zⁱ.
    MulZ(usize),
    /// Multiplication by an arbitrary polynomial.
    MulPoly(Arc<MultiPoly<3>>),
    /// ∂/∂zⁱ.
    Diff(usize),
    /// A constant spin matrix.
    Spin(Arc<SpinMatrix>),
    /// A nested operator (kept unexpanded; products of generator sums
    /// stay cheap to apply without materializing their expansion).
    Op(Arc<PolyOperator>),
}

/// A linear operator on vector polynomials: a complex combination of
/// composition words over the elementary factors.
#[derive(Debug, Clone, Default)]
pub struct PolyOperator {
    pub terms: Vec<(Complex64, Vec<OpFactor>)>,
}

impl PolyOperator {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self { terms: vec![(Complex64::new(1.0, 0.0), Vec::new())] }
    }

    pub fn from_word(coeff: Complex64, word: Vec<OpFactor>) -> Self {
        Self { terms: vec![(coeff, word)] }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            terms: self.terms.iter().map(|(v, w)| (*v * c, w.clone())).collect(),
        }
    }

    /// Operator product: `self` applied after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let rhs = Arc::new(other.clone());
        Self {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| {
                    let mut word = w.clone();
                    word.push(OpFactor::Op(rhs.clone()));
                    (*c, word)
                })
                .collect(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, f: &VectorPolynomial) -> VectorPolynomial {
        let mut out = VectorPolynomial::zero(f.dim());
        for (coeff, word) in &self.terms {
            let mut cur = f.clone();
            for factor in word.iter().rev() {
                cur = match factor {
                    OpFactor::MulZ(i) => cur.mul_poly(&MultiPoly::var(*i)),
                    OpFactor::MulPoly(p) => cur.mul_poly(p),
                    OpFactor::Diff(i) => cur.derivative(*i),
                    OpFactor::Spin(m) => cur.apply_matrix(m),
                    OpFactor::Op(op) => op.apply(&cur),
                };
            }
            out = out.add(&cur.scale(*coeff));
        }
        out
    }

    /// Largest coefficient of (self − scalar)·f over a set of probes.
    pub fn eigen_residual(&self, probes: &[VectorPolynomial], scalar: Complex64) -> f64 {
        probes
            .iter()
            .map(|f| self.apply(f).sub(&f.scale(scalar)).max_coeff())
            .fold(0.0, f64::max)
    }
}
