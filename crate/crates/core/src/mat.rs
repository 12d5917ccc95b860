//! Small fixed-size matrix helpers shared across the crate.
//!
//! Everything here works on plain nested arrays; the sizes involved (2..5)
//! are too small to justify an external linear-algebra dependency.

use num_complex::Complex64;

pub type C2 = [[Complex64; 2]; 2];
pub type C3 = [[Complex64; 3]; 3];
pub type C4 = [[Complex64; 4]; 4];
pub type R5 = [[f64; 5]; 5];

pub fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

pub fn c2_identity() -> C2 {
    let mut m = [[czero(); 2]; 2];
    m[0][0] = Complex64::new(1.0, 0.0);
    m[1][1] = Complex64::new(1.0, 0.0);
    m
}

pub fn c2_mul(x: &C2, y: &C2) -> C2 {
    let mut out = [[czero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

pub fn c2_det(m: &C2) -> Complex64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn c2_adjoint(m: &C2) -> C2 {
    [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]]
}

pub fn c2_sub(x: &C2, y: &C2) -> C2 {
    let mut out = *x;
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] -= y[i][j];
        }
    }
    out
}

pub fn c2_inf_norm(m: &C2) -> f64 {
    m.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Eigenvalues of a 2×2 Hermitian matrix (returned ascending).
pub fn c2_hermitian_eigenvalues(m: &C2) -> [f64; 2] {
    let tr = (m[0][0] + m[1][1]).re;
    let det = c2_det(m).re;
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    [(tr - disc) / 2.0, (tr + disc) / 2.0]
}

pub fn c4_mul(x: &C4, y: &C4) -> C4 {
    let mut out = [[czero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = czero();
            for k in 0..4 {
                acc += x[i][k] * y[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn c4_transpose(m: &C4) -> C4 {
    let mut out = [[czero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[j][i];
        }
    }
    out
}

pub fn c4_sub(x: &C4, y: &C4) -> C4 {
    let mut out = *x;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] -= y[i][j];
        }
    }
    out
}

pub fn c4_inf_norm(m: &C4) -> f64 {
    m.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Determinant of a 4×4 complex matrix by partially pivoted elimination.
pub fn c4_det(m: &C4) -> Complex64 {
    let mut a = *m;
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..4 {
        let mut pivot = col;
        for row in col + 1..4 {
            if a[row][col].norm() > a[pivot][col].norm() {
                pivot = row;
            }
        }
        if a[pivot][col].norm() == 0.0 {
            return czero();
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..4 {
            let f = a[row][col] / a[col][col];
            for k in col..4 {
                let sub = f * a[col][k];
                a[row][k] -= sub;
            }
        }
    }
    det
}

/// Inverse of a 4×4 complex matrix by Gauss-Jordan elimination.
pub fn c4_inverse(m: &C4) -> Option<C4> {
    let mut a = *m;
    let mut inv = [[czero(); 4]; 4];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    for col in 0..4 {
        let mut pivot = col;
        for row in col + 1..4 {
            if a[row][col].norm() > a[pivot][col].norm() {
                pivot = row;
            }
        }
        if a[pivot][col].norm() < 1e-300 {
            return None;
        }
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let d = a[col][col];
        for k in 0..4 {
            a[col][k] /= d;
            inv[col][k] /= d;
        }
        for row in 0..4 {
            if row != col {
                let f = a[row][col];
                for k in 0..4 {
                    let (s1, s2) = (f * a[col][k], f * inv[col][k]);
                    a[row][k] -= s1;
                    inv[row][k] -= s2;
                }
            }
        }
    }
    Some(inv)
}

pub fn c3_mul_vec(m: &C3, v: &[Complex64; 3]) -> [Complex64; 3] {
    let mut out = [czero(); 3];
    for i in 0..3 {
        out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    }
    out
}

pub fn c3_det(m: &C3) -> Complex64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Inverse of a 3×3 complex matrix via the adjugate.
pub fn c3_inverse(m: &C3) -> Option<C3> {
    let det = c3_det(m);
    if det.norm() < 1e-300 {
        return None;
    }
    let mut adj = [[czero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let r = [(i + 1) % 3, (i + 2) % 3];
            let c = [(j + 1) % 3, (j + 2) % 3];
            // cofactor transposed: adj[j][i]
            adj[j][i] = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]];
        }
    }
    for row in adj.iter_mut() {
        for e in row.iter_mut() {
            *e /= det;
        }
    }
    Some(adj)
}

/// Eigenvalues of a 3×3 Hermitian matrix (ascending), via the trigonometric
/// solution of the real characteristic cubic.
pub fn c3_hermitian_eigenvalues(m: &C3) -> [f64; 3] {
    let p1 = m[0][1].norm_sqr() + m[0][2].norm_sqr() + m[1][2].norm_sqr();
    let q = (m[0][0].re + m[1][1].re + m[2][2].re) / 3.0;
    if p1 == 0.0 {
        let mut d = [m[0][0].re, m[1][1].re, m[2][2].re];
        d.sort_by(f64::total_cmp);
        return d;
    }
    let p2 = (m[0][0].re - q).powi(2) + (m[1][1].re - q).powi(2) + (m[2][2].re - q).powi(2)
        + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let mut b = *m;
    for i in 0..3 {
        b[i][i] -= Complex64::new(q, 0.0);
        for j in 0..3 {
            b[i][j] /= Complex64::new(p, 0.0);
        }
    }
    let r = (c3_det(&b).re / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let e1 = q + 2.0 * p * phi.cos();
    let e3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let e2 = 3.0 * q - e1 - e3;
    let mut out = [e1, e2, e3];
    out.sort_by(f64::total_cmp);
    out
}

pub fn r5_mul(x: &R5, y: &R5) -> R5 {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            let mut acc = 0.0;
            for k in 0..5 {
                acc += x[i][k] * y[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn r5_transpose(m: &R5) -> R5 {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i][j] = m[j][i];
        }
    }
    out
}

pub fn r5_sub(x: &R5, y: &R5) -> R5 {
    let mut out = *x;
    for i in 0..5 {
        for j in 0..5 {
            out[i][j] -= y[i][j];
        }
    }
    out
}

pub fn r5_inf_norm(m: &R5) -> f64 {
    m.iter().flatten().map(|x| x.abs()).fold(0.0, f64::max)
}

/// Determinant of a 5×5 real matrix by partially pivoted elimination.
pub fn r5_det(m: &R5) -> f64 {
    let mut a = *m;
    let mut det = 1.0;
    for col in 0..5 {
        let mut pivot = col;
        for row in col + 1..5 {
            if a[row][col].abs() > a[pivot][col].abs() {
                pivot = row;
            }
        }
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..5 {
            let f = a[row][col] / a[col][col];
            for k in col..5 {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    det
}
