//! Dense real polynomials with ascending coefficients.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![0.0])
    }

    pub fn one() -> Self {
        Poly(vec![1.0])
    }

    pub fn x() -> Self {
        Poly(vec![0.0, 1.0])
    }

    pub fn constant(c: f64) -> Self {
        Poly(vec![c])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, &r| &acc * &Poly(vec![-r, 1.0]))
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn leading(&self) -> f64 {
        self.0[self.degree()]
    }

    /// Coefficient of x^k, zero past the end.
    pub fn coeff(&self, k: usize) -> f64 {
        self.0.get(k).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.0
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly(self.0.iter().map(|c| c * s).collect())
    }

    pub fn mul_x(&self) -> Poly {
        let mut c = Vec::with_capacity(self.0.len() + 1);
        c.push(0.0);
        c.extend_from_slice(&self.0);
        Poly(c)
    }

    /// p(-x)
    pub fn reflect(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 0 { c } else { -c })
                .collect(),
        )
    }

    /// p(q(x)) by Horner in the polynomial ring.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.0
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, &c| &(&acc * inner) + &Poly::constant(c))
            .trimmed()
    }

    /// Drops exact-zero high coefficients.
    pub fn trimmed(mut self) -> Poly {
        let d = self.degree();
        self.0.truncate(d + 1);
        self
    }

    /// Quotient and remainder on division by `d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree();
        let lead = d.0[dd];
        let mut rem = self.0.clone();
        let n = self.degree();
        if n < dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![0.0; n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = rem[k + dd] / lead;
            q[k] = c;
            for j in 0..=dd {
                rem[k + j] -= c * d.0[j];
            }
        }
        rem.truncate(dd.max(1));
        (Poly(q), Poly(rem))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// All complex roots via companion-matrix eigenvalues.
    pub fn roots(&self) -> Vec<Complex64> {
        let n = self.degree();
        match n {
            0 => vec![],
            1 => vec![Complex64::new(-self.0[0] / self.0[1], 0.0)],
            2 => {
                let (a, b, c) = (self.0[2], self.0[1], self.0[0]);
                let disc = Complex64::new(b * b - 4.0 * a * c, 0.0).sqrt();
                // Stable form avoids cancellation in the smaller root.
                let sign = if b >= 0.0 { 1.0 } else { -1.0 };
                let q = -0.5 * (b + sign * disc);
                if q.norm() == 0.0 {
                    return vec![Complex64::new(0.0, 0.0); 2];
                }
                vec![q / a, c / q]
            }
            _ => {
                let lead = self.0[n];
                let mut m = DMatrix::<f64>::zeros(n, n);
                for i in 1..n {
                    m[(i, i - 1)] = 1.0;
                }
                for i in 0..n {
                    m[(i, n - 1)] = -self.0[i] / lead;
                }
                m.complex_eigenvalues().iter().copied().collect()
            }
        }
    }

    /// Real roots sorted ascending; fails if any root has a non-negligible imaginary part.
    pub fn real_roots(&self, imag_tol: f64) -> Option<Vec<f64>> {
        let mut out = Vec::new();
        for r in self.roots() {
            if r.im.abs() > imag_tol * (1.0 + r.re.abs()) {
                return None;
            }
            out.push(r.re);
        }
        out.sort_by(f64::total_cmp);
        Some(out)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut c = vec![0.0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly(c)
    }
}

/// Monic Chebyshev polynomials of the first kind, T_0..=T_max.
///
/// T_0 = 1, T_1 = x, T_2 = x T_1 - T_0 / 2, then T_{k+1} = x T_k - T_{k-1} / 4.
pub fn monic_chebyshev_t(max: usize) -> Vec<Poly> {
    let mut t = vec![Poly::one(), Poly::x()];
    for k in 1..max {
        let c = if k == 1 { 0.5 } else { 0.25 };
        let next = &t[k].mul_x() - &t[k - 1].scale(c);
        t.push(next);
    }
    t.truncate(max + 1);
    t
}

/// Monic second-kind Chebyshev polynomials indexed so that U_n has degree n - 1.
///
/// U_0 = 0, U_1 = 1, U_{k+1} = x U_k - U_{k-1} / 4.
pub fn monic_chebyshev_u(max: usize) -> Vec<Poly> {
    let mut u = vec![Poly::zero(), Poly::one()];
    for k in 1..max {
        let next = &u[k].mul_x() - &u[k - 1].scale(0.25);
        u.push(next);
    }
    u.truncate(max + 1);
    u
}

/// Scalar evaluation of the monic T_n and U_n at a point.
pub fn monic_chebyshev_eval(n: usize, x: f64) -> (f64, f64) {
    let (mut t0, mut t1) = (1.0, x);
    let (mut u0, mut u1) = (0.0, 1.0);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let c = if k == 1 { 0.5 } else { 0.25 };
        let t2 = x * t1 - c * t0;
        let u2 = x * u1 - 0.25 * u0;
        t0 = t1;
        t1 = t2;
        u0 = u1;
        u1 = u2;
    }
    (t1, u1)
}
