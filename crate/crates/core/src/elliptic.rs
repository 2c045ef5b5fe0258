//! Jacobi elliptic functions and the genus-one closed forms for a_n, b_n.

use crate::error::{Error, Result};
use std::f64::consts::FRAC_PI_2;

/// Complete integral K(k) by the arithmetic–geometric mean.
pub fn complete_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k.abs()) {
        return Err(Error::DomainError(k));
    }
    let (mut a, mut b) = (1.0_f64, (1.0 - k * k).sqrt());
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(FRAC_PI_2 / a)
}

/// Carlson's symmetric integral R_F(x, y, z) by duplication.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    loop {
        let mean = (x + y + z) / 3.0;
        let dx = 1.0 - x / mean;
        let dy = 1.0 - y / mean;
        let dz = 1.0 - z / mean;
        if dx.abs().max(dy.abs()).max(dz.abs()) < 1e-4 {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / mean.sqrt();
        }
        let lam = (x * y).sqrt() + (y * z).sqrt() + (z * x).sqrt();
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
    }
}

/// Incomplete integral F(phi, k) for |phi| <= pi/2.
pub fn incomplete_f(phi: f64, k: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    s * carlson_rf(c * c, 1.0 - k * k * s * s, 1.0)
}

/// (sn, cn, dn) at real u by descending Landen (AGM) transformation.
pub fn jacobi_sn_cn_dn(u: f64, k: f64) -> (f64, f64, f64) {
    if k == 0.0 {
        return (u.sin(), u.cos(), 1.0);
    }
    let mut a = vec![1.0_f64];
    let mut c = vec![k];
    let mut b = (1.0 - k * k).sqrt();
    while c.last().unwrap().abs() > 1e-16 && a.len() < 64 {
        let an = 0.5 * (a.last().unwrap() + b);
        let cn = 0.5 * (a.last().unwrap() - b);
        b = (a.last().unwrap() * b).sqrt();
        a.push(an);
        c.push(cn);
    }
    let steps = a.len() - 1;
    let mut phi = 2f64.powi(steps as i32) * a[steps] * u;
    for i in (1..=steps).rev() {
        phi = 0.5 * (phi + (c[i] / a[i] * phi.sin()).asin());
    }
    let sn = phi.sin();
    let cn = phi.cos();
    // dn > 0 for real u
    let dn = (1.0 - k * k * sn * sn).sqrt();
    (sn, cn, dn)
}

/// Modulus, quarter period and argument data for one gap (alpha, beta).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticContext {
    pub alpha: f64,
    pub beta: f64,
    pub k: f64,
    pub kk: f64,
    /// Normalised argument with sn(2 K u_plus) = sqrt((beta + 1) / 2).
    pub u_plus: f64,
    pub c: f64,
}

impl EllipticContext {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(-1.0 < alpha && alpha < beta && beta < 1.0) {
            return Err(Error::OrderingViolation(format!(
                "need -1 < alpha < beta < 1, got ({alpha}, {beta})"
            )));
        }
        let m = 2.0 * (beta - alpha) / ((1.0 - alpha) * (1.0 + beta));
        let k = m.sqrt();
        let kk = complete_k(k)?;
        let v = incomplete_f(((beta + 1.0) / 2.0).sqrt().asin(), k);
        Ok(EllipticContext {
            alpha,
            beta,
            k,
            kk,
            u_plus: v / (2.0 * kk),
            c: (2.0 - alpha + beta).powi(2) / 16.0,
        })
    }

    /// 2 K u_plus
    pub fn shift(&self) -> f64 {
        2.0 * self.kk * self.u_plus
    }

    fn sn2(&self, u: f64) -> f64 {
        jacobi_sn_cn_dn(u, self.k).0.powi(2)
    }

    pub fn a(&self, n: usize) -> f64 {
        let (al, be) = (self.alpha, self.beta);
        let arg = (2.0 * n as f64 - 1.0) * self.shift() + self.kk;
        self.c * (1.0 - 8.0 * (be - al) / (2.0 - al + be).powi(2) * self.sn2(arg))
    }

    /// b_n from the theta-shift derivation; also correct at n = 1.
    pub fn b(&self, n: usize) -> f64 {
        let (al, be) = (self.alpha, self.beta);
        let s = self.sn2((2.0 * n as f64 - 2.0) * self.shift());
        (be - al) * (0.5 - (1.0 + al) * s / ((1.0 + be) - s * (be - al)))
    }

    /// The simplified b_n with the sign of its second term flipped. Wrong;
    /// kept only for comparison.
    pub fn b_flipped_sign(&self, n: usize) -> f64 {
        let (al, be) = (self.alpha, self.beta);
        let s = self.sn2((2.0 * n as f64 - 2.0) * self.shift());
        (be - al) * (0.5 - (1.0 + al) / ((be - al) - (1.0 + be) / s))
    }
}

/// (a_n, b_n) for one gap, n >= 2.
pub fn genus1_closed_form(alpha: f64, beta: f64, n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::IndexError(format!(
            "closed form starts at n = 2, got {n}"
        )));
    }
    let ctx = EllipticContext::new(alpha, beta)?;
    Ok((ctx.a(n), ctx.b(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn k_values() {
        assert!((complete_k(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!(complete_k(1.0).is_err());
        // reference values from mpmath ellipk(k^2)
        assert!((complete_k(0.5).unwrap() - 1.685_750_354_812_596).abs() < 1e-14);
        assert!((complete_k(0.9).unwrap() - 2.280_549_138_422_77).abs() < 1e-14);
    }

    #[test]
    fn quarter_period() {
        for k in [0.1, 0.5, 0.9, 0.999] {
            let kk = complete_k(k).unwrap();
            let (s, c, d) = jacobi_sn_cn_dn(kk, k);
            assert!((s - 1.0).abs() < 1e-12);
            assert!(c.abs() < 1e-7);
            assert!((d - (1.0 - k * k).sqrt()).abs() < 1e-12);
            assert!((incomplete_f(PI / 2.0, k) - kk).abs() < 1e-13 * kk);
        }
    }

    #[test]
    fn trig_limit() {
        let (s, c, d) = jacobi_sn_cn_dn(0.7, 0.0);
        assert_eq!((s, c, d), (0.7f64.sin(), 0.7f64.cos(), 1.0));
    }

    #[test]
    fn symmetric_gap_reproduces_period_two() {
        for n in 2..8 {
            let (a, b) = genus1_closed_form(-0.6, 0.6, n).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((a - 0.16).abs() < 1e-13, "a_{n} = {a}");
            assert!((b - sign * -0.6).abs() < 1e-13, "b_{n} = {b}");
        }
    }
}
