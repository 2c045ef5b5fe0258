//! P_n and Q_n: recurrence and product representations, step and
//! differential relations, discriminants, envelopes and the reflected family.

use crate::auxpoly::AuxSequence;
use crate::error::{Error, Result};
use crate::intervals::BranchConfig;
use crate::poly::{monic_chebyshev_eval, Poly};
use crate::recurrence::RecurrenceTable;
use crate::zeros::{roots_of_pn, roots_of_qn};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

/// A point counts as a zero of P_n at a branch point below this.
pub const BRANCH_ZERO_TOL: f64 = 1e-10;
const DENOMINATOR_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialPair {
    pub n: usize,
    /// Ascending coefficients of P_n, length n + 1.
    pub p_coeffs: Vec<f64>,
    /// Ascending coefficients of Q_n, length n (empty at n = 0).
    pub q_coeffs: Vec<f64>,
}

impl PolynomialPair {
    pub fn from_table(t: &RecurrenceTable, n: usize) -> Result<Self> {
        let (p, q) = t.polynomials(n)?;
        let mut q_coeffs = q[n].0.clone();
        q_coeffs.truncate(n);
        let mut p_coeffs = p[n].0.clone();
        p_coeffs.truncate(n + 1);
        Ok(PolynomialPair { n, p_coeffs, q_coeffs })
    }
}

/// (P_n(x), Q_n(x)) by the forward recurrence.
pub fn evaluate_pair(t: &RecurrenceTable, n: usize, x: f64) -> Result<(f64, f64)> {
    t.evaluate(n, x)
}

/// P_{n-1} Q_n - P_n Q_{n-1}, which equals h_{n-1}.
pub fn wronskian(t: &RecurrenceTable, n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::IndexError("Wronskian needs n >= 1".into()));
    }
    let (p1, q1) = t.evaluate(n - 1, x)?;
    let (p, q) = t.evaluate(n, x)?;
    Ok(p1 * q - p * q1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorValues {
    pub x: f64,
    pub fplus: Complex64,
    pub fminus: Complex64,
    pub y: Complex64,
}

/// f_+- (x; n) = (G_{g+1}(x; n) +- h_{n-1} y(x)) / S_g(x; n - 1), n >= 1.
pub fn factor_functions(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    aux: &AuxSequence,
    n: usize,
    x: f64,
) -> Result<FactorValues> {
    if n == 0 || n >= aux.len() {
        return Err(Error::IndexError(format!("factor index {n} outside 1..{}", aux.len())));
    }
    let s = aux.s(n - 1).eval(x);
    if s.abs() < DENOMINATOR_TOL {
        return Err(Error::SingularDenominator(x));
    }
    let g = aux.g(n).eval(x);
    let y = cfg.y(x);
    let hy = y * t.h(n - 1);
    Ok(FactorValues {
        x,
        fplus: (hy + g) / s,
        fminus: (-hy + g) / s,
        y,
    })
}

/// P_n and Q_n as products of the factor functions.
pub fn evaluate_product(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    aux: &AuxSequence,
    n: usize,
    x: f64,
) -> Result<(f64, f64)> {
    let mut plus = Complex64::new(1.0, 0.0);
    let mut minus = Complex64::new(1.0, 0.0);
    for j in 1..=n {
        let f = factor_functions(cfg, t, aux, j, x)?;
        plus *= f.fplus;
        minus *= f.fminus;
    }
    let p = (plus + minus) / 2.0;
    let q = if n == 0 {
        Complex64::new(0.0, 0.0)
    } else {
        cfg.psi(x) * (plus - minus) / 2.0
    };
    Ok((p.re, q.re))
}

/// Residuals of the one-step relations taking (P_{n-1}, Q_{n-1}) to (P_n, Q_n).
pub fn step_relations_residual(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    aux: &AuxSequence,
    n: usize,
    x: f64,
) -> Result<(f64, f64)> {
    if n == 0 || n >= aux.len() {
        return Err(Error::IndexError(format!("step index {n} outside 1..{}", aux.len())));
    }
    let s = aux.s(n - 1).eval(x);
    if s.abs() < DENOMINATOR_TOL {
        return Err(Error::SingularDenominator(x));
    }
    let g = aux.g(n).eval(x);
    let h = t.h(n - 1);
    let (p0, q0) = t.evaluate(n - 1, x)?;
    let (p, q) = t.evaluate(n, x)?;
    let p_step = (g * p0 + h * cfg.beta_poly().eval(x) * q0) / s;
    let q_step = (g * q0 + h * cfg.alpha_poly().eval(x) * p0) / s;
    Ok((p - p_step, q - q_step))
}

/// One-gap data for the first-order differential system
/// P' = f1 P + f2 Q and Q' = f3 P + f4 Q.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffData {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub c0: f64,
    pub gamma: f64,
    /// G_2(gamma; n) / h_{n-1}
    pub y1: f64,
    pub rplus: Complex64,
    pub rminus: Complex64,
    s: Poly,
}

impl DiffData {
    pub fn f1(&self, x: f64) -> f64 {
        0.5 * (self.s.derivative().eval(x) / self.s.eval(x) - 1.0 / (x - self.alpha))
    }

    pub fn f2(&self, x: f64) -> f64 {
        let n = self.n as f64;
        let mut top = n * x - self.c0;
        if self.y1 != 0.0 {
            top -= 0.5 * self.y1 / (x - self.gamma);
        }
        top / (x - self.alpha)
    }

    pub fn f3(&self, x: f64) -> f64 {
        let psi2 = (x - self.alpha) / ((x * x - 1.0) * (x - self.beta));
        psi2 * self.f2(x)
    }

    /// psi'/psi
    pub fn psi_log_derivative(&self, x: f64) -> f64 {
        0.5 * (1.0 / (x - self.alpha) - 2.0 * x / (x * x - 1.0) - 1.0 / (x - self.beta))
    }

    pub fn f4(&self, x: f64) -> f64 {
        self.psi_log_derivative(x) + self.f1(x)
    }
}

/// c_0, gamma, y_1 and r_+- for one gap, n >= 1.
pub fn differential_data_g1(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    aux: &AuxSequence,
    n: usize,
) -> Result<DiffData> {
    if cfg.genus() != 1 {
        return Err(Error::UnsupportedGenus(cfg.genus()));
    }
    if n == 0 || n >= aux.len() {
        return Err(Error::IndexError(format!("differential data index {n} outside 1..{}", aux.len())));
    }
    let (alpha, beta) = (cfg.alphas[0], cfg.betas[0]);
    let gamma = aux.pairs[n].gammas[0];
    let p1: f64 = -(1..=n).map(|k| t.b(k)).sum::<f64>();
    let nf = n as f64;
    let c0 = p1 + nf * (alpha + beta) / 2.0 + (gamma - alpha) / 2.0;
    let mut y1 = aux.g(n).eval(gamma) / t.h(n - 1);
    // gamma at a branch point makes y1 vanish; drop rounding noise so f2 has no spurious pole
    if y1.abs() < 1e-12 {
        y1 = 0.0;
    }
    let mid = c0 / nf + gamma;
    let root = Complex64::new((c0 / nf - gamma).powi(2) + 2.0 * y1 / nf, 0.0).sqrt();
    Ok(DiffData {
        n,
        alpha,
        beta,
        c0,
        gamma,
        y1,
        rplus: (root + mid) / 2.0,
        rminus: (-root + mid) / 2.0,
        s: aux.s(n),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiscriminantMethod {
    /// Product of squared zero differences.
    Direct,
    /// Closed form through values of the polynomial at r_+-, gamma and the branch points.
    FormulaG1,
}

fn squared_differences(r: &[f64]) -> f64 {
    let mut d = 1.0;
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            d *= (r[i] - r[j]).powi(2);
        }
    }
    d
}

/// Discriminant of P_n.
///
/// The closed form gives D^2; its square root is returned since D > 0 for
/// real simple zeros. A zero of P_n at gamma, as for odd degree in the
/// period-two family, is handled through the product of P'(x_j) with a
/// factor 2 at that zero; any other zero at a branch point is an error.
pub fn discriminant(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    aux: &AuxSequence,
    n: usize,
    method: DiscriminantMethod,
) -> Result<f64> {
    let roots = roots_of_pn(t, n)?;
    match method {
        DiscriminantMethod::Direct => Ok(squared_differences(&roots)),
        DiscriminantMethod::FormulaG1 => {
            let d = differential_data_g1(cfg, t, aux, n)?;
            let p = |x: f64| t.evaluate(n, x).map(|v| v.0);
            let at_gamma = p(d.gamma)?;
            if at_gamma.abs() < BRANCH_ZERO_TOL && roots.iter().any(|r| (r - d.gamma).abs() < 1e-8) {
                return amended_product(t, &d, &roots);
            }
            let pts = [(d.alpha, p(d.alpha)?), (1.0, p(1.0)?), (-1.0, p(-1.0)?), (d.beta, p(d.beta)?), (d.gamma, at_gamma)];
            if let Some(&(pt, _)) = pts.iter().find(|(_, v)| v.abs() < BRANCH_ZERO_TOL) {
                return Err(Error::BranchZero(pt));
            }
            let denom = pts[0].1.powi(2) * pts[1].1 * pts[2].1 * pts[3].1 * pts[4].1;
            let pc = |z: Complex64| t.evaluate_complex(n, z).map(|v| v.0);
            let top = (pc(d.rplus)?.powi(2) * pc(d.rminus)?.powi(2)).re;
            let nf = n as f64;
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            let d2 = (2.0 * nf * nf * t.h(n)).powi(n as i32) * sign * top / denom;
            Ok(d2.abs().sqrt())
        }
    }
}

fn amended_product(t: &RecurrenceTable, d: &DiffData, roots: &[f64]) -> Result<f64> {
    let n = d.n;
    let mut prod = 1.0;
    for &x in roots {
        let q = t.evaluate(n, x)?.1;
        let m = if (x - d.gamma).abs() < 1e-8 { 2.0 } else { 1.0 };
        prod *= m * d.f2(x) * q;
    }
    let s = if (n * (n - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(s * prod)
}

/// Discriminant of Q_n (degree n - 1).
pub fn discriminant_q(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    aux: &AuxSequence,
    n: usize,
    method: DiscriminantMethod,
) -> Result<f64> {
    match method {
        DiscriminantMethod::Direct => Ok(squared_differences(&roots_of_qn(t, n)?)),
        DiscriminantMethod::FormulaG1 => {
            if n < 2 {
                return Err(Error::IndexError("Q_n discriminant needs n >= 2".into()));
            }
            let d = differential_data_g1(cfg, t, aux, n)?;
            let q = |x: f64| t.evaluate(n, x).map(|v| v.1);
            let pts = [(1.0, q(1.0)?), (-1.0, q(-1.0)?), (d.beta, q(d.beta)?), (d.gamma, q(d.gamma)?), (d.alpha, q(d.alpha)?)];
            if let Some(&(pt, _)) = pts.iter().find(|(_, v)| v.abs() < BRANCH_ZERO_TOL) {
                return Err(Error::BranchZero(pt));
            }
            let denom = pts[0].1.powi(2) * pts[1].1.powi(2) * pts[2].1.powi(2) * pts[3].1 * pts[4].1;
            let qc = |z: Complex64| t.evaluate_complex(n, z).map(|v| v.1);
            let top = (qc(d.rplus)?.powi(2) * qc(d.rminus)?.powi(2)).re;
            let nf = n as f64;
            let d2 = (2.0 * nf * nf * t.h(n)).powi(n as i32 - 1) * top / denom;
            Ok(d2.abs().sqrt())
        }
    }
}

/// Closed-form discriminant of P_n for [-1, alpha] U [-alpha, 1], n >= 2.
pub fn period2_discriminant(alpha: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::IndexError("closed forms start at n = 2".into()));
    }
    let m = n / 2;
    let mf = m as f64;
    let z = (alpha * alpha + 1.0) / (alpha * alpha - 1.0);
    let (tm, um) = monic_chebyshev_eval(m, z);
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let w = 1.0 - alpha * alpha;
    if n.is_multiple_of(2) {
        let e = -(((2 * m - 1) * (2 * m - 2)) as i32) - m as i32;
        Ok(sign * 2f64.powi(e) * (2.0 * mf).powi(2 * m as i32) * w.powi((m * (2 * m - 1)) as i32) * tm)
    } else {
        let e = -4 * (m * m) as i32 + m as i32 - 1;
        Ok(sign
            * 2f64.powi(e)
            * (2.0 * mf + 1.0).powi(2 * m as i32)
            * w.powi((m * (2 * m + 1)) as i32)
            * (tm - 2.0 / w * um))
    }
}

/// P_{nK+j} scaled so that its envelope on E is the modulus function.
pub fn normalized_polynomial(t: &RecurrenceTable, k: usize, n: usize, j: usize, x: f64) -> Result<f64> {
    let m = n * k + j;
    let p = t.evaluate(m, x)?.0;
    let delta = (2.0 * t.h(k)).sqrt();
    let nf = n as i32;
    if j == 0 {
        if n == 0 {
            return Ok(p);
        }
        Ok(2f64.powi(nf - 1) * p / delta.powi(nf))
    } else {
        Ok(2f64.powi(nf) * p / (delta.powi(nf) * (2.0 * t.h(j)).sqrt()))
    }
}

/// sqrt(prod (x - gamma_l) / prod (x - alpha_l)) for x in E.
pub fn envelope(cfg: &BranchConfig, gammas: &[f64], x: f64) -> Result<f64> {
    if !cfg.contains(x, 1e-12) {
        return Err(Error::DomainError(x));
    }
    let num: f64 = gammas.iter().map(|g| x - g).product();
    let den: f64 = cfg.alphas.iter().map(|a| x - a).product();
    Ok((num / den).abs().sqrt())
}

/// Monic polynomials orthogonal on the reflected set, from a
/// (2g+1)-square determinant in values of P_k and Q_k.
pub fn reflected_polynomial(cfg: &BranchConfig, t: &RecurrenceTable, n: usize) -> Result<Poly> {
    let g = cfg.genus();
    t.require(n + g)?;
    let size = 2 * g + 1;
    let pad = g.saturating_sub(n);
    // column c holds degree c + n - g once past the padding
    let degree = |c: usize| c + n - g;
    let mut m = DMatrix::<f64>::zeros(size - 1, size);
    for c in 0..size {
        for i in 0..g {
            if c < pad {
                m[(g + i, c)] = cfg.alphas[i].powi(c as i32);
            } else {
                let k = degree(c);
                m[(i, c)] = t.evaluate(k, cfg.betas[i])?.0;
                m[(g + i, c)] = t.evaluate(k, cfg.alphas[i])?.1;
            }
        }
    }
    let (p, _) = t.polynomials(n + g)?;
    let cofactor = |c: usize| -> f64 {
        let minor = m.clone().remove_column(c);
        let s = if (size - 1 + c).is_multiple_of(2) { 1.0 } else { -1.0 };
        s * minor.determinant()
    };
    let dn = cofactor(size - 1);
    let scale = m.iter().fold(0.0_f64, |a, v| a.max(v.abs())).max(1.0).powi(size as i32 - 1);
    if dn.abs() < 1e-13 * scale {
        return Err(Error::SingularDeterminant);
    }
    let mut num = Poly::zero();
    for c in pad..size {
        num = &num + &p[degree(c)].reflect().scale(cofactor(c));
    }
    let neg_betas: Vec<f64> = cfg.betas.iter().map(|b| -b).collect();
    let (quot, rem) = num.div_rem(&Poly::from_roots(&neg_betas));
    if rem.max_abs() > 1e-8 * num.max_abs() {
        return Err(Error::NonExactDivision(rem.max_abs()));
    }
    let sign = if (n + g).is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut out = quot.scale(sign / dn);
    out.0.truncate(n + 1);
    Ok(out)
}
