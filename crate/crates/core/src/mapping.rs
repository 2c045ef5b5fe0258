//! Periodic recurrences and polynomial mappings: equilibrium charges, period
//! detection, the mapping polynomial M_K = P_K / Delta_K, Chebyshev
//! composition identities and the explicit period-2 and period-3 families.

use crate::auxpoly::{display_a, AuxPair};
use crate::error::{Error, Result};
use crate::intervals::BranchConfig;
use crate::poly::{monic_chebyshev_eval, Poly};
use crate::quadrature::{jacobi_half_rule, Half};
use crate::recurrence::RecurrenceTable;
use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use std::f64::consts::PI;

pub const DEFAULT_PERIOD_TOL: f64 = 1e-6;
pub const DEFAULT_KMAX: usize = 64;
const CHARGE_NODES: usize = 400;
pub const CONSTRAINT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChargeVector {
    /// k_0..k_{g-1}: lower coefficients of the numerator t^g + sum k_i t^i.
    pub k_coeffs: Vec<f64>,
    /// Negated charge on each of the first g bands.
    pub bhat: Vec<f64>,
}

impl ChargeVector {
    /// Charge on every band, the last one by completion.
    pub fn band_charges(&self) -> Vec<f64> {
        let mut c: Vec<f64> = self.bhat.iter().map(|b| -b).collect();
        c.push(1.0 - c.iter().sum::<f64>());
        c
    }
}

/// Integral of f / |y| over (l, r), where l and r are zeros of y^2.
fn between_zeros(cfg: &BranchConfig, l: f64, r: f64, f: impl Fn(f64) -> f64) -> f64 {
    let (t, w) = jacobi_half_rule(Half::Minus, Half::Minus, CHARGE_NODES);
    let others: Vec<f64> = cfg
        .critical_points()
        .into_iter()
        .map(|(c, _)| c)
        .filter(|&c| c != l && c != r)
        .collect();
    t.iter()
        .zip(&w)
        .map(|(&tk, &wk)| {
            let x = 0.5 * (l + r) + 0.5 * (r - l) * tk;
            let s: f64 = others.iter().map(|c| (x - c).abs().sqrt()).product();
            wk * f(x) / s
        })
        .sum()
}

/// Harmonic-measure charges of the bands.
///
/// The numerator coefficients are fixed by requiring the normalised
/// differential to integrate to zero over every gap.
pub fn equilibrium_charges(cfg: &BranchConfig) -> Result<ChargeVector> {
    let g = cfg.genus();
    if g == 0 {
        return Ok(ChargeVector {
            k_coeffs: vec![],
            bhat: vec![],
        });
    }
    let mut m = DMatrix::<f64>::zeros(g, g);
    let mut rhs = DVector::<f64>::zeros(g);
    for j in 0..g {
        let (l, r) = (cfg.alphas[j], cfg.betas[j]);
        for i in 0..g {
            m[(j, i)] = between_zeros(cfg, l, r, |x| x.powi(i as i32));
        }
        rhs[j] = -between_zeros(cfg, l, r, |x| x.powi(g as i32));
    }
    let k = m
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::SingularSystem("gap period matrix".into()))?;
    let k_coeffs: Vec<f64> = k.iter().copied().collect();
    let numerator = |x: f64| x.powi(g as i32) + k_coeffs.iter().enumerate().map(|(i, c)| c * x.powi(i as i32)).sum::<f64>();
    let bands = cfg.bands();
    let bhat = (0..g)
        .map(|j| -(between_zeros(cfg, bands[j].0, bands[j].1, numerator) / PI).abs())
        .collect();
    Ok(ChargeVector { k_coeffs, bhat })
}

/// Smallest K <= k_max with K * bhat_j within `tol` of an integer for every j.
pub fn detect_period(bhat: &[f64], k_max: usize, tol: f64) -> Option<usize> {
    (1..=k_max).find(|&k| {
        bhat.iter().all(|b| {
            let v = k as f64 * b;
            (v - v.round()).abs() < tol
        })
    })
}

/// Number of preimages of [-1, 1] under the degree-K mapping inside each band.
pub fn band_pieces(cfg: &BranchConfig, k: usize) -> Result<Vec<usize>> {
    if cfg.genus() == 0 {
        return Ok(vec![k]);
    }
    let charges = equilibrium_charges(cfg)?.band_charges();
    charges
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let v = k as f64 * c;
            if (v - v.round()).abs() > DEFAULT_PERIOD_TOL || v.round() < 1.0 {
                Err(Error::ConstraintViolation(format!(
                    "band {j} carries charge {c}, not a positive multiple of 1/{k}"
                )))
            } else {
                Ok(v.round() as usize)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintCheck {
    pub name: String,
    pub measured: f64,
    pub expected: f64,
    /// Distance from the requirement; zero when met exactly.
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MappingData {
    pub k: usize,
    pub delta_k: f64,
    pub m_coeffs: Vec<f64>,
    /// Leading coefficient of l_K in M_K^2 - 1 = l_K^2 (x^2 - 1) prod (x - alpha)(x - beta).
    pub l_k: f64,
    pub constraints: Vec<ConstraintCheck>,
}

impl MappingData {
    pub fn m_poly(&self) -> Poly {
        Poly(self.m_coeffs.clone())
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.m_poly().eval(x)
    }
}

fn check(name: String, measured: f64, expected: f64, tol: f64) -> ConstraintCheck {
    let deviation = (measured - expected).abs();
    ConstraintCheck {
        pass: deviation <= tol,
        name,
        measured,
        expected,
        deviation,
    }
}

/// Builds M_K = P_K / sqrt(2 h_K) and checks the endpoint conditions,
/// the factorisation of M_K^2 - 1 and |M_K| <= 1 on the bands.
pub fn build_mapping(cfg: &BranchConfig, t: &RecurrenceTable, k: usize) -> Result<MappingData> {
    if k == 0 {
        return Err(Error::IndexError("period must be positive".into()));
    }
    t.require(k)?;
    let pieces = band_pieces(cfg, k)?;
    let delta = (2.0 * t.h(k)).sqrt();
    let (p, _) = t.polynomials(k)?;
    let m = p[k].scale(1.0 / delta);

    let mut checks = vec![
        check("M(1) = 1".into(), m.eval(1.0), 1.0, CONSTRAINT_TOL),
        check(
            "M(-1) = (-1)^K".into(),
            m.eval(-1.0),
            if k.is_multiple_of(2) { 1.0 } else { -1.0 },
            CONSTRAINT_TOL,
        ),
    ];
    let mut passed = 0;
    for j in 0..cfg.genus() {
        passed += pieces[j];
        let s = if (k + passed).is_multiple_of(2) { 1.0 } else { -1.0 };
        checks.push(check(format!("M(alpha_{}) = {s}", j + 1), m.eval(cfg.alphas[j]), s, CONSTRAINT_TOL));
        checks.push(check(format!("M(beta_{}) = {s}", j + 1), m.eval(cfg.betas[j]), s, CONSTRAINT_TOL));
    }

    let m2 = &(&m * &m) - &Poly::one();
    let divisor = &cfg.beta_poly() * &cfg.alpha_poly();
    let (quot, rem) = m2.div_rem(&divisor);
    let rem_size = rem.max_abs() / m2.max_abs().max(1.0);
    checks.push(check("factorisation remainder".into(), rem_size, 0.0, CONSTRAINT_TOL));
    let l_k = quot.leading().abs().sqrt();

    let mut worst: f64 = 0.0;
    for (l, r) in cfg.bands() {
        for i in 0..=200 {
            let x = l + (r - l) * i as f64 / 200.0;
            worst = worst.max(m.eval(x).abs());
        }
    }
    checks.push(ConstraintCheck {
        name: "max |M| on bands".into(),
        measured: worst,
        expected: 1.0,
        deviation: (worst - 1.0).max(0.0),
        pass: worst <= 1.0 + CONSTRAINT_TOL,
    });

    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(Error::ConstraintViolation(format!(
            "{}: measured {}, expected {}",
            bad.name, bad.measured, bad.expected
        )));
    }
    Ok(MappingData {
        k,
        delta_k: delta,
        m_coeffs: m.0,
        l_k,
        constraints: checks,
    })
}

/// P_{nK + j}(x) and Q_{nK + j}(x) from P_j, Q_j, P_K, Q_K through the
/// Chebyshev composition and the intermediate-polynomial formulas.
pub fn compose_identities(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    k: usize,
    n: usize,
    j: usize,
    x: f64,
) -> Result<(f64, f64)> {
    if j >= k {
        return Err(Error::IndexError(format!("need j < K, got j = {j}, K = {k}")));
    }
    if j > 0 && n == 0 {
        return Err(Error::IndexError("intermediate formulas need n >= 1".into()));
    }
    let (pk, qk) = t.evaluate(k, x)?;
    let two_h = 2.0 * t.h(k);
    let delta = two_h.sqrt();
    let (tn, un) = monic_chebyshev_eval(n, pk / delta);
    let p_nk = two_h.powf(n as f64 / 2.0) * tn;
    let q_nk = if n == 0 {
        0.0
    } else {
        two_h.powf((n as f64 - 1.0) / 2.0) * qk * un
    };
    if j == 0 {
        return Ok((p_nk, q_nk));
    }
    let (pj, qj) = t.evaluate(j, x)?;
    let ratio = cfg.inv_psi_squared(x);
    Ok((
        0.5 * (pj * p_nk + ratio * qj * q_nk),
        0.5 * (pj * q_nk + qj * p_nk),
    ))
}

/// P_n P_{mK} - P_{n+mK} - (h_{mK} / 2) P_{n-mK}.
///
/// Vanishes for n > mK. At n = mK the last term needs h_{mK} in place of
/// h_{mK} / 2, in line with the halved a_{nK+1}.
pub fn product_shift_residual(t: &RecurrenceTable, k: usize, m: usize, n: usize, x: f64) -> Result<f64> {
    let mk = m * k;
    if n < mk {
        return Err(Error::IndexError(format!("need n >= mK, got n = {n}, mK = {mk}")));
    }
    let pn = t.evaluate(n, x)?.0;
    let pmk = t.evaluate(mk, x)?.0;
    let sum = t.evaluate(n + mk, x)?.0;
    let diff = t.evaluate(n - mk, x)?.0;
    Ok(pn * pmk - sum - 0.5 * t.h(mk) * diff)
}

/// Gap-centring labels cos(j pi / K), j = 1..K-1, ascending.
pub fn stationary_labels(k: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (1..k).map(|j| (j as f64 * PI / k as f64).cos()).collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Every choice of g open gaps among the K - 1 labels.
pub fn surface_labels(k: usize, g: usize) -> Vec<Vec<f64>> {
    let labels = stationary_labels(k);
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn go(labels: &[f64], start: usize, g: usize, pick: &mut Vec<f64>, out: &mut Vec<Vec<f64>>) {
        if pick.len() == g {
            out.push(pick.clone());
            return;
        }
        for i in start..labels.len() {
            pick.push(labels[i]);
            go(labels, i + 1, g, pick, out);
            pick.pop();
        }
    }
    go(&labels, 0, g, &mut pick, &mut out);
    out
}

/// Parameters of the explicit periodic families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Family {
    /// [-1, alpha] U [-alpha, 1]
    Period2 { alpha: f64 },
    /// Two gaps starting at (alpha1, beta1).
    Period3 { alpha1: f64, beta1: f64 },
    /// Gaps symmetric about -1/2 and 1/2.
    Period3Symmetric { alpha: f64 },
    /// One gap (alpha, beta) with the second gap closed.
    Period3ClosedRight { alpha: f64 },
    /// One gap (alpha, beta) with the first gap closed.
    Period3ClosedLeft { alpha: f64 },
}

/// A period-K configuration with its first K recurrence coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodicData {
    pub k: usize,
    pub config: BranchConfig,
    /// a_1..a_K
    pub a: Vec<f64>,
    /// b_1..b_K
    pub b: Vec<f64>,
}

impl PeriodicData {
    /// The recurrence table to `n_max`, repeating with period K except a_{nK+1} = a_1 / 2.
    pub fn table(&self, n_max: usize) -> RecurrenceTable {
        let k = self.k;
        let a: Vec<f64> = (1..=n_max)
            .map(|m| {
                let r = (m - 1) % k;
                if m > k && r == 0 {
                    self.a[0] / 2.0
                } else {
                    self.a[r]
                }
            })
            .collect();
        let b: Vec<f64> = (1..=n_max).map(|m| self.b[(m - 1) % k]).collect();
        RecurrenceTable::from_coefficients(&a, &b)
    }

    /// Largest violation of a_j = a_{K-j+1} and b_j = b_{K-j+2}, with a_1 halved.
    pub fn reflection_residual(&self) -> f64 {
        let k = self.k;
        let a = |j: usize| if j == 1 { self.a[0] / 2.0 } else { self.a[j - 1] };
        let b = |j: usize| self.b[(j - 1) % k];
        (1..k)
            .map(|j| (a(j) - a(k - j + 1)).abs().max((b(j) - b(k - j + 2)).abs()))
            .fold(0.0, f64::max)
    }
}

fn region(msg: String) -> Error {
    Error::RegionViolation(msg)
}

/// Upper end of the admissible beta1 range for period three.
pub fn beta1_max(alpha1: f64) -> f64 {
    2.0 + alpha1 - 4.0 * ((alpha1 + 1.0) / 2.0).sqrt()
}

fn period3_general(alpha1: f64, beta1: f64) -> (Vec<f64>, Vec<f64>) {
    let r = ((beta1 - alpha1).powi(2) - 4.0 * (1.0 + alpha1 + beta1)).max(0.0).sqrt();
    let a = vec![
        0.5 * (1.0 + alpha1) * (2.0 - alpha1 + beta1 + r),
        (alpha1 - beta1 - 2.0 + r).powi(2) / 16.0,
        0.25 * (1.0 + alpha1) * (2.0 - alpha1 + beta1 + r),
    ];
    let b = vec![
        0.5 * (beta1 - alpha1 + r),
        0.25 * (2.0 + 3.0 * alpha1 + beta1 - r),
        0.25 * (2.0 + 3.0 * alpha1 + beta1 - r),
    ];
    (a, b)
}

/// Explicit configuration and coefficients for a family member.
pub fn periodic_family(family: Family) -> Result<PeriodicData> {
    match family {
        Family::Period2 { alpha } => {
            if !(-1.0 < alpha && alpha < 0.0) {
                return Err(region(format!("need -1 < alpha < 0, got {alpha}")));
            }
            let q = (1.0 - alpha * alpha) / 4.0;
            Ok(PeriodicData {
                k: 2,
                config: BranchConfig::new(vec![alpha], vec![-alpha])?,
                a: vec![2.0 * q, q],
                b: vec![-alpha, alpha],
            })
        }
        Family::Period3 { alpha1, beta1 } => {
            if !(-1.0 < alpha1 && alpha1 <= -0.5) {
                return Err(region(format!("need -1 < alpha1 <= -1/2, got {alpha1}")));
            }
            let top = beta1_max(alpha1);
            if !(alpha1 < beta1 && beta1 < top) {
                return Err(region(format!("need alpha1 < beta1 < {top}, got {beta1}")));
            }
            let r = ((beta1 - alpha1).powi(2) - 4.0 * (alpha1 + beta1 + 1.0)).sqrt();
            let mid = 1.0 + (alpha1 + beta1) / 2.0;
            let (a, b) = period3_general(alpha1, beta1);
            Ok(PeriodicData {
                k: 3,
                config: BranchConfig::new(vec![alpha1, mid - r / 2.0], vec![beta1, mid + r / 2.0])?,
                a,
                b,
            })
        }
        Family::Period3Symmetric { alpha } => {
            if !(-1.0 < alpha && alpha < -0.5) {
                return Err(region(format!("need -1 < alpha < -1/2, got {alpha}")));
            }
            let s = -alpha * (1.0 + alpha);
            Ok(PeriodicData {
                k: 3,
                config: BranchConfig::new(vec![alpha, 1.0 + alpha], vec![-1.0 - alpha, -alpha])?,
                a: vec![2.0 * s, 0.25, s],
                b: vec![-(1.0 + 2.0 * alpha), 0.5 + alpha, 0.5 + alpha],
            })
        }
        Family::Period3ClosedRight { alpha } => {
            if !(-1.0 < alpha && alpha < -0.5) {
                return Err(region(format!("need -1 < alpha < -1/2, got {alpha}")));
            }
            let r = ((1.0 + alpha) / 2.0).sqrt();
            Ok(PeriodicData {
                k: 3,
                config: BranchConfig::new(vec![alpha], vec![beta1_max(alpha)])?,
                a: vec![
                    2.0 * (alpha + 1.0) * (1.0 - r),
                    (alpha + 3.0) / 2.0 - 2.0 * r,
                    (alpha + 1.0) * (1.0 - r),
                ],
                b: vec![1.0 - 2.0 * r, alpha + 1.0 - r, alpha + 1.0 - r],
            })
        }
        Family::Period3ClosedLeft { alpha } => {
            if !(-1.0 < alpha && alpha < 0.5) {
                return Err(region(format!("need -1 < alpha < 1/2, got {alpha}")));
            }
            // the closed gap sits at c with alpha = 1 + c - sqrt(-(2c + 1))
            let s = -1.0 + (2.0 - 2.0 * alpha).sqrt();
            let c = -(1.0 + s * s) / 2.0;
            let beta = alpha - 2.0 + 4.0 * ((1.0 - alpha) / 2.0).sqrt();
            let (a, b) = period3_general(c, c);
            Ok(PeriodicData {
                k: 3,
                config: BranchConfig::new(vec![alpha], vec![beta])?,
                a,
                b,
            })
        }
    }
}

/// (c_0(m), gamma(m)) for the closed-right period-three family, m >= 1.
pub fn closed_gap_constants(alpha: f64, m: usize) -> Result<(f64, f64)> {
    if m == 0 {
        return Err(Error::IndexError("tables start at m = 1".into()));
    }
    let r = ((1.0 + alpha) / 2.0).sqrt();
    let n = (m / 3) as f64;
    Ok(match m % 3 {
        0 => (n * (alpha - 2.0 * r), alpha),
        1 => (0.5 * ((1.0 + 2.0 * n) * alpha - (1.0 + 4.0 * n) * r), -r),
        _ => (0.5 * ((1.0 + 2.0 * n) * alpha - (3.0 + 4.0 * n) * r), -r),
    })
}

/// Gamma points for two gaps of period three from the (alpha1, beta1) display, n >= 2.
pub fn period3_gammas(alpha1: f64, beta1: f64, t: &RecurrenceTable, n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::IndexError("display holds for n >= 2".into()));
    }
    t.require(n + 1)?;
    let s = 1.0 + alpha1 + beta1;
    let b = t.b(n + 1);
    let rad = 1.0 - 2.0 * (alpha1 + beta1) + (alpha1 - beta1).powi(2) - 4.0 * (t.a(n) + t.a(n + 1))
        + 2.0 * b * (s - 1.5 * b);
    let r = rad.max(0.0).sqrt();
    Ok((0.5 * (s - b - r), 0.5 * (s - b + r)))
}

/// S_2 and G_3 from the symmetric period-three displays, n >= 1.
pub fn period3_symmetric_aux(alpha: f64, t: &RecurrenceTable, n: usize) -> Result<AuxPair> {
    if n == 0 {
        return Err(Error::IndexError("display holds for n >= 1".into()));
    }
    t.require(n + 1)?;
    let c = 1.0 + alpha + alpha * alpha;
    let (an, an1, bn1) = (display_a(t, n), t.a(n + 1), t.b(n + 1));
    let eta = vec![
        2.0 * t.h(n) * (an + an1 + bn1 * bn1 - c),
        2.0 * t.h(n) * bn1,
        2.0 * t.h(n),
    ];
    let hm = t.h(n - 1);
    let xi = vec![hm * 2.0 * an * (t.b(n) + bn1), hm * (2.0 * an - c), 0.0, hm];
    let (g1, g2) = period3_symmetric_gammas(alpha, t, n)?;
    Ok(AuxPair {
        n,
        eta,
        xi,
        gammas: vec![g1, g2],
    })
}

pub fn period3_symmetric_gammas(alpha: f64, t: &RecurrenceTable, n: usize) -> Result<(f64, f64)> {
    t.require(n + 1)?;
    let c = 1.0 + alpha + alpha * alpha;
    let b = t.b(n + 1);
    let r = (b * b - 4.0 * (display_a(t, n) + t.a(n + 1) + b * b - c)).max(0.0).sqrt();
    Ok(((-b - r) / 2.0, (-b + r) / 2.0))
}

/// Points (alpha, beta) on the one-gap period curves, for plotting.
pub fn contour_points(k: usize, steps: usize) -> Result<Vec<(f64, f64)>> {
    let steps = steps.max(2);
    let sample = |lo: f64, hi: f64, f: &dyn Fn(f64) -> f64| -> Vec<(f64, f64)> {
        (1..steps)
            .map(|i| {
                let a = lo + (hi - lo) * i as f64 / steps as f64;
                (a, f(a))
            })
            .collect()
    };
    match k {
        2 => Ok(sample(-1.0, 0.0, &|a| -a)),
        3 => {
            let mut v = sample(-1.0, -0.5, &beta1_max);
            v.extend(sample(-1.0, 0.5, &|a| a - 2.0 + 4.0 * ((1.0 - a) / 2.0).sqrt()));
            Ok(v)
        }
        _ => Err(Error::IndexError(format!("explicit curves exist for K = 2, 3, not {k}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periods_from_vectors() {
        assert_eq!(detect_period(&[-0.5], 64, 1e-6), Some(2));
        assert_eq!(detect_period(&[-1.0 / 3.0, -0.2, -1.0 / 6.0], 64, 1e-6), Some(30));
        assert_eq!(detect_period(&[-1.0 / PI], 64, 1e-6), None);
    }

    #[test]
    fn labels() {
        assert!(stationary_labels(2)[0].abs() < 1e-15);
        let s3 = stationary_labels(3);
        assert!((s3[0] + 0.5).abs() < 1e-15 && (s3[1] - 0.5).abs() < 1e-15);
        let s5 = stationary_labels(5);
        let r5 = 5f64.sqrt();
        for (a, b) in s5.iter().zip([-(r5 + 1.0) / 4.0, -(r5 - 1.0) / 4.0, (r5 - 1.0) / 4.0, (r5 + 1.0) / 4.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(surface_labels(5, 2).len(), 6);
        assert_eq!(surface_labels(7, 3).len(), 20);
    }

    #[test]
    fn symmetric_family_values() {
        let d = periodic_family(Family::Period3Symmetric { alpha: -0.7 }).unwrap();
        for (x, y) in d.a.iter().zip([0.42, 0.25, 0.21]) {
            assert!((x - y).abs() < 1e-15);
        }
        for (x, y) in d.b.iter().zip([0.4, -0.2, -0.2]) {
            assert!((x - y).abs() < 1e-15);
        }
        assert!(d.reflection_residual() < 1e-15);
    }

    #[test]
    fn closed_gap_values() {
        let d = periodic_family(Family::Period3ClosedRight { alpha: -0.8 }).unwrap();
        let r = 0.1f64.sqrt();
        assert!((d.config.betas[0] - (1.2 - 4.0 * r)).abs() < 1e-15);
        assert!((d.a[1] - (1.1 - 2.0 * r)).abs() < 1e-15);
        assert!((d.b[0] - (1.0 - 2.0 * r)).abs() < 1e-15);
    }

    #[test]
    fn region_checks() {
        assert!(periodic_family(Family::Period2 { alpha: 0.2 }).is_err());
        assert!(periodic_family(Family::Period3 { alpha1: -0.4, beta1: 0.0 }).is_err());
        assert!(periodic_family(Family::Period3 { alpha1: -0.75, beta1: 0.2 }).is_err());
    }
}
