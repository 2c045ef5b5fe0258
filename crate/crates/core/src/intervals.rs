//! Branch-point configurations, the induced band set and the weight.

use crate::error::{Error, Result};
use crate::poly::Poly;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Interior gap endpoints: gaps are (alpha_j, beta_j).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchConfig {
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    Direct,
    Reciprocal,
}

/// Which kind of point bounds a band; decides the endpoint exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Alpha,
    Beta,
    Edge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet {
    pub bands: Vec<(f64, f64)>,
}

impl BranchConfig {
    /// Validates ordering and range, collapsing closed gaps.
    pub fn new(alphas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        validate_config(BranchConfig { alphas, betas })
    }

    /// The single interval [-1, 1].
    pub fn classical() -> Self {
        BranchConfig {
            alphas: vec![],
            betas: vec![],
        }
    }

    pub fn genus(&self) -> usize {
        self.alphas.len()
    }

    pub fn interval_set(&self) -> IntervalSet {
        IntervalSet {
            bands: self.bands(),
        }
    }

    /// Bands [-1, a_1], [b_1, a_2], ..., [b_g, 1].
    pub fn bands(&self) -> Vec<(f64, f64)> {
        let mut lo = vec![-1.0];
        lo.extend_from_slice(&self.betas);
        let mut hi = self.alphas.clone();
        hi.push(1.0);
        lo.into_iter().zip(hi).collect()
    }

    /// Kinds of the (left, right) endpoints of band `j`.
    pub fn band_kinds(&self, j: usize) -> (PointKind, PointKind) {
        let left = if j == 0 { PointKind::Edge } else { PointKind::Beta };
        let right = if j == self.genus() {
            PointKind::Edge
        } else {
            PointKind::Alpha
        };
        (left, right)
    }

    /// All 2g + 2 endpoints with their kind.
    pub fn critical_points(&self) -> Vec<(f64, PointKind)> {
        let mut v = vec![(-1.0, PointKind::Edge), (1.0, PointKind::Edge)];
        v.extend(self.alphas.iter().map(|&a| (a, PointKind::Alpha)));
        v.extend(self.betas.iter().map(|&b| (b, PointKind::Beta)));
        v
    }

    /// Index of the band whose open interior contains x.
    pub fn band_of(&self, x: f64) -> Option<usize> {
        self.bands().iter().position(|&(l, r)| l < x && x < r)
    }

    /// Closed-set membership with a small slack.
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.bands().iter().any(|&(l, r)| l - tol <= x && x <= r + tol)
    }

    /// prod (x - alpha_j)
    pub fn alpha_poly(&self) -> Poly {
        Poly::from_roots(&self.alphas)
    }

    /// (x^2 - 1) prod (x - beta_j)
    pub fn beta_poly(&self) -> Poly {
        let mut r = vec![-1.0, 1.0];
        r.extend_from_slice(&self.betas);
        Poly::from_roots(&r)
    }

    /// y^2 = (x^2 - 1) prod (x - alpha_j)(x - beta_j)
    pub fn y_squared(&self, x: f64) -> f64 {
        self.alpha_poly().eval(x) * self.beta_poly().eval(x)
    }

    /// y on the sheet with y ~ x^{g+1} at +infinity, continued through the upper half plane.
    ///
    /// Purely imaginary on E, real elsewhere on the line.
    pub fn y(&self, x: f64) -> Complex64 {
        let y2 = self.y_squared(x);
        let above = self
            .critical_points()
            .iter()
            .filter(|(c, _)| *c > x)
            .count();
        let sign = |k: usize| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        if above % 2 == 0 {
            Complex64::new(sign(above / 2) * y2.abs().sqrt(), 0.0)
        } else {
            Complex64::new(0.0, sign(above / 2) * y2.abs().sqrt())
        }
    }

    /// psi = prod(x - alpha_j) / y, so psi ~ 1/x at infinity.
    pub fn psi(&self, x: f64) -> Complex64 {
        self.alpha_poly().eval(x) / self.y(x)
    }

    /// 1/psi^2 = (x^2 - 1) prod(x - beta) / prod(x - alpha); rational, no branch.
    pub fn inv_psi_squared(&self, x: f64) -> f64 {
        self.beta_poly().eval(x) / self.alpha_poly().eval(x)
    }

    pub fn weight(&self, x: f64, mode: WeightMode) -> Result<f64> {
        weight_eval(self, x, mode)
    }

    pub fn reflect(&self) -> BranchConfig {
        reflect_config(self)
    }
}

pub fn validate_config(raw: BranchConfig) -> Result<BranchConfig> {
    if raw.alphas.len() != raw.betas.len() {
        return Err(Error::LengthMismatch(raw.alphas.len(), raw.betas.len()));
    }
    for &p in raw.alphas.iter().chain(raw.betas.iter()) {
        if !(p > -1.0 && p < 1.0) {
            return Err(Error::RangeViolation(p));
        }
    }
    let g = raw.alphas.len();
    for j in 0..g {
        if raw.alphas[j] > raw.betas[j] {
            return Err(Error::OrderingViolation(format!(
                "alpha_{} = {} > beta_{} = {}",
                j + 1,
                raw.alphas[j],
                j + 1,
                raw.betas[j]
            )));
        }
        if j + 1 < g && raw.betas[j] >= raw.alphas[j + 1] {
            return Err(Error::OrderingViolation(format!(
                "beta_{} = {} >= alpha_{} = {}",
                j + 1,
                raw.betas[j],
                j + 2,
                raw.alphas[j + 1]
            )));
        }
    }
    let (alphas, betas) = raw
        .alphas
        .iter()
        .zip(raw.betas.iter())
        .filter(|(a, b)| a != b)
        .map(|(&a, &b)| (a, b))
        .unzip();
    Ok(BranchConfig { alphas, betas })
}

pub fn weight_eval(cfg: &BranchConfig, x: f64, mode: WeightMode) -> Result<f64> {
    if cfg.band_of(x).is_none() {
        return Err(Error::DomainError(x));
    }
    let num = cfg.alpha_poly().eval(x);
    let den = (1.0 - x * x) * Poly::from_roots(&cfg.betas).eval(x);
    let w = (num / den).abs().sqrt() / PI;
    Ok(match mode {
        WeightMode::Direct => w,
        WeightMode::Reciprocal => 1.0 / w,
    })
}

/// E reflected about 0, with alpha/beta roles exchanged.
pub fn reflect_config(cfg: &BranchConfig) -> BranchConfig {
    BranchConfig {
        alphas: cfg.betas.iter().rev().map(|b| -b).collect(),
        betas: cfg.alphas.iter().rev().map(|a| -a).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_closed_gap() {
        let c = BranchConfig::new(vec![0.3], vec![0.3]).unwrap();
        assert_eq!(c.genus(), 0);
        let c = BranchConfig::new(vec![-0.7, 0.3], vec![-0.3, 0.7]).unwrap();
        assert_eq!(c.genus(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            BranchConfig::new(vec![0.5], vec![0.1]),
            Err(Error::OrderingViolation(_))
        ));
        assert!(matches!(
            BranchConfig::new(vec![-1.0], vec![0.1]),
            Err(Error::RangeViolation(_))
        ));
        assert!(matches!(
            BranchConfig::new(vec![-0.5, 0.0], vec![0.1, 0.5]),
            Err(Error::OrderingViolation(_))
        ));
        assert!(matches!(
            BranchConfig::new(vec![-0.5], vec![]),
            Err(Error::LengthMismatch(1, 0))
        ));
    }

    #[test]
    fn weight_values() {
        let g0 = BranchConfig::classical();
        assert!((g0.weight(0.0, WeightMode::Direct).unwrap() - 1.0 / PI).abs() < 1e-15);
        assert!((g0.weight(0.0, WeightMode::Reciprocal).unwrap() - PI).abs() < 1e-14);
        let c = BranchConfig::new(vec![-0.5], vec![0.5]).unwrap();
        let expect = (1.4_f64 / (0.19 * 0.4)).sqrt() / PI;
        assert!((c.weight(0.9, WeightMode::Direct).unwrap() - expect).abs() < 1e-14);
        assert!(c.weight(0.0, WeightMode::Direct).is_err());
        assert!(c.weight(0.5, WeightMode::Direct).is_err());
    }

    #[test]
    fn reflection() {
        let c = BranchConfig::new(vec![-0.8], vec![-0.06491]).unwrap();
        let r = c.reflect();
        assert_eq!(r.alphas, vec![0.06491]);
        assert_eq!(r.betas, vec![0.8]);
        let s = BranchConfig::new(vec![-0.5], vec![0.5]).unwrap();
        assert_eq!(s.reflect(), s);
        assert_eq!(BranchConfig::classical().reflect(), BranchConfig::classical());
    }

    #[test]
    fn y_branch() {
        let c = BranchConfig::new(vec![-0.3], vec![0.4]).unwrap();
        // y ~ x^2 at +inf, and y ~ x^2 at -inf too since g + 1 is even.
        assert!(c.y(5.0).re > 0.0);
        assert!(c.y(-5.0).re > 0.0);
        // in the gap y is real and negative
        assert!(c.y(0.0).re < 0.0);
        assert!(c.y(0.0).im == 0.0);
        // on E it is imaginary
        assert!(c.y(0.7).re == 0.0 && c.y(0.7).im != 0.0);
        // psi ~ 1/x
        assert!((c.psi(1e4).re * 1e4 - 1.0).abs() < 1e-3);
    }
}
