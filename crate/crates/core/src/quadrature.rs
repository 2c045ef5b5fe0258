//! Band-by-band Gauss–Jacobi integration against w and 1/w.
//!
//! Every endpoint singularity of w is a square root, so each band needs a
//! Jacobi rule with exponents +-1/2 on each end. Those four rules are the
//! Chebyshev rules of the first to fourth kind and have closed-form nodes.

use crate::error::{Error, Result};
use crate::intervals::{BranchConfig, PointKind, WeightMode};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub points_per_band: usize,
    /// Extra checks, each at 1.5x the previous node count.
    pub refinement_levels: usize,
    pub tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            points_per_band: 64,
            refinement_levels: 1,
            tol: 1e-11,
        }
    }
}

impl QuadratureSpec {
    pub fn with_points(points_per_band: usize) -> Self {
        QuadratureSpec {
            points_per_band,
            ..Default::default()
        }
    }

    fn levels(&self) -> Vec<usize> {
        let mut n = self.points_per_band.max(8);
        let mut v = vec![n];
        for _ in 0..self.refinement_levels {
            n = n * 3 / 2;
            v.push(n);
        }
        v
    }
}

/// Exponent of (1 - t) or (1 + t): +1/2 or -1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    Plus,
    Minus,
}

/// Nodes and weights on [-1, 1] for (1 - t)^p (1 + t)^q.
pub fn jacobi_half_rule(p: Half, q: Half, n: usize) -> (Vec<f64>, Vec<f64>) {
    let nf = n as f64;
    let mut t = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for k in 1..=n {
        let kf = k as f64;
        let (tk, wk) = match (p, q) {
            (Half::Minus, Half::Minus) => ((((2.0 * kf - 1.0) * PI) / (2.0 * nf)).cos(), PI / nf),
            (Half::Plus, Half::Plus) => {
                let th = kf * PI / (nf + 1.0);
                (th.cos(), PI / (nf + 1.0) * th.sin().powi(2))
            }
            (Half::Plus, Half::Minus) => {
                let tk = (2.0 * kf * PI / (2.0 * nf + 1.0)).cos();
                (tk, 2.0 * PI / (2.0 * nf + 1.0) * (1.0 - tk))
            }
            (Half::Minus, Half::Plus) => {
                let tk = -(2.0 * kf * PI / (2.0 * nf + 1.0)).cos();
                (tk, 2.0 * PI / (2.0 * nf + 1.0) * (1.0 + tk))
            }
        };
        t.push(tk);
        w.push(wk);
    }
    (t, w)
}

/// Nodes and weights on band `j` that integrate f against w (or 1/w).
pub fn band_rule(
    cfg: &BranchConfig,
    j: usize,
    mode: WeightMode,
    n: usize,
) -> (Vec<f64>, Vec<f64>) {
    let (l, r) = cfg.bands()[j];
    let (lk, rk) = cfg.band_kinds(j);
    let exponent = |k: PointKind| match k {
        PointKind::Alpha => 0.5,
        PointKind::Beta | PointKind::Edge => -0.5,
    };
    let flip = if mode == WeightMode::Reciprocal { -1.0 } else { 1.0 };
    let half = |e: f64| if e > 0.0 { Half::Plus } else { Half::Minus };
    let p = flip * exponent(rk);
    let q = flip * exponent(lk);
    let (t, w) = jacobi_half_rule(half(p), half(q), n);
    let scale = ((r - l) / 2.0).powf(1.0 + p + q);
    let others: Vec<(f64, f64)> = cfg
        .critical_points()
        .into_iter()
        .filter(|&(c, _)| c != l && c != r)
        .map(|(c, k)| (c, flip * exponent(k)))
        .collect();
    let pref = match mode {
        WeightMode::Direct => 1.0 / PI,
        WeightMode::Reciprocal => PI,
    };
    let mut xs = Vec::with_capacity(n);
    let mut ws = Vec::with_capacity(n);
    for (tk, wk) in t.into_iter().zip(w) {
        let x = 0.5 * (l + r) + 0.5 * (r - l) * tk;
        let smooth: f64 = others
            .iter()
            .map(|&(c, e)| (x - c).abs().powf(e))
            .product();
        xs.push(x);
        ws.push(wk * scale * pref * smooth);
    }
    (xs, ws)
}

/// All bands concatenated: a discrete measure with the same low moments as w.
#[derive(Debug, Clone)]
pub struct DiscreteMeasure {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl DiscreteMeasure {
    pub fn new(cfg: &BranchConfig, mode: WeightMode, points_per_band: usize) -> Self {
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for j in 0..=cfg.genus() {
            let (x, w) = band_rule(cfg, j, mode, points_per_band);
            nodes.extend(x);
            weights.extend(w);
        }
        DiscreteMeasure { nodes, weights }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

fn converged(values: &[(f64, f64)], tol: f64) -> Result<f64> {
    let (best, scale) = *values.last().unwrap();
    for &(v, _) in &values[..values.len() - 1] {
        if (v - best).abs() > tol * scale.max(1e-300) {
            return Err(Error::ConvergenceError(format!(
                "refinement changed integral from {v:e} to {best:e}"
            )));
        }
    }
    Ok(best)
}

/// Integral of f w^{+-1} over one band, with a refinement check.
pub fn band_integrate(
    cfg: &BranchConfig,
    f: impl Fn(f64) -> f64,
    band: usize,
    mode: WeightMode,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let values: Vec<(f64, f64)> = spec
        .levels()
        .into_iter()
        .map(|n| {
            let (x, w) = band_rule(cfg, band, mode, n);
            x.iter().zip(&w).fold((0.0, 0.0), |(s, a), (&xk, &wk)| {
                let v = f(xk) * wk;
                (s + v, a + v.abs())
            })
        })
        .collect();
    converged(&values, spec.tol)
}

/// Sum over bands of f g w^{+-1}.
pub fn inner_product(
    cfg: &BranchConfig,
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    mode: WeightMode,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let values: Vec<(f64, f64)> = spec
        .levels()
        .into_iter()
        .map(|n| {
            let m = DiscreteMeasure::new(cfg, mode, n);
            m.nodes.iter().zip(&m.weights).fold((0.0, 0.0), |(s, a), (&x, &w)| {
                let v = f(x) * g(x) * w;
                (s + v, a + v.abs())
            })
        })
        .collect();
    converged(&values, spec.tol)
}
