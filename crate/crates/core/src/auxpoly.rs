//! The auxiliary polynomials
//!
//!   S_g(x; n)     = P_n^2 prod(x - alpha) - Q_n^2 (x^2 - 1) prod(x - beta)
//!   G_{g+1}(x; n) = P_n P_{n-1} prod(x - alpha) - Q_n Q_{n-1} (x^2 - 1) prod(x - beta)
//!
//! computed from recurrence data alone by matching Laurent expansions at
//! infinity, plus explicit closed forms for one and two gaps.

use crate::error::{Error, Result};
use crate::intervals::BranchConfig;
use crate::poly::Poly;
use crate::recurrence::{jacobi_power_column, RecurrenceTable};
use serde::Serialize;

/// Slack allowed when checking that each gamma stays in its gap.
pub const GAMMA_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuxPair {
    pub n: usize,
    /// Ascending coefficients of S_g(x; n).
    pub eta: Vec<f64>,
    /// Ascending coefficients of G_{g+1}(x; n); empty at n = 0.
    pub xi: Vec<f64>,
    /// Zeros of S_g(x; n), ascending.
    pub gammas: Vec<f64>,
}

impl AuxPair {
    pub fn s_poly(&self) -> Poly {
        Poly(self.eta.clone())
    }

    pub fn g_poly(&self) -> Poly {
        Poly(self.xi.clone())
    }
}

/// Taylor coefficients f^{(k)}(0)/k! of [(1 - Z^2) prod (1 - alpha Z)(1 - beta Z)]^{-1/2}.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidueCoefficients {
    pub values: Vec<f64>,
}

/// Series of sqrt(prod_num (1 - c Z) / prod_den (1 - c Z)) to `count` terms.
pub fn sqrt_ratio_series(num_roots: &[f64], den_roots: &[f64], count: usize) -> Vec<f64> {
    // log of the ratio, then exponentiate with E' = L' E
    let mut log = vec![0.0; count];
    for m in 1..count {
        let mf = m as f64;
        log[m] = den_roots.iter().map(|c| c.powi(m as i32)).sum::<f64>() / (2.0 * mf)
            - num_roots.iter().map(|c| c.powi(m as i32)).sum::<f64>() / (2.0 * mf);
    }
    let mut e = vec![0.0; count];
    if count > 0 {
        e[0] = 1.0;
    }
    for m in 1..count {
        e[m] = (1..=m).map(|j| j as f64 * log[j] * e[m - j]).sum::<f64>() / m as f64;
    }
    e
}

pub fn inverse_sqrt_series(cfg: &BranchConfig, count: usize) -> ResidueCoefficients {
    let mut den = vec![1.0, -1.0];
    den.extend_from_slice(&cfg.alphas);
    den.extend_from_slice(&cfg.betas);
    ResidueCoefficients {
        values: sqrt_ratio_series(&[], &den, count),
    }
}

/// S_g(x; 0) = prod (x - alpha_j).
pub fn s_at_zero(cfg: &BranchConfig) -> Poly {
    cfg.alpha_poly()
}

/// G_{g+1}(x; 1) = (x - b_1) prod (x - alpha_j).
pub fn g_at_one(cfg: &BranchConfig, t: &RecurrenceTable) -> Poly {
    &Poly(vec![-t.b(1), 1.0]) * &cfg.alpha_poly()
}

/// Zeros of S_g, one per gap.
pub fn gammas_of(cfg: &BranchConfig, s: &Poly) -> Result<Vec<f64>> {
    let g = cfg.genus();
    if g == 0 {
        return Ok(vec![]);
    }
    let roots = s.real_roots(1e-9).ok_or(Error::RootEscape {
        gap: 0,
        root: f64::NAN,
    })?;
    for (j, &r) in roots.iter().enumerate() {
        if r < cfg.alphas[j] - GAMMA_TOL || r > cfg.betas[j] + GAMMA_TOL {
            return Err(Error::RootEscape { gap: j + 1, root: r });
        }
    }
    Ok(roots)
}

fn gammas_unchecked(s: &Poly) -> Vec<f64> {
    let mut r: Vec<f64> = s.roots().iter().map(|z| z.re).collect();
    r.sort_by(f64::total_cmp);
    r
}

/// Solves the two triangular systems for the coefficients of S_g(x; n) and G_{g+1}(x; n), n >= 1.
///
/// Rows come from the Laurent coefficients of 2 h_n [L^k] at infinity. For small
/// n the products Q_n psi^{-1} contribute extra polynomial terms; these enter
/// through rho_m(n) = h_n [L^m]_{0,n} and the series of 1/(z psi(z)).
pub fn solve_aux(cfg: &BranchConfig, t: &RecurrenceTable, n: usize) -> Result<AuxPair> {
    if n == 0 {
        return Err(Error::IndexError("general system starts at n = 1".into()));
    }
    let g = cfg.genus();
    t.require(n + g / 2 + 1)?;
    let f = inverse_sqrt_series(cfg, g + 3).values;
    let mut num = vec![1.0, -1.0];
    num.extend_from_slice(&cfg.betas);
    let phi = sqrt_ratio_series(&num, &cfg.alphas, g + 3);

    let cols: Vec<Vec<f64>> = (0..=g).map(|k| jacobi_power_column(t, k, n)).collect::<Result<_>>()?;
    let cols_prev: Vec<Vec<f64>> = (0..=g)
        .map(|k| jacobi_power_column(t, k, n - 1))
        .collect::<Result<_>>()?;
    let rho = |m: usize, which: usize| -> f64 {
        if which == n {
            t.h(n) * cols[m][0]
        } else {
            t.h(n - 1) * cols_prev[m][0]
        }
    };
    let correction = |k: usize, n1: usize, n2: usize| -> f64 {
        let mut s = 0.0;
        for m1 in 0..=k {
            for m2 in 0..=(k - m1) {
                s += rho(m1, n1) * rho(m2, n2) * phi[k - m1 - m2];
            }
        }
        s
    };

    let hn = t.h(n);
    let mut eta = vec![0.0; g + 1];
    eta[g] = 2.0 * hn;
    for k in 1..=g {
        let rhs = 2.0 * hn * cols[k][n] - correction(k, n, n);
        let s: f64 = (g - k + 1..=g).map(|j| eta[j] * f[j + k - g]).sum();
        eta[g - k] = (rhs - s) / f[0];
    }
    let mut xi = vec![0.0; g + 2];
    xi[g + 1] = t.h(n - 1);
    for k in 0..=g {
        let rhs = 2.0 * hn * cols[k][n - 1] - correction(k, n, n - 1);
        let s: f64 = (g - k + 1..=g + 1).map(|j| xi[j] * f[j + k - g]).sum();
        xi[g - k] = (rhs - s) / f[0];
    }
    let gammas = gammas_of(cfg, &Poly(eta.clone()))?;
    Ok(AuxPair { n, eta, xi, gammas })
}

/// S and G straight from P_n, P_{n-1}, Q_n, Q_{n-1}; the defining identities.
pub fn aux_by_definition(cfg: &BranchConfig, t: &RecurrenceTable, n: usize) -> Result<(Poly, Poly)> {
    let (p, q) = t.polynomials(n)?;
    let ap = cfg.alpha_poly();
    let bp = cfg.beta_poly();
    let s = &(&(&p[n] * &p[n]) * &ap) - &(&(&q[n] * &q[n]) * &bp);
    if n == 0 {
        return Ok((s, Poly::zero()));
    }
    let gp = &(&(&p[n] * &p[n - 1]) * &ap) - &(&(&q[n] * &q[n - 1]) * &bp);
    Ok((s, gp))
}

/// a_n in the normalisation used by the general-n displays: a_1 enters halved.
pub fn display_a(t: &RecurrenceTable, n: usize) -> f64 {
    if n == 1 {
        t.a(1) / 2.0
    } else {
        t.a(n)
    }
}

struct Sums {
    s1: f64,
    sq: f64,
    pairs: f64,
    cubes: f64,
    pair_sums: f64,
    triples: f64,
}

fn sums(points: &[f64]) -> Sums {
    let mut pairs = 0.0;
    let mut pair_sums = 0.0;
    let mut triples = 0.0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            pairs += points[i] * points[j];
            pair_sums += points[i] * points[j] * (points[i] + points[j]);
            for k in j + 1..points.len() {
                triples += points[i] * points[j] * points[k];
            }
        }
    }
    Sums {
        s1: points.iter().sum(),
        sq: points.iter().map(|p| p * p).sum(),
        pairs,
        cubes: points.iter().map(|p| p.powi(3)).sum(),
        pair_sums,
        triples,
    }
}

/// Explicit closed forms for one or two gaps, with the n = 0 / n = 1 boundary cases.
pub fn closed_form_aux(cfg: &BranchConfig, t: &RecurrenceTable, n: usize, genus: usize) -> Result<AuxPair> {
    if genus != cfg.genus() || !(genus == 1 || genus == 2) {
        return Err(Error::UnsupportedGenus(genus));
    }
    if n == 0 {
        let s = s_at_zero(cfg);
        return Ok(AuxPair {
            n,
            gammas: cfg.alphas.clone(),
            eta: s.0,
            xi: vec![],
        });
    }
    t.require(n + 1)?;
    let (hn, hm) = (t.h(n), t.h(n - 1));
    let bn1 = t.b(n + 1);
    let an = display_a(t, n);
    let an1 = t.a(n + 1);
    let (eta, xi) = if genus == 1 {
        let (al, be) = (cfg.alphas[0], cfg.betas[0]);
        let eta = vec![2.0 * hn * (bn1 - (al + be) / 2.0), 2.0 * hn];
        let xi = if n == 1 {
            g_at_one(cfg, t).0
        } else {
            vec![
                hm * (2.0 * an - (al - be).powi(2) / 8.0 - 0.5),
                -hm * (al + be) / 2.0,
                hm,
            ]
        };
        (eta, xi)
    } else {
        let pts = [cfg.alphas[0], cfg.alphas[1], cfg.betas[0], cfg.betas[1]];
        let s = sums(&pts);
        let eta = vec![
            -hn / 4.0
                * (4.0 + s.sq - 2.0 * s.pairs - 8.0 * (an1 + an) + 4.0 * bn1 * s.s1 - 8.0 * bn1 * bn1),
            -hn * (s.s1 - 2.0 * bn1),
            2.0 * hn,
        ];
        let xi = if n == 1 {
            g_at_one(cfg, t).0
        } else {
            let bn = t.b(n);
            vec![
                hm / 16.0
                    * (-s.cubes + 4.0 * s.s1 + s.pair_sums
                        - 2.0 * s.triples
                        - 16.0 * an * (s.s1 - 2.0 * (bn + bn1))),
                -hm * (0.5 + s.sq / 8.0 - s.pairs / 4.0 - 2.0 * an),
                -hm * s.s1 / 2.0,
                hm,
            ]
        };
        (eta, xi)
    };
    let gammas = gammas_unchecked(&Poly(eta.clone()));
    Ok(AuxPair { n, eta, xi, gammas })
}

/// The two-gap gamma formula with only s1 quartered: s1/4 - 2 b_{n+1} -+ sqrt(R). Not the roots of S_2.
pub fn genus2_gamma_misgrouped(cfg: &BranchConfig, t: &RecurrenceTable, n: usize) -> Result<(f64, f64)> {
    let (base, rad) = genus2_gamma_parts(cfg, t, n)?;
    let s1 = base + 2.0 * t.b(n + 1);
    Ok((s1 / 4.0 - 2.0 * t.b(n + 1) - rad, s1 / 4.0 - 2.0 * t.b(n + 1) + rad))
}

/// The same formula read as (s1 - 2 b_{n+1} -+ sqrt(R)) / 4, which is the root formula of S_2.
pub fn genus2_gamma_regrouped(cfg: &BranchConfig, t: &RecurrenceTable, n: usize) -> Result<(f64, f64)> {
    let (base, rad) = genus2_gamma_parts(cfg, t, n)?;
    Ok(((base - rad) / 4.0, (base + rad) / 4.0))
}

fn genus2_gamma_parts(cfg: &BranchConfig, t: &RecurrenceTable, n: usize) -> Result<(f64, f64)> {
    if cfg.genus() != 2 {
        return Err(Error::UnsupportedGenus(cfg.genus()));
    }
    if n == 0 {
        return Err(Error::IndexError("gamma display starts at n = 1".into()));
    }
    t.require(n + 1)?;
    let s = sums(&[cfg.alphas[0], cfg.alphas[1], cfg.betas[0], cfg.betas[1]]);
    let b = t.b(n + 1);
    let r = 8.0 + 3.0 * s.sq - 2.0 * s.pairs - 16.0 * (display_a(t, n) + t.a(n + 1)) + 4.0 * b * s.s1
        - 12.0 * b * b;
    Ok((s.s1 - 2.0 * b, r.max(0.0).sqrt()))
}

/// Auxiliary polynomials for n = 0..=n_max with the boundary cases filled in.
#[derive(Debug, Clone)]
pub struct AuxSequence {
    pub pairs: Vec<AuxPair>,
}

impl AuxSequence {
    pub fn build(cfg: &BranchConfig, t: &RecurrenceTable, n_max: usize) -> Result<Self> {
        let mut pairs = vec![AuxPair {
            n: 0,
            eta: s_at_zero(cfg).0,
            xi: vec![],
            gammas: cfg.alphas.clone(),
        }];
        for n in 1..=n_max {
            let mut p = solve_aux(cfg, t, n)?;
            if n == 1 {
                p.xi = g_at_one(cfg, t).0;
            }
            pairs.push(p);
        }
        Ok(AuxSequence { pairs })
    }

    pub fn s(&self, n: usize) -> Poly {
        self.pairs[n].s_poly()
    }

    pub fn g(&self, n: usize) -> Poly {
        self.pairs[n].g_poly()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Residuals S_g(b_n; n) - a_{n-1}^2 S_g(b_n; n-2) and
/// G_{g+1}(b_n; n) + a_{n-1} G_{g+1}(b_n; n-1) for n = 3..len-1.
pub fn difference_residuals(t: &RecurrenceTable, aux: &AuxSequence) -> Vec<(usize, f64, f64)> {
    (3..aux.len())
        .map(|n| {
            let x = t.b(n);
            let a = t.a(n - 1);
            let r1 = aux.s(n).eval(x) - a * a * aux.s(n - 2).eval(x);
            let r2 = aux.g(n).eval(x) + a * aux.g(n - 1).eval(x);
            (n, r1, r2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::QuadratureSpec;
    use crate::recurrence::stieltjes_table;

    #[test]
    fn series_values() {
        let f = inverse_sqrt_series(&BranchConfig::classical(), 5).values;
        let expect = [1.0, 0.0, 0.5, 0.0, 0.375];
        for (a, b) in f.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        let c = BranchConfig::new(vec![-0.3], vec![0.4]).unwrap();
        let f = inverse_sqrt_series(&c, 3).values;
        assert_eq!(f[0], 1.0);
        assert!((f[1] - 0.05).abs() < 1e-15);
    }

    #[test]
    fn matches_definition_small_n() {
        for (al, be) in [(vec![-0.3], vec![0.4]), (vec![-0.75, 0.2], vec![-0.4, 0.85])] {
            let c = BranchConfig::new(al, be).unwrap();
            let t = stieltjes_table(&c, 12, &QuadratureSpec::default()).unwrap();
            for n in 1..=8 {
                let p = solve_aux(&c, &t, n).unwrap();
                let (s, g) = aux_by_definition(&c, &t, n).unwrap();
                for k in 0..p.eta.len() {
                    assert!((p.eta[k] - s.coeff(k)).abs() < 1e-12, "eta n={n} k={k}");
                }
                for k in 0..p.xi.len() {
                    assert!((p.xi[k] - g.coeff(k)).abs() < 1e-12, "xi n={n} k={k}");
                }
            }
        }
    }
}
