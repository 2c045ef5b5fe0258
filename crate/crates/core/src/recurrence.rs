//! Recurrence coefficients x P_n = P_{n+1} + b_{n+1} P_n + a_n P_{n-1}.

use crate::error::{Error, Result};
use crate::intervals::{BranchConfig, WeightMode};
use crate::poly::Poly;
use crate::quadrature::{DiscreteMeasure, QuadratureSpec};
use num_complex::Complex64;
use serde::Serialize;

/// a_1..a_N, b_1..b_N and h_0..h_N. Index 0 of `a` and `b` is unused.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecurrenceTable {
    a: Vec<f64>,
    b: Vec<f64>,
    h: Vec<f64>,
}

impl RecurrenceTable {
    /// Builds a table from a_1..a_N and b_1..b_N with h_0 = 1.
    pub fn from_coefficients(a: &[f64], b: &[f64]) -> Self {
        assert_eq!(a.len(), b.len(), "need as many a_n as b_n");
        let mut av = vec![0.0];
        av.extend_from_slice(a);
        let mut bv = vec![0.0];
        bv.extend_from_slice(b);
        let mut h = vec![1.0];
        for n in 1..av.len() {
            h.push(h[n - 1] * av[n]);
        }
        RecurrenceTable { a: av, b: bv, h }
    }

    pub fn horizon(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self, n: usize) -> f64 {
        self.a[n]
    }

    pub fn b(&self, n: usize) -> f64 {
        self.b[n]
    }

    pub fn h(&self, n: usize) -> f64 {
        self.h[n]
    }

    pub fn a_slice(&self) -> &[f64] {
        &self.a[1..]
    }

    pub fn b_slice(&self) -> &[f64] {
        &self.b[1..]
    }

    pub fn h_slice(&self) -> &[f64] {
        &self.h
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if n > self.horizon() {
            Err(Error::HorizonExceeded {
                needed: n,
                horizon: self.horizon(),
            })
        } else {
            Ok(())
        }
    }

    /// P_n(x) and Q_n(x) by the forward recurrence.
    pub fn evaluate(&self, n: usize, x: f64) -> Result<(f64, f64)> {
        self.require(n)?;
        Ok(self.run(n, x))
    }

    pub fn evaluate_complex(&self, n: usize, z: Complex64) -> Result<(Complex64, Complex64)> {
        self.require(n)?;
        Ok(self.run(n, z))
    }

    /// ((P_n, P_n'), (Q_n, Q_n')) at x.
    pub fn evaluate_with_derivative(&self, n: usize, x: f64) -> Result<((f64, f64), (f64, f64))> {
        self.require(n)?;
        if n == 0 {
            return Ok(((1.0, 0.0), (0.0, 0.0)));
        }
        let (mut p0, mut p1, mut dp0, mut dp1) = (1.0, x - self.b[1], 0.0, 1.0);
        let (mut q0, mut q1, mut dq0, mut dq1) = (0.0, 1.0, 0.0, 0.0);
        for k in 1..n {
            let xb = x - self.b[k + 1];
            let a = self.a[k];
            let (p2, dp2) = (xb * p1 - a * p0, p1 + xb * dp1 - a * dp0);
            let (q2, dq2) = (xb * q1 - a * q0, q1 + xb * dq1 - a * dq0);
            (p0, p1, dp0, dp1) = (p1, p2, dp1, dp2);
            (q0, q1, dq0, dq1) = (q1, q2, dq1, dq2);
        }
        Ok(((p1, dp1), (q1, dq1)))
    }

    fn run<T>(&self, n: usize, x: T) -> (T, T)
    where
        T: Copy
            + std::ops::Sub<f64, Output = T>
            + std::ops::Mul<T, Output = T>
            + std::ops::Mul<f64, Output = T>
            + std::ops::Sub<T, Output = T>
            + From<f64>,
    {
        if n == 0 {
            return (T::from(1.0), T::from(0.0));
        }
        let (mut p0, mut p1) = (T::from(1.0), x - self.b[1]);
        let (mut q0, mut q1) = (T::from(0.0), T::from(1.0));
        for k in 1..n {
            let xb = x - self.b[k + 1];
            let p2 = xb * p1 - p0 * self.a[k];
            let q2 = xb * q1 - q0 * self.a[k];
            p0 = p1;
            p1 = p2;
            q0 = q1;
            q1 = q2;
        }
        (p1, q1)
    }

    /// Coefficients of P_0..=P_n and Q_0..=Q_n.
    pub fn polynomials(&self, n: usize) -> Result<(Vec<Poly>, Vec<Poly>)> {
        self.require(n)?;
        let mut p = vec![Poly::one()];
        let mut q = vec![Poly::zero()];
        if n >= 1 {
            p.push(Poly(vec![-self.b[1], 1.0]));
            q.push(Poly::one());
        }
        for k in 1..n {
            let next_p = &(&p[k].mul_x() - &p[k].scale(self.b[k + 1])) - &p[k - 1].scale(self.a[k]);
            let next_q = &(&q[k].mul_x() - &q[k].scale(self.b[k + 1])) - &q[k - 1].scale(self.a[k]);
            p.push(next_p);
            q.push(next_q);
        }
        Ok((p, q))
    }

    /// Truncation to a smaller horizon.
    pub fn truncated(&self, n: usize) -> RecurrenceTable {
        let n = n.min(self.horizon());
        RecurrenceTable {
            a: self.a[..=n].to_vec(),
            b: self.b[..=n].to_vec(),
            h: self.h[..=n].to_vec(),
        }
    }
}

/// Discretised Stieltjes procedure on the band quadrature.
pub fn stieltjes_table(cfg: &BranchConfig, n_max: usize, spec: &QuadratureSpec) -> Result<RecurrenceTable> {
    if n_max == 0 {
        return Err(Error::IndexError("horizon must be at least 1".into()));
    }
    let mut tables = Vec::new();
    let mut n = spec.points_per_band.max(8);
    for level in 0..=spec.refinement_levels {
        if level > 0 {
            n = n * 3 / 2;
        }
        tables.push(stieltjes_on(&DiscreteMeasure::new(cfg, WeightMode::Direct, n), n_max)?);
    }
    let best = tables.pop().unwrap();
    let tol = (spec.tol * 100.0).max(1e-10);
    for t in &tables {
        for k in 1..=n_max {
            let da = (t.a(k) - best.a(k)).abs() / best.a(k);
            let db = (t.b(k) - best.b(k)).abs();
            if da > tol || db > tol {
                return Err(Error::ConvergenceError(format!(
                    "recurrence coefficient {k} moved by {:e} under refinement",
                    da.max(db)
                )));
            }
        }
    }
    Ok(best)
}

fn stieltjes_on(m: &DiscreteMeasure, n_max: usize) -> Result<RecurrenceTable> {
    let x = &m.nodes;
    let w = &m.weights;
    let mut a = vec![0.0; n_max + 1];
    let mut b = vec![0.0; n_max + 1];
    let mut h = vec![0.0; n_max + 1];
    let mut prev = vec![0.0; x.len()];
    let mut cur = vec![1.0; x.len()];
    let mut older = vec![0.0; x.len()];
    for k in 0..=n_max {
        let hk: f64 = cur.iter().zip(w).map(|(p, w)| p * p * w).sum();
        h[k] = hk;
        if k > 0 {
            a[k] = hk / h[k - 1];
        }
        if k == n_max {
            // orthogonality of the last polynomial against P_{N-2}
            if n_max >= 2 {
                let ip: f64 = cur.iter().zip(&older).zip(w).map(|((p, q), w)| p * q * w).sum();
                let measure = ip.abs() / h[k - 1];
                if measure > 1e-7 {
                    return Err(Error::LossOfOrthogonality { degree: k, measure });
                }
            }
            break;
        }
        let xk: f64 = cur.iter().zip(w).zip(x).map(|((p, w), x)| x * p * p * w).sum();
        b[k + 1] = xk / hk;
        let next: Vec<f64> = (0..x.len())
            .map(|i| (x[i] - b[k + 1]) * cur[i] - if k > 0 { a[k] * prev[i] } else { 0.0 })
            .collect();
        older = std::mem::replace(&mut prev, std::mem::replace(&mut cur, next));
    }
    let h0 = h[0];
    let table = RecurrenceTable {
        a,
        b,
        h: h.iter().map(|v| v / h0).collect(),
    };
    Ok(table)
}

/// Slice of a and b from index `first` onwards, as produced by the genus-one iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceFragment {
    pub first: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl RecurrenceFragment {
    pub fn a(&self, n: usize) -> f64 {
        self.a[n - self.first]
    }

    pub fn b(&self, n: usize) -> f64 {
        self.b[n - self.first]
    }

    pub fn last(&self) -> usize {
        self.first + self.a.len() - 1
    }
}

/// Continues a genus-one table from (a_2, b_2, b_3) with the two first-order difference equations.
///
/// Produces a_2..a_N and b_2..b_N.
pub fn difference_iterate_g1(
    alpha: f64,
    beta: f64,
    seed: (f64, f64, f64),
    n_max: usize,
) -> Result<RecurrenceFragment> {
    if n_max < 3 {
        return Err(Error::IndexError("difference iteration needs N >= 3".into()));
    }
    let s = alpha + beta;
    let d2 = (beta - alpha).powi(2);
    let (a2, b2, b3) = seed;
    let mut a = vec![0.0; n_max + 1];
    let mut b = vec![0.0; n_max + 1];
    a[2] = a2;
    b[2] = b2;
    b[3] = b3;
    for n in 3..=n_max {
        a[n] = 0.5 + d2 / 8.0 + s * b[n] / 2.0 - b[n] * b[n] - a[n - 1];
        if !(a[n] > 0.0) {
            return Err(Error::SingularStep(n));
        }
        if n < n_max {
            b[n + 1] = s / 2.0 - b[n] + (a[n - 1] / a[n]) * (b[n] + b[n - 1] - s / 2.0);
        }
    }
    Ok(RecurrenceFragment {
        first: 2,
        a: a[2..].to_vec(),
        b: b[2..].to_vec(),
    })
}

/// Residuals of the two genus-one difference equations on a given table, at index n >= 3.
///
/// Returns (a-equation, b-equation); the b-equation needs b_{n+1}.
pub fn g1_equation_residuals(alpha: f64, beta: f64, t: &RecurrenceTable, n: usize) -> Result<(f64, f64)> {
    t.require(n + 1)?;
    if n < 3 {
        return Err(Error::IndexError("difference equations hold for n >= 3".into()));
    }
    let s = alpha + beta;
    let ra = t.a(n) - (0.5 + (beta - alpha).powi(2) / 8.0 + s * t.b(n) / 2.0 - t.b(n).powi(2) - t.a(n - 1));
    let rb = t.b(n + 1) - (s / 2.0 - t.b(n) + (t.a(n - 1) / t.a(n)) * (t.b(n) + t.b(n - 1) - s / 2.0));
    Ok((ra, rb))
}

/// Column `n` of L^k, rows 0..=n + k/2, where L[i][i] = b_{i+1}, L[i][i+1] = 1, L[i+1][i] = a_{i+1}.
///
/// Paths from n back to a row <= n never climb above n + k/2, so the
/// truncation is exact there; rows above n are not.
pub fn jacobi_power_column(t: &RecurrenceTable, k: usize, n: usize) -> Result<Vec<f64>> {
    let rows = n + k / 2;
    t.require(rows + 1)?;
    let mut v = vec![0.0; rows + 1];
    v[n] = 1.0;
    for _ in 0..k {
        let mut next = vec![0.0; rows + 1];
        for i in 0..=rows {
            let mut s = t.b(i + 1) * v[i];
            if i < rows {
                s += v[i + 1];
            }
            if i >= 1 {
                s += t.a(i) * v[i - 1];
            }
            next[i] = s;
        }
        v = next;
    }
    Ok(v)
}

/// ([L^k]_{n-1,n}, [L^k]_{n,n}); the first is 0 when n = 0.
pub fn jacobi_power_entries(t: &RecurrenceTable, k: usize, n: usize) -> Result<(f64, f64)> {
    let col = jacobi_power_column(t, k, n)?;
    let off = if n >= 1 { col[n - 1] } else { 0.0 };
    Ok((off, col[n]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_table() {
        let t = stieltjes_table(&BranchConfig::classical(), 5, &QuadratureSpec::default()).unwrap();
        assert!((t.a(1) - 0.5).abs() < 1e-14);
        for n in 2..=5 {
            assert!((t.a(n) - 0.25).abs() < 1e-14);
        }
        for n in 1..=5 {
            assert!(t.b(n).abs() < 1e-14);
            assert!((t.h(n) - 2f64.powi(1 - 2 * n as i32)).abs() < 1e-15);
        }
    }

    #[test]
    fn period_two_table() {
        let c = BranchConfig::new(vec![-0.6], vec![0.6]).unwrap();
        let t = stieltjes_table(&c, 4, &QuadratureSpec::default()).unwrap();
        assert!((t.a(1) - 0.32).abs() < 1e-12);
        for n in 1..=4 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((t.b(n) - sign * -0.6).abs() < 1e-12);
        }
        for n in 2..=4 {
            assert!((t.a(n) - 0.16).abs() < 1e-12);
        }
    }

    #[test]
    fn evaluate_matches_coefficients() {
        let c = BranchConfig::new(vec![-0.3], vec![0.4]).unwrap();
        let t = stieltjes_table(&c, 8, &QuadratureSpec::default()).unwrap();
        let (p, q) = t.polynomials(8).unwrap();
        for x in [-1.3, 0.2, 0.77] {
            for n in 0..=8 {
                let (pv, qv) = t.evaluate(n, x).unwrap();
                assert!((pv - p[n].eval(x)).abs() < 1e-12);
                assert!((qv - q[n].eval(x)).abs() < 1e-12);
            }
        }
        assert!(t.evaluate(9, 0.0).is_err());
    }

    #[test]
    fn difference_iteration_fixed_points() {
        let f = difference_iterate_g1(-0.6, 0.6, (0.16, -0.6, 0.6), 10).unwrap();
        assert!((f.a(3) - 0.16).abs() < 1e-15);
        assert!((f.b(4) + 0.6).abs() < 1e-15);
        let f = difference_iterate_g1(0.0, 0.0, (0.25, 0.0, 0.0), 12).unwrap();
        for n in 2..=12 {
            assert!((f.a(n) - 0.25).abs() < 1e-15 && f.b(n).abs() < 1e-15);
        }
    }

    #[test]
    fn jacobi_powers() {
        let t = RecurrenceTable::from_coefficients(&[0.5, 0.25, 0.25, 0.25, 0.25, 0.25], &[0.0; 6]);
        assert_eq!(jacobi_power_entries(&t, 0, 3).unwrap(), (0.0, 1.0));
        let (_, d2) = jacobi_power_entries(&t, 2, 3).unwrap();
        assert!((d2 - 0.5).abs() < 1e-15);
        let c = BranchConfig::new(vec![-0.6], vec![-0.2]).unwrap();
        let t = stieltjes_table(&c, 8, &QuadratureSpec::default()).unwrap();
        let (_, d1) = jacobi_power_entries(&t, 1, 3).unwrap();
        assert!((d1 - t.b(4)).abs() < 1e-15);
    }
}
