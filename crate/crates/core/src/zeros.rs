//! Zeros of P_n and Q_n from the truncated Jacobi matrix, and the zero
//! location results for periodic recurrences.

use crate::error::{Error, Result};
use crate::intervals::BranchConfig;
use crate::mapping::band_pieces;
use crate::recurrence::RecurrenceTable;
use nalgebra::DMatrix;
use serde::Serialize;

/// Slack for band membership.
pub const BAND_TOL: f64 = 1e-10;
/// Two zeros closer than this count as the same point.
pub const COINCIDENCE_TOL: f64 = 1e-8;

fn tridiagonal_eigenvalues(diag: &[f64], off_squared: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
    }
    for (i, &a) in off_squared.iter().enumerate() {
        let s = a.max(0.0).sqrt();
        m[(i, i + 1)] = s;
        m[(i + 1, i)] = s;
    }
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn newton_polish(roots: &mut [f64], f: impl Fn(f64) -> (f64, f64)) {
    for r in roots.iter_mut() {
        let (v, d) = f(*r);
        if d != 0.0 {
            let step = v / d;
            if step.abs() < 1e-6 {
                *r -= step;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
}

/// Zeros of P_n, ascending.
pub fn roots_of_pn(t: &RecurrenceTable, n: usize) -> Result<Vec<f64>> {
    t.require(n)?;
    if n == 0 {
        return Ok(vec![]);
    }
    let diag: Vec<f64> = (1..=n).map(|k| t.b(k)).collect();
    let off: Vec<f64> = (1..n).map(|k| t.a(k)).collect();
    let mut r = tridiagonal_eigenvalues(&diag, &off);
    newton_polish(&mut r, |x| t.evaluate_with_derivative(n, x).map(|v| v.0).unwrap_or((0.0, 0.0)));
    Ok(r)
}

/// Zeros of Q_n (degree n - 1), ascending.
pub fn roots_of_qn(t: &RecurrenceTable, n: usize) -> Result<Vec<f64>> {
    t.require(n)?;
    if n <= 1 {
        return Ok(vec![]);
    }
    let diag: Vec<f64> = (2..=n).map(|k| t.b(k)).collect();
    let off: Vec<f64> = (2..n).map(|k| t.a(k)).collect();
    let mut r = tridiagonal_eigenvalues(&diag, &off);
    newton_polish(&mut r, |x| t.evaluate_with_derivative(n, x).map(|v| v.1).unwrap_or((0.0, 0.0)));
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroCensus {
    pub roots: Vec<f64>,
    pub per_band_counts: Vec<usize>,
    /// (gap index starting at 1, root)
    pub in_gap: Vec<(usize, f64)>,
}

fn band_index(cfg: &BranchConfig, x: f64, tol: f64) -> Option<usize> {
    cfg.bands()
        .iter()
        .position(|&(l, r)| x >= l - tol && x <= r + tol)
}

/// Sorts roots into bands and gaps.
pub fn census(cfg: &BranchConfig, roots: &[f64]) -> ZeroCensus {
    let mut counts = vec![0; cfg.genus() + 1];
    let mut in_gap = Vec::new();
    for &r in roots {
        match band_index(cfg, r, BAND_TOL) {
            Some(j) => counts[j] += 1,
            None => {
                let gap = cfg.alphas.iter().filter(|&&a| a < r).count();
                in_gap.push((gap, r));
            }
        }
    }
    ZeroCensus {
        roots: roots.to_vec(),
        per_band_counts: counts,
        in_gap,
    }
}

fn near(points: &[f64], x: f64) -> bool {
    points.iter().any(|p| (p - x).abs() < COINCIDENCE_TOL)
}

/// Census of the zeros of P_{nK} for a period-K configuration: each band
/// carries n zeros per preimage of [-1, 1] under the mapping polynomial,
/// and Q_{nK} has n - 1 per preimage plus a zero at every alpha.
pub fn band_zero_census(cfg: &BranchConfig, t: &RecurrenceTable, k: usize, n: usize) -> Result<ZeroCensus> {
    if k == 0 || n == 0 {
        return Err(Error::IndexError("period and n must be positive".into()));
    }
    let pieces = band_pieces(cfg, k)?;
    let deg = n * k;
    let p = census(cfg, &roots_of_pn(t, deg)?);
    if let Some(&(gap, r)) = p.in_gap.first() {
        return Err(Error::CensusViolation(format!("zero {r} of P_{deg} in gap {gap}")));
    }
    for (j, (&got, &m)) in p.per_band_counts.iter().zip(&pieces).enumerate() {
        if got != m * n {
            return Err(Error::CensusViolation(format!(
                "band {j} holds {got} zeros of P_{deg}, expected {}",
                m * n
            )));
        }
    }

    let qk = roots_of_qn(t, k)?;
    let qroots = roots_of_qn(t, deg)?;
    for &a in &cfg.alphas {
        if !near(&qroots, a) {
            return Err(Error::CensusViolation(format!("Q_{deg} does not vanish at alpha = {a}")));
        }
    }
    let rest: Vec<f64> = qroots.iter().copied().filter(|&r| !near(&cfg.alphas, r)).collect();
    let q = census(cfg, &rest);
    if let Some(&(gap, r)) = q.in_gap.first() {
        return Err(Error::CensusViolation(format!("zero {r} of Q_{deg} in gap {gap}")));
    }
    for (j, &got) in q.per_band_counts.iter().enumerate() {
        let (l, r) = cfg.bands()[j];
        let extra = qk
            .iter()
            .filter(|&&z| z > l + COINCIDENCE_TOL && z < r - COINCIDENCE_TOL && !near(&cfg.alphas, z))
            .count();
        let want = pieces[j] * (n - 1) + extra;
        if got != want {
            return Err(Error::CensusViolation(format!(
                "band {j} holds {got} zeros of Q_{deg}, expected {want}"
            )));
        }
    }
    Ok(p)
}

/// Outcome of the intermediate-polynomial zero location checks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlacingReport {
    /// Zero of P_j, then a zero of P_{nK+j} before the next element of B.
    pub p_zeros_to_b: bool,
    /// Zero of Q_j, then a zero of P_{nK+j} before the next element of A.
    pub q_zeros_to_a: bool,
    /// Zeros of P_j lying in B are zeros of P_{nK+j}.
    pub coincidences: bool,
    /// A zero of P_j in a gap forces a zero of P_{nK+j} in that gap.
    pub gap_corollary: bool,
    pub witnesses: Vec<String>,
}

impl InterlacingReport {
    pub fn all_pass(&self) -> bool {
        self.p_zeros_to_b && self.q_zeros_to_a && self.coincidences && self.gap_corollary
    }
}

fn has_zero_in(roots: &[f64], lo: f64, hi: f64) -> bool {
    roots
        .iter()
        .any(|&r| r >= lo - COINCIDENCE_TOL && r <= hi + COINCIDENCE_TOL)
}

/// Checks where the zeros of P_{nK+j} sit relative to those of P_j, Q_j, P_{nK} and Q_{nK}.
pub fn interlacing_check(
    cfg: &BranchConfig,
    t: &RecurrenceTable,
    k: usize,
    n: usize,
    j: usize,
) -> Result<InterlacingReport> {
    if j == 0 || j >= k {
        return Err(Error::IndexError(format!("need 1 <= j < K, got j = {j}, K = {k}")));
    }
    let m = n * k + j;
    let target = roots_of_pn(t, m)?;
    let pj = roots_of_pn(t, j)?;
    let qj = roots_of_qn(t, j)?;

    let mut a_set = roots_of_pn(t, n * k)?;
    a_set.extend_from_slice(&pj);
    a_set.sort_by(f64::total_cmp);

    let mut b_set = vec![-1.0, 1.0];
    b_set.extend_from_slice(&cfg.betas);
    b_set.extend_from_slice(&qj);
    b_set.extend(roots_of_qn(t, n * k)?);
    b_set.retain(|&x| !near(&cfg.alphas, x));
    b_set.sort_by(f64::total_cmp);

    let mut witnesses = Vec::new();
    let mut next_after = |set: &[f64], z: f64, label: &str, ok: &mut bool| {
        if let Some(&b) = set.iter().find(|&&b| b > z + COINCIDENCE_TOL) {
            if !has_zero_in(&target, z, b) {
                *ok = false;
                witnesses.push(format!("no zero of P_{m} in [{z}, {b}] after {label} zero"));
            }
        }
    };
    let mut p_zeros_to_b = true;
    for &z in &pj {
        next_after(&b_set, z, "P_j", &mut p_zeros_to_b);
    }
    let mut q_zeros_to_a = true;
    for &z in &qj {
        next_after(&a_set, z, "Q_j", &mut q_zeros_to_a);
    }

    let mut coincidences = true;
    for &z in pj.iter().filter(|&&z| near(&b_set, z)) {
        if !near(&target, z) {
            coincidences = false;
            witnesses.push(format!("P_j vanishes at {z} in B but P_{m} does not"));
        }
    }

    let mut gap_corollary = true;
    for (&al, &be) in cfg.alphas.iter().zip(&cfg.betas) {
        for &z in pj.iter().filter(|&&z| z > al && z < be) {
            if !has_zero_in(&target, al, be) {
                gap_corollary = false;
                witnesses.push(format!("P_j has zero {z} in gap ({al}, {be}) but P_{m} has none there"));
            }
        }
    }

    Ok(InterlacingReport {
        p_zeros_to_b,
        q_zeros_to_a,
        coincidences,
        gap_corollary,
        witnesses,
    })
}

/// Any zero of P_n in a gap (alpha_l, beta_l) must lie in (alpha_l, gamma_l].
pub fn gap_zeros_confined(cfg: &BranchConfig, roots: &[f64], gammas: &[f64]) -> bool {
    census(cfg, roots).in_gap.iter().all(|&(gap, r)| {
        let l = gap - 1;
        r > cfg.alphas[l] - COINCIDENCE_TOL && r <= gammas[l] + COINCIDENCE_TOL
    })
}

/// Within each band, consecutive zeros of P_n enclose exactly one zero of Q_n.
pub fn pq_interlace(cfg: &BranchConfig, t: &RecurrenceTable, n: usize) -> Result<bool> {
    let p = roots_of_pn(t, n)?;
    let q = roots_of_qn(t, n)?;
    for w in p.windows(2) {
        if band_index(cfg, w[0], BAND_TOL) != band_index(cfg, w[1], BAND_TOL) {
            continue;
        }
        if q.iter().filter(|&&z| z > w[0] && z < w[1]).count() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
