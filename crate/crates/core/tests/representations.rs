use gencheb::auxpoly::{difference_residuals, AuxSequence};
use gencheb::genchebyshev::{
    differential_data_g1, discriminant, discriminant_q, envelope, evaluate_product,
    factor_functions, normalized_polynomial, period2_discriminant, reflected_polynomial,
    step_relations_residual, wronskian, DiscriminantMethod,
};
use gencheb::intervals::reflect_config;
use gencheb::mapping::{closed_gap_constants, periodic_family, Family};
use gencheb::quadrature::inner_product;
use gencheb::recurrence::stieltjes_table;
use gencheb::{BranchConfig, QuadratureSpec, RecurrenceTable, WeightMode};

fn setup(al: Vec<f64>, be: Vec<f64>, n: usize) -> (BranchConfig, RecurrenceTable, AuxSequence) {
    let cfg = BranchConfig::new(al, be).unwrap();
    let t = stieltjes_table(&cfg, n + 2, &QuadratureSpec::default()).unwrap();
    let aux = AuxSequence::build(&cfg, &t, n).unwrap();
    (cfg, t, aux)
}

const OFF_E: [f64; 6] = [-1.7, -1.2, 1.05, 1.4, 2.0, 3.1];

#[test]
fn product_form_matches_recurrence() {
    for (al, be) in [(vec![-0.3], vec![0.4]), (vec![-0.75, 0.2], vec![-0.4, 0.85])] {
        let (cfg, t, aux) = setup(al, be, 12);
        let mut xs = OFF_E.to_vec();
        xs.push(0.5 * (cfg.alphas[0] + cfg.betas[0]) + 0.01);
        xs.extend([-0.9, 0.95]);
        for n in 0..=12 {
            for &x in &xs {
                let (p, q) = evaluate_product(&cfg, &t, &aux, n, x).unwrap();
                let (pe, qe) = t.evaluate(n, x).unwrap();
                assert!((p - pe).abs() <= 1e-9 * pe.abs().max(1e-3), "P n={n} x={x}: {p} vs {pe}");
                assert!((q - qe).abs() <= 1e-9 * qe.abs().max(1e-3), "Q n={n} x={x}: {q} vs {qe}");
            }
        }
    }
}

#[test]
fn factor_product_identity() {
    let (cfg, t, aux) = setup(vec![-0.6], vec![0.6], 10);
    for n in 1..=8 {
        for x in OFF_E {
            let f = factor_functions(&cfg, &t, &aux, n, x).unwrap();
            let s_prev = aux.s(n - 1).eval(x);
            let lhs = (f.fplus * f.fminus).re * s_prev * s_prev;
            let g = aux.g(n).eval(x);
            let rhs = g * g - t.h(n - 1).powi(2) * cfg.y_squared(x);
            assert!((lhs - rhs).abs() < 1e-10 * rhs.abs().max(1.0));
            assert!((rhs - aux.s(n).eval(x) * s_prev).abs() < 1e-10 * rhs.abs().max(1.0));
        }
    }
}

#[test]
fn classical_limit() {
    let t = RecurrenceTable::from_coefficients(&[0.5; 1].iter().chain(&[0.25; 11]).copied().collect::<Vec<_>>(), &[0.0; 12]);
    let cfg = BranchConfig::classical();
    let aux = AuxSequence::build(&cfg, &t, 10).unwrap();
    for n in 1..=10 {
        for x in [1.3, 2.0, -1.8] {
            let s = (x * x - 1.0f64).sqrt() * if x > 0.0 { 1.0 } else { -1.0 };
            let f = factor_functions(&cfg, &t, &aux, n, x).unwrap();
            let want = if n == 1 { x + s } else { (x + s) / 2.0 };
            assert!((f.fplus.re - want).abs() < 1e-12, "n={n} x={x}");
            let (p, _) = evaluate_product(&cfg, &t, &aux, n, x).unwrap();
            let cheb = ((x + s).powi(n as i32) + (x - s).powi(n as i32)) / 2f64.powi(n as i32);
            assert!((p - cheb).abs() < 1e-12 * cheb.abs());
        }
    }
}

#[test]
fn step_relations_and_wronskian() {
    for (al, be) in [(vec![-0.3], vec![0.4]), (vec![-0.75, 0.2], vec![-0.4, 0.85])] {
        let (cfg, t, aux) = setup(al, be, 10);
        for n in 1..=10 {
            for x in OFF_E {
                let (rp, rq) = step_relations_residual(&cfg, &t, &aux, n, x).unwrap();
                let (pe, qe) = t.evaluate(n, x).unwrap();
                assert!(rp.abs() < 1e-10 * pe.abs().max(1.0) && rq.abs() < 1e-10 * qe.abs().max(1.0));
            }
            for x in [-1.05, -0.93, -0.5, 0.0, 0.31, 0.77, 0.99, 1.1] {
                assert!((wronskian(&t, n, x).unwrap() - t.h(n - 1)).abs() < 1e-10 * t.h(n - 1), "n={n} x={x}");
            }
        }
        for (_, r1, r2) in difference_residuals(&t, &aux) {
            assert!(r1.abs() < 1e-12 && r2.abs() < 1e-12);
        }
    }
}

#[test]
fn differential_relations() {
    let (cfg, t, aux) = setup(vec![-0.3], vec![0.4], 10);
    let e = 1e-5;
    for n in 1..=8 {
        let d = differential_data_g1(&cfg, &t, &aux, n).unwrap();
        for x in [-1.9, -1.3, -1.1, 1.1, 1.25, 1.6, 2.2, 0.42, 0.55, -0.05] {
            let (pp, qp) = t.evaluate(n, x + e).unwrap();
            let (pm, qm) = t.evaluate(n, x - e).unwrap();
            let (p, q) = t.evaluate(n, x).unwrap();
            let dp = (pp - pm) / (2.0 * e);
            let dq = (qp - qm) / (2.0 * e);
            assert!((dp - d.f1(x) * p - d.f2(x) * q).abs() < 1e-6, "P' n={n} x={x}");
            assert!((dq - d.f3(x) * p - d.f4(x) * q).abs() < 1e-6, "Q' n={n} x={x}");
        }
    }
    let (cfg, t, aux) = setup(vec![-0.6], vec![0.6], 10);
    for n in 1..=8 {
        let d = differential_data_g1(&cfg, &t, &aux, n).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        assert!(d.c0.abs() < 1e-10, "c0 {n}");
        assert!((d.gamma - sign * -0.6).abs() < 1e-10);
        for x in [1.3, -2.0] {
            assert!((d.f2(x) - n as f64 * x / (x + 0.6)).abs() < 1e-9);
        }
    }
    let fam = periodic_family(Family::Period3ClosedRight { alpha: -0.8 }).unwrap();
    let t = fam.table(30);
    let aux = AuxSequence::build(&fam.config, &t, 20).unwrap();
    for m in 3..20 {
        let d = differential_data_g1(&fam.config, &t, &aux, m).unwrap();
        let (c0, _) = closed_gap_constants(-0.8, m).unwrap();
        assert!((d.c0 - c0).abs() < 1e-9, "m={m}: {} vs {c0}", d.c0);
    }
}

#[test]
fn discriminants() {
    let (cfg, t, aux) = setup(vec![-0.3], vec![0.4], 10);
    for n in 2..=8 {
        let a = discriminant(&cfg, &t, &aux, n, DiscriminantMethod::Direct).unwrap();
        let b = discriminant(&cfg, &t, &aux, n, DiscriminantMethod::FormulaG1).unwrap();
        assert!((a - b).abs() < 1e-6 * a, "n={n}: {a} vs {b}");
        let a = discriminant_q(&cfg, &t, &aux, n, DiscriminantMethod::Direct).unwrap();
        let b = discriminant_q(&cfg, &t, &aux, n, DiscriminantMethod::FormulaG1).unwrap();
        assert!((a - b).abs() < 1e-6 * a.max(1e-300), "Q n={n}: {a} vs {b}");
    }
    let fam = periodic_family(Family::Period2 { alpha: -0.6 }).unwrap();
    let t = fam.table(12);
    let aux = AuxSequence::build(&fam.config, &t, 10).unwrap();
    for n in 2..=7 {
        let a = discriminant(&fam.config, &t, &aux, n, DiscriminantMethod::Direct).unwrap();
        let b = discriminant(&fam.config, &t, &aux, n, DiscriminantMethod::FormulaG1).unwrap();
        let c = period2_discriminant(-0.6, n).unwrap();
        assert!((a - b).abs() < 1e-9 * a && (a - c).abs() < 1e-9 * a, "n={n}: {a} {b} {c}");
    }
}

#[test]
fn reflection_determinant() {
    let fam = periodic_family(Family::Period3ClosedRight { alpha: -0.8 }).unwrap();
    for cfg in [BranchConfig::new(vec![-0.3], vec![0.4]).unwrap(), fam.config.clone()] {
        let t = stieltjes_table(&cfg, 12, &QuadratureSpec::default()).unwrap();
        let rt = stieltjes_table(&reflect_config(&cfg), 8, &QuadratureSpec::default()).unwrap();
        let (rp, _) = rt.polynomials(6).unwrap();
        for n in 0..=6 {
            let p = reflected_polynomial(&cfg, &t, n).unwrap();
            for k in 0..=n {
                assert!((p.coeff(k) - rp[n].coeff(k)).abs() < 1e-6, "n={n} k={k}");
            }
        }
    }
    let (cfg, t, _) = setup(vec![-0.75, 0.2], vec![-0.4, 0.85], 8);
    let rt = stieltjes_table(&reflect_config(&cfg), 8, &QuadratureSpec::default()).unwrap();
    let (rp, _) = rt.polynomials(5).unwrap();
    for n in 0..=5 {
        let p = reflected_polynomial(&cfg, &t, n).unwrap();
        for k in 0..=n {
            assert!((p.coeff(k) - rp[n].coeff(k)).abs() < 1e-6, "g=2 n={n} k={k}");
        }
    }
}

#[test]
fn q_orthogonality() {
    let (cfg, t, _) = setup(vec![-0.3], vec![0.4], 10);
    let spec = QuadratureSpec::default();
    for n in 1..=8 {
        for m in 1..=n {
            let v = inner_product(
                &cfg,
                |x| t.evaluate(n, x).unwrap().1,
                |x| t.evaluate(m, x).unwrap().1,
                WeightMode::Reciprocal,
                &spec,
            )
            .unwrap();
            let want = if n == m { std::f64::consts::PI.powi(2) * t.h(n) } else { 0.0 };
            assert!((v - want).abs() < 1e-6, "n={n} m={m}: {v} vs {want}");
        }
    }
}

#[test]
fn envelopes_bound() {
    let cases = [
        (Family::Period2 { alpha: -0.5 }, 0, 1..=8),
        (Family::Period2 { alpha: -0.2 }, 1, 65..=65),
        (Family::Period3Symmetric { alpha: -0.7 }, 0, 17..=17),
        (Family::Period3Symmetric { alpha: -0.7 }, 1, 25..=25),
    ];
    for (f, j, ns) in cases {
        let d = periodic_family(f).unwrap();
        let t = d.table(3 * 70 + 4);
        for n in ns {
            let m = n * d.k + j;
            let aux = AuxSequence::build(&d.config, &t, m).unwrap();
            let gam = &aux.pairs[m].gammas;
            for (l, r) in d.config.bands() {
                for i in 0..400 {
                    let x = l + (r - l) * (i as f64 + 0.5) / 400.0;
                    let p = normalized_polynomial(&t, d.k, n, j, x).unwrap();
                    let rho = envelope(&d.config, gam, x).unwrap();
                    assert!(p.abs() <= rho + 1e-8, "{f:?} n={n} x={x}: {p} > {rho}");
                }
            }
        }
    }
}
