use gencheb::mapping::{
    band_pieces, build_mapping, closed_gap_constants, compose_identities, detect_period,
    equilibrium_charges, product_shift_residual, period3_gammas, period3_symmetric_aux, periodic_family,
    Family, PeriodicData,
};
use gencheb::auxpoly::solve_aux;
use gencheb::recurrence::stieltjes_table;
use gencheb::zeros::{band_zero_census, interlacing_check};
use gencheb::{BranchConfig, QuadratureSpec, RecurrenceTable};

fn families() -> Vec<Family> {
    vec![
        Family::Period2 { alpha: -0.6 },
        Family::Period3 { alpha1: -0.75, beta1: -0.4 },
        Family::Period3Symmetric { alpha: -0.7 },
        Family::Period3ClosedRight { alpha: -0.8 },
        Family::Period3ClosedLeft { alpha: 0.1 },
    ]
}

fn oracle(d: &PeriodicData, n: usize) -> RecurrenceTable {
    stieltjes_table(&d.config, n, &QuadratureSpec::default()).unwrap()
}

#[test]
fn families_match_stieltjes() {
    for f in families() {
        let d = periodic_family(f).unwrap();
        let t = oracle(&d, 12);
        let c = d.table(12);
        for n in 1..=12 {
            assert!((t.a(n) - c.a(n)).abs() < 1e-10, "{f:?} a_{n}: {} vs {}", t.a(n), c.a(n));
            assert!((t.b(n) - c.b(n)).abs() < 1e-10, "{f:?} b_{n}: {} vs {}", t.b(n), c.b(n));
        }
    }
}

#[test]
fn charges_and_periods() {
    for f in families() {
        let d = periodic_family(f).unwrap();
        let ch = equilibrium_charges(&d.config).unwrap();
        assert_eq!(detect_period(&ch.bhat, 64, 1e-6), Some(d.k), "{f:?}: {:?}", ch.bhat);
        let total: f64 = ch.bhat.iter().map(|b| -b).sum();
        assert!(total > 0.0 && total < 1.0);
    }
    let sym = equilibrium_charges(&BranchConfig::new(vec![-0.3], vec![0.3]).unwrap()).unwrap();
    assert!((sym.bhat[0] + 0.5).abs() < 1e-10);
    let d = periodic_family(Family::Period3ClosedRight { alpha: -0.8 }).unwrap();
    let ch = equilibrium_charges(&d.config).unwrap();
    assert!((ch.bhat[0] + 1.0 / 3.0).abs() < 1e-8);
    let d = periodic_family(Family::Period3ClosedLeft { alpha: 0.1 }).unwrap();
    assert_eq!(band_pieces(&d.config, 3).unwrap(), vec![2, 1]);
}

#[test]
fn mapping_and_compositions() {
    for f in families() {
        let d = periodic_family(f).unwrap();
        let t = d.table(40);
        let m = build_mapping(&d.config, &t, d.k).unwrap();
        assert!(m.constraints.iter().all(|c| c.pass));
        for n in 0..=4 {
            for j in 0..d.k {
                if j > 0 && n == 0 {
                    continue;
                }
                for x in [-0.95, -0.1, 0.37, 1.3, -1.7] {
                    let (p, q) = compose_identities(&d.config, &t, d.k, n, j, x).unwrap();
                    let (pe, qe) = t.evaluate(n * d.k + j, x).unwrap();
                    let s = 1.0 + pe.abs().max(qe.abs());
                    assert!((p - pe).abs() < 1e-9 * s && (q - qe).abs() < 1e-9 * s, "{f:?} n={n} j={j} x={x}");
                }
            }
        }
        for mm in 1..=2 {
            for n in mm * d.k + 1..mm * d.k + 5 {
                assert!(product_shift_residual(&t, d.k, mm, n, 0.3).unwrap().abs() < 1e-12);
            }
            let at = product_shift_residual(&t, d.k, mm, mm * d.k, 0.3).unwrap();
            assert!((at - 0.5 * t.h(mm * d.k)).abs() < 1e-12);
        }
    }
    let d = periodic_family(Family::Period2 { alpha: -0.6 }).unwrap();
    let m = build_mapping(&d.config, &d.table(4), 2).unwrap();
    assert!((m.m_coeffs[2] - 3.125).abs() < 1e-12 && (m.m_coeffs[0] + 2.125).abs() < 1e-12);
}

#[test]
fn zero_placement_and_interlacing() {
    for f in families() {
        let d = periodic_family(f).unwrap();
        let t = d.table(40);
        for n in 1..=18 / d.k {
            band_zero_census(&d.config, &t, d.k, n).unwrap();
        }
        for j in 1..d.k {
            for n in 1..=3 {
                let r = interlacing_check(&d.config, &t, d.k, n, j).unwrap();
                assert!(r.all_pass(), "{f:?} n={n} j={j}: {:?}", r.witnesses);
            }
        }
    }
}

#[test]
fn period3_displays() {
    let d = periodic_family(Family::Period3 { alpha1: -0.75, beta1: -0.4 }).unwrap();
    let t = d.table(20);
    for n in 2..12 {
        let (g1, g2) = period3_gammas(-0.75, -0.4, &t, n).unwrap();
        let s = solve_aux(&d.config, &t, n).unwrap();
        assert!((g1 - s.gammas[0]).abs() < 1e-9 && (g2 - s.gammas[1]).abs() < 1e-9, "n={n}");
    }
    let d = periodic_family(Family::Period3Symmetric { alpha: -0.7 }).unwrap();
    let t = d.table(20);
    for n in 1..12 {
        let c = period3_symmetric_aux(-0.7, &t, n).unwrap();
        let s = solve_aux(&d.config, &t, n).unwrap();
        for (x, y) in c.eta.iter().zip(&s.eta) {
            assert!((x - y).abs() < 1e-12, "eta n={n}");
        }
        if n >= 2 {
            for (x, y) in c.xi.iter().zip(&s.xi) {
                assert!((x - y).abs() < 1e-12, "xi n={n}");
            }
        }
        assert!((c.gammas[0] - s.gammas[0]).abs() < 1e-9);
    }
    let d = periodic_family(Family::Period3ClosedRight { alpha: -0.8 }).unwrap();
    let t = d.table(30);
    for m in 3..20 {
        let (_, gamma) = closed_gap_constants(-0.8, m).unwrap();
        let s = solve_aux(&d.config, &t, m).unwrap();
        assert!((gamma - s.gammas[0]).abs() < 1e-9, "m={m}: {gamma} vs {:?}", s.gammas);
    }
}
