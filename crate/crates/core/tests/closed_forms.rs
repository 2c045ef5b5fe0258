use gencheb::auxpoly::{
    closed_form_aux, genus2_gamma_misgrouped, genus2_gamma_regrouped, solve_aux,
};
use gencheb::elliptic::{genus1_closed_form, EllipticContext};
use gencheb::recurrence::stieltjes_table;
use gencheb::{BranchConfig, QuadratureSpec};

fn table(cfg: &BranchConfig, n: usize) -> gencheb::RecurrenceTable {
    stieltjes_table(cfg, n, &QuadratureSpec::default()).unwrap()
}

#[test]
fn elliptic_coefficients_match_stieltjes() {
    for (al, be) in [(-0.3, 0.4), (-0.8, -0.1), (0.2, 0.5), (-0.5, 0.5)] {
        let cfg = BranchConfig::new(vec![al], vec![be]).unwrap();
        let t = table(&cfg, 30);
        for n in 2..=30 {
            let (a, b) = genus1_closed_form(al, be, n).unwrap();
            assert!((a - t.a(n)).abs() < 1e-10, "a_{n} ({al},{be}): {a} vs {}", t.a(n));
            assert!((b - t.b(n)).abs() < 1e-10, "b_{n} ({al},{be}): {b} vs {}", t.b(n));
        }
        let ctx = EllipticContext::new(al, be).unwrap();
        assert!((ctx.b(1) - t.b(1)).abs() < 1e-10);
    }
}

#[test]
fn flipped_sign_b_disagrees() {
    let ctx = EllipticContext::new(-0.3, 0.4).unwrap();
    let worst = (2..12)
        .map(|n| (ctx.b(n) - ctx.b_flipped_sign(n)).abs())
        .fold(0.0, f64::max);
    assert!(worst > 1e-2);
}

#[test]
fn genus_one_displays_match_solver() {
    let cfg = BranchConfig::new(vec![-0.3], vec![0.4]).unwrap();
    let t = table(&cfg, 20);
    for n in 1..=15 {
        let c = closed_form_aux(&cfg, &t, n, 1).unwrap();
        let s = solve_aux(&cfg, &t, n).unwrap();
        for (x, y) in c.eta.iter().zip(&s.eta).chain(c.xi.iter().zip(&s.xi)) {
            assert!((x - y).abs() < 1e-11, "n={n}: {c:?} vs {s:?}");
        }
    }
}

#[test]
fn genus_two_displays_match_solver() {
    let cfg = BranchConfig::new(vec![-0.75, 0.2], vec![-0.4, 0.85]).unwrap();
    let t = table(&cfg, 20);
    for n in 1..=15 {
        let c = closed_form_aux(&cfg, &t, n, 2).unwrap();
        let s = solve_aux(&cfg, &t, n).unwrap();
        for (x, y) in c.eta.iter().zip(&s.eta).chain(c.xi.iter().zip(&s.xi)) {
            assert!((x - y).abs() < 1e-11, "n={n}: {c:?} vs {s:?}");
        }
        let (g1, g2) = genus2_gamma_regrouped(&cfg, &t, n).unwrap();
        assert!((g1 - s.gammas[0]).abs() < 1e-9 && (g2 - s.gammas[1]).abs() < 1e-9);
        let (p1, _) = genus2_gamma_misgrouped(&cfg, &t, n).unwrap();
        assert!((p1 - s.gammas[0]).abs() > 1e-3);
    }
}
