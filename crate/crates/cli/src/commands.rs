use crate::output::{emit, num, Output, RunReport, Table};
use crate::{
    AuxMethod, CliError, CoeffMethod, Command, Common, DiscMethod, EvalMethod, MapAction, Suite, Variant,
    ZeroKind,
};
use gencheb::auxpoly::{aux_by_definition, closed_form_aux, gammas_of, AuxPair, AuxSequence};
use gencheb::elliptic::{genus1_closed_form, EllipticContext};
use gencheb::genchebyshev::{discriminant, envelope, evaluate_product, normalized_polynomial, DiscriminantMethod};
use gencheb::mapping::{
    build_mapping, contour_points, detect_period, equilibrium_charges, periodic_family, Family, DEFAULT_PERIOD_TOL,
};
use gencheb::recurrence::stieltjes_table;
use gencheb::verify::{acceptance_suite, config_suite, Check};
use gencheb::zeros::{roots_of_pn, roots_of_qn, BAND_TOL};
use gencheb::{BranchConfig, QuadratureSpec, RecurrenceTable};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::path::Path;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    alphas: Vec<f64>,
    betas: Vec<f64>,
}

pub fn load_config(path: Option<&Path>) -> Result<BranchConfig, CliError> {
    let path = path.ok_or_else(|| CliError::Usage("--config is required for this command".into()))?;
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(shown.clone(), e.to_string()))?;
    let raw: ConfigFile = serde_json::from_str(&text).map_err(|e| CliError::Config(shown, e.to_string()))?;
    Ok(BranchConfig::new(raw.alphas, raw.betas)?)
}

/// Enough nodes per band that the discrete inner products stay exact up to degree 2 * horizon.
fn table(cfg: &BranchConfig, horizon: usize) -> Result<RecurrenceTable, CliError> {
    let spec = QuadratureSpec::with_points(64.max(horizon + 16));
    Ok(stieltjes_table(cfg, horizon.max(1), &spec)?)
}

fn period_of(cfg: &BranchConfig, requested: Option<usize>) -> Result<usize, CliError> {
    if let Some(k) = requested {
        if k == 0 {
            return Err(CliError::Usage("--K must be positive".into()));
        }
        return Ok(k);
    }
    let ch = equilibrium_charges(cfg)?;
    detect_period(&ch.bhat, gencheb::mapping::DEFAULT_KMAX, DEFAULT_PERIOD_TOL).ok_or_else(|| {
        CliError::Compute(gencheb::Error::ConstraintViolation(
            "no period up to 64 detected; pass --K".into(),
        ))
    })
}

fn config_json(cfg: &BranchConfig) -> serde_json::Value {
    json!({ "alphas": cfg.alphas, "betas": cfg.betas })
}

pub fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Coeffs { common, method } => {
            let cfg = load_config(common.config.as_deref())?;
            emit(&Output::Csv(coeffs(&cfg, common.n, method)?), common.out.as_deref())
        }
        Command::Eval { common, x, method } => {
            let cfg = load_config(common.config.as_deref())?;
            emit(&Output::Csv(eval(&cfg, common.n, &x, method)?), common.out.as_deref())
        }
        Command::Aux { common, method } => {
            let cfg = load_config(common.config.as_deref())?;
            let pairs = aux(&cfg, common.n, method)?;
            let inputs = json!({ "config": config_json(&cfg), "n": common.n, "method": format!("{method:?}") });
            emit(&Output::Json(RunReport::new("aux", inputs, pairs)?), common.out.as_deref())
        }
        Command::Map { action } => map(action),
        Command::Zeros { common, method } => {
            let cfg = load_config(common.config.as_deref())?;
            emit(&Output::Csv(zeros(&cfg, common.n, method)?), common.out.as_deref())
        }
        Command::Disc { common, method } => {
            let cfg = load_config(common.config.as_deref())?;
            emit(&Output::Csv(disc(&cfg, common.n, method)?), common.out.as_deref())
        }
        Command::Envelope { common, k, points } => {
            let cfg = load_config(common.config.as_deref())?;
            let report = envelope_report(&cfg, &common, k, points)?;
            emit(&Output::Json(report), common.out.as_deref())
        }
        Command::PlotData { common, k, points } => {
            let cfg = load_config(common.config.as_deref())?;
            emit(&Output::Csv(plot_data(&cfg, common.n, k, points)?), common.out.as_deref())
        }
        Command::Verify { common, suite, seed } => {
            let report = verify(&common, suite, seed)?;
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            emit(&Output::Json(report), common.out.as_deref())?;
            if failed > 0 {
                return Err(CliError::ChecksFailed(failed));
            }
            Ok(())
        }
    }
}

fn coeffs(cfg: &BranchConfig, n: usize, method: CoeffMethod) -> Result<Table, CliError> {
    let n = n.max(1);
    let t = match method {
        CoeffMethod::Stieltjes => table(cfg, n)?,
        CoeffMethod::Elliptic => {
            if cfg.genus() != 1 {
                return Err(gencheb::Error::UnsupportedGenus(cfg.genus()).into());
            }
            let (al, be) = (cfg.alphas[0], cfg.betas[0]);
            // a_1 has no elliptic expression; it is the variance of the weight
            let first = table(cfg, 1)?;
            let ctx = EllipticContext::new(al, be)?;
            let mut a = vec![first.a(1)];
            let mut b = vec![ctx.b(1)];
            for m in 2..=n {
                let (am, bm) = genus1_closed_form(al, be, m)?;
                a.push(am);
                b.push(bm);
            }
            RecurrenceTable::from_coefficients(&a, &b)
        }
    };
    let mut out = Table::new(&["n", "a_n", "b_n", "h_n"]);
    for m in 1..=n {
        out.push(vec![m.to_string(), num(t.a(m)), num(t.b(m)), num(t.h(m))]);
    }
    Ok(out)
}

fn eval(cfg: &BranchConfig, n: usize, xs: &[f64], method: EvalMethod) -> Result<Table, CliError> {
    let t = table(cfg, n + cfg.genus() + 2)?;
    let aux = match method {
        EvalMethod::Product => Some(AuxSequence::build(cfg, &t, n)?),
        EvalMethod::Recurrence => None,
    };
    let mut out = Table::new(&["x", "P_n", "Q_n"]);
    for &x in xs {
        let (p, q) = match &aux {
            Some(aux) => evaluate_product(cfg, &t, aux, n, x)?,
            None => t.evaluate(n, x)?,
        };
        out.push(vec![num(x), num(p), num(q)]);
    }
    Ok(out)
}

fn aux(cfg: &BranchConfig, n: usize, method: AuxMethod) -> Result<Vec<AuxPair>, CliError> {
    let t = table(cfg, n + cfg.genus() + 4)?;
    Ok(match method {
        AuxMethod::Solve => AuxSequence::build(cfg, &t, n)?.pairs,
        AuxMethod::Closed => (0..=n)
            .map(|m| closed_form_aux(cfg, &t, m, cfg.genus()))
            .collect::<Result<_, _>>()?,
        AuxMethod::Definition => (0..=n)
            .map(|m| {
                let (s, g) = aux_by_definition(cfg, &t, m)?;
                let gammas = gammas_of(cfg, &s)?;
                Ok(AuxPair {
                    n: m,
                    eta: s.0,
                    xi: if m == 0 { vec![] } else { g.0 },
                    gammas,
                })
            })
            .collect::<Result<_, gencheb::Error>>()?,
    })
}

#[derive(Serialize)]
struct Detected {
    bhat: Vec<f64>,
    band_charges: Vec<f64>,
    k_coeffs: Vec<f64>,
    period_found: bool,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct Built {
    K: usize,
    DeltaK: f64,
    M_coeffs: Vec<f64>,
    Bhat: Vec<f64>,
    l_K: f64,
    constraints: Vec<gencheb::mapping::ConstraintCheck>,
}

fn family_of(k: usize, variant: Variant, alpha: Option<f64>, beta: Option<f64>) -> Result<Family, CliError> {
    let alpha = alpha.ok_or_else(|| CliError::Usage("--alpha is required with --variant".into()))?;
    let family = match (k, variant) {
        (2, Variant::Symmetric) => Family::Period2 { alpha },
        (3, Variant::General) => Family::Period3 {
            alpha1: alpha,
            beta1: beta.ok_or_else(|| CliError::Usage("--beta is required for the general variant".into()))?,
        },
        (3, Variant::Mirror) => Family::Period3Symmetric { alpha },
        (3, Variant::ClosedRight) => Family::Period3ClosedRight { alpha },
        (3, Variant::ClosedLeft) => Family::Period3ClosedLeft { alpha },
        _ => return Err(CliError::Usage(format!("variant {variant:?} is not a period-{k} family"))),
    };
    Ok(family)
}

fn map(action: MapAction) -> Result<(), CliError> {
    match action {
        MapAction::Detect { common, kmax } => {
            let cfg = load_config(common.config.as_deref())?;
            let ch = equilibrium_charges(&cfg)?;
            let tol = common.tol.unwrap_or(DEFAULT_PERIOD_TOL);
            let k = detect_period(&ch.bhat, kmax, tol);
            let out = Detected {
                band_charges: ch.band_charges(),
                bhat: ch.bhat,
                k_coeffs: ch.k_coeffs,
                period_found: k.is_some(),
                k,
            };
            let inputs = json!({ "config": config_json(&cfg), "kmax": kmax, "tol": tol });
            emit(&Output::Json(RunReport::new("map detect", inputs, out)?), common.out.as_deref())
        }
        MapAction::Build { common, k } => {
            let cfg = load_config(common.config.as_deref())?;
            let k = period_of(&cfg, k)?;
            let t = table(&cfg, k + 2)?;
            let m = build_mapping(&cfg, &t, k)?;
            let bhat = equilibrium_charges(&cfg)?.bhat;
            let checks = m
                .constraints
                .iter()
                .map(|c| Check::bound(c.name.clone(), c.deviation, gencheb::mapping::CONSTRAINT_TOL))
                .collect();
            let out = Built {
                K: k,
                DeltaK: m.delta_k,
                M_coeffs: m.m_coeffs,
                Bhat: bhat,
                l_K: m.l_k,
                constraints: m.constraints,
            };
            let inputs = json!({ "config": config_json(&cfg), "K": k });
            let mut report = RunReport::new("map build", inputs, out)?;
            report.checks = checks;
            emit(&Output::Json(report), common.out.as_deref())
        }
        MapAction::Family { k, variant, alpha, beta, steps, out } => match variant {
            None => {
                let mut t = Table::new(&["alpha", "beta", "K"]);
                for (a, b) in contour_points(k, steps)? {
                    t.push(vec![num(a), num(b), k.to_string()]);
                }
                emit(&Output::Csv(t), out.as_deref())
            }
            Some(v) => {
                let data = periodic_family(family_of(k, v, alpha, beta)?)?;
                let mut inputs = json!({ "K": k, "variant": format!("{v:?}"), "alpha": alpha });
                if let Some(b) = beta {
                    inputs["beta"] = json!(b);
                }
                emit(&Output::Json(RunReport::new("map family", inputs, data)?), out.as_deref())
            }
        },
    }
}

fn band_index(cfg: &BranchConfig, x: f64) -> Option<usize> {
    cfg.bands().iter().position(|&(l, r)| x >= l - BAND_TOL && x <= r + BAND_TOL)
}

fn zeros(cfg: &BranchConfig, n: usize, kind: ZeroKind) -> Result<Table, CliError> {
    let t = table(cfg, n + 1)?;
    let roots = match kind {
        ZeroKind::P => roots_of_pn(&t, n)?,
        ZeroKind::Q => roots_of_qn(&t, n)?,
    };
    let mut out = Table::new(&["root", "band_index"]);
    for r in roots {
        out.push(vec![num(r), band_index(cfg, r).map(|b| b.to_string()).unwrap_or_default()]);
    }
    Ok(out)
}

fn disc(cfg: &BranchConfig, n: usize, method: DiscMethod) -> Result<Table, CliError> {
    let t = table(cfg, n + cfg.genus() + 4)?;
    let aux = AuxSequence::build(cfg, &t, n + 1)?;
    let method = match method {
        DiscMethod::Direct => DiscriminantMethod::Direct,
        DiscMethod::Formula => DiscriminantMethod::FormulaG1,
    };
    let mut out = Table::new(&["n", "D"]);
    for m in 2..=n {
        out.push(vec![m.to_string(), num(discriminant(cfg, &t, &aux, m, method)?)]);
    }
    Ok(out)
}

struct EnvelopeGrid {
    k: usize,
    rows: Vec<(f64, f64, f64)>,
    gammas: Vec<f64>,
}

fn envelope_grid(cfg: &BranchConfig, degree: usize, k: Option<usize>, points: usize) -> Result<EnvelopeGrid, CliError> {
    if points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    let k = period_of(cfg, k)?;
    let (n, j) = (degree / k, degree % k);
    let t = table(cfg, degree + cfg.genus() + 4)?;
    let aux = AuxSequence::build(cfg, &t, degree)?;
    let gammas = aux.pairs[degree].gammas.clone();
    let mut rows = Vec::with_capacity(points * (cfg.genus() + 1));
    for (l, r) in cfg.bands() {
        for i in 0..points {
            let x = l + (r - l) * (i as f64 + 0.5) / points as f64;
            rows.push((x, normalized_polynomial(&t, k, n, j, x)?, envelope(cfg, &gammas, x)?));
        }
    }
    Ok(EnvelopeGrid { k, rows, gammas })
}

fn envelope_report(cfg: &BranchConfig, common: &Common, k: Option<usize>, points: usize) -> Result<RunReport, CliError> {
    let g = envelope_grid(cfg, common.n, k, points)?;
    let excess = g.rows.iter().map(|&(_, p, r)| p.abs() - r).fold(f64::NEG_INFINITY, f64::max);
    let ratio = g.rows.iter().map(|&(_, p, r)| p.abs() / r).fold(0.0, f64::max);
    let tol = common.tol.unwrap_or(1e-8);
    let inputs = json!({ "config": config_json(cfg), "degree": common.n, "K": g.k, "points": points });
    let outputs = json!({
        "K": g.k,
        "n": common.n / g.k,
        "j": common.n % g.k,
        "gammas": g.gammas,
        "max_excess": excess,
        "max_ratio": ratio,
    });
    let mut report = RunReport::new("envelope", inputs, outputs)?;
    report.checks.push(Check::bound("|normalised P| <= envelope", excess.max(0.0), tol));
    Ok(report)
}

fn plot_data(cfg: &BranchConfig, degree: usize, k: Option<usize>, points: usize) -> Result<Table, CliError> {
    let g = envelope_grid(cfg, degree, k, points)?;
    let mut out = Table::new(&["x", "P_hat", "rho", "minus_rho"]);
    for (x, p, r) in g.rows {
        out.push(vec![num(x), num(p), num(r), num(-r)]);
    }
    Ok(out)
}

fn verify(common: &Common, suite: Suite, seed: u64) -> Result<RunReport, CliError> {
    let cfg = match (suite, &common.config) {
        (Suite::Acceptance, _) => None,
        (Suite::All, None) => None,
        _ => Some(load_config(common.config.as_deref())?),
    };
    let mut checks = Vec::new();
    let mut criteria = Vec::new();
    if let Some(cfg) = &cfg {
        checks.extend(config_suite(cfg, common.n).into_iter().map(|mut c| {
            c.name = format!("config: {}", c.name);
            c
        }));
    }
    if suite != Suite::Config {
        for c in acceptance_suite(seed) {
            criteria.push(json!({ "id": c.id, "title": c.title, "pass": c.pass() }));
            let id = c.id;
            checks.extend(c.checks.into_iter().map(|mut k| {
                k.name = format!("criterion {id}: {}", k.name);
                k
            }));
        }
    }
    let inputs = json!({
        "config": cfg.as_ref().map(config_json).unwrap_or_else(|| json!({})),
        "n": common.n,
        "suite": format!("{suite:?}").to_lowercase(),
        "seed": seed,
    });
    let outputs = json!({
        "criteria": criteria,
        "checks_run": checks.len(),
        "checks_failed": checks.iter().filter(|c| !c.pass).count(),
    });
    let mut report = RunReport::new("verify", inputs, outputs)?;
    report.checks = checks;
    Ok(report)
}
