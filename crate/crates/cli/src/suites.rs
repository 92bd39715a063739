//! Verification suites: each configured claim becomes one [`Claim`].

use qzeta_core::approximants::{build_row_with, extralemma_identity, residuals, scaled_numerators};
use qzeta_core::independence::{
    is_prime, jonathan_congruence, legendre_divisor_check, step1_congruence, step3_nondivisibility,
    verify_condition1, Abc, LegendreStatus,
};
use qzeta_core::qjacobi::{build_checked, build_pochhammer, count_roots_in_unit_interval, verify_orthogonality};
use qzeta_core::zeta::within_bound;
use qzeta_core::{CycloTable, QContext};
use rayon::prelude::*;

use crate::report::{Claim, Depth, RunConfig, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Orthogonality,
    Representations,
    Bounds,
    Extralemma,
    Congruence,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub p: Vec<u64>,
    pub n_max: u32,
    pub abc_bound: i64,
}

pub const NOTES: [&str; 4] = [
    "the zeta_q(1) residual is beta_n zeta_q(1) - alpha_n; a statement of it with zeta_q(2) in place of zeta_q(1) is read as a misprint",
    "condition 1 requires 2n-1 > max(|a|, |b|, |c|), stricter than 2n-1 > c",
    "condition 1 reduces modulo Phi_M(p) when c != 0, modulo d_M(p) Phi_M(p) when c = 0 and b != 0, and tests a p* itself when only a != 0",
    "the [n+2m m] = 1 (mod Phi_(n+m)) congruence is checked for n >= 1 only; it fails for n = 0, m >= 1",
];

fn claim(id: &str, params: String, outcome: qzeta_core::Result<(bool, String)>) -> Claim {
    let (status, detail) = match outcome {
        Ok((true, d)) => (Status::Pass, d),
        Ok((false, d)) => (Status::Fail, d),
        Err(e) => (Status::Fail, e.to_string()),
    };
    Claim { claim_id: id.into(), params, status, detail }
}

fn triples(ps: &[u64], n_min: u32, n_max: u32, strict: bool) -> Vec<(u64, u32, u32)> {
    let mut out = Vec::new();
    for &p in ps {
        for n in n_min..=n_max {
            let top = if strict { n.checked_sub(1) } else { Some(n) };
            out.extend(top.into_iter().flat_map(|t| (0..=t).map(move |m| (p, n, m))));
        }
    }
    out
}

fn ctx(p: u64) -> qzeta_core::Result<QContext> {
    QContext::new(p)
}

fn orthogonality(cfg: &Config) -> Vec<Claim> {
    triples(&cfg.p, 0, cfg.n_max, false)
        .into_par_iter()
        .map(|(p, n, m)| {
            let out = ctx(p).and_then(|c| build_pochhammer(n, m, &c)).map(|poly| (verify_orthogonality(&poly), String::new()));
            claim("orthogonality", format!("p={p},n={n},m={m}"), out)
        })
        .collect()
}

fn representations(cfg: &Config) -> Vec<Claim> {
    let table = CycloTable::up_to(2 * cfg.n_max.max(1) as usize);
    triples(&cfg.p, 0, cfg.n_max, false)
        .into_par_iter()
        .flat_map_iter(|(p, n, m)| {
            let params = format!("p={p},n={n},m={m}");
            let c = ctx(p);
            let triple = c.clone().and_then(|c| build_checked(n, m, &c));
            let roots = triple.as_ref().map_err(Clone::clone).and_then(|poly| {
                let count = count_roots_in_unit_interval(poly)?;
                Ok((count == (n + m) as usize, format!("{count} simple roots in (0,1)")))
            });
            let integral = match (&c, &table) {
                (Ok(c), Ok(t)) => scaled_numerators(n, m, c, t).map(|_| (true, String::new())),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            [
                claim("triple-representation", params.clone(), triple.map(|_| (true, String::new()))),
                claim("root-localization", params.clone(), roots),
                claim("numerator-integrality", params, integral),
            ]
        })
        .collect()
}

fn bounds(cfg: &Config, depths: &mut Vec<Depth>) -> Vec<Claim> {
    let table = match CycloTable::up_to(2 * cfg.n_max.max(1) as usize) {
        Ok(t) => t,
        Err(e) => return vec![claim("bounds", String::new(), Err(e))],
    };
    let jobs: Vec<(u64, u32)> = cfg.p.iter().flat_map(|&p| (1..=cfg.n_max).map(move |n| (p, n))).collect();
    let per_row: Vec<(Vec<Claim>, Option<Depth>)> = jobs
        .into_par_iter()
        .map(|(p, n)| {
            let params = format!("p={p},n={n}");
            let row = match ctx(p).and_then(|c| build_row_with(n, &c, &table)) {
                Ok(r) => r,
                Err(e) => return (vec![claim("integrality", params, Err(e))], None),
            };
            let mut claims = vec![claim("integrality", params.clone(), Ok((true, String::new())))];
            match residuals(&row) {
                Ok(r) => {
                    claims.push(claim(
                        "residual-bound-zeta1",
                        params.clone(),
                        Ok((within_bound(&r.res1, &row.residual_bound1), format!("{}", r.res1))),
                    ));
                    claims.push(claim(
                        "residual-bound-zeta2",
                        params.clone(),
                        Ok((within_bound(&r.res2, &row.residual_bound2), format!("{}", r.res2))),
                    ));
                    claims.push(claim(
                        "nonvanishing",
                        params,
                        Ok((!r.res1.contains_zero() && !r.res2.contains_zero(), String::new())),
                    ));
                    (claims, Some(Depth { p, n, depth: r.depth }))
                }
                Err(e) => {
                    for id in ["residual-bound-zeta1", "residual-bound-zeta2", "nonvanishing"] {
                        claims.push(claim(id, params.clone(), Err(e.clone())));
                    }
                    (claims, None)
                }
            }
        })
        .collect();
    let mut out = Vec::new();
    for (claims, depth) in per_row {
        out.extend(claims);
        depths.extend(depth);
    }
    out
}

fn extralemma(cfg: &Config) -> Vec<Claim> {
    triples(&cfg.p, 1, cfg.n_max, true)
        .into_par_iter()
        .map(|(p, n, m)| {
            let out = ctx(p).and_then(|c| extralemma_identity(n, m, &c)).map(|ok| (ok, String::new()));
            claim("extralemma", format!("p={p},n={n},m={m}"), out)
        })
        .collect()
}

fn congruence(cfg: &Config) -> Vec<Claim> {
    let top = (2 * cfg.n_max).saturating_sub(1).max(1);
    let mut out: Vec<Claim> = (1..=top)
        .flat_map(|n| (0..=top - n).map(move |m| (n, m)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, m)| {
            let out = jonathan_congruence(n, m).map(|ok| (ok, String::new()));
            claim("jonathan", format!("n={n},m={m}"), out)
        })
        .collect();

    let table = CycloTable::up_to(top as usize);
    for &p in &cfg.p {
        for n in 1..=top {
            let params = format!("p={p},n={n}");
            let status = legendre_divisor_check(n, p);
            out.push(match status {
                Ok(LegendreStatus::NotAttempted) => Claim {
                    claim_id: "legendre".into(),
                    params,
                    status: Status::NotAttempted,
                    detail: "Phi_n(p) above the trial-division limit".into(),
                },
                Ok(LegendreStatus::Violated(s)) => claim("legendre", params, Ok((false, format!("prime divisor {s}")))),
                Ok(LegendreStatus::Holds) => claim("legendre", params, Ok((true, String::new()))),
                Err(e) => claim("legendre", params, Err(e)),
            });
        }
    }

    for &p in &cfg.p {
        let rows: Vec<_> = (1..=cfg.n_max)
            .filter(|n| is_prime(u64::from(2 * n - 1)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|n| {
                let t = table.as_ref().map_err(Clone::clone)?;
                build_row_with(n, &ctx(p)?, t)
            })
            .collect();
        for (n, row) in (1..=cfg.n_max).filter(|n| is_prime(u64::from(2 * n - 1))).zip(rows) {
            let params = format!("p={p},n={n}");
            let row = match row {
                Ok(r) => r,
                Err(e) => {
                    for id in ["step1", "step3", "condition1"] {
                        out.push(claim(id, params.clone(), Err(e.clone())));
                    }
                    continue;
                }
            };
            let grid: Vec<Abc> = Abc::grid(cfg.abc_bound.max(0)).chain([Abc(0, 0, 0)]).collect();
            let step1 = grid
                .iter()
                .try_fold(0usize, |bad, &abc| Ok::<_, qzeta_core::Error>(bad + usize::from(!step1_congruence(&row, abc)?)))
                .map(|bad| (bad == 0, format!("{} triples, {bad} failures", grid.len())));
            out.push(claim("step1", params.clone(), step1));
            out.push(claim(
                "step3",
                params.clone(),
                step3_nondivisibility(n, p).map(|ok| (ok, String::new())),
            ));
            // rows with 2n - 1 <= bound lie outside the grid's hypothesis
            if i64::from(2 * n - 1) > cfg.abc_bound {
                out.push(match verify_condition1(std::slice::from_ref(&row), cfg.abc_bound) {
                    Ok(report) => {
                        let bad = report.failures().count();
                        let detail = format!("{} triples, {bad} failures", report.witnesses.len());
                        claim("condition1", params, Ok((bad == 0 && report.skipped.is_empty(), detail)))
                    }
                    Err(e) => claim("condition1", params, Err(e)),
                });
            }
        }
    }
    out
}

/// Runs `suite` (all of them for [`Suite::All`]) and collects the report.
pub fn run(suite: Suite, cfg: &Config) -> VerificationReport {
    let mut depths = Vec::new();
    let mut claims = Vec::new();
    let wanted = |s: Suite| suite == s || suite == Suite::All;
    if wanted(Suite::Orthogonality) {
        claims.extend(orthogonality(cfg));
    }
    if wanted(Suite::Representations) {
        claims.extend(representations(cfg));
    }
    if wanted(Suite::Bounds) {
        claims.extend(bounds(cfg, &mut depths));
    }
    if wanted(Suite::Extralemma) {
        claims.extend(extralemma(cfg));
    }
    if wanted(Suite::Congruence) {
        claims.extend(congruence(cfg));
    }
    let run_config = RunConfig { p: cfg.p.clone(), n_max: cfg.n_max, abc_bound: cfg.abc_bound, depths };
    VerificationReport::new(run_config, claims, NOTES.iter().map(|s| s.to_string()).collect())
}
