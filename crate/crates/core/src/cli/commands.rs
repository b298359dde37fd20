use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bilayer::{electron_energy, energies, energies_for, k_to_kappa, spinor_state, standard_ordering};
use crate::error::{Error, Result};
use crate::observables::density_profile;
use crate::potentials::PotentialModel;
use crate::susy::MagneticProfile;

use super::config::{Range3, Resolved};
use super::output::{echo_lines, Cell, Table};
use super::verify::run_checks;

pub const UNITS_NOTE: &str = "units: hbar = m* = e/c = 1; B = eta'/2, V2 = V0 + 4B, A = eta/2 - k, E = electron branch (holes at -E)";

/// A finished command: its table, metadata and whether every check passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: Table,
    pub meta: Value,
    pub passed: bool,
}

fn header(command: &str, r: &Resolved) -> Vec<String> {
    let mut h = vec![format!("bilayer-susy {command}"), UNITS_NOTE.to_string()];
    h.extend(echo_lines("config.", &r.config));
    h.push(format!("derived.related = {}", r.related));
    h.push(format!("derived.deleted_levels = {}", json!(r.transform.kind().deleted_levels())));
    if !r.branches.is_empty() {
        h.push(format!("derived.kappa_branches = {}", json!(r.branches)));
    }
    h
}

fn meta(command: &str, r: &Resolved, extra: Value) -> Value {
    json!({
        "command": command,
        "units": UNITS_NOTE,
        "config": r.config,
        "derived": {
            "related": r.related,
            "deleted_levels": r.transform.kind().deleted_levels(),
            "kappa_branches": r.branches,
        },
        "result": extra,
    })
}

/// x, V0, V2, B, A, f_extra on the grid.
pub fn cmd_profile(r: &Resolved) -> Result<Outcome> {
    let p = MagneticProfile::with_free_wavenumber(&r.transform, r.grid, r.k())?;
    let mut t = Table::new(&["x", "V0", "V2", "B", "A", "f_extra"]);
    t.header = header("profile", r);
    t.header.push(format!("derived.c1 = {}", json!(p.c1)));
    t.header.push(format!("derived.c2 = {:?}", p.c2));
    for i in 0..p.x.len() {
        t.push(vec![p.x[i].into(), p.v0[i].into(), p.v2[i].into(), p.b[i].into(), p.a[i].into(), p.f_extra[i].into()]);
    }
    let m = meta("profile", r, json!({ "c1": p.c1, "c2": p.c2, "k": p.k }));
    Ok(Outcome { table: t, meta: m, passed: true })
}

#[derive(Debug, Clone, Serialize)]
struct SweepRow {
    k: f64,
    branch: Option<usize>,
    kappa: Option<f64>,
    physical: Option<bool>,
    levels: Vec<(usize, usize, f64, bool)>,
}

fn levels_for(model: &PotentialModel, r: &Resolved, nmax: usize) -> Result<Vec<(usize, usize, f64, bool)>> {
    let e = energies_for(model, r.transform.kind(), nmax + 1)?;
    let lv: Vec<(usize, f64)> = e.into_iter().enumerate().collect();
    Ok(standard_ordering(&lv).into_iter().map(|o| (o.n_aux, o.m_std, o.energy, o.degenerate_with.is_some())).collect())
}

fn sweep_one(r: &Resolved, k: f64, nmax: usize) -> Result<Vec<SweepRow>> {
    let model = *r.transform.model();
    let absent = |k| vec![SweepRow { k, branch: None, kappa: None, physical: None, levels: Vec::new() }];
    if !r.related {
        return Ok(vec![SweepRow { k, branch: None, kappa: Some(model.kappa()), physical: None, levels: levels_for(&model, r, nmax)? }]);
    }
    let branches = match k_to_kappa(&model, r.transform.kind(), k) {
        Ok(b) => b,
        Err(Error::NoBranch { .. }) => return Ok(absent(k)),
        Err(e) => return Err(e),
    };
    let mut rows = Vec::new();
    for (i, b) in branches.iter().enumerate() {
        let levels = match model.with_kappa(b.kappa) {
            Ok(m) => levels_for(&m, r, nmax)?,
            Err(_) => Vec::new(),
        };
        rows.push(SweepRow { k, branch: Some(i), kappa: Some(b.kappa), physical: Some(b.physical), levels });
    }
    Ok(rows)
}

/// Energies against k: one row per (k, κ branch, level); k values without a real κ give one
/// row with present = 0.
pub fn cmd_spectrum(r: &Resolved) -> Result<Outcome> {
    let sweep = r.config.ksweep.unwrap_or(Range3 { min: -2.0, max: 2.0, n: 9 });
    if sweep.n == 0 || !(sweep.min <= sweep.max) {
        return Err(Error::InvalidArgument(format!("bad k sweep {sweep}")));
    }
    let nmax = r.config.nmax.unwrap_or(6);
    let ks: Vec<f64> = (0..sweep.n)
        .map(|i| if sweep.n == 1 { sweep.min } else { sweep.min + (sweep.max - sweep.min) * i as f64 / (sweep.n - 1) as f64 })
        .collect();
    // Worker results are collected in k order, so output is deterministic.
    let rows: Vec<Vec<SweepRow>> = ks.par_iter().map(|&k| sweep_one(r, k, nmax)).collect::<Result<_>>()?;
    let mut t = Table::new(&["k", "branch", "kappa", "physical", "n_aux", "m_std", "E", "degenerate", "present"]);
    t.header = header("spectrum", r);
    t.header.push(format!("derived.ksweep = {sweep}"));
    let opt = |v: Option<f64>| v.map_or(Cell::Empty, Cell::Float);
    let mut absent = 0usize;
    for row in rows.iter().flatten() {
        let lead = vec![
            Cell::Float(row.k),
            row.branch.map_or(Cell::Empty, Cell::from),
            opt(row.kappa),
            row.physical.map_or(Cell::Empty, Cell::from),
        ];
        if row.levels.is_empty() {
            absent += 1;
            let mut c = lead;
            c.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty, Cell::Int(0)]);
            t.push(c);
            continue;
        }
        for &(n, m, e, deg) in &row.levels {
            let mut c = lead.clone();
            c.extend([Cell::from(n), Cell::from(m), Cell::Float(e), Cell::from(deg), Cell::Int(1)]);
            t.push(c);
        }
    }
    let m = meta("spectrum", r, json!({ "ksweep": sweep, "nmax": nmax, "absent_rows": absent }));
    Ok(Outcome { table: t, meta: m, passed: true })
}

/// x, psi0, psi2, rho, Jx, Jy for level n (components carry the 1/√2 of two-component states).
pub fn cmd_state(r: &Resolved) -> Result<Outcome> {
    let n = r.config.n.unwrap_or(0);
    let t = &r.transform;
    t.model().check_level(n)?;
    let profile = MagneticProfile::with_free_wavenumber(t, r.grid, r.k())?;
    let mut s = spinor_state(t, n, profile.k, &r.grid)?;
    let nmax = r.config.nmax.unwrap_or(6).max(n);
    let e = energies(t, nmax + 1)?;
    let order = standard_ordering(&e.iter().copied().enumerate().collect::<Vec<_>>());
    if let Some(o) = order.iter().find(|o| o.n_aux == n) {
        s.m_std = o.m_std;
        s.degenerate_with = o.degenerate_with;
    }
    let a = profile.sampled(&profile.a)?;
    let d = density_profile(&s, &a)?;
    let mut tab = Table::new(&["x", "psi0", "psi2", "rho", "Jx", "Jy"]);
    tab.header = header("state", r);
    tab.header.push(format!(
        "derived.state = {}",
        json!({ "n_aux": n, "m_std": s.m_std, "energy": s.energy, "two_component": s.two_component, "sigma": s.sigma, "degenerate_with": s.degenerate_with })
    ));
    for i in 0..d.x.len() {
        tab.push(vec![d.x[i].into(), s.lower[i].into(), s.upper[i].into(), d.rho[i].into(), d.jx[i].into(), d.jy[i].into()]);
    }
    let m = meta(
        "state",
        r,
        json!({ "n_aux": n, "m_std": s.m_std, "energy": electron_energy(t, n)?, "two_component": s.two_component, "sigma": s.sigma, "degenerate_with": s.degenerate_with }),
    );
    Ok(Outcome { table: tab, meta: m, passed: true })
}

/// Invariant report: check, measured, tol, pass.
pub fn cmd_verify(r: &Resolved) -> Result<Outcome> {
    let checks = run_checks(r)?;
    let mut t = Table::new(&["check", "measured", "tol", "pass"]);
    t.header = header("verify", r);
    for c in &checks {
        t.push(vec![Cell::Text(c.name.clone()), Cell::Float(c.measured), Cell::Float(c.tol), Cell::from(c.pass)]);
    }
    let passed = checks.iter().all(|c| c.pass);
    let m = meta("verify", r, json!({ "checks": checks, "all_pass": passed }));
    Ok(Outcome { table: t, meta: m, passed })
}
