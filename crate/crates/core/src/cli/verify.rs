//! The invariant suite behind `verify`.

use serde::Serialize;

use crate::bilayer::{electron_energy, electron_energy_closed_form, kappa_to_k, Spinor};
use crate::error::{Error, Result};
use crate::numerics::{fd_spectrum, integrate, Grid};
use crate::observables::{continuity_residual, current_density, norm};
use crate::susy::{closed_forms, Direction, MagneticProfile, SusyTransform};

use super::config::Resolved;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tol: f64,
    pub pass: bool,
}

struct Suite {
    checks: Vec<Check>,
    tol_override: Option<f64>,
}

impl Suite {
    fn add(&mut self, name: &str, measured: f64, default_tol: f64) {
        let tol = self.tol_override.unwrap_or(default_tol);
        // NaN never passes.
        let pass = measured <= tol;
        self.checks.push(Check { name: name.to_string(), measured, tol, pass });
    }
}

/// Points strictly inside the grid, away from the outer 5 % on each side.
pub fn interior_points(grid: &Grid, count: usize) -> Vec<f64> {
    let (a, b) = (grid.x_min(), grid.x_max());
    let (a, b) = (a + 0.05 * (b - a), b - 0.05 * (b - a));
    (0..count).map(|i| a + (b - a) * (i as f64 + 0.5) / count as f64).collect()
}

fn levels(t: &SusyTransform, nmax: usize) -> Vec<usize> {
    let cap = t.model().bound_state_count().map_or(nmax + 1, |c| c.min(nmax + 1));
    (0..cap).collect()
}

/// Maximum relative error of L₂⁺L₂⁻ψ_n against (E_n − ε₁)(E_n − ε₂)ψ_n; for deleted levels
/// |L₂⁻ψ_n| relative to max|ψ_n|.
pub fn factorization_error(t: &SusyTransform, n: usize, points: &[f64]) -> Result<f64> {
    let st = t.model().eigenstate(n)?;
    let factor = (st.energy - t.eps1()) * (st.energy - t.eps2());
    let peak = points.iter().map(|&x| st.value(x).abs()).fold(0.0, f64::max);
    let mut worst: f64 = 0.0;
    for &x in points {
        let psi = st.value(x);
        if psi.abs() <= 1e-8 {
            continue;
        }
        let img = t.l2_minus_jet(&st, x);
        let err = if factor == 0.0 {
            img[0].abs() / peak
        } else {
            (t.apply_l2_at(Direction::Plus, x, img) - factor * psi).abs() / (factor * psi).abs()
        };
        worst = worst.max(err);
    }
    Ok(worst)
}

/// Lowest eigenvalues expected for V₂: those of V₀ without the deleted levels.
pub fn expected_partner_levels(t: &SusyTransform, count: usize) -> Result<Vec<f64>> {
    let deleted = t.kind().deleted_levels();
    let avail = t.model().bound_state_count().unwrap_or(count + deleted.len());
    (0..avail).filter(|n| !deleted.contains(n)).take(count).map(|n| t.model().eigenvalue(n)).collect()
}

pub fn run_checks(r: &Resolved) -> Result<Vec<Check>> {
    let t = &r.transform;
    let m = t.model();
    let g = r.grid;
    let nmax = r.config.nmax.unwrap_or(6);
    let mut s = Suite { checks: Vec::new(), tol_override: r.config.tol };
    let pts = interior_points(&g, 100);

    let mut fac: f64 = 0.0;
    for n in levels(t, nmax) {
        fac = fac.max(factorization_error(t, n, &pts)?);
    }
    s.add("factorization", fac, 1e-6);

    let mut rec: f64 = 0.0;
    for &x in &pts {
        let v = m.potential_unchecked(x);
        match t.reconstruct_v0(x) {
            Ok(r0) => rec = rec.max((r0 - v).abs() / (1.0 + v.abs())),
            Err(Error::SingularPoint { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    s.add("v0_reconstruction", rec, 1e-6);

    let p = MagneticProfile::with_free_wavenumber(t, g, r.k())?;
    let v2_identity = (0..p.x.len()).map(|i| (p.v2[i] - p.v0[i] - 4.0 * p.b[i]).abs() / (1.0 + p.v0[i].abs())).fold(0.0, f64::max);
    s.add("v2_equals_v0_plus_4b", v2_identity, 1e-12);

    if let Ok(_) = closed_forms::field(t, pts[0]) {
        let mut worst: f64 = 0.0;
        for &x in &pts {
            // The explicit confluent forms lose all digits where |w| is tiny.
            if t.kind().is_confluent() && t.w(x).is_some_and(|w| w.abs() < 1e-4) {
                continue;
            }
            let c = closed_forms::field(t, x)?;
            worst = worst.max((t.b_field(x) - c).abs() / (1.0 + c.abs()));
        }
        s.add("field_closed_form", worst, 1e-6);
    }
    if t.kind().is_confluent() {
        let mut worst: f64 = 0.0;
        let mut available = true;
        for x in interior_points(&g, 50) {
            match closed_forms::w_integral(m, t.j(), x) {
                Ok(c) => worst = worst.max((t.seed_mass(x).unwrap_or(f64::NAN) - c).abs()),
                Err(Error::ClosedFormUnavailable(_)) | Err(Error::ConvergenceFailure(_)) => {
                    available = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if available {
            s.add("w_closed_form", worst, 1e-7);
        }
    }

    if r.related {
        let rel = kappa_to_k(t, &g)?;
        s.add("gauge_constancy", rel.constancy_std / (1.0 + rel.k.abs()), 1e-8);
    }

    let count = 4usize;
    let expected = expected_partner_levels(t, count)?;
    if !expected.is_empty() {
        let v2 = p.sampled(&p.v2)?;
        let oracle = fd_spectrum(&v2, expected.len())?;
        let dev = expected.iter().zip(&oracle.eigenvalues).map(|(e, o)| (e - o).abs() / (1.0 + e.abs())).fold(0.0, f64::max);
        s.add("partner_spectrum_oracle", dev, 5e-3);
    }

    let a = p.sampled(&p.a)?;
    let (mut coupled, mut upper_norm, mut dens, mut jx_max, mut cont, mut closed) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for n in levels(t, nmax.min(5)) {
        let sp = Spinor::new(t, n)?;
        let (lo, hi) = m.support(n);
        let (dlo, dhi) = m.domain();
        let (lo, hi) = (lo.max(dlo), hi.min(dhi));
        let mut amp: f64 = 0.0;
        let mut res: f64 = 0.0;
        for &x in &pts {
            let (r1, r2) = sp.coupled_residuals(x);
            amp = amp.max(sp.state.value(x).abs()).max(sp.upper_jet(x)[0].abs());
            res = res.max(r1.abs());
            if sp.two_component() {
                res = res.max(r2.abs());
            }
        }
        coupled = coupled.max(res / amp);
        if sp.two_component() {
            let nu = integrate(|x| sp.upper_jet(x)[0].powi(2), lo, hi, 1e-11)?;
            upper_norm = upper_norm.max((nu - 1.0).abs());
        }
        let st = crate::bilayer::spinor_state(t, n, p.k, &g)?;
        dens = dens.max((norm(&st)? - 1.0).abs());
        let (jx, jy) = current_density(&st, &a, true)?;
        jx_max = jx_max.max(jx.iter().fold(0.0, |m: f64, v| m.max(v.abs())));
        let jy_max = jy.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
        let c = continuity_residual(&st, &a)?;
        if jy_max > 0.0 {
            cont = cont.max(c / jy_max);
        }
        if let Ok(cf) = electron_energy_closed_form(t, n) {
            let e = electron_energy(t, n)?;
            closed = closed.max((e - cf).abs() / (1.0 + cf.abs()));
        }
    }
    s.add("coupled_equations", coupled, 1e-5);
    s.add("upper_component_norm", upper_norm, 1e-6);
    s.add("density_norm", dens, 1e-6);
    s.add("jx_vanishes", jx_max, 1e-8);
    s.add("continuity", cont, 1e-5);
    s.add("energy_closed_form", closed, 1e-12);
    Ok(s.checks)
}
