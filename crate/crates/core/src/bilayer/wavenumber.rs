use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{derivative5, Grid};
use crate::potentials::{Family, PotentialModel};
use crate::susy::gauge::eta_constant;
use crate::susy::{MagneticProfile, SusyTransform, TransformKind};

use super::energy::energies_for;

/// Half-width of the κ search window.
pub const KAPPA_SEARCH_LIMIT: f64 = 1e3;
const SCAN_POINTS: usize = 8001;
const ROOT_TOL: f64 = 1e-15;

/// One real solution κ of k(κ) = k.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KappaBranch {
    pub kappa: f64,
    /// 2 for a tangential (double) root.
    pub multiplicity: u8,
    /// Lowest non-zero electron energy is locally convex in k along this branch.
    pub physical: bool,
}

/// κ ↔ k link for one transform: k = (C₁ − C₂)/2.
#[derive(Debug, Clone, Serialize)]
pub struct WavenumberRelation {
    pub c1: f64,
    pub c2: f64,
    pub k: f64,
    pub kappa: f64,
    /// Standard deviation of (η − 2A)/2 over the interior.
    pub constancy_std: f64,
    /// Rational closed form where one is known.
    pub closed_form: Option<f64>,
    pub branches: Vec<KappaBranch>,
}

/// Constancy tolerance for (η − 2A)/2.
pub fn constancy_tolerance(k: f64) -> f64 {
    1e-8 * (1.0 + k.abs())
}

/// Rational k(κ) for the cases with a known closed form.
pub fn closed_form_k(model: &PotentialModel, kind: TransformKind) -> Option<f64> {
    let (d, a, k) = (model.d(), model.alpha(), model.kappa());
    match (model.family(), kind) {
        (Family::ShiftedHo, TransformKind::Consecutive { .. }) => Some(k),
        (Family::ShiftedHo, TransformKind::Confluent { w0, .. }) if w0 == 0.0 => Some(k),
        (Family::TrigRm, TransformKind::Consecutive { j: 1 }) => {
            let p = (d + a) * (d + 2.0 * a);
            Some(k * (2.0 * d + 3.0 * a) / (2.0 * p) * ((d + a) * (d + 2.0 * a).powi(2) - d * k * k) / (p - k * k))
        }
        (Family::HypRm, TransformKind::Consecutive { j: 1 }) => {
            let num = (2.0 * d - 3.0 * a) * (d * k.powi(3) + k * (d.powi(3) - 5.0 * a * d * d + 8.0 * a * a * d - 4.0 * a.powi(3)));
            let den = 2.0 * (d - 2.0 * a) * (d - a) * (k * k + d * d - 3.0 * a * d + 2.0 * a * a);
            Some(num / den)
        }
        (Family::TrigRm, TransformKind::Confluent { j: 0, .. }) if (2.0 * model.s() - (2.0 * model.s()).round()).abs() < 1e-12 => {
            Some(k + d * d / k)
        }
        _ => None,
    }
}

/// k as a function of κ for a fixed family and transform shape; errors outside the admissible range.
pub fn k_of_kappa(model: &PotentialModel, kind: TransformKind, kappa: f64) -> Result<f64> {
    let m = model.with_kappa(kappa)?;
    // The seed levels must exist; the transform itself is not needed for C₁.
    match kind {
        TransformKind::Consecutive { j } => m.check_level(j + 1)?,
        TransformKind::Confluent { j, .. } => m.check_level(j)?,
    }
    match closed_form_k(&m, kind) {
        Some(k) => Ok(k),
        None => Ok(0.5 * eta_constant(&m, kind)?),
    }
}

/// Numerical κ → k: reads (η − 2A)/2 off a sampled profile and checks that it is constant.
pub fn kappa_to_k(t: &SusyTransform, grid: &Grid) -> Result<WavenumberRelation> {
    let profile = MagneticProfile::new(t, *grid)?;
    let c1 = profile.c1.ok_or(Error::Unrelated)?;
    let (mean, std) = profile.gauge_constancy();
    let tol = constancy_tolerance(mean);
    if !(std < tol) {
        return Err(Error::RelationInconsistent { std, tol });
    }
    let closed_form = closed_form_k(t.model(), t.kind());
    if let Some(kc) = closed_form {
        let dev = (kc - mean).abs();
        if !(dev < 1e-6 * (1.0 + kc.abs())) {
            return Err(Error::RelationInconsistent { std: dev, tol: 1e-6 * (1.0 + kc.abs()) });
        }
    }
    Ok(WavenumberRelation { c1, c2: profile.c2, k: mean, kappa: t.model().kappa(), constancy_std: std, closed_form, branches: Vec::new() })
}

/// All real κ with k(κ) = k in [−10³, 10³], including tangential roots.
pub fn k_to_kappa(model: &PotentialModel, kind: TransformKind, k: f64) -> Result<Vec<KappaBranch>> {
    // Probe relatedness once at the model's own κ (or any admissible one).
    match k_of_kappa(model, kind, model.kappa()) {
        Err(Error::Unrelated) => return Err(Error::Unrelated),
        _ => {}
    }
    let f = |kap: f64| k_of_kappa(model, kind, kap).map(|v| v - k).unwrap_or(f64::NAN);
    // asinh-spaced samples: fine near κ = 0, coarse far out.
    let umax = KAPPA_SEARCH_LIMIT.asinh();
    let kap: Vec<f64> = (0..SCAN_POINTS).map(|i| (-umax + 2.0 * umax * i as f64 / (SCAN_POINTS - 1) as f64).sinh()).collect();
    let vals: Vec<f64> = kap.iter().map(|&x| f(x)).collect();
    let scale = 1.0 + k.abs();
    let mut roots: Vec<(f64, u8)> = Vec::new();
    for i in 0..SCAN_POINTS - 1 {
        let (a, b, fa, fb) = (kap[i], kap[i + 1], vals[i], vals[i + 1]);
        if !(fa.is_finite() && fb.is_finite()) {
            continue;
        }
        if fa == 0.0 {
            roots.push((a, 1));
            continue;
        }
        if fa * fb < 0.0 {
            let r = bisect(&f, a, b, fa);
            // A sign change across a pole does not shrink |f|.
            if f(r).abs() < 1e-6 * scale {
                roots.push((r, 1));
            }
        }
    }
    // Tangential roots: interior extrema of f that touch zero.
    for i in 1..SCAN_POINTS - 1 {
        let (fl, fc, fr) = (vals[i - 1], vals[i], vals[i + 1]);
        if !(fl.is_finite() && fc.is_finite() && fr.is_finite()) {
            continue;
        }
        let extremum = (fc - fl) * (fr - fc) <= 0.0;
        if !extremum || fc.abs() > 1e-2 * scale || fl * fr < 0.0 {
            continue;
        }
        let step = |x: f64| 1e-5 * (1.0 + x.abs());
        let df = |x: f64| derivative5(&f, x, step(x), 1);
        let (a, b) = (kap[i - 1], kap[i + 1]);
        let (da, db) = (df(a), df(b));
        if !(da * db <= 0.0) {
            continue;
        }
        let r = bisect(&df, a, b, da);
        if f(r).abs() < 1e-8 * scale && !roots.iter().any(|(x, _)| (x - r).abs() < 1e-6 * (1.0 + r.abs())) {
            roots.push((r, 2));
        }
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    roots.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 * (1.0 + a.0.abs()));
    if roots.is_empty() {
        return Err(Error::NoBranch { k });
    }
    Ok(roots.into_iter().map(|(kappa, multiplicity)| KappaBranch { kappa, multiplicity, physical: is_physical(model, kind, k, kappa) }).collect())
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() < ROOT_TOL * (1.0 + m.abs()) {
            return m;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Follows a branch to a nearby k by Newton iteration from κ₀.
fn follow_branch(model: &PotentialModel, kind: TransformKind, k: f64, kappa0: f64) -> Option<f64> {
    let g = |kap: f64| k_of_kappa(model, kind, kap).map(|v| v - k).unwrap_or(f64::NAN);
    let mut x = kappa0;
    for _ in 0..60 {
        let gx = g(x);
        if !gx.is_finite() {
            return None;
        }
        if gx.abs() < 1e-13 * (1.0 + k.abs()) {
            return Some(x);
        }
        let d = derivative5(&g, x, 1e-6 * (1.0 + x.abs()), 1);
        if !(d.is_finite() && d != 0.0) {
            return None;
        }
        let next = x - gx / d;
        if (next - x).abs() < 1e-14 * (1.0 + x.abs()) {
            return Some(next);
        }
        x = next;
    }
    (g(x).abs() < 1e-9 * (1.0 + k.abs())).then_some(x)
}

/// Lowest non-zero electron energy for a given κ.
pub fn lowest_nonzero_energy(model: &PotentialModel, kind: TransformKind, kappa: f64) -> Option<f64> {
    let e = energies_for(&model.with_kappa(kappa).ok()?, kind, 12).ok()?;
    e.into_iter().filter(|&v| v > 1e-9).min_by(|a, b| a.total_cmp(b))
}

/// Five-point stencil in k: no second difference of E(k) along the branch is negative
/// (k-independent spectra count as physical).
fn is_physical(model: &PotentialModel, kind: TransformKind, k: f64, kappa: f64) -> bool {
    let h = 1e-2 * (1.0 + k.abs());
    let mut e = [0.0; 5];
    for (i, m) in (-2i32..=2).enumerate() {
        let km = k + m as f64 * h;
        let Some(kap) = follow_branch(model, kind, km, kappa) else { return false };
        let Some(v) = lowest_nonzero_energy(model, kind, kap) else { return false };
        e[i] = v;
    }
    let tol = 1e-10 * (1.0 + e[2].abs());
    (1..4).all(|i| e[i - 1] - 2.0 * e[i] + e[i + 1] > -tol)
}
