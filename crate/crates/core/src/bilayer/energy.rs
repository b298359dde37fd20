use crate::error::{Error, Result};
use crate::potentials::{Family, PotentialModel};
use crate::susy::{SusyTransform, TransformKind};

/// Electron energy (natural units, electron branch E ≥ 0):
/// √(Δ_{n,j}Δ_{n,j+1})/2 for consecutive levels, |Δ_{n,j}|/2 for the confluent algorithm.
pub fn electron_energy(t: &SusyTransform, n: usize) -> Result<f64> {
    electron_energy_for(t.model(), t.kind(), n)
}

/// As `electron_energy`, from the model and transform shape alone (no seed tables are built).
pub fn electron_energy_for(model: &PotentialModel, kind: TransformKind, n: usize) -> Result<f64> {
    let delta = |m: usize| -> Result<f64> { Ok(model.eigenvalue(n)? - model.eigenvalue(m)?) };
    let j = kind.j();
    match kind {
        TransformKind::Consecutive { .. } => {
            let p = delta(j)? * delta(j + 1)?;
            // Both factors share a sign; clamp rounding noise at the deleted levels.
            Ok(0.5 * p.max(0.0).sqrt())
        }
        TransformKind::Confluent { .. } => Ok(0.5 * delta(j)?.abs()),
    }
}

/// Per-family specializations of the energy formula, evaluated independently of `electron_energy`.
pub fn electron_energy_closed_form(t: &SusyTransform, n: usize) -> Result<f64> {
    let m = t.model();
    m.check_level(n)?;
    let (d, a, k) = (m.d(), m.alpha(), m.kappa());
    let nf = n as f64;
    let j = t.j();
    let jf = j as f64;
    match (t.kind(), m.family()) {
        (TransformKind::Consecutive { .. }, Family::ShiftedHo) => Ok(0.5 * m.omega() * ((nf - jf) * (nf - jf - 1.0)).max(0.0).sqrt()),
        (TransformKind::Consecutive { j: 1 }, Family::TrigRm) => {
            let d1 = d * d * k * k * (1.0 / (d + a).powi(2) - 1.0 / (d + a * nf).powi(2)) + (nf - 1.0) * (2.0 * d + (nf + 1.0) * a) * a;
            let d2 = d * d * k * k * (1.0 / (d + 2.0 * a).powi(2) - 1.0 / (d + a * nf).powi(2)) + (nf - 2.0) * (2.0 * d + (nf + 2.0) * a) * a;
            Ok(0.5 * (d1 * d2).max(0.0).sqrt())
        }
        (TransformKind::Consecutive { j: 1 }, Family::HypRm) => {
            let d1 = d * d * k * k * (1.0 / (d - a).powi(2) - 1.0 / (d - a * nf).powi(2)) + a * (nf - 1.0) * (2.0 * d - a * (nf + 1.0));
            let d2 = d * d * k * k * (1.0 / (d - 2.0 * a).powi(2) - 1.0 / (d - a * nf).powi(2)) + a * (nf - 2.0) * (2.0 * d - a * (nf + 2.0));
            Ok(0.5 * (d1 * d2).max(0.0).sqrt())
        }
        (TransformKind::Confluent { .. }, Family::ShiftedHo) => Ok(0.5 * m.omega() * (nf - jf).abs()),
        (TransformKind::Confluent { j: 0, .. }, Family::TrigRm) => {
            Ok(0.5 * (k * k - d * d + (d + nf * a).powi(2) - k * k * d * d / (d + nf * a).powi(2)))
        }
        (TransformKind::Confluent { j: 0, .. }, Family::HypRm) => {
            Ok(0.5 * (d * d + k * k - (d - nf * a).powi(2) - k * k * d * d / (d - nf * a).powi(2)))
        }
        _ => Err(Error::ClosedFormUnavailable(format!("no per-family energy formula for {:?} on {}", t.kind(), m.family().name()))),
    }
}

/// Energies of levels 0..count (HypRM: capped at the number of bound states).
pub fn energies(t: &SusyTransform, count: usize) -> Result<Vec<f64>> {
    energies_for(t.model(), t.kind(), count)
}

pub fn energies_for(model: &PotentialModel, kind: TransformKind, count: usize) -> Result<Vec<f64>> {
    let cap = model.bound_state_count().map_or(count, |c| c.min(count));
    (0..cap).map(|n| electron_energy_for(model, kind, n)).collect()
}
