//! Second-order intertwining transformations: η and its derivatives, γ, f, V₂ and the operators L₂±.
//!
//! Both algorithms are written through a single τ-function with η = −τ′/τ: the Wronskian of the
//! two seeds (consecutive levels) or w (confluent). Its derivative ratios rₖ = τ⁽ᵏ⁾/τ come
//! straight from the seeds' closed forms, never from finite differences.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::numerics::{differentiate, Grid, SampledFunction};
use crate::potentials::{Eigenstate, PotentialModel};

use super::confluent::WTable;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "transform", rename_all = "kebab-case")]
pub enum TransformKind {
    /// Seeds ψ_j, ψ_{j+1} with ε₂ = E_j, ε₁ = E_{j+1}.
    Consecutive { j: usize },
    /// Single seed ψ_j, ε₁ = ε₂ = E_j, parametrized by w₀ ∉ (0, 1).
    Confluent { j: usize, w0: f64 },
}

impl TransformKind {
    pub fn j(&self) -> usize {
        match *self {
            TransformKind::Consecutive { j } | TransformKind::Confluent { j, .. } => j,
        }
    }

    pub fn is_confluent(&self) -> bool {
        matches!(self, TransformKind::Confluent { .. })
    }

    /// Levels absent from Sp(H₂) (the w₀ ∈ {0, 1} limit drops the seed level).
    pub fn deleted_levels(&self) -> Vec<usize> {
        match *self {
            TransformKind::Consecutive { j } => vec![j, j + 1],
            TransformKind::Confluent { j, w0 } if w0 == 0.0 || w0 == 1.0 => vec![j],
            TransformKind::Confluent { .. } => vec![],
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Direction {
    Minus,
    Plus,
}

/// η and its first three derivatives at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaJet {
    pub eta: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl EtaJet {
    /// From rₖ = τ⁽ᵏ⁾/τ, k = 1..4, with η = −(ln τ)′.
    fn from_ratios(r: [f64; 4]) -> Self {
        let [r1, r2, r3, r4] = r;
        Self {
            eta: -r1,
            d1: -(r2 - r1 * r1),
            d2: -(r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1),
            d3: -(r4 - 4.0 * r1 * r3 - 3.0 * r2 * r2 + 12.0 * r1 * r1 * r2 - 6.0 * r1.powi(4)),
        }
    }
}

#[derive(Debug, Clone)]
enum Seeds {
    Consecutive { lower: usize, upper: usize },
    Confluent { state: Eigenstate, table: Box<WTable> },
}

#[derive(Debug, Clone)]
pub struct SusyTransform {
    model: PotentialModel,
    kind: TransformKind,
    eps1: f64,
    eps2: f64,
    seeds: Seeds,
}

/// Below this |η| the literal γ/f/V₀ formulas are treated as singular.
const ETA_ZERO: f64 = 1e-12;

impl SusyTransform {
    pub fn new(model: PotentialModel, kind: TransformKind) -> Result<Self> {
        match kind {
            TransformKind::Consecutive { j } => Self::consecutive(model, j),
            TransformKind::Confluent { j, w0 } => Self::confluent(model, j, w0),
        }
    }

    pub fn consecutive(model: PotentialModel, j: usize) -> Result<Self> {
        if j == 0 {
            return invalid("consecutive transform needs j >= 1");
        }
        model.check_level(j)?;
        model.check_level(j + 1)?;
        Ok(Self {
            model,
            kind: TransformKind::Consecutive { j },
            eps1: model.eigenvalue(j + 1)?,
            eps2: model.eigenvalue(j)?,
            seeds: Seeds::Consecutive { lower: j, upper: j + 1 },
        })
    }

    pub fn confluent(model: PotentialModel, j: usize, w0: f64) -> Result<Self> {
        if !w0.is_finite() {
            return invalid("w0 must be finite");
        }
        if w0 > 0.0 && w0 < 1.0 {
            return invalid(format!("w0 = {w0} lies in the forbidden band (0, 1): w(x) would have a node"));
        }
        let state = model.eigenstate(j)?;
        let table = WTable::new(state, w0)?;
        let eps = state.energy;
        Ok(Self { model, kind: TransformKind::Confluent { j, w0 }, eps1: eps, eps2: eps, seeds: Seeds::Confluent { state, table: Box::new(table) } })
    }

    pub fn model(&self) -> &PotentialModel {
        &self.model
    }
    pub fn kind(&self) -> TransformKind {
        self.kind
    }
    pub fn eps1(&self) -> f64 {
        self.eps1
    }
    pub fn eps2(&self) -> f64 {
        self.eps2
    }
    pub fn j(&self) -> usize {
        self.kind.j()
    }

    /// w(x) for the confluent transform.
    pub fn w(&self, x: f64) -> Option<f64> {
        match &self.seeds {
            Seeds::Confluent { table, .. } => Some(table.w(x)),
            _ => None,
        }
    }

    /// Confluent seed mass ∫_{x₀}^x ψ_j² by quadrature.
    pub fn seed_mass(&self, x: f64) -> Option<f64> {
        match &self.seeds {
            Seeds::Confluent { table, .. } => Some(table.masses(x).0),
            _ => None,
        }
    }

    /// ψ_j/w and its first two derivatives (confluent only): the kernel element of L₂⁺.
    pub fn confluent_seed_image(&self, x: f64) -> Option<[f64; 3]> {
        let Seeds::Confluent { state, table } = &self.seeds else {
            return None;
        };
        let s = table.density_scale();
        let w = table.w(x);
        let (f, f1, f2) = state.jet(x);
        Some([
            f / w,
            f1 / w + s * f.powi(3) / (w * w),
            f2 / w + 4.0 * s * f * f * f1 / (w * w) + 2.0 * s * s * f.powi(5) / w.powi(3),
        ])
    }

    /// The τ-function up to a positive factor, and its derivative ratios.
    fn tau(&self, x: f64) -> (f64, [f64; 4]) {
        match &self.seeds {
            Seeds::Consecutive { lower, upper } => {
                let m = &self.model;
                let (v, v1) = (m.potential_unchecked(x), m.potential_derivative(x));
                // Reduced jets of ψ/(c g): value, first, second and third derivative.
                let reduced = |n: usize, e: f64| {
                    let p = m.level_parts(n, x);
                    let d = p.ell * p.p + p.p_x;
                    let q = (p.ell * p.ell + p.ell_x) * p.p + 2.0 * p.ell * p.p_x + p.p_xx;
                    [p.p, d, q, v1 * p.p + (v - e) * d]
                };
                let a = reduced(*lower, self.eps2);
                let b = reduced(*upper, self.eps1);
                let w = a[0] * b[1] - a[1] * b[0];
                let pi0 = a[0] * b[0];
                let pi1 = a[1] * b[0] + a[0] * b[1];
                let pi2 = a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2];
                let pi3 = a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3];
                // W′ = (ε₂ − ε₁) ψ_j ψ_{j+1}.
                let e = self.eps2 - self.eps1;
                (w, [e * pi0 / w, e * pi1 / w, e * pi2 / w, e * pi3 / w])
            }
            Seeds::Confluent { state, table } => {
                if let Some(c) = table.asymptotic_factor(x) {
                    return self.asymptotic_tau(state, c, x);
                }
                let w = table.w(x);
                let s = table.density_scale();
                let [f, f1, f2, f3] = state.jet3(x);
                let w1 = -s * f * f;
                let w2 = -2.0 * s * f * f1;
                let w3 = -2.0 * s * (f1 * f1 + f * f2);
                let w4 = -2.0 * s * (3.0 * f1 * f2 + f * f3);
                (w, [w1 / w, w2 / w, w3 / w, w4 / w])
            }
        }
    }

    /// Ratios for w ≈ Cψ_j² (w′ = −ψ_j² exactly), written through logarithmic derivatives of ψ_j.
    fn asymptotic_tau(&self, state: &Eigenstate, c: f64, x: f64) -> (f64, [f64; 4]) {
        let m = &self.model;
        let p = m.level_parts(state.n, x);
        let l1 = p.ell + p.p_x / p.p;
        let l2 = m.potential_unchecked(x) - state.energy;
        let l3 = m.potential_derivative(x) + l2 * l1;
        let k = -1.0 / c;
        (c, [k, 2.0 * k * l1, 2.0 * k * (l1 * l1 + l2), 2.0 * k * (3.0 * l1 * l2 + l3)])
    }

    pub fn eta_jet(&self, x: f64) -> EtaJet {
        EtaJet::from_ratios(self.tau(x).1)
    }

    pub fn eta(&self, x: f64) -> f64 {
        self.eta_jet(x).eta
    }

    /// Fails with transform-singular when τ changes sign or vanishes on the grid.
    pub fn check_nodeless(&self, grid: &Grid) -> Result<()> {
        let mut prev: Option<(f64, f64)> = None;
        for x in grid.points() {
            if !self.model.contains(x) {
                return Err(Error::DomainError { x, domain: format!("{:?}", self.model.domain()) });
            }
            let (t, r) = self.tau(x);
            if t == 0.0 || !t.is_finite() || r.iter().any(|v| !v.is_finite()) {
                return Err(Error::TransformSingular { reason: "vanishing denominator of eta".into(), x });
            }
            if let Some((xp, tp)) = prev {
                if tp.signum() != t.signum() {
                    return Err(Error::TransformSingular { reason: "denominator of eta changes sign".into(), x: 0.5 * (xp + x) });
                }
            }
            prev = Some((x, t));
        }
        Ok(())
    }

    /// Zeros of η located by sign changes between grid points (midpoints reported).
    pub fn eta_zeros(&self, grid: &Grid) -> Vec<f64> {
        let pts = grid.points();
        let vals: Vec<f64> = pts.iter().map(|&x| self.eta(x)).collect();
        let mut out = Vec::new();
        for i in 1..pts.len() {
            if vals[i] == 0.0 {
                out.push(pts[i]);
            } else if vals[i - 1] * vals[i] < 0.0 {
                out.push(0.5 * (pts[i - 1] + pts[i]));
            }
        }
        out
    }

    fn eps_mean(&self) -> f64 {
        0.5 * (self.eps1 + self.eps2)
    }

    /// γ in the form that stays finite where η vanishes: γ = η²/2 − η′/2 − V₀ + (ε₁+ε₂)/2.
    pub fn gamma(&self, x: f64) -> f64 {
        let j = self.eta_jet(x);
        0.5 * j.eta * j.eta - 0.5 * j.d1 - self.model.potential_unchecked(x) + self.eps_mean()
    }

    /// γ = η′/2 + η²/4 − η″/2η + (η′/2η)² − ((ε₁−ε₂)/2η)², evaluated literally.
    pub fn gamma_coefficient(&self, x: f64) -> Result<f64> {
        let j = self.eta_jet(x);
        Ok(0.5 * j.d1 + 0.25 * j.eta * j.eta + self.literal_f(x, &j)?)
    }

    fn literal_f(&self, x: f64, j: &EtaJet) -> Result<f64> {
        if let Seeds::Confluent { state, .. } = &self.seeds {
            // (η′/2η)² − η″/2η = −L²/4 − L′/2 with L = η′/η = 2ψ′/ψ + η, so the tails where
            // η ∝ ψ_j² underflows stay finite; ψ′/ψ and ψ″/ψ come from the polynomial form.
            let p = self.model.level_parts(state.n, x);
            let r1 = p.ell + p.p_x / p.p;
            let r2 = p.ell * p.ell + p.ell_x + 2.0 * p.ell * p.p_x / p.p + p.p_xx / p.p;
            let l = 2.0 * r1 + j.eta;
            let lp = 2.0 * (r2 - r1 * r1) + j.d1;
            let f = -0.25 * l * l - 0.5 * lp;
            return if f.is_finite() { Ok(f) } else { Err(Error::SingularPoint { x }) };
        }
        if j.eta.abs() < ETA_ZERO || !j.eta.is_finite() {
            return Err(Error::SingularPoint { x });
        }
        let de = self.eps1 - self.eps2;
        let last = if self.kind.is_confluent() { 0.0 } else { (de / (2.0 * j.eta)).powi(2) };
        Ok((j.d1 / (2.0 * j.eta)).powi(2) - j.d2 / (2.0 * j.eta) - last)
    }

    /// V₀ rebuilt from η, η′, η″ and the factorization energies alone.
    pub fn reconstruct_v0(&self, x: f64) -> Result<f64> {
        let j = self.eta_jet(x);
        Ok(0.25 * j.eta * j.eta - j.d1 + self.eps_mean() - self.literal_f(x, &j)?)
    }

    /// Extra term f = η′²/4η² − η″/2η − (ε₁−ε₂)²/4η², in its regular form η²/4 − η′ − V₀ + (ε₁+ε₂)/2.
    pub fn extra_term_f(&self, x: f64) -> f64 {
        let j = self.eta_jet(x);
        0.25 * j.eta * j.eta - j.d1 - self.model.potential_unchecked(x) + self.eps_mean()
    }

    /// f by its literal formula (singular where η = 0).
    pub fn extra_term_f_literal(&self, x: f64) -> Result<f64> {
        let j = self.eta_jet(x);
        self.literal_f(x, &j)
    }

    /// V₂ = V₀ + 2η′.
    pub fn v2(&self, x: f64) -> f64 {
        self.model.potential_unchecked(x) + 2.0 * self.eta_jet(x).d1
    }

    /// B = η′/2 (natural units).
    pub fn b_field(&self, x: f64) -> f64 {
        0.5 * self.eta_jet(x).d1
    }

    /// L₂⁻ψ_n and its first two derivatives, for a bound state of H₀.
    ///
    /// With ψ″ = (V₀ − E)ψ the operator collapses to L₂⁻ψ = ηψ′ + Qψ, Q = η²/2 − η′/2 + (ε₁+ε₂)/2 − E,
    /// which is differentiated in closed form.
    pub fn l2_minus_jet(&self, state: &Eigenstate, x: f64) -> [f64; 3] {
        let [f, f1, f2, f3] = state.jet3(x);
        if f == 0.0 && f1 == 0.0 {
            return [0.0; 3];
        }
        let j = self.eta_jet(x);
        let q = 0.5 * j.eta * j.eta - 0.5 * j.d1 + self.eps_mean() - state.energy;
        let q1 = j.eta * j.d1 - 0.5 * j.d2;
        let q2 = j.d1 * j.d1 + j.eta * j.d2 - 0.5 * j.d3;
        [
            j.eta * f1 + q * f,
            j.d1 * f1 + j.eta * f2 + q1 * f + q * f1,
            j.d2 * f1 + 2.0 * j.d1 * f2 + j.eta * f3 + q2 * f + 2.0 * q1 * f1 + q * f2,
        ]
    }

    /// L₂± applied to a function given by its value and first two derivatives at x.
    pub fn apply_l2_at(&self, dir: Direction, x: f64, jet: [f64; 3]) -> f64 {
        let [f, f1, f2] = jet;
        let j = self.eta_jet(x);
        let g = 0.5 * j.eta * j.eta - 0.5 * j.d1 - self.model.potential_unchecked(x) + self.eps_mean();
        match dir {
            Direction::Minus => f2 + j.eta * f1 + g * f,
            Direction::Plus => f2 - j.eta * f1 + (g - j.d1) * f,
        }
    }

    /// L₂±ψ_n for a bound state of H₀ using its closed-form derivatives.
    pub fn apply_l2_state(&self, dir: Direction, state: &Eigenstate, x: f64) -> f64 {
        let (f, f1, f2) = state.jet(x);
        self.apply_l2_at(dir, x, [f, f1, f2])
    }

    /// L₂± on sampled data with 5-point derivatives. Points where τ is not finite come back
    /// masked (value 0) and listed.
    pub fn apply_l2_sampled(&self, dir: Direction, psi: &SampledFunction) -> Result<(SampledFunction, Vec<f64>)> {
        let d1 = differentiate(psi, 1)?;
        let d2 = differentiate(psi, 2)?;
        let grid = psi.grid;
        let mut masked = Vec::new();
        let mut out = Vec::with_capacity(grid.len());
        for i in 0..grid.len() {
            let x = grid.x(i);
            let v = self.apply_l2_at(dir, x, [psi.values[i], d1.values[i], d2.values[i]]);
            if v.is_finite() {
                out.push(v);
            } else {
                masked.push(x);
                out.push(0.0);
            }
        }
        Ok((SampledFunction::new(grid, out)?, masked))
    }
}
