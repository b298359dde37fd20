use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::Grid;
use crate::potentials::Eigenstate;
use crate::susy::{Direction, SusyTransform, TransformKind};

use super::energy::electron_energy;

/// How the upper component ψ⁽²⁾ is obtained from ψ_n⁽⁰⁾.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperKind {
    /// ψ⁽²⁾ ≡ 0 and the 1/√2 is dropped (deleted levels).
    Absent,
    /// ψ⁽²⁾ = σ L₂⁻ψ_n / scale.
    Mapped,
    /// ψ⁽²⁾ = σ ψ_j/w / scale (confluent seed level, w₀ ∉ {0,1}).
    SeedImage,
}

/// Analytic two-component state Ψ = e^{iky}(ψ⁽²⁾, ψ⁽⁰⁾)ᵀ/√2.
#[derive(Debug, Clone)]
pub struct Spinor<'a> {
    pub transform: &'a SusyTransform,
    pub state: Eigenstate,
    pub energy: f64,
    pub upper_kind: UpperKind,
    /// Normalizer of the upper component.
    pub scale: f64,
    /// Relative sign σ fixed by the coupled equations.
    pub sigma: f64,
}

/// Values at one point: (ψ⁽²⁾, ψ⁽²⁾′, ψ⁽⁰⁾, ψ⁽⁰⁾′), already carrying the 1/√2 when two-component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorPoint {
    pub upper: f64,
    pub upper_d: f64,
    pub lower: f64,
    pub lower_d: f64,
}

impl<'a> Spinor<'a> {
    pub fn new(t: &'a SusyTransform, n: usize) -> Result<Self> {
        let state = t.model().eigenstate(n)?;
        let energy = electron_energy(t, n)?;
        let j = t.j();
        let (upper_kind, scale) = match t.kind() {
            TransformKind::Consecutive { .. } if n == j || n == j + 1 => (UpperKind::Absent, 1.0),
            TransformKind::Consecutive { .. } => ((UpperKind::Mapped), ((state.energy - t.eps1()) * (state.energy - t.eps2())).sqrt()),
            TransformKind::Confluent { w0, .. } if n == j => {
                if w0 == 0.0 || w0 == 1.0 {
                    (UpperKind::Absent, 1.0)
                } else {
                    // ∫ψ_j²/w² = [1/w] = 1/(w₀ − 1) − 1/w₀
                    (UpperKind::SeedImage, (1.0 / (w0 * (w0 - 1.0))).sqrt())
                }
            }
            TransformKind::Confluent { .. } => (UpperKind::Mapped, (state.energy - t.eps1()).abs()),
        };
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::TransformSingular { reason: format!("upper-component normalizer {scale} for n = {n}"), x: f64::NAN });
        }
        let mut sp = Self { transform: t, state, energy, upper_kind, scale, sigma: 1.0 };
        sp.sigma = sp.choose_sigma();
        Ok(sp)
    }

    pub fn n(&self) -> usize {
        self.state.n
    }

    pub fn two_component(&self) -> bool {
        self.upper_kind != UpperKind::Absent
    }

    /// Unnormalized upper jet before σ and scale.
    fn upper_raw(&self, x: f64) -> [f64; 3] {
        match self.upper_kind {
            UpperKind::Absent => [0.0; 3],
            UpperKind::Mapped => self.transform.l2_minus_jet(&self.state, x),
            UpperKind::SeedImage => self.transform.confluent_seed_image(x).unwrap_or([0.0; 3]),
        }
    }

    /// ψ⁽²⁾ jet (value, first, second derivative), normalized to ∫|ψ⁽²⁾|² = 1.
    pub fn upper_jet(&self, x: f64) -> [f64; 3] {
        let r = self.upper_raw(x);
        let c = self.sigma / self.scale;
        [c * r[0], c * r[1], c * r[2]]
    }

    /// Residuals of L₂⁻ψ⁽⁰⁾ = −Ẽψ⁽²⁾ and L₂⁺ψ⁽²⁾ = −Ẽψ⁽⁰⁾ with Ẽ = 2E (unit-normalized components).
    pub fn coupled_residuals(&self, x: f64) -> (f64, f64) {
        let t = self.transform;
        let e_t = 2.0 * self.energy;
        let (f, f1, f2) = self.state.jet(x);
        let u = self.upper_jet(x);
        let r1 = t.apply_l2_at(Direction::Minus, x, [f, f1, f2]) + e_t * u[0];
        let r2 = t.apply_l2_at(Direction::Plus, x, u) + e_t * f;
        (r1, r2)
    }

    fn choose_sigma(&self) -> f64 {
        if self.upper_kind == UpperKind::Absent {
            return 1.0;
        }
        let (a, b) = self.transform.model().support(self.state.n);
        let (lo, hi) = self.transform.model().domain();
        let (a, b) = (a.max(lo), b.min(hi));
        let mut score = [0.0, 0.0];
        for (i, sigma) in [1.0, -1.0].into_iter().enumerate() {
            let probe = Self { sigma, ..self.clone() };
            for k in 1..40 {
                let x = a + (b - a) * k as f64 / 40.0;
                score[i] += probe.coupled_residuals(x).0.abs();
            }
        }
        // Ties (E = 0, where the sign is unobservable) resolve to the −1 convention.
        if score[1] <= score[0] {
            -1.0
        } else {
            1.0
        }
    }

    pub fn at(&self, x: f64) -> SpinorPoint {
        let (f, f1, _) = self.state.jet(x);
        if self.upper_kind == UpperKind::Absent {
            return SpinorPoint { upper: 0.0, upper_d: 0.0, lower: f, lower_d: f1 };
        }
        let u = self.upper_jet(x);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        SpinorPoint { upper: r * u[0], upper_d: r * u[1], lower: r * f, lower_d: r * f1 }
    }
}

/// A spinor sampled on a grid, with bookkeeping for the standard ordering.
#[derive(Debug, Clone, Serialize)]
pub struct SpinorState {
    pub n_aux: usize,
    pub m_std: usize,
    pub energy: f64,
    pub k: f64,
    pub two_component: bool,
    pub sigma: f64,
    pub degenerate_with: Option<usize>,
    #[serde(skip)]
    pub grid: Grid,
    pub x: Vec<f64>,
    /// Components including the 1/√2 factor of two-component states.
    pub upper: Vec<f64>,
    pub upper_d: Vec<f64>,
    pub lower: Vec<f64>,
    pub lower_d: Vec<f64>,
}

/// Builds the bilayer eigenstate n on a grid.
pub fn spinor_state(t: &SusyTransform, n: usize, k: f64, grid: &Grid) -> Result<SpinorState> {
    let sp = Spinor::new(t, n)?;
    let x = grid.points();
    let pts: Vec<SpinorPoint> = x.iter().map(|&xi| sp.at(xi)).collect();
    Ok(SpinorState {
        n_aux: n,
        m_std: n,
        energy: sp.energy,
        k,
        two_component: sp.two_component(),
        sigma: sp.sigma,
        degenerate_with: None,
        grid: *grid,
        upper: pts.iter().map(|p| p.upper).collect(),
        upper_d: pts.iter().map(|p| p.upper_d).collect(),
        lower: pts.iter().map(|p| p.lower).collect(),
        lower_d: pts.iter().map(|p| p.lower_d).collect(),
        x,
    })
}
