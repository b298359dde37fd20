//! Probability density, current density with the vector-potential term, and the stationary
//! continuity check for states of the form Ψ = e^{iky}(Φ₁(x), Φ₂(x))ᵀ.
//!
//! With z = Φ₁*Φ₂ (∂_y → ik, ε_xy = +1 so ς_x = σ_y, ς_y = −σ_x):
//!
//! Jx = Im(Φ₁*Φ₂′ + Φ₂*Φ₁′) + 2(k + A) Im z
//! Jy = Re(Φ₂*Φ₁′ − Φ₁*Φ₂′) − 2(k + A) Re z

use num_complex::Complex64;
use serde::Serialize;

use crate::bilayer::SpinorState;
use crate::error::{invalid, Result};
use crate::numerics::{differentiate, integrate_sampled, Grid, SampledFunction};

/// ρ, Jx, Jy of one state on its grid.
#[derive(Debug, Clone, Serialize)]
pub struct DensityProfile {
    #[serde(skip)]
    pub grid: Grid,
    pub x: Vec<f64>,
    pub rho: Vec<f64>,
    pub jx: Vec<f64>,
    pub jy: Vec<f64>,
    pub k: f64,
    pub n_aux: usize,
    pub m_std: usize,
    pub energy: f64,
}

/// Complex components and their x-derivatives on a grid, including any 1/√2 factor.
#[derive(Debug, Clone)]
pub struct ComplexSpinor {
    pub grid: Grid,
    pub upper: Vec<Complex64>,
    pub upper_d: Vec<Complex64>,
    pub lower: Vec<Complex64>,
    pub lower_d: Vec<Complex64>,
    pub k: f64,
}

impl ComplexSpinor {
    pub fn from_state(s: &SpinorState) -> Self {
        let c = |v: &[f64]| v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self { grid: s.grid, upper: c(&s.upper), upper_d: c(&s.upper_d), lower: c(&s.lower), lower_d: c(&s.lower_d), k: s.k }
    }
}

/// ρ = Ψ†Ψ.
pub fn probability_density(state: &SpinorState) -> Vec<f64> {
    state.upper.iter().zip(&state.lower).map(|(u, l)| u * u + l * l).collect()
}

pub fn norm(state: &SpinorState) -> Result<f64> {
    Ok(integrate_sampled(&SampledFunction::new(state.grid, probability_density(state))?))
}

/// (Jx, Jy) at one point; `a` is the vector potential, or `None` to drop the gauge term.
pub fn current_at(u: Complex64, du: Complex64, v: Complex64, dv: Complex64, k: f64, a: Option<f64>) -> (f64, f64) {
    let z = u.conj() * v;
    let c = 2.0 * (k + a.unwrap_or(0.0));
    let jx = (u.conj() * dv + v.conj() * du).im + c * z.im;
    let jy = (v.conj() * du - u.conj() * dv).re - c * z.re;
    (jx, jy)
}

/// Current density for complex components; `gauge_term = false` deletes the A·Ψ†ςΨ term.
pub fn current_density_complex(psi: &ComplexSpinor, a: &SampledFunction, gauge_term: bool) -> Result<(Vec<f64>, Vec<f64>)> {
    if psi.grid != a.grid {
        return invalid("state and vector potential live on different grids");
    }
    let mut jx = Vec::with_capacity(a.values.len());
    let mut jy = Vec::with_capacity(a.values.len());
    for i in 0..a.values.len() {
        let (x, y) = current_at(psi.upper[i], psi.upper_d[i], psi.lower[i], psi.lower_d[i], psi.k, gauge_term.then_some(a.values[i]));
        jx.push(x);
        jy.push(y);
    }
    Ok((jx, jy))
}

pub fn current_density(state: &SpinorState, a: &SampledFunction, gauge_term: bool) -> Result<(Vec<f64>, Vec<f64>)> {
    current_density_complex(&ComplexSpinor::from_state(state), a, gauge_term)
}

/// max |∂x Jx| over the interior; ∂y Jy vanishes identically for the plane-wave ansatz.
pub fn continuity_residual_of(grid: Grid, jx: &[f64]) -> Result<f64> {
    let d = differentiate(&SampledFunction::new(grid, jx.to_vec())?, 1)?;
    let n = d.values.len();
    let m = (n / 50).max(2);
    Ok(d.values[m..n - m].iter().fold(0.0, |acc: f64, v| acc.max(v.abs())))
}

pub fn continuity_residual(state: &SpinorState, a: &SampledFunction) -> Result<f64> {
    let (jx, _) = current_density(state, a, true)?;
    continuity_residual_of(state.grid, &jx)
}

pub fn density_profile(state: &SpinorState, a: &SampledFunction) -> Result<DensityProfile> {
    let (jx, jy) = current_density(state, a, true)?;
    Ok(DensityProfile {
        grid: state.grid,
        x: state.x.clone(),
        rho: probability_density(state),
        jx,
        jy,
        k: state.k,
        n_aux: state.n_aux,
        m_std: state.m_std,
        energy: state.energy,
    })
}
