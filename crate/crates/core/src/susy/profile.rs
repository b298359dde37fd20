use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{gauss_legendre8, Grid, SampledFunction};

use super::gauge::eta_constant;
use super::transform::SusyTransform;

/// Sampled V₀, V₂, B, A, η and f on a grid, in the Landau gauge A = η/2 − k.
///
/// When κ fixes k, k = C₁/2 with C₁ the constant part of η. When the two are unrelated the
/// wavenumber is a free input and defaults to 0.
#[derive(Debug, Clone, Serialize)]
pub struct MagneticProfile {
    #[serde(skip)]
    pub grid: Grid,
    pub x: Vec<f64>,
    pub v0: Vec<f64>,
    pub v2: Vec<f64>,
    pub b: Vec<f64>,
    pub a: Vec<f64>,
    pub eta: Vec<f64>,
    pub f_extra: Vec<f64>,
    /// A from cumulative quadrature of B, anchored to A at the middle grid point.
    pub a_quadrature: Vec<f64>,
    /// Constant part of η; `None` when κ and k are unrelated (then C₁ = 0 is used for A).
    pub c1: Option<f64>,
    pub c2: f64,
    /// Wavenumber used for A.
    pub k: f64,
}

impl MagneticProfile {
    pub fn new(t: &SusyTransform, grid: Grid) -> Result<Self> {
        Self::with_free_wavenumber(t, grid, 0.0)
    }

    /// As `new`, with `k_free` used only when κ and k are unrelated.
    pub fn with_free_wavenumber(t: &SusyTransform, grid: Grid, k_free: f64) -> Result<Self> {
        t.check_nodeless(&grid)?;
        let c1 = match eta_constant(t.model(), t.kind()) {
            Ok(c) => Some(c),
            Err(Error::Unrelated) => None,
            Err(e) => return Err(e),
        };
        let c = c1.unwrap_or(2.0 * k_free);
        let x = grid.points();
        let m = t.model();
        let mut v0 = Vec::with_capacity(x.len());
        let mut v2 = Vec::with_capacity(x.len());
        let mut b = Vec::with_capacity(x.len());
        let mut a = Vec::with_capacity(x.len());
        let mut eta = Vec::with_capacity(x.len());
        let mut f_extra = Vec::with_capacity(x.len());
        for &xi in &x {
            let jet = t.eta_jet(xi);
            let v = m.potential_unchecked(xi);
            v0.push(v);
            v2.push(v + 2.0 * jet.d1);
            b.push(0.5 * jet.d1);
            a.push(0.5 * (jet.eta - c));
            eta.push(jet.eta);
            f_extra.push(0.25 * jet.eta * jet.eta - jet.d1 - v + 0.5 * (t.eps1() + t.eps2()));
        }
        // Anchored mid-grid and integrated outward so stiff wall panels only touch their own edge.
        let mid = x.len() / 2;
        let mut a_quadrature = vec![0.0; x.len()];
        a_quadrature[mid] = a[mid];
        for i in mid + 1..x.len() {
            a_quadrature[i] = a_quadrature[i - 1] + gauss_legendre8(&|y| t.b_field(y), x[i - 1], x[i]);
        }
        for i in (0..mid).rev() {
            a_quadrature[i] = a_quadrature[i + 1] - gauss_legendre8(&|y| t.b_field(y), x[i], x[i + 1]);
        }
        Ok(Self { grid, x, v0, v2, b, a, eta, f_extra, a_quadrature, c1, c2: 0.0, k: 0.5 * c })
    }

    /// k = (C₁ − C₂)/2 when κ determines k.
    pub fn wavenumber(&self) -> Option<f64> {
        self.c1.map(|c| 0.5 * (c - self.c2))
    }

    /// (mean, standard deviation) of (η − 2A)/2 over the interior, A from quadrature of B.
    pub fn gauge_constancy(&self) -> (f64, f64) {
        let n = self.x.len();
        let margin = (n / 50).max(2);
        let g: Vec<f64> = (margin..n - margin).map(|i| 0.5 * (self.eta[i] - 2.0 * self.a_quadrature[i])).collect();
        let mean = g.iter().sum::<f64>() / g.len() as f64;
        let var = g.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / g.len() as f64;
        (mean, var.sqrt())
    }

    pub fn sampled(&self, values: &[f64]) -> Result<SampledFunction> {
        SampledFunction::new(self.grid, values.to_vec())
    }
}
