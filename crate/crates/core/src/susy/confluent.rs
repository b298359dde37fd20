//! Cumulative integral of a normalized seed, w(x) = w₀ − ∫_{x₀}^x ψ_j².
//!
//! The support of ψ_j is cut into equal panels integrated with 8-point Gauss–Legendre. Prefix
//! and suffix sums are both kept so that w is formed without cancellation at either end, which
//! matters in the limit cases w₀ ∈ {0, 1} where w itself vanishes at one end.

use crate::error::Result;
use crate::numerics::gauss_legendre8;
use crate::potentials::{Eigenstate, Family};

#[derive(Debug, Clone)]
pub struct WTable {
    seed: Eigenstate,
    w0: f64,
    a: f64,
    b: f64,
    width: f64,
    prefix: Vec<f64>,
    suffix: Vec<f64>,
    total: f64,
    /// Power-law end behaviour (TrigRM): panels touching an end are integrated after the
    /// substitution y = end ± t⁴ to smooth the non-integer power.
    power_ends: bool,
}

impl WTable {
    pub fn new(seed: Eigenstate, w0: f64) -> Result<Self> {
        let model = seed.model;
        let (a, b) = model.deep_support(seed.n);
        let n_panels = (((b - a) / 0.01).ceil() as usize).clamp(400, 60_000);
        let width = (b - a) / n_panels as f64;
        let power_ends = model.family() == Family::TrigRm;
        let mut table = Self { seed, w0, a, b, width, prefix: vec![0.0; n_panels + 1], suffix: vec![0.0; n_panels + 1], total: 0.0, power_ends };
        let panels: Vec<f64> = (0..n_panels).map(|i| table.panel_integral(i)).collect();
        for i in 0..n_panels {
            table.prefix[i + 1] = table.prefix[i] + panels[i];
        }
        for i in (0..n_panels).rev() {
            table.suffix[i] = table.suffix[i + 1] + panels[i];
        }
        table.total = table.left_tail(a) + table.prefix[n_panels] + table.right_tail(b);
        Ok(table)
    }

    fn density(&self, x: f64) -> f64 {
        self.seed.density(x)
    }

    fn node(&self, i: usize) -> f64 {
        if i == self.prefix.len() - 1 {
            self.b
        } else {
            self.a + i as f64 * self.width
        }
    }

    fn panel_integral(&self, i: usize) -> f64 {
        let last = self.prefix.len() - 2;
        let (lo, hi) = (self.node(i), self.node(i + 1));
        if self.power_ends && i == 0 {
            self.from_left_end(hi)
        } else if self.power_ends && i == last {
            self.to_right_end(lo)
        } else {
            gauss_legendre8(&|y| self.density(y), lo, hi)
        }
    }

    /// ∫_a^x ψ² with y = a + (x − a)t⁴.
    fn from_left_end(&self, x: f64) -> f64 {
        let l = x - self.a;
        gauss_legendre8(&|t: f64| self.density(self.a + l * t.powi(4)) * 4.0 * l * t.powi(3), 0.0, 1.0)
    }

    /// ∫_x^b ψ² with y = b − (b − x)t⁴.
    fn to_right_end(&self, x: f64) -> f64 {
        let l = self.b - x;
        gauss_legendre8(&|t: f64| self.density(self.b - l * t.powi(4)) * 4.0 * l * t.powi(3), 0.0, 1.0)
    }

    /// Asymptotic mass of ψ² left of x (x at or beyond the left support end).
    fn left_tail(&self, x: f64) -> f64 {
        let m = &self.seed.model;
        match m.family() {
            Family::TrigRm => 0.0,
            Family::HypRm => self.density(x) / (2.0 * m.decay_rates(self.seed.n).0),
            Family::ShiftedHo => {
                let z = m.zeta(x).abs();
                let c = (0.5 * m.omega()).sqrt();
                self.density(x) / (2.0 * z * c) * (1.0 - 0.5 / (z * z))
            }
        }
    }

    fn right_tail(&self, x: f64) -> f64 {
        let m = &self.seed.model;
        match m.family() {
            Family::TrigRm => 0.0,
            Family::HypRm => self.density(x) / (2.0 * m.decay_rates(self.seed.n).1),
            Family::ShiftedHo => {
                let z = m.zeta(x).abs();
                let c = (0.5 * m.omega()).sqrt();
                self.density(x) / (2.0 * z * c) * (1.0 - 0.5 / (z * z))
            }
        }
    }

    fn panel_index(&self, x: f64) -> usize {
        (((x - self.a) / self.width).floor() as usize).min(self.prefix.len() - 2)
    }

    /// ∫_{x₀}^x ψ_j² / ∫ψ_j² (left mass) and the complementary right mass, each computed directly.
    pub fn masses(&self, x: f64) -> (f64, f64) {
        let (left, right) = if x <= self.a {
            let l = self.left_tail(x);
            (l, self.total - l)
        } else if x >= self.b {
            let r = self.right_tail(x);
            (self.total - r, r)
        } else {
            let i = self.panel_index(x);
            let last = self.prefix.len() - 2;
            let (lo, hi) = (self.node(i), self.node(i + 1));
            let part_left = if self.power_ends && i == 0 {
                self.from_left_end(x)
            } else {
                gauss_legendre8(&|y| self.density(y), lo, x)
            };
            let part_right = if self.power_ends && i == last {
                self.to_right_end(x)
            } else {
                gauss_legendre8(&|y| self.density(y), x, hi)
            };
            (self.left_tail(self.a) + self.prefix[i] + part_left, part_right + self.suffix[i + 1] + self.right_tail(self.b))
        };
        (left / self.total, right / self.total)
    }

    /// w(x).
    pub fn w(&self, x: f64) -> f64 {
        let (left, right) = self.masses(x);
        if left <= 0.5 {
            self.w0 - left
        } else {
            self.w0 - 1.0 + right
        }
    }

    /// Where the vanishing end of w (w₀ ∈ {0, 1}) has underflowed, w ≈ Cψ_j² with this C.
    pub fn asymptotic_factor(&self, x: f64) -> Option<f64> {
        let m = &self.seed.model;
        let (left, right) = self.masses(x);
        let rate = |side: usize| match m.family() {
            Family::HypRm => {
                let r = m.decay_rates(self.seed.n);
                if side == 0 { r.0 } else { r.1 }
            }
            Family::ShiftedHo => {
                let z = m.zeta(x).abs();
                (0.5 * m.omega()).sqrt() * z / (1.0 - 0.5 / (z * z))
            }
            Family::TrigRm => f64::NAN,
        };
        if self.w0 == 0.0 && left < 1e-280 {
            Some(-1.0 / (2.0 * rate(0)))
        } else if self.w0 == 1.0 && right < 1e-280 {
            Some(1.0 / (2.0 * rate(1)))
        } else {
            None
        }
    }

    /// Scale making ∫ψ² = 1 exactly with respect to this table.
    pub fn density_scale(&self) -> f64 {
        1.0 / self.total
    }

    pub fn w0(&self) -> f64 {
        self.w0
    }
}
