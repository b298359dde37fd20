//! The three exactly solvable base potentials: shifted oscillator, trigonometric and hyperbolic
//! Rosen–Morse. Eigenfunctions are written as ψ_n = c_n · g_n(x) · P_n(ζ(x)) with an elementary
//! prefactor g_n and a polynomial P_n in the family coordinate ζ.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::numerics::{integrate, Grid};
use crate::special::{hermite, jacobi, jacobi_complex, jacobi_poly, hermite_poly, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ShiftedHo,
    TrigRm,
    HypRm,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::ShiftedHo => "shifted-ho",
            Family::TrigRm => "trig-rm",
            Family::HypRm => "hyp-rm",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "shifted-ho" | "ho" | "shiftedho" | "oscillator" => Ok(Family::ShiftedHo),
            "trig-rm" | "trigrm" | "trig" => Ok(Family::TrigRm),
            "hyp-rm" | "hyprm" | "hyp" => Ok(Family::HypRm),
            other => invalid(format!("unknown family '{other}' (expected shifted-ho, trig-rm or hyp-rm)")),
        }
    }
}

/// A base potential V₀ with its parameters. `d`/`alpha` are unused by the oscillator and
/// `omega` by the Rosen–Morse families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialModel {
    family: Family,
    omega: f64,
    d: f64,
    alpha: f64,
    kappa: f64,
}

/// Per-level constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeedParams {
    pub n: usize,
    /// a_n (zero for the oscillator).
    pub a: f64,
    pub s: f64,
    /// Confluent exponents p, q for this level as seed (TrigRM: complex; HypRM: real).
    pub p: Complex64,
    pub q: Complex64,
}

/// Polynomial ingredients of ψ_n in the variable ζ: ψ_n = c_n g_n P_n(ζ), g_n′/g_n = ℓ_n(ζ), dζ/dx = ζ′(ζ).
#[derive(Debug, Clone)]
pub struct ReducedForm {
    pub p: Poly,
    pub ell: Poly,
    pub zeta_prime: Poly,
}

/// Value, log-derivative data and derivatives of the polynomial factor at one point.
#[derive(Debug, Clone, Copy)]
pub struct LevelParts {
    /// ln g_n(x).
    pub log_g: f64,
    /// g_n′/g_n and its x-derivative.
    pub ell: f64,
    pub ell_x: f64,
    /// P_n(ζ(x)) and its first two x-derivatives (real after phase removal).
    pub p: f64,
    pub p_x: f64,
    pub p_xx: f64,
    /// Imaginary remainder of P after phase removal (diagnostic).
    pub p_imag: f64,
}

impl PotentialModel {
    pub fn shifted_ho(omega: f64, kappa: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return invalid(format!("omega must be positive, got {omega}"));
        }
        if !kappa.is_finite() {
            return invalid("kappa must be finite");
        }
        Ok(Self { family: Family::ShiftedHo, omega, d: 0.0, alpha: 0.0, kappa })
    }

    pub fn trig_rm(d: f64, alpha: f64, kappa: f64) -> Result<Self> {
        if !(d > 0.0 && alpha > 0.0 && d.is_finite() && alpha.is_finite()) {
            return invalid(format!("trig-rm needs D > 0 and alpha > 0 (D={d}, alpha={alpha})"));
        }
        if !kappa.is_finite() {
            return invalid("kappa must be finite");
        }
        Ok(Self { family: Family::TrigRm, omega: 0.0, d, alpha, kappa })
    }

    pub fn hyp_rm(d: f64, alpha: f64, kappa: f64) -> Result<Self> {
        if !(d > 0.0 && alpha > 0.0 && d.is_finite() && alpha.is_finite()) {
            return invalid(format!("hyp-rm needs D > 0 and alpha > 0 (D={d}, alpha={alpha})"));
        }
        if !kappa.is_finite() {
            return invalid("kappa must be finite");
        }
        let m = Self { family: Family::HypRm, omega: 0.0, d, alpha, kappa };
        if m.bound_state_count() == Some(0) {
            return invalid(format!("hyp-rm with D={d}, alpha={alpha}, kappa={kappa} has no bound state (|kappa| < D required)"));
        }
        Ok(m)
    }

    pub fn new(family: Family, omega: f64, d: f64, alpha: f64, kappa: f64) -> Result<Self> {
        match family {
            Family::ShiftedHo => Self::shifted_ho(omega, kappa),
            Family::TrigRm => Self::trig_rm(d, alpha, kappa),
            Family::HypRm => Self::hyp_rm(d, alpha, kappa),
        }
    }

    pub fn with_kappa(&self, kappa: f64) -> Result<Self> {
        Self::new(self.family, self.omega, self.d, self.alpha, kappa)
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn kappa(&self) -> f64 {
        self.kappa
    }
    pub fn omega(&self) -> f64 {
        self.omega
    }
    pub fn d(&self) -> f64 {
        self.d
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// s = D/α for the Rosen–Morse families.
    pub fn s(&self) -> f64 {
        match self.family {
            Family::ShiftedHo => 0.0,
            _ => self.d / self.alpha,
        }
    }

    /// Open domain of the family.
    pub fn domain(&self) -> (f64, f64) {
        match self.family {
            Family::TrigRm => (0.0, PI / self.alpha),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let (a, b) = self.domain();
        x > a && x < b
    }

    fn check_domain(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            let (a, b) = self.domain();
            Err(Error::DomainError { x, domain: format!("({a}, {b})") })
        }
    }

    fn ho_scale(&self) -> f64 {
        (0.5 * self.omega).sqrt()
    }

    /// Center of the oscillator, x = −2κ/ω.
    pub fn ho_center(&self) -> f64 {
        -2.0 * self.kappa / self.omega
    }

    /// Family coordinate ζ(x).
    pub fn zeta(&self, x: f64) -> f64 {
        match self.family {
            Family::ShiftedHo => self.ho_scale() * (x - self.ho_center()),
            Family::TrigRm => {
                let t = self.alpha * x;
                t.cos() / t.sin()
            }
            Family::HypRm => (self.alpha * x).tanh(),
        }
    }

    /// V₀(x).
    pub fn potential(&self, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        Ok(self.potential_unchecked(x))
    }

    pub fn potential_unchecked(&self, x: f64) -> f64 {
        let (d, a, k) = (self.d, self.alpha, self.kappa);
        match self.family {
            Family::ShiftedHo => {
                let y = x - self.ho_center();
                0.25 * self.omega * self.omega * y * y - 0.5 * self.omega
            }
            Family::TrigRm => {
                let t = a * x;
                let sn = t.sin();
                d * (d - a) / (sn * sn) - 2.0 * d * k * t.cos() / sn - d * d + k * k
            }
            Family::HypRm => {
                let t = a * x;
                let sech = 1.0 / t.cosh();
                d * d + k * k - d * (d + a) * sech * sech + 2.0 * k * d * t.tanh()
            }
        }
    }

    /// dV₀/dx.
    pub fn potential_derivative(&self, x: f64) -> f64 {
        let (d, a, k) = (self.d, self.alpha, self.kappa);
        match self.family {
            Family::ShiftedHo => 0.5 * self.omega * self.omega * (x - self.ho_center()),
            Family::TrigRm => {
                let (sn, cs) = (a * x).sin_cos();
                let csc2 = 1.0 / (sn * sn);
                -2.0 * a * d * (d - a) * csc2 * cs / sn + 2.0 * d * k * a * csc2
            }
            Family::HypRm => {
                let t = a * x;
                let sech2 = 1.0 / (t.cosh() * t.cosh());
                2.0 * a * d * (d + a) * sech2 * t.tanh() + 2.0 * k * a * d * sech2
            }
        }
    }

    /// Number of bound states; `None` means unbounded.
    pub fn bound_state_count(&self) -> Option<usize> {
        match self.family {
            Family::HypRm => {
                let mut n = 0usize;
                loop {
                    let m = self.d - self.alpha * n as f64;
                    if !(m > 0.0 && self.kappa.abs() < m * m / self.d) {
                        return Some(n);
                    }
                    n += 1;
                }
            }
            _ => None,
        }
    }

    pub fn check_level(&self, n: usize) -> Result<()> {
        match self.bound_state_count() {
            Some(count) if n >= count => Err(Error::NoSuchLevel { n, count }),
            _ => Ok(()),
        }
    }

    /// E_n⁽⁰⁾.
    pub fn eigenvalue(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        let (d, a, k) = (self.d, self.alpha, self.kappa);
        Ok(match self.family {
            Family::ShiftedHo => nf * self.omega,
            Family::TrigRm => {
                let m = d + nf * a;
                k * k - d * d + m * m - k * k * d * d / (m * m)
            }
            Family::HypRm => {
                let m = d - nf * a;
                d * d + k * k - m * m - k * k * d * d / (m * m)
            }
        })
    }

    pub fn seed_params(&self, n: usize) -> Result<SeedParams> {
        self.check_level(n)?;
        let nf = n as f64;
        let s = self.s();
        Ok(match self.family {
            Family::ShiftedHo => SeedParams { n, a: 0.0, s, p: Complex64::default(), q: Complex64::default() },
            Family::TrigRm => {
                let a = -self.kappa * self.d / (self.alpha * (self.d + nf * self.alpha));
                SeedParams { n, a, s, p: Complex64::new(s + nf, a), q: Complex64::new(-s - nf, a) }
            }
            Family::HypRm => {
                let a = self.d * self.kappa / (self.alpha * (self.d - nf * self.alpha));
                SeedParams { n, a, s, p: Complex64::new(s - nf + a, 0.0), q: Complex64::new(s - nf - a, 0.0) }
            }
        })
    }

    /// Jacobi parameters (TrigRM: complex) of level n.
    fn jacobi_params(&self, n: usize) -> (Complex64, Complex64) {
        let nf = n as f64;
        let s = self.s();
        match self.family {
            Family::TrigRm => {
                let a = -self.kappa * self.d / (self.alpha * (self.d + nf * self.alpha));
                (Complex64::new(-s - nf, -a), Complex64::new(-s - nf, a))
            }
            _ => {
                let a = self.d * self.kappa / (self.alpha * (self.d - nf * self.alpha));
                (Complex64::new(s - nf + a, 0.0), Complex64::new(s - nf - a, 0.0))
            }
        }
    }

    /// Global phase of the trigonometric pseudo-Jacobi factor P_n(iζ): the phase of its leading
    /// coefficient in ζ. Dividing by it makes the polynomial real with positive leading coefficient.
    fn trig_phase(&self, n: usize) -> Complex64 {
        let (a, b) = self.jacobi_params(n);
        let lead = crate::special::pochhammer(a + b + (n as f64 + 1.0), n) * Complex64::i().powu(n as u32);
        lead / lead.norm()
    }

    /// Polynomial pieces of level n in ζ.
    pub fn reduced_form(&self, n: usize) -> Result<ReducedForm> {
        self.check_level(n)?;
        let nf = n as f64;
        let (al, s) = (self.alpha, self.s());
        Ok(match self.family {
            Family::ShiftedHo => {
                let c = self.ho_scale();
                ReducedForm { p: hermite_poly(n), ell: Poly::from_real(&[0.0, -c]), zeta_prime: Poly::from_real(&[c]) }
            }
            Family::TrigRm => {
                let sp = self.seed_params(n)?;
                let (a, b) = self.jacobi_params(n);
                let phase = self.trig_phase(n);
                let p = jacobi_poly(n, a, b).rescale_var(Complex64::i()).scale(phase.inv());
                let big = p.0.iter().map(|c| c.norm()).fold(0.0, f64::max);
                if p.0.iter().any(|c| c.im.abs() > 1e-9 * big) {
                    return Err(Error::TransformSingular {
                        reason: "pseudo-Jacobi polynomial is not real after phase removal".into(),
                        x: f64::NAN,
                    });
                }
                ReducedForm {
                    p: Poly(p.0.iter().map(|c| Complex64::new(c.re, 0.0)).collect()),
                    ell: Poly::from_real(&[sp.a * al, (s + nf) * al]),
                    zeta_prime: Poly::from_real(&[-al, 0.0, -al]),
                }
            }
            Family::HypRm => {
                let sp = self.seed_params(n)?;
                let (a, b) = self.jacobi_params(n);
                ReducedForm {
                    p: jacobi_poly(n, a, b),
                    ell: Poly::from_real(&[-al * sp.a, -al * (s - nf)]),
                    zeta_prime: Poly::from_real(&[al, 0.0, -al]),
                }
            }
        })
    }

    /// All pieces of the unnormalized ψ_n at x (no level or domain checks).
    pub fn level_parts(&self, n: usize, x: f64) -> LevelParts {
        let nf = n as f64;
        let (al, s) = (self.alpha, self.s());
        match self.family {
            Family::ShiftedHo => {
                let c = self.ho_scale();
                let z = self.zeta(x);
                let h = hermite(n, z);
                let h1 = if n >= 1 { 2.0 * nf * hermite(n - 1, z) } else { 0.0 };
                let h2 = if n >= 2 { 4.0 * nf * (nf - 1.0) * hermite(n - 2, z) } else { 0.0 };
                LevelParts { log_g: -0.5 * z * z, ell: -c * z, ell_x: -c * c, p: h, p_x: h1 * c, p_xx: h2 * c * c, p_imag: 0.0 }
            }
            Family::TrigRm => {
                let a_n = -self.kappa * self.d / (al * (self.d + nf * al));
                let t = al * x;
                let (sn, cs) = t.sin_cos();
                let z = cs / sn;
                let zp = -al / (sn * sn);
                let zpp = -2.0 * al * z * zp;
                let (ja, jb) = self.jacobi_params(n);
                let phase_inv = self.trig_phase(n).inv();
                let iz = Complex64::new(0.0, z);
                let p0 = jacobi_complex(n, ja, jb, iz) * phase_inv;
                let d1 = if n >= 1 {
                    (ja + jb + (nf + 1.0)) * 0.5 * jacobi_complex(n - 1, ja + 1.0, jb + 1.0, iz)
                } else {
                    Complex64::default()
                };
                let d2 = if n >= 2 {
                    (ja + jb + (nf + 1.0)) * (ja + jb + (nf + 2.0)) * 0.25 * jacobi_complex(n - 2, ja + 2.0, jb + 2.0, iz)
                } else {
                    Complex64::default()
                };
                // d/dζ P(iζ) = i P′, d²/dζ² = −P″.
                let p_z = (Complex64::i() * d1 * phase_inv).re;
                let p_zz = (-d2 * phase_inv).re;
                LevelParts {
                    log_g: (s + nf) * sn.ln() + a_n * t,
                    ell: (s + nf) * al * z + a_n * al,
                    ell_x: (s + nf) * al * zp,
                    p: p0.re,
                    p_x: p_z * zp,
                    p_xx: p_zz * zp * zp + p_z * zpp,
                    p_imag: p0.im,
                }
            }
            Family::HypRm => {
                let a_n = self.d * self.kappa / (al * (self.d - nf * al));
                let t = al * x;
                let z = t.tanh();
                // ln(1 − ζ) and ln(1 + ζ) without cancellation.
                let ln_minus = std::f64::consts::LN_2 - softplus(2.0 * t);
                let ln_plus = std::f64::consts::LN_2 - softplus(-2.0 * t);
                let one_minus_z2 = (ln_minus + ln_plus).exp();
                let zp = al * one_minus_z2;
                let zpp = -2.0 * al * z * zp;
                let (ja, jb) = (s - nf + a_n, s - nf - a_n);
                let p0 = jacobi(n, ja, jb, z);
                let d1 = if n >= 1 { (ja + jb + nf + 1.0) * 0.5 * jacobi(n - 1, ja + 1.0, jb + 1.0, z) } else { 0.0 };
                let d2 = if n >= 2 {
                    (ja + jb + nf + 1.0) * (ja + jb + nf + 2.0) * 0.25 * jacobi(n - 2, ja + 2.0, jb + 2.0, z)
                } else {
                    0.0
                };
                LevelParts {
                    log_g: 0.5 * ja * ln_minus + 0.5 * jb * ln_plus,
                    ell: -al * ((s - nf) * z + a_n),
                    ell_x: -al * (s - nf) * zp,
                    p: p0,
                    p_x: d1 * zp,
                    p_xx: d2 * zp * zp + d1 * zpp,
                    p_imag: 0.0,
                }
            }
        }
    }

    /// Unnormalized ψ_n(x) (the TrigRM global phase removed; imaginary part is the residual).
    pub fn eigenfunction(&self, n: usize, x: f64) -> Result<Complex64> {
        self.check_level(n)?;
        self.check_domain(x)?;
        let parts = self.level_parts(n, x);
        let g = parts.log_g.exp();
        Ok(Complex64::new(g * parts.p, g * parts.p_imag))
    }

    /// c_n = 1/√∫|ψ_n|² over the grid's span.
    pub fn normalization(&self, n: usize, grid: &Grid) -> Result<f64> {
        self.check_level(n)?;
        let (lo, hi) = self.domain();
        let a = grid.x_min().max(lo);
        let b = grid.x_max().min(hi);
        let f = |x: f64| {
            if x <= lo || x >= hi {
                return 0.0;
            }
            let parts = self.level_parts(n, x);
            let v = parts.log_g.exp() * parts.p;
            v * v
        };
        let total = integrate(f, a, b, 1e-12)?;
        Ok(1.0 / total.sqrt())
    }

    /// Interval outside of which |ψ_n|² < e^{−80}·max (exact domain for TrigRM).
    pub fn support(&self, n: usize) -> (f64, f64) {
        let nf = n as f64;
        match self.family {
            Family::ShiftedHo => {
                let half = (12.0 + (2.0 * nf + 1.0).sqrt()) / self.ho_scale();
                (self.ho_center() - half, self.ho_center() + half)
            }
            Family::TrigRm => (0.0, PI / self.alpha),
            Family::HypRm => {
                let (left, right) = self.decay_rates(n);
                (-(40.0 + 2.0 * nf) / left, (40.0 + 2.0 * nf) / right)
            }
        }
    }

    /// Interval beyond which ψ_n² underflows (~e^{−690} of its peak); used for running integrals.
    pub fn deep_support(&self, n: usize) -> (f64, f64) {
        let nf = n as f64;
        match self.family {
            Family::ShiftedHo => {
                let half = (26.0 + (2.0 * nf + 1.0).sqrt()) / self.ho_scale();
                (self.ho_center() - half, self.ho_center() + half)
            }
            Family::TrigRm => (0.0, PI / self.alpha),
            Family::HypRm => {
                let (left, right) = self.decay_rates(n);
                (-(340.0 + 2.0 * nf) / left, (340.0 + 2.0 * nf) / right)
            }
        }
    }

    /// HypRM: exponential decay rates of ψ_n towards −∞ and +∞.
    pub fn decay_rates(&self, n: usize) -> (f64, f64) {
        let nf = n as f64;
        let a_n = self.d * self.kappa / (self.alpha * (self.d - nf * self.alpha));
        let s = self.s();
        (self.alpha * (s - nf - a_n), self.alpha * (s - nf + a_n))
    }

    /// Default working grid of the family.
    ///
    /// Oscillator: center ± 12/√ω at h = 0.01. TrigRM: (10⁻⁴, π/α − 10⁻⁴) at h ≈ 0.0025, fine
    /// enough for the 3-point oracle to resolve the lowest levels to a few 10⁻³. HypRM: at least
    /// [−14/α, 14/α] at h = 0.01, widened until every bound state has decayed below 10⁻¹².
    pub fn default_grid(&self) -> Grid {
        let built = match self.family {
            Family::ShiftedHo => {
                let half = 12.0 / self.omega.sqrt();
                Grid::with_spacing(self.ho_center() - half, self.ho_center() + half, 0.01)
            }
            Family::TrigRm => Grid::with_spacing(1e-4, PI / self.alpha - 1e-4, 0.0025),
            Family::HypRm => {
                let mut lo = -14.0 / self.alpha;
                let mut hi = 14.0 / self.alpha;
                for n in 0..self.bound_state_count().unwrap_or(0) {
                    let (l, r) = self.decay_rates(n);
                    lo = lo.min(-(28.0 + 2.0 * n as f64) / l);
                    hi = hi.max((28.0 + 2.0 * n as f64) / r);
                }
                Grid::with_spacing(lo.floor(), hi.ceil(), 0.01)
            }
        };
        built.expect("default grid parameters are valid")
    }

    /// Normalized eigenstate with cached normalization.
    pub fn eigenstate(&self, n: usize) -> Result<Eigenstate> {
        self.check_level(n)?;
        let (a, b) = self.support(n);
        let grid = Grid::new(a, b, 3)?;
        let norm = self.normalization(n, &grid)?;
        Ok(Eigenstate { model: *self, n, energy: self.eigenvalue(n)?, norm })
    }
}

fn softplus(x: f64) -> f64 {
    if x > 30.0 {
        x + (-x).exp()
    } else {
        x.exp().ln_1p()
    }
}

/// Normalized bound state ψ_n with analytic derivatives.
#[derive(Debug, Clone, Copy)]
pub struct Eigenstate {
    pub model: PotentialModel,
    pub n: usize,
    pub energy: f64,
    /// c_n.
    pub norm: f64,
}

impl Eigenstate {
    fn inside(&self, x: f64) -> bool {
        self.model.contains(x)
    }

    pub fn value(&self, x: f64) -> f64 {
        if !self.inside(x) {
            return 0.0;
        }
        let p = self.model.level_parts(self.n, x);
        self.norm * p.log_g.exp() * p.p
    }

    /// (ψ, ψ′, ψ″) from the closed forms (ψ″ is not taken from the Schrödinger equation).
    pub fn jet(&self, x: f64) -> (f64, f64, f64) {
        if !self.inside(x) {
            return (0.0, 0.0, 0.0);
        }
        let p = self.model.level_parts(self.n, x);
        let g = self.norm * p.log_g.exp();
        (
            g * p.p,
            g * (p.ell * p.p + p.p_x),
            g * ((p.ell * p.ell + p.ell_x) * p.p + 2.0 * p.ell * p.p_x + p.p_xx),
        )
    }

    /// (ψ, ψ′, ψ″, ψ‴); the third derivative uses ψ‴ = V₀′ψ + (V₀ − E)ψ′.
    pub fn jet3(&self, x: f64) -> [f64; 4] {
        let (v, v1, v2) = self.jet(x);
        if v == 0.0 && v1 == 0.0 {
            return [0.0; 4];
        }
        let m = &self.model;
        let v3 = m.potential_derivative(x) * v + (m.potential_unchecked(x) - self.energy) * v1;
        [v, v1, v2, v3]
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.jet(x).1
    }

    pub fn density(&self, x: f64) -> f64 {
        let v = self.value(x);
        v * v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ho() -> PotentialModel {
        PotentialModel::shifted_ho(1.0, 1.0).unwrap()
    }
    fn trig() -> PotentialModel {
        PotentialModel::trig_rm(4.0, 1.0, -7.0).unwrap()
    }
    fn hyp() -> PotentialModel {
        PotentialModel::hyp_rm(8.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn potential_examples() {
        assert_eq!(ho().potential(-2.0).unwrap(), -0.5);
        assert!((trig().potential(PI / 2.0).unwrap() - 45.0).abs() < 1e-12);
        assert!((hyp().potential(40.0).unwrap() - 81.0).abs() < 1e-12);
        assert!(matches!(trig().potential(-0.1), Err(Error::DomainError { .. })));
        assert!(trig().potential(PI).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(ho().eigenvalue(3).unwrap(), 3.0);
        assert!(trig().eigenvalue(0).unwrap().abs() < 1e-12);
        assert!((trig().eigenvalue(1).unwrap() - 26.64).abs() < 1e-12);
        assert!(matches!(hyp().eigenvalue(6), Err(Error::NoSuchLevel { n: 6, count: 6 })));
    }

    #[test]
    fn bound_state_counts() {
        assert_eq!(ho().bound_state_count(), None);
        assert_eq!(trig().bound_state_count(), None);
        assert_eq!(hyp().bound_state_count(), Some(6));
        assert_eq!(PotentialModel::hyp_rm(8.0, 1.0, 7.9).unwrap().bound_state_count(), Some(1));
        assert!(PotentialModel::hyp_rm(1.0, 1.0, 3.0).is_err());
    }

    #[test]
    fn eigenfunction_examples() {
        assert!((ho().eigenfunction(0, -2.0).unwrap().re - 1.0).abs() < 1e-15);
        assert_eq!(ho().eigenfunction(1, -2.0).unwrap().re, 0.0);
        assert!((hyp().eigenfunction(0, 0.0).unwrap().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn oscillator_ground_normalization() {
        let m = ho();
        let c0 = m.normalization(0, &m.default_grid()).unwrap();
        let exact = 1.0 / (2.0 * PI).sqrt().sqrt();
        assert!((c0 - exact).abs() < 1e-10, "{c0}");
        assert!((c0 - 0.63162).abs() < 1e-5);
    }

    #[test]
    fn trig_eigenfunctions_real_after_phase_removal() {
        for m in [trig(), PotentialModel::trig_rm(2.0, 1.0, -2.0).unwrap(), PotentialModel::trig_rm(2.5, 0.7, 3.0).unwrap()] {
            for n in 0..6 {
                let st = m.eigenstate(n).unwrap();
                let g = m.default_grid();
                let mut worst: f64 = 0.0;
                let mut big: f64 = 0.0;
                for i in 0..g.len() {
                    let v = m.eigenfunction(n, g.x(i)).unwrap() * st.norm;
                    worst = worst.max(v.im.abs());
                    big = big.max(v.re.abs());
                }
                assert!(worst <= 1e-9 * big, "n={n}: imag {worst} vs {big}");
            }
        }
    }

    #[test]
    fn hyp_normalization_stable_under_refinement() {
        let m = hyp();
        for n in 0..6 {
            let st = m.eigenstate(n).unwrap();
            let g = m.default_grid();
            let c = m.normalization(n, &g).unwrap();
            assert!((c / st.norm - 1.0).abs() < 1e-7, "n={n}");
        }
    }

    fn models() -> Vec<PotentialModel> {
        vec![
            ho(),
            PotentialModel::shifted_ho(2.5, -0.7).unwrap(),
            trig(),
            PotentialModel::trig_rm(2.0, 1.0, -2.0).unwrap(),
            hyp(),
            PotentialModel::hyp_rm(4.0, 0.8, -1.5).unwrap(),
        ]
    }

    #[test]
    fn closed_form_second_derivative_solves_schrodinger() {
        for m in models() {
            let count = m.bound_state_count().unwrap_or(6).min(6);
            for n in 0..count {
                let st = m.eigenstate(n).unwrap();
                let g = m.default_grid();
                let mut worst: f64 = 0.0;
                let mut scale: f64 = 0.0;
                for i in (1..g.len() - 1).step_by(7) {
                    let x = g.x(i);
                    let (v, _, v2) = st.jet(x);
                    let r = -v2 + (m.potential_unchecked(x) - st.energy) * v;
                    worst = worst.max(r.abs());
                    scale = scale.max(v.abs());
                }
                assert!(worst < 1e-8 * scale.max(1.0) * (1.0 + st.energy.abs()), "{:?} n={n}: {worst}", m.family());
            }
        }
    }

    #[test]
    fn first_derivative_matches_finite_difference() {
        for m in models() {
            let n = m.bound_state_count().map_or(2, |c| (c - 1).min(2));
            let st = m.eigenstate(n).unwrap();
            for &x in &[0.3, 0.9, 1.7, 2.6] {
                if !m.contains(x) {
                    continue;
                }
                let h = 1e-5;
                let fd = (st.value(x + h) - st.value(x - h)) / (2.0 * h);
                assert!((fd - st.derivative(x)).abs() < 1e-6 * (1.0 + fd.abs()), "{:?} x={x}", m.family());
            }
        }
    }

    #[test]
    fn orthonormal_and_node_count() {
        for m in models() {
            let count = m.bound_state_count().unwrap_or(5).min(5);
            let states: Vec<_> = (0..count).map(|n| m.eigenstate(n).unwrap()).collect();
            let (lo, hi) = (m.support(count - 1).0.max(m.support(0).0), m.support(count - 1).1);
            let (lo, hi) = (lo.min(m.support(0).0), hi.max(m.support(0).1));
            for a in &states {
                for b in &states {
                    let ov = integrate(|x| a.value(x) * b.value(x), lo, hi, 1e-11).unwrap();
                    let want = if a.n == b.n { 1.0 } else { 0.0 };
                    assert!((ov - want).abs() < 1e-7, "{:?} <{}|{}> = {ov}", m.family(), a.n, b.n);
                }
                let g = Grid::with_spacing(lo, hi, 1e-3).unwrap();
                let vals: Vec<f64> = g.points().into_iter().filter(|&x| m.contains(x)).map(|x| a.value(x)).collect();
                let peak = vals.iter().fold(0.0f64, |p, v| p.max(v.abs()));
                let sig: Vec<f64> = vals.into_iter().filter(|v| v.abs() > 1e-8 * peak).collect();
                let nodes = sig.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
                assert_eq!(nodes, a.n, "{:?}", m.family());
            }
        }
    }

    #[test]
    fn finite_difference_oracle_agrees() {
        use crate::numerics::fd_spectrum;
        for m in models() {
            let g = m.default_grid();
            let v = g.sample(|x| m.potential_unchecked(x));
            let count = m.bound_state_count().unwrap_or(4).min(4);
            let oracle = fd_spectrum(&v, count).unwrap();
            for n in 0..count {
                let e = m.eigenvalue(n).unwrap();
                assert!((oracle.eigenvalues[n] - e).abs() < 5e-3 * (1.0 + e.abs()), "{:?} n={n}: {} vs {e}", m.family(), oracle.eigenvalues[n]);
            }
        }
    }

    #[test]
    fn potential_derivative_matches_difference() {
        for m in models() {
            for &x in &[0.4, 1.3, 2.2] {
                let h = 1e-5;
                let fd = (m.potential_unchecked(x + h) - m.potential_unchecked(x - h)) / (2.0 * h);
                assert!((fd - m.potential_derivative(x)).abs() < 1e-5 * (1.0 + fd.abs()));
            }
        }
    }

    #[test]
    fn family_parse() {
        assert_eq!("trig-rm".parse::<Family>().unwrap(), Family::TrigRm);
        assert_eq!("HYP_RM".parse::<Family>().unwrap(), Family::HypRm);
        assert!("cosine".parse::<Family>().is_err());
    }
}
