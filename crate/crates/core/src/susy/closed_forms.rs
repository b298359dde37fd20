//! Closed-form fields, partner potentials and seed integrals, used as cross-checks of the
//! quadrature/Wronskian reference path. Natural units: B = η′/2, V₂ = V₀ + 4B.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potentials::{Family, PotentialModel};
use crate::special::{beta, gamma, gamma_complex, gauss_2f1, incomplete_beta, lower_incomplete_gamma, upper_incomplete_gamma, erfc};

use super::transform::{SusyTransform, TransformKind};

fn unavailable<T>(what: &str) -> Result<T> {
    Err(Error::ClosedFormUnavailable(what.to_string()))
}

/// Shape-invariant field and partner potential (the j = 0 consecutive pair) at x.
pub fn shape_invariant(model: &PotentialModel, x: f64) -> (f64, f64) {
    let z = model.zeta(x);
    let (d, a, k) = (model.d(), model.alpha(), model.kappa());
    match model.family() {
        Family::ShiftedHo => {
            let w = model.omega();
            (0.5 * w, 0.5 * w * z * z + 1.5 * w)
        }
        Family::TrigRm => (
            0.5 * a * (2.0 * d + a) * (1.0 + z * z),
            (d + a) * (d + 2.0 * a) * (1.0 + z * z) - 2.0 * d * k * z - d * d + k * k,
        ),
        Family::HypRm => (
            0.5 * a * (2.0 * d - a) * (1.0 - z * z),
            d * d + k * k - (d - a) * (d - 2.0 * a) * (1.0 - z * z) + 2.0 * k * d * z,
        ),
    }
}

/// Consecutive j = 1: (B, V₂) from the rational closed forms of each family.
pub fn consecutive_field(model: &PotentialModel, x: f64) -> (f64, f64) {
    let z = model.zeta(x);
    let (d, a, k) = (model.d(), model.alpha(), model.kappa());
    let (b_si, v_si) = shape_invariant(model, x);
    match model.family() {
        Family::ShiftedHo => {
            let w = model.omega();
            let den = (2.0 * z * z + 1.0).powi(2);
            (b_si * (1.0 + (4.0 * z * z - 2.0) / den), v_si + 4.0 * w * (2.0 * z * z - 1.0) / den)
        }
        Family::TrigRm => {
            let num = (d + a) * (2.0 * d + 3.0 * a) * z * z - 2.0 * k * (2.0 * d + 3.0 * a) * z + 2.0 * k * k - a * (d + a);
            let den = (d + 2.0 * a) * (2.0 * d + 3.0 * a) * z * z - 2.0 * k * (2.0 * d + 3.0 * a) * z + 2.0 * k * k + a * (d + 2.0 * a);
            let c = k * k + (d + 2.0 * a).powi(2);
            (
                b_si * (1.0 + 4.0 * a * c / (2.0 * d + a) * num / (den * den)),
                v_si + 8.0 * a * a * c * (1.0 + z * z) * num / (den * den),
            )
        }
        Family::HypRm => {
            let m = 2.0 * (d * z + k).powi(2) - (5.0 * d * z * z + 6.0 * k * z + d) * a + (3.0 * z * z + 1.0) * a * a;
            let den = 2.0 * k * k + (d - 2.0 * a) * (z * z * (2.0 * d - 3.0 * a) + a) + 2.0 * k * z * (2.0 * d - 3.0 * a);
            let c = (d - 2.0 * a).powi(2) - k * k;
            (
                b_si * (1.0 + 4.0 * a * c * m / ((2.0 * d - a) * den * den)),
                v_si + 8.0 * a * a * c * (1.0 - z * z) * m / (den * den),
            )
        }
    }
}

/// Closed-form B for the cases that have one: consecutive j = 1 (all families) and confluent
/// j = 0 (oscillator and hyperbolic family).
pub fn field(t: &SusyTransform, x: f64) -> Result<f64> {
    let m = t.model();
    match t.kind() {
        TransformKind::Consecutive { j: 1 } => Ok(consecutive_field(m, x).0),
        TransformKind::Confluent { j: 0, w0 } => match m.family() {
            Family::ShiftedHo => Ok(ho_confluent_field(m, w0, x)),
            Family::HypRm => Ok(hyp_confluent_field(m, w0, x)),
            Family::TrigRm => unavailable("trig-rm confluent field: the explicit form is offset in w0; see trig_confluent_field_offset"),
        },
        _ => unavailable("no closed-form field for this transform"),
    }
}

/// Closed-form V₂ for consecutive j = 1.
pub fn partner_potential(t: &SusyTransform, x: f64) -> Result<f64> {
    match t.kind() {
        TransformKind::Consecutive { j: 1 } => Ok(consecutive_field(t.model(), x).1),
        _ => unavailable("no closed-form partner potential for this transform"),
    }
}

/// Confluent oscillator, j = 0: B = ω{e^{−2ζ²}/(πW²) − ζe^{−ζ²}/(√πW)}, W = erfc ζ − 2 + 2w₀,
/// with W evaluated as 2w₀ − erfc(−ζ) to avoid cancellation on the left.
pub fn ho_confluent_field(m: &PotentialModel, w0: f64, x: f64) -> f64 {
    let z = m.zeta(x);
    let w = 2.0 * w0 - erfc(-z);
    let e = (-z * z).exp();
    m.omega() * (e * e / (PI * w * w) - z * e / (PI.sqrt() * w))
}

/// Confluent hyperbolic family, j = 0, written with incomplete beta functions.
pub fn hyp_confluent_field(m: &PotentialModel, w0: f64, x: f64) -> f64 {
    let a0 = m.kappa() / m.alpha();
    let s = m.s();
    let (p, q) = (s + a0, s - a0);
    let z = m.zeta(x);
    let al = m.alpha();
    let ib = |x: f64, a: f64, b: f64| incomplete_beta(x, a, b).expect("incomplete beta arguments in range");
    let b_qp = beta(q, p).expect("positive beta arguments");
    let two = 2f64.powf(p + q);
    let halves = p * ib(0.5, p, q + 1.0) + q * ib(0.5, q, p + 1.0);
    let tail = q * ib(0.5 * (z + 1.0), q, p + 1.0);
    let den = q * (1.0 - z).powf(p) * (1.0 + z).powf(q) + (w0 - 1.0) * (p + q)
        - two * (p * q * (1.0 - 2.0 * w0) * b_qp + (p + q) * (tail + (w0 - 1.0) * halves));
    let lin = p - q + (p + q) * z;
    let num = (p + q) * (q * (1.0 - z).powf(1.0 + p) * (1.0 + z).powf(q) - lin * (w0 - 1.0))
        + two * lin * (p * q * (1.0 - 2.0 * w0) * b_qp + (p + q) * ((w0 - 1.0) * halves + tail));
    al * al * p * q * (1.0 - z).powf(p) * (1.0 + z).powf(q) * num / (den * den)
}

/// The explicit trigonometric confluent (j = 0) field in its commonly quoted form. It is a valid member of the
/// family but labelled by a shifted constant: it equals the quadrature field at w₀ + δ, with
/// δ = 1/(1 + e^{πa₀}) for D = 2, α = 1.
pub fn trig_confluent_field_offset(m: &PotentialModel, w0: f64, x: f64) -> Result<f64> {
    let sp = m.seed_params(0)?;
    let (p, q) = (sp.p, sp.q);
    let al = m.alpha();
    let i = Complex64::i();
    let theta = (1.0 / (al * x).tan()).atan();
    let e = (-2.0 * i * al * x).exp();
    let one = Complex64::new(1.0, 0.0);
    let f = gauss_2f1(q, q - p, one + q, e)?;
    let g1p = gamma_complex(one + p)?;
    let k = gamma_complex(one + q)? * gamma_complex(p - q + 1.0)? * (one - 2.0 * i * w0 * (q * PI).sin()) * (-2.0 * i * q * theta).exp();
    let br = q * g1p * ((one - e).powc(p - q) - f) - (p - q) / (one + (-2.0 * i * theta).exp()) * (g1p * f - k) + q * k;
    let val = -2.0 * q * al * al * g1p * (one + (2.0 * i * theta).exp()).powc(p - q) * br / ((k - g1p * f) * (k - g1p * f));
    Ok(val.re)
}

/// ∫_{x₀}^x ψ_j² dy (normalized seed), from the special-function closed forms.
pub fn w_integral(m: &PotentialModel, j: usize, x: f64) -> Result<f64> {
    m.check_level(j)?;
    match m.family() {
        Family::ShiftedHo => {
            if j > 10 {
                return unavailable("oscillator closed form limited to j <= 10");
            }
            ho_integral(j, m.zeta(x))
        }
        Family::HypRm => {
            if j > 4 {
                return unavailable("hyperbolic closed form limited to j <= 4");
            }
            hyp_integral(m, j, m.zeta(x))
        }
        Family::TrigRm => {
            if j != 0 {
                return unavailable("trigonometric closed form implemented for j = 0");
            }
            trig_integral(m, x)
        }
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn ho_integral(j: usize, z: f64) -> Result<f64> {
    let half = j / 2;
    let mut num = 0.0;
    let mut den = 0.0;
    for l in 0..=half {
        for m in 0..=half {
            let sign = if (m + l) % 2 == 0 { 1.0 } else { -1.0 };
            let c = sign * 2f64.powi(2 * (j - m - l) as i32 - 1)
                / (factorial(m) * factorial(l) * factorial(j - 2 * m) * factorial(j - 2 * l));
            let sa = (j - m - l) as f64 + 0.5;
            let g = gamma(sa)?;
            let part = if z >= 0.0 { g + lower_incomplete_gamma(sa, z * z)? } else { upper_incomplete_gamma(sa, z * z)? };
            num += c * part;
            den += 2.0 * c * g;
        }
    }
    Ok(num / den)
}

fn binom(n: usize, k: usize) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn hyp_g(a: f64, b: f64, c: f64, j: usize) -> Result<f64> {
    let mut tot = 0.0;
    for l in 0..=j {
        for r in 0..=j {
            let (lf, rf, jf) = (l as f64, r as f64, j as f64);
            let pref = (-0.5f64).powi((l + r) as i32) * binom(j, l) * binom(j, r) * gamma(b + c + jf + lf + 1.0)? * gamma(b + c + jf + rf + 1.0)?
                / (2.0 * (b + lf + rf) * gamma(b + lf + 1.0)? * gamma(b + rf + 1.0)?);
            let e = b + lf + rf;
            let br = 2f64.powf(b + c + lf + rf) * (b + c + lf + rf) * (incomplete_beta(0.5 * (a + 1.0), c, e + 1.0)? - incomplete_beta(0.5, c, e + 1.0)?)
                - (1.0 - a).powf(e) * (1.0 + a).powf(c)
                + 1.0;
            tot += pref * br;
        }
    }
    Ok(gamma(b + j as f64 + 1.0)?.powi(2) * tot)
}

fn hyp_integral(m: &PotentialModel, j: usize, z: f64) -> Result<f64> {
    // p, q from a_j = Dκ/(α(D − jα)), the same a_j that enters the eigenfunctions.
    let sp = m.seed_params(j)?;
    let (p, q) = (sp.p.re, sp.q.re);
    let tail = hyp_g(1.0, q, p, j)?;
    Ok((hyp_g(z, p, q, j)? + tail) / (hyp_g(1.0, p, q, j)? + tail))
}

fn trig_integral(m: &PotentialModel, x: f64) -> Result<f64> {
    let sp = m.seed_params(0)?;
    let (p, q) = (sp.p, sp.q);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::i();
    let theta = (1.0 / (m.alpha() * x).tan()).atan();
    let t1 = (-i * (p + q) * 0.5 * (PI - 2.0 * theta)).exp()
        * (-i * (p - q) * theta).exp()
        * gauss_2f1(q, q - p, one + q, -(2.0 * i * theta).exp())?;
    let g = gamma_complex(one + q)? * gamma_complex(p - q + 1.0)? / gamma_complex(p + 1.0)?;
    let t2 = g * (-i * (p - q) * 0.5 * PI).exp();
    let total = g * ((-i * (p + q) * PI).exp() * (i * (p - q) * 0.5 * PI).exp() - (-i * (p - q) * 0.5 * PI).exp());
    let v = (t1 - t2) / total;
    if !(v.re.is_finite() && v.im.abs() <= 1e-8 * (1.0 + v.re.abs())) {
        return unavailable("trigonometric closed form did not evaluate to a real value");
    }
    Ok(v.re)
}
