//! The constant part C₁ of η, which fixes the Landau-gauge vector potential A = (η − C₁)/2 and
//! the wavenumber k = C₁/2 (integration constant C₂ = 0).
//!
//! For consecutive levels η is rational in ζ: η = q(ζ) + r(ζ)/Dn(ζ) after polynomial division.
//! Which constant counts as "the constant of η" is a convention; the rules below are the ones that
//! reproduce the known closed κ↔k relations (κ = k for the oscillator and the trigonometric and
//! hyperbolic rational relations) and extend them to every j.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potentials::{Family, PotentialModel};
use crate::special::Poly;

use super::transform::TransformKind;

/// η = num/den as polynomials in ζ for the consecutive pair (j, j+1).
pub fn consecutive_rational(model: &PotentialModel, j: usize) -> Result<(Poly, Poly)> {
    let lo = model.reduced_form(j)?;
    let hi = model.reduced_form(j + 1)?;
    let d = |f: &crate::potentials::ReducedForm| f.ell.mul(&f.p).add(&f.zeta_prime.mul(&f.p.derivative()));
    let den = lo.p.mul(&d(&hi)).sub(&d(&lo).mul(&hi.p));
    let e = model.eigenvalue(j + 1)? - model.eigenvalue(j)?;
    let num = lo.p.mul(&hi.p).scale(Complex64::new(e, 0.0));
    Ok((num, den))
}

/// C₁ for a transform; `Err(Unrelated)` where κ and k are independent.
pub fn eta_constant(model: &PotentialModel, kind: TransformKind) -> Result<f64> {
    match kind {
        TransformKind::Consecutive { j } => {
            let (num, den) = consecutive_rational(model, j)?;
            let tol = 1e-12;
            let den = den.trimmed(tol);
            let (q, r) = num.divrem(&den, tol);
            let q0 = q.coeff(0).re;
            match model.family() {
                Family::ShiftedHo => Ok(q.eval_real(model.zeta(0.0)).re),
                Family::TrigRm => {
                    let m = den.degree(tol) as u32;
                    let phase = Complex64::i().powu(m).inv();
                    let i = Complex64::i();
                    let k = -(r.eval(i) * phase).re / (den.eval(i) * phase).re;
                    Ok(q0 - k)
                }
                Family::HypRm => {
                    let k = -(r.eval_real(1.0).re + r.eval_real(-1.0).re) / (den.eval_real(1.0).re + den.eval_real(-1.0).re);
                    Ok(q0 - k)
                }
            }
        }
        TransformKind::Confluent { j, w0 } => match model.family() {
            Family::ShiftedHo if w0 == 0.0 => Ok(2.0 * model.kappa()),
            Family::HypRm if w0 == 0.0 => Ok(-2.0 * model.alpha() * model.seed_params(j)?.q.re),
            Family::TrigRm => trig_confluent_constant(model, j),
            _ => Err(Error::Unrelated),
        },
    }
}

/// Confluent trigonometric family with integer 2(s + j): ψ_j² e^{−λx} (λ = 2a_jα) is a
/// trigonometric polynomial Σ c_n e^{inαx}, so ∫ψ_j² = e^{λx} Σ t_n e^{inαx} + const with
/// t_n = c_n/(λ + inα). The constant is read off the top harmonic: C₁ = −Re c_N / Re t_N.
fn trig_confluent_constant(model: &PotentialModel, j: usize) -> Result<f64> {
    let sp = model.seed_params(j)?;
    let order = 2.0 * (sp.s + j as f64);
    if (order - order.round()).abs() > 1e-12 {
        return Err(Error::Unrelated);
    }
    let top = order.round() as i64;
    let al = model.alpha();
    let lambda = 2.0 * sp.a * al;
    let form = model.reduced_form(j)?;
    let count = (4 * top + 8) as usize;
    let period = 2.0 * PI / al;
    let mut c_top = Complex64::default();
    for k in 0..count {
        let x = (k as f64 + 0.5) * period / count as f64;
        let (sn, cs) = (al * x).sin_cos();
        // sin^{N} P_j(cot)² written as (sin^j P_j(cot))² sin^{N−2j} to stay finite everywhere.
        let pj = form.p.eval_real(cs / sn).re * sn.powi(j as i32);
        let f = pj * pj * sn.powi((top - 2 * j as i64) as i32);
        c_top += f * Complex64::new(0.0, -(top as f64) * al * x).exp();
    }
    c_top /= count as f64;
    let t_top = c_top / Complex64::new(lambda, top as f64 * al);
    if t_top.re.abs() < 1e-300 {
        return Err(Error::Unrelated);
    }
    Ok(-c_top.re / t_top.re)
}
