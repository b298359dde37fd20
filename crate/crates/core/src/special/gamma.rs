use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(s: f64) -> bool {
    s <= 0.0 && s == s.round()
}

/// Γ(s) for real s (Lanczos, reflection below 1/2).
pub fn gamma(s: f64) -> Result<f64> {
    if is_nonpositive_integer(s) {
        return Err(Error::ParameterPole(format!("gamma at {s}")));
    }
    if s < 0.5 {
        return Ok(PI / ((PI * s).sin() * gamma(1.0 - s)?));
    }
    let z = s - 1.0;
    let mut x = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * x)
}

/// ln|Γ(s)| for real s > 0.
pub fn ln_gamma(s: f64) -> Result<f64> {
    if !(s > 0.0) {
        return Err(Error::InvalidArgument(format!("ln_gamma needs s > 0, got {s}")));
    }
    if s < 0.5 {
        return Ok((PI / (PI * s).sin()).ln() - ln_gamma(1.0 - s)?);
    }
    let z = s - 1.0;
    let mut x = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln())
}

/// Γ(z) for complex z.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && is_nonpositive_integer(z.re) {
        return Err(Error::ParameterPole(format!("gamma at {z}")));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Ok(Complex64::new(PI, 0.0) / (s * gamma_complex(Complex64::new(1.0, 0.0) - z)?));
    }
    let zm = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (zm + i as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    let log = 0.5 * (2.0 * PI).ln() + (zm + 0.5) * t.ln() - t + x.ln();
    Ok(log.exp())
}

/// Lower incomplete gamma γ(s, x) = ∫₀ˣ t^{s−1} e^{−t} dt.
pub fn lower_incomplete_gamma(s: f64, x: f64) -> Result<f64> {
    if !(s > 0.0) || !(x >= 0.0) {
        return Err(Error::InvalidArgument(format!("lower incomplete gamma needs s > 0, x ≥ 0 (s={s}, x={x})")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x < s + 1.0 {
        series_lower(s, x)
    } else {
        Ok(gamma(s)? - cf_upper(s, x)?)
    }
}

/// Upper incomplete gamma Γ(s, x) = ∫ₓ^∞ t^{s−1} e^{−t} dt.
pub fn upper_incomplete_gamma(s: f64, x: f64) -> Result<f64> {
    if !(s > 0.0) || !(x >= 0.0) {
        return Err(Error::InvalidArgument(format!("upper incomplete gamma needs s > 0, x ≥ 0 (s={s}, x={x})")));
    }
    if x < s + 1.0 {
        Ok(gamma(s)? - series_lower(s, x)?)
    } else {
        cf_upper(s, x)
    }
}

fn series_lower(s: f64, x: f64) -> Result<f64> {
    let mut ap = s;
    let mut term = 1.0 / s;
    let mut sum = term;
    for _ in 0..10_000 {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * 1e-17 {
            return Ok(sum * (s * x.ln() - x).exp());
        }
    }
    Err(Error::ConvergenceFailure(format!("incomplete gamma series (s={s}, x={x})")))
}

fn cf_upper(s: f64, x: f64) -> Result<f64> {
    let tiny = 1e-300;
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            return Ok((s * x.ln() - x).exp() * h);
        }
    }
    Err(Error::ConvergenceFailure(format!("incomplete gamma continued fraction (s={s}, x={x})")))
}

/// Complementary error function, via Γ(1/2, x²)/√π.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    let x2 = x * x;
    let root_pi = PI.sqrt();
    // Both branches are well defined for s = 1/2 and x² ≥ 0.
    if x2 < 1.5 {
        1.0 - series_lower(0.5, x2).map(|g| g / root_pi).unwrap_or(0.0)
    } else {
        cf_upper(0.5, x2).map(|g| g / root_pi).unwrap_or(0.0)
    }
}
