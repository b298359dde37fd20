use crate::error::{Error, Result};

use super::gamma::ln_gamma;

/// Complete beta function B(a, b).
pub fn beta(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidArgument(format!("beta needs a, b > 0 (a={a}, b={b})")));
    }
    Ok((ln_gamma(a)? + ln_gamma(b)? - ln_gamma(a + b)?).exp())
}

/// Unnormalized incomplete beta B(x; a, b) = ∫₀ˣ t^{a−1}(1−t)^{b−1} dt.
pub fn incomplete_beta(x: f64, a: f64, b: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) || !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidArgument(format!("incomplete beta needs x ∈ [0,1], a, b > 0 (x={x}, a={a}, b={b})")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return beta(a, b);
    }
    if x <= (a + 1.0) / (a + b + 2.0) {
        lentz(x, a, b)
    } else {
        Ok(beta(a, b)? - lentz(1.0 - x, b, a)?)
    }
}

fn lentz(x: f64, a: f64, b: f64) -> Result<f64> {
    let tiny = 1e-300;
    let (qab, qap, qam) = (a + b, a + 1.0, a - 1.0);
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < tiny {
        d = tiny;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..10_000 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            return Ok((a * x.ln() + b * (1.0 - x).ln()).exp() * h / a);
        }
    }
    Err(Error::ConvergenceFailure(format!("incomplete beta continued fraction (x={x}, a={a}, b={b})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!((incomplete_beta(0.3, 1.0, 1.0).unwrap() - 0.3).abs() < 1e-15);
        assert!((incomplete_beta(1.0, 2.0, 2.0).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!((incomplete_beta(0.5, 1.0, 2.0).unwrap() - 0.375).abs() < 1e-15);
        assert!(incomplete_beta(1.5, 1.0, 1.0).is_err());
        assert!(incomplete_beta(0.5, 0.0, 1.0).is_err());
    }

    #[test]
    fn polynomial_integrand_exact() {
        // B(x; 3, 2) = ∫ t²(1−t) = x³/3 − x⁴/4
        for x in [0.1f64, 0.45, 0.7, 0.95] {
            let want: f64 = x * x * x / 3.0 - x.powi(4) / 4.0;
            let got = incomplete_beta(x, 3.0, 2.0).unwrap();
            assert!((got / want - 1.0).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn large_exponents_relative_accuracy() {
        // Reference from an independent arbitrary-precision evaluation.
        let got = incomplete_beta(0.3, 7.0, 10.0).unwrap();
        let want = 2.189_227_888_447_495_9e-6;
        assert!((got / want - 1.0).abs() < 1e-11, "{got}");
        let cases = [(0.8, 8.5, 7.5, 1.990_200_954_712_228_8e-5), (0.05, 2.5, 12.0, 1.509_131_103_976_932_6e-4)];
        for (x, a, b, want) in cases {
            let got = incomplete_beta(x, a, b).unwrap();
            assert!((got / want - 1.0).abs() < 1e-11, "B({x}; {a}, {b}) = {got}");
        }
    }
}
