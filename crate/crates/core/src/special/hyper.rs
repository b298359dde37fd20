use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_TERMS: usize = 100_000;

/// Rising factorial (x)_n.
pub fn pochhammer(x: Complex64, n: usize) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (x + k as f64))
}

fn nonpositive_integer(z: Complex64) -> Option<usize> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() && z.re > -1e9 {
        Some((-z.re) as usize)
    } else {
        None
    }
}

/// Gauss hypergeometric ₂F₁(a, b; c; z).
///
/// Terminating series are summed exactly. Otherwise the plain series is used for |z| ≤ 0.9,
/// a Pfaff transformation when it maps z inside that disc, and for the remaining points with
/// |z| ≤ 1 the series (or its Euler transform, whichever has the larger Re(c − a − b)) is summed
/// directly with a tail estimate; 10⁵ terms is the hard limit.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let terminating = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (Some(m), None) | (None, Some(m)) => Some(m),
        (None, None) => None,
    };
    if let Some(cpole) = nonpositive_integer(c) {
        match terminating {
            Some(m) if m <= cpole => {}
            _ => return Err(Error::ParameterPole(format!("2F1 with c = {c}"))),
        }
    }
    if let Some(m) = terminating {
        return Ok(finite_sum(a, b, c, z, m));
    }
    if z.norm() <= 0.9 {
        return series(a, b, c, z);
    }
    let one = Complex64::new(1.0, 0.0);
    let zp = z / (z - one);
    if zp.norm() <= 0.9 {
        return Ok((one - z).powc(-a) * series(a, c - b, c, zp)?);
    }
    if z.norm() > 1.0 + 1e-12 {
        return Err(Error::ConvergenceFailure(format!("2F1 argument |z| = {} outside the unit disc", z.norm())));
    }
    let direct = c - a - b;
    if (one - z).norm() < 1e-12 && direct.re <= 0.0 {
        return Err(Error::ConvergenceFailure(format!("2F1 diverges at z = 1 (Re(c-a-b) = {})", direct.re)));
    }
    if direct.re >= -direct.re {
        series(a, b, c, z)
    } else {
        Ok((one - z).powc(direct) * series(c - a, c - b, c, z)?)
    }
}

fn finite_sum(a: Complex64, b: Complex64, c: Complex64, z: Complex64, m: usize) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..m {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
    }
    sum
}

fn series(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let r = z.norm();
    let excess = (c - a - b).re;
    if r >= 1.0 - 1e-12 && excess <= 0.0 {
        return Err(Error::ConvergenceFailure(format!(
            "2F1 series diverges on the unit circle (Re(c-a-b) = {excess})"
        )));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        // Tail bound: geometric inside the disc, algebraic (∝ n^{-(excess+1)}) on the circle.
        let n = kf + 1.0;
        let geometric = if r < 1.0 { 1.0 / (1.0 - r) } else { f64::INFINITY };
        let algebraic = if excess > 0.0 { n / excess } else { f64::INFINITY };
        let tail = term.norm() * geometric.min(algebraic).max(1.0);
        if tail <= 1e-16 * sum.norm() || sum.norm() == 0.0 && term.norm() == 0.0 {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::ConvergenceFailure(format!("2F1 series not converged after {MAX_TERMS} terms (z = {z})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(c(3.3, 1.0), 0), c(1.0, 0.0));
        assert_eq!(pochhammer(c(1.0, 0.0), 4), c(24.0, 0.0));
        assert!((pochhammer(c(0.5, 0.0), 2) - c(0.75, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn elementary_values() {
        assert_eq!(gauss_2f1(c(0.3, 1.0), c(2.0, 0.0), c(1.5, 0.0), c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let v = gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((v.re - 2.0f64.ln() / 0.5).abs() < 1e-14 && v.im.abs() < 1e-15);
        let v = gauss_2f1(c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.3, 0.0)).unwrap();
        assert!((v - c(0.49, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pfaff_region_matches_closed_form() {
        // ₂F₁(1,1;2;z) = −ln(1−z)/z
        for z in [c(-0.95, 0.0), c(-3.0, 0.0), c(0.2, -0.93)] {
            let want = -(c(1.0, 0.0) - z).ln() / z;
            let got = gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), z).unwrap();
            assert!((got - want).norm() < 1e-13 * want.norm(), "z = {z}: {got} vs {want}");
        }
    }

    #[test]
    fn unit_circle_with_positive_excess() {
        // Gauss: ₂F₁(a,b;c;1) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b))
        use crate::special::gamma_complex;
        let (a, b, cc) = (c(0.5, 0.3), c(-1.2, 0.7), c(4.0, 0.0));
        let want = gamma_complex(cc).unwrap() * gamma_complex(cc - a - b).unwrap()
            / (gamma_complex(cc - a).unwrap() * gamma_complex(cc - b).unwrap());
        let got = gauss_2f1(a, b, cc, c(1.0, 0.0)).unwrap();
        assert!((got - want).norm() < 1e-12 * want.norm(), "{got} vs {want}");
    }

    #[test]
    fn divergent_circle_point_is_reported() {
        // z = i: Pfaff maps to i/(i−1), |·| ≈ 0.707, so this one is fine.
        assert!(gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(1.5, 0.0), c(0.0, 1.0)).is_ok());
        let r = gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(1.5, 0.0), c(1.0, 0.0));
        assert!(matches!(r, Err(Error::ConvergenceFailure(_))));
        let r = gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0), c(0.1, 0.0));
        assert!(matches!(r, Err(Error::ParameterPole(_))));
    }
}
