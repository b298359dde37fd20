use num_complex::Complex64;

use crate::error::{invalid, Result};

use super::poly::Poly;
use super::pochhammer;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrthoFamily {
    Hermite,
    Jacobi { alpha: Complex64, beta: Complex64 },
}

/// Hermite (physicists') or Jacobi polynomial of degree `n` at `x`.
///
/// Real parameters with a real argument use the three-term recurrence; anything complex goes
/// through the terminating hypergeometric sum. The Jacobi polynomial is entire in its
/// parameters, so values of α for which (α+1)_n vanishes need no special treatment: the sum is
/// written with (α+k+1)_{n−k} instead of (α+1)_n/(α+1)_k.
pub fn orthopoly(family: OrthoFamily, n: i64, x: Complex64) -> Result<Complex64> {
    if n < 0 {
        return invalid(format!("polynomial degree must be non-negative, got {n}"));
    }
    let n = n as usize;
    match family {
        OrthoFamily::Hermite => {
            if x.im == 0.0 {
                Ok(Complex64::new(hermite(n, x.re), 0.0))
            } else {
                Ok(hermite_complex(n, x))
            }
        }
        OrthoFamily::Jacobi { alpha, beta } => {
            if alpha.im == 0.0 && beta.im == 0.0 && x.im == 0.0 {
                Ok(Complex64::new(jacobi(n, alpha.re, beta.re, x.re), 0.0))
            } else {
                Ok(jacobi_complex(n, alpha, beta, x))
            }
        }
    }
}

pub fn hermite(n: usize, x: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, 2.0 * x);
    if n == 0 {
        return h0;
    }
    for k in 1..n {
        let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

fn hermite_complex(n: usize, x: Complex64) -> Complex64 {
    let (mut h0, mut h1) = (Complex64::new(1.0, 0.0), x * 2.0);
    if n == 0 {
        return h0;
    }
    for k in 1..n {
        let h2 = x * h1 * 2.0 - h0 * (2.0 * k as f64);
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// Real Jacobi polynomial by recurrence (falls back to the explicit sum at degenerate parameters).
pub fn jacobi(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    if n == 1 {
        return p1;
    }
    let (mut pm, mut p) = (1.0, p1);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let den = 2.0 * k * (k + a + b) * (s - 2.0);
        if den == 0.0 || (s - 1.0) == 0.0 {
            return jacobi_complex(n, Complex64::new(a, 0.0), Complex64::new(b, 0.0), Complex64::new(x, 0.0)).re;
        }
        let next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * p - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * pm) / den;
        pm = p;
        p = next;
    }
    p
}

/// Coefficients c_k of P_n = Σ c_k ((x−1)/2)^k ((x+1)/2)^{n−k}, i.e. C(n+a, n−k)·C(n+b, k).
fn jacobi_terms(n: usize, a: Complex64, b: Complex64) -> Vec<Complex64> {
    let mut fact = vec![1.0f64; n + 1];
    for k in 1..=n {
        fact[k] = fact[k - 1] * k as f64;
    }
    (0..=n)
        .map(|k| {
            pochhammer(a + (k as f64 + 1.0), n - k) * pochhammer(b + ((n - k) as f64 + 1.0), k) / (fact[n - k] * fact[k])
        })
        .collect()
}

/// Jacobi polynomial with complex parameters and argument via the terminating sum.
pub fn jacobi_complex(n: usize, a: Complex64, b: Complex64, x: Complex64) -> Complex64 {
    let minus = (x - 1.0) * 0.5;
    let plus = (x + 1.0) * 0.5;
    let terms = jacobi_terms(n, a, b);
    if plus.norm() >= minus.norm() {
        let t = minus / plus;
        terms.iter().rev().fold(Complex64::default(), |acc, &c| acc * t + c) * plus.powu(n as u32)
    } else {
        let t = plus / minus;
        terms.iter().fold(Complex64::default(), |acc, &c| acc * t + c) * minus.powu(n as u32)
    }
}

/// Coefficients of H_n(z) in powers of z.
pub fn hermite_poly(n: usize) -> Poly {
    let mut h0 = Poly::from_real(&[1.0]);
    if n == 0 {
        return h0;
    }
    let two_z = Poly::from_real(&[0.0, 2.0]);
    let mut h1 = two_z.clone();
    for k in 1..n {
        let h2 = two_z.mul(&h1).sub(&h0.scale(Complex64::new(2.0 * k as f64, 0.0)));
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// Coefficients of P_n^{(a,b)}(z) in powers of z.
pub fn jacobi_poly(n: usize, a: Complex64, b: Complex64) -> Poly {
    let minus = Poly::from_real(&[-0.5, 0.5]);
    let plus = Poly::from_real(&[0.5, 0.5]);
    let mut out = Poly::from_real(&[0.0]);
    for (k, c) in jacobi_terms(n, a, b).into_iter().enumerate() {
        let mut term = Poly::constant(c);
        for _ in 0..k {
            term = term.mul(&minus);
        }
        for _ in k..n {
            term = term.mul(&plus);
        }
        out = out.add(&term);
    }
    out
}
