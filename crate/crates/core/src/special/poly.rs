use num_complex::Complex64;

/// Dense polynomial with complex coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<Complex64>);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl Poly {
    pub fn constant(v: Complex64) -> Self {
        Poly(vec![v])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly(coeffs.iter().map(|&v| c(v)).collect())
    }

    /// Degree after ignoring coefficients below `tol` relative to the largest one.
    pub fn degree(&self, tol: f64) -> usize {
        let big = self.0.iter().map(|v| v.norm()).fold(0.0, f64::max);
        self.0.iter().rposition(|v| v.norm() > tol * big).unwrap_or(0)
    }

    pub fn trimmed(&self, tol: f64) -> Self {
        Poly(self.0[..=self.degree(tol)].to_vec())
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.0.get(k).copied().unwrap_or_default()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::default(), |acc, &a| acc * z + a)
    }

    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(c(x))
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Poly(vec![Complex64::default()]);
        }
        Poly(self.0.iter().enumerate().skip(1).map(|(k, &a)| a * k as f64).collect())
    }

    pub fn add(&self, o: &Poly) -> Self {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Self {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Self {
        let mut out = vec![Complex64::default(); self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Poly(self.0.iter().map(|&a| a * s).collect())
    }

    /// p(s·z): rescale the variable.
    pub fn rescale_var(&self, s: Complex64) -> Self {
        let mut f = c(1.0);
        Poly(
            self.0
                .iter()
                .map(|&a| {
                    let v = a * f;
                    f *= s;
                    v
                })
                .collect(),
        )
    }

    /// Quotient and remainder of division by `d` (leading coefficient taken at `d`'s trimmed degree).
    pub fn divrem(&self, d: &Poly, tol: f64) -> (Poly, Poly) {
        let d = d.trimmed(tol);
        let m = d.0.len() - 1;
        let lead = d.0[m];
        let mut r = self.0.clone();
        if r.len() <= m {
            return (Poly(vec![Complex64::default()]), Poly(r));
        }
        let mut q = vec![Complex64::default(); r.len() - m];
        for k in (0..q.len()).rev() {
            let t = r[k + m] / lead;
            q[k] = t;
            for (i, &di) in d.0.iter().enumerate() {
                r[k + i] -= t * di;
            }
        }
        r.truncate(m.max(1));
        (Poly(q), Poly(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_division_roundtrip() {
        let a = Poly::from_real(&[1.0, -2.0, 0.5, 3.0]);
        let d = Poly::from_real(&[2.0, 1.0, 1.0]);
        let (q, r) = a.divrem(&d, 1e-14);
        let back = q.mul(&d).add(&r);
        for k in 0..4 {
            assert!((back.coeff(k) - a.coeff(k)).norm() < 1e-14);
        }
        assert_eq!(r.0.len(), 2);
        assert!((a.derivative().eval_real(2.0).re - (-2.0 + 2.0 * 0.5 * 2.0 + 9.0 * 4.0)).abs() < 1e-13);
    }

    #[test]
    fn rescaling_variable() {
        let p = Poly::from_real(&[1.0, 1.0, 1.0]);
        let q = p.rescale_var(Complex64::new(0.0, 1.0));
        let z = Complex64::new(0.3, -0.2);
        assert!((q.eval(z) - p.eval(z * Complex64::new(0.0, 1.0))).norm() < 1e-15);
    }
}
