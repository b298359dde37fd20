use crate::error::{invalid, Result};

use super::grid::{Grid, SampledFunction};

/// Lowest Dirichlet eigenpairs of −d²/dx² + V on the grid (3-point Laplacian).
#[derive(Debug, Clone)]
pub struct OracleSpectrum {
    pub grid: Grid,
    pub eigenvalues: Vec<f64>,
    /// Full-length columns (zero at both ends), normalized so that Σ v² h = 1.
    pub eigenvectors: Vec<Vec<f64>>,
}

struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    /// Number of eigenvalues strictly below `lambda` (Sturm sequence).
    fn count_below(&self, lambda: f64) -> usize {
        let e2 = self.off * self.off;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - lambda } else { d - lambda - e2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + self.off.abs()).max(1.0);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn bounds(&self) -> (f64, f64) {
        let r = 2.0 * self.off.abs();
        let lo = self.diag.iter().cloned().fold(f64::INFINITY, f64::min) - r;
        let hi = self.diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + r;
        (lo, hi)
    }

    /// k-th eigenvalue (0-based) by bisection.
    fn eigenvalue(&self, k: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..400 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1.0) {
                break;
            }
        }
        0.5 * (lo + hi)
    }

    /// Solve (T − σ) y = b by Gaussian elimination with partial pivoting.
    fn shifted_solve(&self, sigma: f64, b: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        // Rows hold (sub, diag, sup, sup2) after pivoting.
        let mut d: Vec<f64> = self.diag.iter().map(|v| v - sigma).collect();
        let mut du = vec![self.off; n];
        let mut du2 = vec![0.0; n];
        let mut dl = vec![self.off; n];
        let mut rhs = b.to_vec();
        let tiny = f64::EPSILON * (self.off.abs() + d.iter().fold(0.0f64, |m, v| m.max(v.abs())));
        for i in 0..n - 1 {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                let m = dl[i] / d[i];
                d[i + 1] -= m * du[i];
                rhs[i + 1] -= m * rhs[i];
                du2[i] = 0.0;
            } else {
                let m = d[i] / dl[i];
                d[i] = dl[i];
                let tmp = d[i + 1];
                d[i + 1] = du[i] - m * tmp;
                if i + 1 < n - 1 {
                    du2[i] = du[i + 1];
                    du[i + 1] = -m * du[i + 1];
                }
                du[i] = tmp;
                rhs.swap(i, i + 1);
                rhs[i + 1] -= m * rhs[i];
            }
            dl[i] = 0.0;
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = tiny;
        }
        let mut y = vec![0.0; n];
        y[n - 1] = rhs[n - 1] / d[n - 1];
        if n > 1 {
            y[n - 2] = (rhs[n - 2] - du[n - 2] * y[n - 1]) / d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            y[i] = (rhs[i] - du[i] * y[i + 1] - du2[i] * y[i + 2]) / d[i];
        }
        y
    }
}

/// Oracle spectrum: Sturm bisection for eigenvalues, inverse iteration for eigenvectors.
pub fn fd_spectrum(v: &SampledFunction, count: usize) -> Result<OracleSpectrum> {
    let grid = v.grid;
    let interior = grid.len() - 2;
    if count == 0 {
        return invalid("count must be at least 1");
    }
    if count > interior {
        return invalid(format!("requested {count} eigenvalues but only {interior} interior points"));
    }
    let h = grid.h();
    let inv_h2 = 1.0 / (h * h);
    let t = Tridiagonal { diag: v.values[1..grid.len() - 1].iter().map(|&vi| 2.0 * inv_h2 + vi).collect(), off: -inv_h2 };
    let (lo, hi) = t.bounds();

    let mut eigenvalues = Vec::with_capacity(count);
    let mut eigenvectors: Vec<Vec<f64>> = Vec::with_capacity(count);
    for k in 0..count {
        let lower = eigenvalues.last().copied().unwrap_or(lo).max(lo);
        let lambda = t.eigenvalue(k, lower.min(hi), hi);
        eigenvalues.push(lambda);

        let scale = lambda.abs().max(inv_h2);
        let sigma = lambda + 1e-12 * scale;
        let mut y: Vec<f64> = (0..interior).map(|i| 1.0 + 0.1 * ((i * 7919 + k * 104729) % 97) as f64 / 97.0).collect();
        for _ in 0..4 {
            y = t.shifted_solve(sigma, &y);
            for prev in &eigenvectors {
                let dot: f64 = prev[1..=interior].iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() * h;
                for (yi, pi) in y.iter_mut().zip(&prev[1..=interior]) {
                    *yi -= dot * pi;
                }
            }
            let norm = (y.iter().map(|a| a * a).sum::<f64>() * h).sqrt();
            y.iter_mut().for_each(|a| *a /= norm);
        }
        let mut col = vec![0.0; grid.len()];
        col[1..=interior].copy_from_slice(&y);
        eigenvectors.push(col);
    }
    Ok(OracleSpectrum { grid, eigenvalues, eigenvectors })
}
