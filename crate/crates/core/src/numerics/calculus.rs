use crate::error::{invalid, Error, Result};

use super::grid::{Field, SampledFunction};

/// Finite-difference derivative of sampled data: five-point central stencils in the interior,
/// second-order one-sided stencils at the two outermost points on each side.
pub fn differentiate<T: Field>(f: &SampledFunction<T>, order: u8) -> Result<SampledFunction<T>> {
    let n = f.grid.len();
    if n < 5 {
        return invalid("differentiation needs at least 5 grid points");
    }
    let h = f.grid.h();
    let v = &f.values;
    let mut out = vec![T::zero(); n];
    match order {
        1 => {
            let c = 1.0 / (12.0 * h);
            for i in 2..n - 2 {
                out[i] = (v[i - 2] - v[i + 2] + (v[i + 1] - v[i - 1]) * 8.0) * c;
            }
            let c2 = 0.5 / h;
            out[0] = (v[1] * 4.0 - v[0] * 3.0 - v[2]) * c2;
            out[1] = (v[2] - v[0]) * c2;
            out[n - 2] = (v[n - 1] - v[n - 3]) * c2;
            out[n - 1] = (v[n - 1] * 3.0 - v[n - 2] * 4.0 + v[n - 3]) * c2;
        }
        2 => {
            let c = 1.0 / (12.0 * h * h);
            for i in 2..n - 2 {
                out[i] = ((v[i - 1] + v[i + 1]) * 16.0 - v[i - 2] - v[i + 2] - v[i] * 30.0) * c;
            }
            let c2 = 1.0 / (h * h);
            out[0] = (v[0] * 2.0 - v[1] * 5.0 + v[2] * 4.0 - v[3]) * c2;
            out[1] = (v[0] - v[1] * 2.0 + v[2]) * c2;
            out[n - 2] = (v[n - 3] - v[n - 2] * 2.0 + v[n - 1]) * c2;
            out[n - 1] = (v[n - 1] * 2.0 - v[n - 2] * 5.0 + v[n - 3] * 4.0 - v[n - 4]) * c2;
        }
        _ => return invalid(format!("unsupported derivative order {order}")),
    }
    Ok(SampledFunction { grid: f.grid, values: out })
}

/// W(f, g) = f g' − f' g with numerically differentiated inputs.
pub fn wronskian(f: &SampledFunction, g: &SampledFunction) -> Result<SampledFunction> {
    if f.grid != g.grid {
        return invalid("wronskian of functions on different grids");
    }
    let fp = differentiate(f, 1)?;
    let gp = differentiate(g, 1)?;
    wronskian_with(f, &fp, g, &gp)
}

/// W(f, g) from supplied derivatives (analytic closures sampled by the caller).
pub fn wronskian_with(
    f: &SampledFunction,
    fp: &SampledFunction,
    g: &SampledFunction,
    gp: &SampledFunction,
) -> Result<SampledFunction> {
    let grid = f.grid;
    if fp.grid != grid || g.grid != grid || gp.grid != grid {
        return invalid("wronskian of functions on different grids");
    }
    let values = (0..grid.len()).map(|i| f.values[i] * gp.values[i] - fp.values[i] * g.values[i]).collect();
    Ok(SampledFunction { grid, values })
}

const MAX_REFINEMENTS: u32 = 24;
const MIN_REFINEMENTS: u32 = 4;
const ABS_FLOOR: f64 = 1e-14;

/// Composite Simpson rule with interval halving until two successive estimates agree to
/// `rel_tol` (or to 1e-14 absolutely when the integral is near zero).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    if !(a < b) {
        return invalid(format!("integration bounds must satisfy a < b, got [{a}, {b}]"));
    }
    if !(rel_tol > 0.0) {
        return invalid("rel_tol must be positive");
    }
    let mut n = 2usize;
    let mut h = (b - a) / n as f64;
    let ends = f(a) + f(b);
    let mid = f(a + h);
    let mut trap = 0.5 * h * (ends + 2.0 * mid);
    let mut simpson = h / 3.0 * (ends + 4.0 * mid);
    for level in 1..=MAX_REFINEMENTS {
        n *= 2;
        h *= 0.5;
        let new_sum: f64 = (0..n / 2).map(|i| f(a + (2 * i + 1) as f64 * h)).sum();
        let trap_new = 0.5 * trap + h * new_sum;
        let simpson_new = (4.0 * trap_new - trap) / 3.0;
        if !simpson_new.is_finite() {
            return Err(Error::ConvergenceFailure(format!("non-finite integrand on [{a}, {b}]")));
        }
        let diff = (simpson_new - simpson).abs();
        if level >= MIN_REFINEMENTS && (diff <= rel_tol * simpson_new.abs() || diff <= ABS_FLOOR) {
            return Ok(simpson_new);
        }
        trap = trap_new;
        simpson = simpson_new;
    }
    Err(Error::ConvergenceFailure(format!(
        "Simpson quadrature on [{a}, {b}] not converged after {MAX_REFINEMENTS} halvings"
    )))
}

/// Composite Simpson over all samples (3/8 rule on the last three intervals when the count is odd).
pub fn integrate_sampled<T: Field>(f: &SampledFunction<T>) -> T {
    let v = &f.values;
    let h = f.grid.h();
    let intervals = v.len() - 1;
    let simpson = |lo: usize, hi: usize| -> T {
        let mut acc = v[lo] + v[hi];
        for i in (lo + 1)..hi {
            acc = acc + v[i] * if (i - lo) % 2 == 1 { 4.0 } else { 2.0 };
        }
        acc * (h / 3.0)
    };
    if intervals % 2 == 0 {
        simpson(0, intervals)
    } else if intervals == 1 {
        (v[0] + v[1]) * (0.5 * h)
    } else {
        let m = intervals - 3;
        let head = if m > 0 { simpson(0, m) } else { T::zero() };
        head + (v[m] + (v[m + 1] + v[m + 2]) * 3.0 + v[m + 3]) * (3.0 * h / 8.0)
    }
}

/// Trapezoid rule over all samples.
pub fn trapezoid(f: &SampledFunction) -> f64 {
    let v = &f.values;
    let inner: f64 = v[1..v.len() - 1].iter().sum();
    f.grid.h() * (inner + 0.5 * (v[0] + v[v.len() - 1]))
}

const GL8_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL8_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// Eight-point Gauss–Legendre rule on [a, b].
pub fn gauss_legendre8<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    let mut s = 0.0;
    for k in 0..4 {
        let d = r * GL8_NODES[k];
        s += GL8_WEIGHTS[k] * (f(c - d) + f(c + d));
    }
    s * r
}

/// Running integral ∫_{x_0}^{x_i} f at every grid point, panel by panel with Gauss–Legendre.
pub fn cumulative_integral<F: Fn(f64) -> f64>(f: &F, grid: &super::Grid) -> Vec<f64> {
    let mut out = Vec::with_capacity(grid.len());
    let mut acc = 0.0;
    out.push(0.0);
    for i in 1..grid.len() {
        acc += gauss_legendre8(f, grid.x(i - 1), grid.x(i));
        out.push(acc);
    }
    out
}

/// Five-point central derivative of a callable at x with step `step`.
pub fn derivative5<F: Fn(f64) -> f64>(f: &F, x: f64, step: f64, order: u8) -> f64 {
    let (m2, m1, p1, p2) = (f(x - 2.0 * step), f(x - step), f(x + step), f(x + 2.0 * step));
    match order {
        1 => (m2 - p2 + 8.0 * (p1 - m1)) / (12.0 * step),
        _ => (16.0 * (m1 + p1) - m2 - p2 - 30.0 * f(x)) / (12.0 * step * step),
    }
}
