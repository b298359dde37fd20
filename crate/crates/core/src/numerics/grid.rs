use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Uniform 1-D discretization. Points are computed on demand, so the type is `Copy`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return invalid("grid bounds must be finite");
        }
        if x_min >= x_max {
            return invalid(format!("grid domain inverted or empty: [{x_min}, {x_max}]"));
        }
        if n_points < 3 {
            return invalid(format!("grid needs at least 3 points, got {n_points}"));
        }
        Ok(Self { x_min, x_max, n_points })
    }

    /// Grid with spacing as close as possible to (and not larger than) `h`.
    pub fn with_spacing(x_min: f64, x_max: f64, h: f64) -> Result<Self> {
        if !(h > 0.0) {
            return invalid("grid spacing must be positive");
        }
        let intervals = ((x_max - x_min) / h - 1e-9).ceil().max(2.0) as usize;
        Self::new(x_min, x_max, intervals + 1)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }
    pub fn x_max(&self) -> f64 {
        self.x_max
    }
    pub fn len(&self) -> usize {
        self.n_points
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + i as f64 * self.h()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.x(i)).collect()
    }

    pub fn sample<T, F: Fn(f64) -> T>(&self, f: F) -> SampledFunction<T> {
        SampledFunction { grid: *self, values: (0..self.n_points).map(|i| f(self.x(i))).collect() }
    }

    pub fn try_sample<T, F: Fn(f64) -> Result<T>>(&self, f: F) -> Result<SampledFunction<T>> {
        let values = (0..self.n_points).map(|i| f(self.x(i))).collect::<Result<Vec<T>>>()?;
        Ok(SampledFunction { grid: *self, values })
    }

    /// Index range of points whose distance from either end is at least `margin` points.
    pub fn interior(&self, margin: usize) -> std::ops::Range<usize> {
        margin.min(self.n_points)..self.n_points.saturating_sub(margin)
    }
}

/// Values of a function on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction<T = f64> {
    pub grid: Grid,
    pub values: Vec<T>,
}

pub type ComplexSampled = SampledFunction<Complex64>;

/// Minimal arithmetic needed by the stencils, implemented for `f64` and `Complex64`.
pub trait Field: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn is_finite_value(&self) -> bool;
    fn modulus(&self) -> f64;
}

impl Field for f64 {
    fn zero() -> Self {
        0.0
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
}

impl Field for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
}

impl<T: Field> SampledFunction<T> {
    pub fn new(grid: Grid, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return invalid(format!("{} values for a grid of {} points", values.len(), grid.len()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite_value()) {
            return invalid(format!("non-finite sample at x = {}", grid.x(i)));
        }
        Ok(Self { grid, values })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(Field::modulus).fold(0.0, f64::max)
    }

    pub fn map<U, F: Fn(T) -> U>(&self, f: F) -> SampledFunction<U> {
        SampledFunction { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn zip_with<U: Copy, V, F: Fn(T, U) -> V>(&self, other: &SampledFunction<U>, f: F) -> Result<SampledFunction<V>> {
        if self.grid != other.grid {
            return invalid("sampled functions live on different grids");
        }
        Ok(SampledFunction {
            grid: self.grid,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        })
    }
}

impl SampledFunction<f64> {
    pub fn to_complex(&self) -> ComplexSampled {
        self.map(|v| Complex64::new(v, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_grid() {
        let g = Grid::new(0.0, 1.0, 3).unwrap();
        assert_eq!(g.points(), vec![0.0, 0.5, 1.0]);
        assert_eq!(g.h(), 0.5);
    }

    #[test]
    fn spacing_of_standard_grid() {
        let g = Grid::new(-10.0, 10.0, 2001).unwrap();
        assert!((g.h() - 0.01).abs() < 1e-15);
        assert_eq!(g.x(2000), 10.0);
    }

    #[test]
    fn degenerate_domain_rejected() {
        assert!(Grid::new(1.0, 1.0, 10).is_err());
        assert!(Grid::new(2.0, 1.0, 10).is_err());
        assert!(Grid::new(0.0, 1.0, 2).is_err());
    }

    #[test]
    fn with_spacing_never_coarser() {
        let g = Grid::with_spacing(-12.0, 10.0, 0.01).unwrap();
        assert_eq!(g.len(), 2201);
        let g = Grid::with_spacing(0.0, std::f64::consts::PI, 0.0025).unwrap();
        assert!(g.h() <= 0.0025);
    }

    #[test]
    fn rejects_nonfinite_samples() {
        let g = Grid::new(0.0, 1.0, 3).unwrap();
        assert!(SampledFunction::new(g, vec![0.0, f64::NAN, 1.0]).is_err());
        assert!(SampledFunction::new(g, vec![0.0, 1.0]).is_err());
    }
}
