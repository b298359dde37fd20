//! Grids, stencils, quadrature and the finite-difference eigenvalue oracle.

mod calculus;
mod fd;
mod grid;

pub use calculus::{
    cumulative_integral, derivative5, differentiate, gauss_legendre8, integrate, integrate_sampled, trapezoid, wronskian,
    wronskian_with,
};
pub use fd::{fd_spectrum, OracleSpectrum};
pub use grid::{ComplexSampled, Field, Grid, SampledFunction};
