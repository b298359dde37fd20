//! Special functions needed by the eigenfunctions and the closed-form integrals.

mod beta;
mod gamma;
mod hyper;
mod orthopoly;
mod poly;

pub use beta::{beta, incomplete_beta};
pub use gamma::{erfc, gamma, gamma_complex, ln_gamma, lower_incomplete_gamma, upper_incomplete_gamma};
pub use hyper::{gauss_2f1, pochhammer};
pub use orthopoly::{hermite, hermite_poly, jacobi, jacobi_complex, jacobi_poly, orthopoly, OrthoFamily};
pub use poly::Poly;

/// Complex number type used throughout.
pub type ComplexValue = num_complex::Complex64;
