//! Second-order supersymmetric partners of exactly solvable potentials, and the magnetic fields
//! they induce for low-energy electrons in bilayer graphene.
//!
//! Units: ħ = e = 1 and the bilayer coupling absorbed, so Ẽ = 2E, B = η′/2, V₂ = V₀ + 4B and
//! A = η/2 − k in the Landau gauge. Three seed families (`potentials`) are transformed either by
//! deleting two consecutive levels or by the confluent (single-level, w₀-deformed) algorithm
//! (`susy`). `bilayer` builds the two-component states, energies and the κ ↔ k wavenumber map;
//! `observables` gives densities and currents; `cli` backs the `bilayer-susy` binary.
//!
//! Runnable tour (`cargo run --release --example <name>`):
//!
//! - `partner_profiles` — V₀, V₂, B and A per family, against the closed-form field
//! - `electron_spectrum` — energies, closed forms and the standard labelling with degeneracies
//! - `spinor_currents` — norms, ρ, Jx, Jy and the continuity residual
//! - `wavenumber_branches` — κ → k and every κ branch for a given k
//! - `oracle_check` — finite-difference spectrum of V₂ against the kept levels
//! - `confluent_limits` — ψ_j/w norms and the w₀ ∈ {0, 1} limits

pub mod error;
pub mod numerics;
pub mod special;
pub mod potentials;
pub mod susy;
pub mod bilayer;
pub mod observables;
pub mod cli;
