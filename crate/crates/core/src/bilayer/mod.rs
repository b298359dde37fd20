//! Bilayer-graphene spinors and energies built on the auxiliary SUSY problem, plus the κ ↔ k link.

mod energy;
mod ordering;
mod spinor;
mod wavenumber;

pub use energy::{electron_energy, electron_energy_closed_form, electron_energy_for, energies, energies_for};
pub use ordering::{relabel, standard_ordering, OrderedLevel, DEGENERACY_TOL};
pub use spinor::{spinor_state, Spinor, SpinorPoint, SpinorState, UpperKind};
pub use wavenumber::{
    closed_form_k, constancy_tolerance, k_of_kappa, k_to_kappa, kappa_to_k, lowest_nonzero_energy, KappaBranch, WavenumberRelation,
    KAPPA_SEARCH_LIMIT,
};
