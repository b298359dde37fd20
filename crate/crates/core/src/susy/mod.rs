//! Second-order SUSY partners, magnetic profiles and their closed forms.

pub mod closed_forms;
mod confluent;
pub mod gauge;
mod profile;
mod transform;

pub use confluent::WTable;
pub use profile::MagneticProfile;
pub use transform::{Direction, EtaJet, SusyTransform, TransformKind};
