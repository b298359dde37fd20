//! Configuration, output tables and the four commands behind the `bilayer-susy` binary.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

pub use commands::{cmd_profile, cmd_spectrum, cmd_state, cmd_verify, Outcome};
pub use config::{Format, Range3, Resolved, RunConfig, TransformName};
pub use output::{emit, sidecar_path, Cell, Table};
