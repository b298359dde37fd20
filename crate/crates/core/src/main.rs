use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bilayer_susy::cli::{self, Format, Range3, RunConfig, TransformName};
use bilayer_susy::potentials::Family;

/// Second-order SUSY magnetic fields for electrons in bilayer graphene.
#[derive(Parser)]
#[command(name = "bilayer-susy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sampled V0, V2, B, A and f_extra.
    Profile(Flags),
    /// Electron energies over a k sweep.
    Spectrum(Flags),
    /// Spinor components, density and currents of one level.
    State(Flags),
    /// Run the invariant suite; exit 1 if any check fails.
    Verify(Flags),
}

#[derive(Args)]
struct Flags {
    /// JSON file mirroring the run configuration; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long = "D")]
    d: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<f64>,
    #[arg(long, value_enum)]
    transform: Option<TransformName>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    w0: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    /// "min,max,N"
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<Range3>,
    /// k sweep for `spectrum`, "min,max,N"
    #[arg(long, allow_hyphen_values = true)]
    ksweep: Option<Range3>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
}

impl Flags {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            family: self.family,
            omega: self.omega,
            d: self.d,
            alpha: self.alpha,
            kappa: self.kappa,
            k: self.k,
            transform: self.transform,
            j: self.j,
            w0: self.w0,
            n: self.n,
            nmax: self.nmax,
            grid: self.grid,
            ksweep: self.ksweep,
            format: self.format,
            out: self.out.clone(),
            tol: self.tol,
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (name, flags) = match &args.command {
        Command::Profile(f) => ("profile", f),
        Command::Spectrum(f) => ("spectrum", f),
        Command::State(f) => ("state", f),
        Command::Verify(f) => ("verify", f),
    };
    let result = (|| {
        let base = match &flags.config {
            Some(p) => RunConfig::from_file(p)?,
            None => RunConfig::default(),
        };
        let resolved = base.overridden_by(&flags.run_config()).resolve()?;
        let outcome = match name {
            "profile" => cli::cmd_profile(&resolved)?,
            "spectrum" => cli::cmd_spectrum(&resolved)?,
            "state" => cli::cmd_state(&resolved)?,
            _ => cli::cmd_verify(&resolved)?,
        };
        cli::emit(&outcome.table, &outcome.meta, resolved.format() == Format::Json, resolved.config.out.as_deref())?;
        Ok::<bool, bilayer_susy::error::Error>(outcome.passed)
    })();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("bilayer-susy {name}: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("bilayer-susy {name}: {e}");
            ExitCode::from(2)
        }
    }
}
