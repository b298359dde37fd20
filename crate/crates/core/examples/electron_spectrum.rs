//! Bilayer electron energies of every transform and their standard (sorted) labelling.
//! The oscillator with consecutive levels is degenerate; the others are not.
//!
//!     cargo run --example electron_spectrum

use bilayer_susy::bilayer::{electron_energy_closed_form, energies, standard_ordering};
use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::SusyTransform;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ho = PotentialModel::shifted_ho(1.0, 1.0)?;
    let trig = PotentialModel::trig_rm(4.0, 1.0, -7.0)?;
    let hyp = PotentialModel::hyp_rm(8.0, 1.0, 1.0)?;
    let cases = [
        ("shifted-ho consecutive j=2", SusyTransform::consecutive(ho, 2)?),
        ("trig-rm consecutive j=1", SusyTransform::consecutive(trig, 1)?),
        ("hyp-rm consecutive j=1", SusyTransform::consecutive(hyp, 1)?),
        ("shifted-ho confluent j=1", SusyTransform::confluent(ho, 1, -1.0)?),
        ("trig-rm confluent j=0", SusyTransform::confluent(trig, 0, -1.0)?),
    ];
    for (name, t) in &cases {
        let e = energies(t, 7)?;
        println!("{name}");
        let levels: Vec<(usize, f64)> = e.iter().copied().enumerate().collect();
        for l in standard_ordering(&levels) {
            let closed = electron_energy_closed_form(t, l.n_aux).map(|c| format!("{c:.10}")).unwrap_or_else(|_| "-".into());
            let tag = l.degenerate_with.map(|d| format!("  degenerate with n={d}")).unwrap_or_default();
            println!("  m={} n={}  E={:.10}  closed={closed}{tag}", l.m_std, l.n_aux, l.energy);
        }
    }
    Ok(())
}
