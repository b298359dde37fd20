//! κ → k from the constant part of η, and back: k → all κ branches, with the branch whose
//! spectrum is convex in k flagged as physical.
//!
//!     cargo run --example wavenumber_branches

use bilayer_susy::bilayer::{k_to_kappa, kappa_to_k};
use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::{SusyTransform, TransformKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("shifted-ho consecutive j=1", PotentialModel::shifted_ho(1.0, 1.0)?, TransformKind::Consecutive { j: 1 }),
        ("trig-rm consecutive j=1", PotentialModel::trig_rm(4.0, 1.0, -7.0)?, TransformKind::Consecutive { j: 1 }),
        ("hyp-rm consecutive j=1", PotentialModel::hyp_rm(8.0, 1.0, 1.0)?, TransformKind::Consecutive { j: 1 }),
        ("trig-rm confluent j=0", PotentialModel::trig_rm(2.0, 1.0, 1.0)?, TransformKind::Confluent { j: 0, w0: -1.0 }),
    ];
    for (name, m, kind) in cases {
        let t = SusyTransform::new(m, kind)?;
        let rel = kappa_to_k(&t, &m.default_grid())?;
        println!(
            "{name}: kappa={} -> k={:.12} (closed form {:?}, spread of η - 2A = {:.1e})",
            rel.kappa, rel.k, rel.closed_form, rel.constancy_std
        );
        for k in [-3.0, 0.5, 5.0] {
            match k_to_kappa(&m, kind, k) {
                Ok(branches) => {
                    let list: Vec<String> = branches
                        .iter()
                        .map(|b| format!("{:.9}{}{}", b.kappa, if b.physical { " (physical)" } else { "" }, if b.multiplicity > 1 { " (double)" } else { "" }))
                        .collect();
                    println!("    k={k:>5}: {}", list.join(", "));
                }
                Err(e) => println!("    k={k:>5}: {e}"),
            }
        }
    }

    // Oscillator confluent with w0 ≠ 0: C₁ does not depend on κ at all.
    let t = SusyTransform::confluent(PotentialModel::shifted_ho(1.0, 1.0)?, 0, -1.0)?;
    match kappa_to_k(&t, &t.model().default_grid()) {
        Ok(r) => println!("shifted-ho confluent: k={}", r.k),
        Err(e) => println!("shifted-ho confluent: {e}"),
    }
    Ok(())
}
