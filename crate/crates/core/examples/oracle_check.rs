//! Independent check of the deletion/insertion claims: diagonalize −d²/dx² + V₂ by finite
//! differences and compare with the levels the transform is supposed to keep.
//!
//!     cargo run --release --example oracle_check

use bilayer_susy::cli::verify::expected_partner_levels;
use bilayer_susy::numerics::fd_spectrum;
use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::{MagneticProfile, SusyTransform};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ho = PotentialModel::shifted_ho(1.0, 1.0)?;
    let trig = PotentialModel::trig_rm(4.0, 1.0, -7.0)?;
    let hyp = PotentialModel::hyp_rm(8.0, 1.0, 1.0)?;
    let cases = [
        ("shifted-ho consecutive j=1", SusyTransform::consecutive(ho, 1)?),
        ("trig-rm consecutive j=1", SusyTransform::consecutive(trig, 1)?),
        ("hyp-rm consecutive j=1", SusyTransform::consecutive(hyp, 1)?),
        ("shifted-ho confluent j=0", SusyTransform::confluent(ho, 0, -1.0)?),
        ("trig-rm confluent j=0", SusyTransform::confluent(trig, 0, -1.0)?),
        ("hyp-rm confluent j=0", SusyTransform::confluent(hyp, 0, -1.0)?),
    ];
    for (name, t) in &cases {
        let p = MagneticProfile::new(t, t.model().default_grid())?;
        let expected = expected_partner_levels(t, 5)?;
        let oracle = fd_spectrum(&p.sampled(&p.v2)?, expected.len())?;
        println!("{name} (deleted: {:?})", t.kind().deleted_levels());
        for (e, o) in expected.iter().zip(&oracle.eigenvalues) {
            println!("  kept {e:>12.6}  finite-difference {o:>12.6}  rel {:.1e}", (e - o).abs() / (1.0 + e.abs()));
        }
    }
    Ok(())
}
