//! Partner potential, magnetic field and vector potential for each family, consecutive j = 1.
//!
//!     cargo run --example partner_profiles

use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::{closed_forms, MagneticProfile, SusyTransform};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let models = [
        PotentialModel::shifted_ho(1.0, 1.0)?,
        PotentialModel::trig_rm(4.0, 1.0, -7.0)?,
        PotentialModel::hyp_rm(8.0, 1.0, 1.0)?,
    ];
    for m in models {
        let t = SusyTransform::consecutive(m, 1)?;
        let p = MagneticProfile::new(&t, m.default_grid())?;
        println!("{} (k = {:?})", m.family().name(), p.wavenumber());
        println!("{:>9} {:>12} {:>12} {:>12} {:>12} {:>12}", "x", "V0", "V2", "B", "B closed", "A");
        let step = p.x.len() / 8;
        for i in (step / 2..p.x.len()).step_by(step) {
            let x = p.x[i];
            let (b_closed, _) = closed_forms::consecutive_field(&m, x);
            println!("{x:>9.4} {:>12.6} {:>12.6} {:>12.6} {b_closed:>12.6} {:>12.6}", p.v0[i], p.v2[i], p.b[i], p.a[i]);
        }
        // V₂ = V₀ + 4B in these units.
        let worst = (0..p.x.len()).map(|i| (p.v2[i] - p.v0[i] - 4.0 * p.b[i]).abs()).fold(0.0, f64::max);
        println!("max |V2 - V0 - 4B| = {worst:.2e}\n");
    }
    Ok(())
}
