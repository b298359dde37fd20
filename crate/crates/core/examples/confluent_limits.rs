//! The confluent family at the edges of its admissible range. For w₀ ∈ {0, 1} the image of the
//! seed, ψ_j/w, stops being square integrable; for w₀ outside [0, 1] its norm is
//! 1/(w₀ − 1) − 1/w₀ and the seed level reappears as a bound state.
//!
//!     cargo run --release --example confluent_limits

use bilayer_susy::numerics::integrate;
use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::SusyTransform;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = PotentialModel::shifted_ho(1.0, 1.0)?;
    let (lo, hi) = m.deep_support(0);
    println!("shifted-ho, seed j=0");
    for w0 in [-2.0, -1.0, -0.1, 1.1, 2.0] {
        let t = SusyTransform::confluent(m, 0, w0)?;
        let mass = integrate(|x| t.confluent_seed_image(x).map_or(0.0, |[u, _, _]| u * u), lo, hi, 1e-10)?;
        println!("  w0={w0:>5}: ∫|ψ/w|² = {mass:.10}   expected {:.10}", 1.0 / (w0 - 1.0) - 1.0 / w0);
    }
    // At the limits the mass keeps growing as the window widens.
    for w0 in [0.0, 1.0] {
        let t = SusyTransform::confluent(m, 0, w0)?;
        let masses: Vec<String> = [0.5, 0.75, 0.95]
            .iter()
            .map(|f| {
                let (a, b) = (lo * f, hi * f);
                let v = integrate(|x| t.confluent_seed_image(x).map_or(0.0, |[u, _, _]| u * u), a, b, 1e-8).unwrap_or(f64::NAN);
                format!("{v:.3e}")
            })
            .collect();
        println!("  w0={w0}: windowed mass {} (diverges)", masses.join(" -> "));
    }
    // Inside the forbidden band w is singular somewhere and the transform is refused.
    match SusyTransform::confluent(m, 0, 0.5) {
        Ok(_) => println!("  w0=0.5 accepted?"),
        Err(e) => println!("  w0=0.5: {e}"),
    }
    Ok(())
}
