//! In the confluent limits w₀ ∈ {0, 1} the candidate partner state ψ_j/w is not square
//! integrable, so the seed energy leaves the spectrum of H₂ and the bilayer state at n = j keeps
//! only its lower component. Checked per family by widening the integration window.

use bilayer_susy::bilayer::Spinor;
use bilayer_susy::numerics::integrate;
use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::SusyTransform;

/// ∫ (ψ_j/w)² over [a, b].
fn image_mass(t: &SusyTransform, a: f64, b: f64) -> f64 {
    let seed = t.model().eigenstate(t.j()).unwrap();
    integrate(|x| (seed.value(x) / t.w(x).unwrap()).powi(2), a, b, 1e-9).unwrap()
}

/// Windows moving into the tail where w → 0: toward the left end for w₀ = 0, the right for w₀ = 1.
fn windows(m: &PotentialModel, w0: f64) -> (f64, [f64; 3]) {
    let (lo, hi) = m.support(0);
    let mid = 0.5 * (lo + hi);
    let outward = |f: f64| if w0 == 0.0 { mid - f * (mid - lo) } else { mid + f * (hi - mid) };
    (mid, [outward(0.5), outward(0.75), outward(0.95)])
}

fn growth(t: &SusyTransform, w0: f64) -> Vec<f64> {
    let (mid, xs) = windows(t.model(), w0);
    xs.iter().map(|&x| if x < mid { image_mass(t, x, mid) } else { image_mass(t, mid, x) }).collect()
}

fn models() -> Vec<PotentialModel> {
    vec![
        PotentialModel::shifted_ho(1.0, 1.0).unwrap(),
        PotentialModel::trig_rm(4.0, 1.0, -7.0).unwrap(),
        PotentialModel::hyp_rm(8.0, 1.0, 1.0).unwrap(),
    ]
}

#[test]
fn seed_image_diverges_in_the_limit_cases() {
    for m in models() {
        for w0 in [0.0, 1.0] {
            let t = SusyTransform::confluent(m, 0, w0).unwrap();
            let g = growth(&t, w0);
            println!("{:>10} w0={w0}: window masses {g:?}", m.family().name());
            assert!(g[1] > 10.0 * g[0] && g[2] > 10.0 * g[1], "{:?} w0={w0}: {g:?}", m.family());
            assert!(!Spinor::new(&t, 0).unwrap().two_component());
        }
    }
}

#[test]
fn seed_image_converges_when_isospectral() {
    for m in models() {
        for w0 in [-1.0, 2.0] {
            let t = SusyTransform::confluent(m, 0, w0).unwrap();
            let (lo, hi) = m.support(0);
            let (dlo, dhi) = m.domain();
            let total = image_mass(&t, lo.max(dlo), hi.min(dhi));
            // ∫ψ²/w² = 1/(w₀ − 1) − 1/w₀ exactly.
            let want = 1.0 / (w0 - 1.0) - 1.0 / w0;
            assert!((total - want).abs() < 1e-6 * want, "{:?} w0={w0}: {total} vs {want}", m.family());
            assert!(Spinor::new(&t, 0).unwrap().two_component());
        }
    }
}
