use proptest::prelude::*;

use bilayer_susy::bilayer::{electron_energy, electron_energy_closed_form, k_of_kappa, k_to_kappa, standard_ordering};
use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::{Direction, SusyTransform, TransformKind};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn oscillator_energies_match_closed_form(omega in 0.3f64..3.0, kappa in -2.0f64..2.0, j in 1usize..5, n in 0usize..12) {
        let t = SusyTransform::consecutive(PotentialModel::shifted_ho(omega, kappa).unwrap(), j).unwrap();
        let e = electron_energy(&t, n).unwrap();
        let c = electron_energy_closed_form(&t, n).unwrap();
        prop_assert!(e >= 0.0);
        prop_assert!((e - c).abs() <= 1e-12 * (1.0 + c));
    }

    #[test]
    fn rosen_morse_energies_match_closed_form(d in 1.0f64..6.0, alpha in 0.5f64..1.5, kappa in -3.0f64..3.0, n in 0usize..5) {
        let trig = SusyTransform::consecutive(PotentialModel::trig_rm(d, alpha, kappa).unwrap(), 1).unwrap();
        let c = electron_energy_closed_form(&trig, n).unwrap();
        prop_assert!((electron_energy(&trig, n).unwrap() - c).abs() <= 1e-10 * (1.0 + c));
        if let Ok(m) = PotentialModel::hyp_rm(d + 4.0, alpha, kappa) {
            if m.bound_state_count().unwrap() > n.max(2) {
                let hyp = SusyTransform::consecutive(m, 1).unwrap();
                let c = electron_energy_closed_form(&hyp, n).unwrap();
                prop_assert!((electron_energy(&hyp, n).unwrap() - c).abs() <= 1e-10 * (1.0 + c));
            }
        }
    }

    #[test]
    fn factorization_holds_for_trig_family(d in 2.0f64..6.0, kappa in -6.0f64..6.0, n in 0usize..5, u in 0.15f64..0.85) {
        let m = PotentialModel::trig_rm(d, 1.0, kappa).unwrap();
        let t = SusyTransform::consecutive(m, 1).unwrap();
        let x = u * std::f64::consts::PI;
        let st = m.eigenstate(n).unwrap();
        let psi = st.value(x);
        prop_assume!(psi.abs() > 1e-6);
        let factor = (st.energy - t.eps1()) * (st.energy - t.eps2());
        let back = t.apply_l2_at(Direction::Plus, x, t.l2_minus_jet(&st, x));
        if factor == 0.0 {
            prop_assert!(back.abs() < 1e-6);
        } else {
            prop_assert!((back - factor * psi).abs() < 1e-6 * (factor * psi).abs());
        }
    }

    #[test]
    fn v0_reconstructs_for_confluent_hyperbolic(kappa in -3.0f64..3.0, w0 in prop_oneof![-4.0f64..-0.05, 1.05f64..5.0], x in -4.0f64..4.0) {
        let m = PotentialModel::hyp_rm(8.0, 1.0, kappa).unwrap();
        let t = SusyTransform::confluent(m, 0, w0).unwrap();
        let v = m.potential(x).unwrap();
        prop_assert!((t.reconstruct_v0(x).unwrap() - v).abs() < 1e-6 * (1.0 + v.abs()));
    }

    #[test]
    fn confluent_w_is_monotone_and_bounded(w0 in prop_oneof![-4.0f64..-0.05, 1.05f64..5.0], a in -6.0f64..6.0, b in -6.0f64..6.0) {
        let t = SusyTransform::confluent(PotentialModel::shifted_ho(1.0, 0.5).unwrap(), 1, w0).unwrap();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (wl, wh) = (t.w(lo).unwrap(), t.w(hi).unwrap());
        // w′ = −ψ_j²: w falls from w₀ on the left to w₀ − 1 on the right.
        prop_assert!(wl >= wh - 1e-15);
        prop_assert!(wl <= w0 + 1e-12 && wh >= w0 - 1.0 - 1e-12);
    }

    #[test]
    fn standard_ordering_is_sorted_and_consistent(energies in proptest::collection::vec(prop_oneof![0.0f64..5.0, Just(1.0), Just(2.0)], 1..12)) {
        let levels: Vec<(usize, f64)> = energies.iter().copied().enumerate().collect();
        let o = standard_ordering(&levels);
        prop_assert_eq!(o.len(), levels.len());
        for w in o.windows(2) {
            prop_assert!(w[0].energy <= w[1].energy);
            prop_assert!(w[1].m_std == w[0].m_std || w[1].m_std == w[0].m_std + 1);
        }
        prop_assert_eq!(o[0].m_std, 0);
        for l in &o {
            if let Some(p) = l.degenerate_with {
                let partner = o.iter().find(|q| q.n_aux == p).unwrap();
                prop_assert_eq!(partner.m_std, l.m_std);
            }
        }
    }

    #[test]
    fn confluent_trig_round_trip(kappa in prop_oneof![0.2f64..10.0, -10.0f64..-0.2]) {
        let m = PotentialModel::trig_rm(2.0, 1.0, 1.0).unwrap();
        let kind = TransformKind::Confluent { j: 0, w0: -1.0 };
        let k = k_of_kappa(&m, kind, kappa).unwrap();
        prop_assert!((k - (kappa + 4.0 / kappa)).abs() < 1e-9 * (1.0 + k.abs()));
        let branches = k_to_kappa(&m, kind, k).unwrap();
        prop_assert!(branches.iter().any(|b| (b.kappa - kappa).abs() < 1e-7 * (1.0 + kappa.abs())), "{:?}", branches);
    }
}
