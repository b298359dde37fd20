/// Relative tolerance for calling two energies degenerate.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// One labelled level of the standard ordering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderedLevel {
    pub n_aux: usize,
    pub m_std: usize,
    pub energy: f64,
    pub degenerate_with: Option<usize>,
}

/// Stable sort by energy; degenerate energies share one standard index m.
pub fn standard_ordering(levels: &[(usize, f64)]) -> Vec<OrderedLevel> {
    let mut sorted: Vec<(usize, f64)> = levels.to_vec();
    sorted.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut out: Vec<OrderedLevel> = Vec::with_capacity(sorted.len());
    let mut m = 0usize;
    for (i, &(n, e)) in sorted.iter().enumerate() {
        if i > 0 {
            let prev = out[i - 1];
            if (e - prev.energy).abs() < DEGENERACY_TOL * (1.0 + prev.energy.abs()) {
                out.push(OrderedLevel { n_aux: n, m_std: prev.m_std, energy: e, degenerate_with: Some(prev.n_aux) });
                if out[i - 1].degenerate_with.is_none() {
                    out[i - 1].degenerate_with = Some(n);
                }
                continue;
            }
            m += 1;
        }
        out.push(OrderedLevel { n_aux: n, m_std: m, energy: e, degenerate_with: None });
    }
    out
}

/// Applies an ordering to sampled states in place.
pub fn relabel(states: &mut [super::SpinorState]) {
    let levels: Vec<(usize, f64)> = states.iter().map(|s| (s.n_aux, s.energy)).collect();
    let order = standard_ordering(&levels);
    for s in states.iter_mut() {
        let o = order.iter().find(|o| o.n_aux == s.n_aux).expect("every state is ordered");
        s.m_std = o.m_std;
        s.degenerate_with = o.degenerate_with;
    }
    states.sort_by_key(|s| (s.m_std, s.n_aux));
}
