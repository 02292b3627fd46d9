use std::collections::HashMap;

use circuit_core::{concat, Circuit, PauliOp, PauliString};
use rand::Rng;
use sim_stabilizer::StabilizerTableau;

use crate::error::CliffordError;
use crate::layers::make_mu_layer;

/// Monte-Carlo estimate of the layer-separated error-cancellation
/// probability M_k: draw k random truncated layers L_1..L_k forming U,
/// conjugate every weight-`weight` Pauli Q supported inside U's gate
/// support to P = U'QU (sign discarded), and report the highest conditional
/// frequency of any (Q, P) pair over `trials` draws.
///
/// `weight` selects the exact Pauli weight of the probe class; the per-class
/// curves are the meaningful quantity (cancellation probability falls as the
/// probe weight grows), and enumerating a class costs O(n^weight), which is
/// why the probe weight is capped at 3.
pub fn estimate_mk(
    n: usize,
    mu: f64,
    k: usize,
    weight: usize,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<f64, CliffordError> {
    if !(1..=3).contains(&weight) {
        return Err(CliffordError::Config(format!(
            "probe weight {weight} violates 1 <= weight <= 3"
        )));
    }
    if n == 0 || n > 64 {
        return Err(CliffordError::Config(format!(
            "qubit count {n} outside the supported range 1..=64"
        )));
    }
    if k == 0 || trials == 0 {
        return Err(CliffordError::Config(
            "layer count and trial count must be positive".into(),
        ));
    }
    // Pauli keys pack the single x and z words (sign excluded; n <= 64).
    let mut eligible: HashMap<(u64, u64), u64> = HashMap::new();
    let mut pairs: HashMap<((u64, u64), (u64, u64)), u64> = HashMap::new();
    for _ in 0..trials {
        let mut u = Circuit::new(n);
        for _ in 0..k {
            let (layer, _) = make_mu_layer(n, mu, rng)?;
            u = concat(&u, &layer)?;
        }
        let mut support: Vec<usize> = u
            .moments()
            .iter()
            .flatten()
            .flat_map(|g| g.qubits().collect::<Vec<_>>())
            .collect();
        support.sort_unstable();
        support.dedup();
        if support.len() < weight {
            continue;
        }
        let tableau = StabilizerTableau::from_circuit(&u.inverse())?;
        for_each_subset(&support, weight, &mut |qubits| {
            for letters in 0..3usize.pow(weight as u32) {
                let mut q = PauliString::identity(n);
                let mut code = letters;
                for &qubit in qubits {
                    let op = match code % 3 {
                        0 => PauliOp::X,
                        1 => PauliOp::Y,
                        _ => PauliOp::Z,
                    };
                    q.set_op(qubit, op);
                    code /= 3;
                }
                let key_q = (q.x_words()[0], q.z_words()[0]);
                let p = tableau
                    .image(&q)
                    .expect("probe length matches tableau by construction");
                let key_p = (p.x_words()[0], p.z_words()[0]);
                *eligible.entry(key_q).or_insert(0) += 1;
                *pairs.entry((key_q, key_p)).or_insert(0) += 1;
            }
        });
    }
    Ok(pairs
        .iter()
        .map(|(&(key_q, _), &count)| count as f64 / eligible[&key_q] as f64)
        .fold(0.0, f64::max))
}

/// Call `f` with every size-`w` subset of `items`, in lexicographic order.
fn for_each_subset(items: &[usize], w: usize, f: &mut impl FnMut(&[usize])) {
    fn recurse(
        items: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        w: usize,
        f: &mut impl FnMut(&[usize]),
    ) {
        if chosen.len() == w {
            f(chosen);
            return;
        }
        let needed = w - chosen.len();
        for i in start..=items.len().saturating_sub(needed) {
            chosen.push(items[i]);
            recurse(items, i + 1, chosen, w, f);
            chosen.pop();
        }
    }
    if w == 0 || w > items.len() {
        return;
    }
    recurse(items, 0, &mut Vec::with_capacity(w), w, f);
}

/// Upper bound on the total error-cancellation probability in a depth-d
/// circuit given per-separation cancellation probabilities:
/// eps^2 * sum_{k=1}^{d-1} M_k (d - k) (1 - eps)^{d-1-k}.
/// `mks[k - 1]` holds M_k, so the slice must have d - 1 entries.
pub fn s2_bound(eps_mu: f64, d: usize, mks: &[f64]) -> f64 {
    assert_eq!(
        mks.len(),
        d - 1,
        "need one M_k per separation k = 1..d-1 (got {} for depth {})",
        mks.len(),
        d
    );
    let mut total = 0.0;
    for k in 1..d {
        total += mks[k - 1] * (d - k) as f64 * (1.0 - eps_mu).powi((d - 1 - k) as i32);
    }
    eps_mu * eps_mu * total
}

/// Closed form of `s2_bound` with every M_k at the worst-case value 1/3:
/// (1/3) [1 - (1 - eps)^d - d eps (1 - eps)^{d-1}].
pub fn worst_case_s2(eps_mu: f64, d: usize) -> f64 {
    let q = 1.0 - eps_mu;
    (1.0 - q.powi(d as i32) - d as f64 * eps_mu * q.powi(d as i32 - 1)) / 3.0
}

/// Predicted estimator bias under worst-case error cancellation: for each
/// true per-layer infidelity eps in `eps_grid`, form the inflated decay
/// curve F_k = (1 - eps)^k + worst_case_s2(eps, k) for k = 1..d, fit the
/// single-exponential slope by least squares on log F_k, and report
/// (eps, eps_tilde) with eps_tilde = 1 - exp(slope).
pub fn predicted_bias_curve(eps_grid: &[f64], d: usize) -> Vec<(f64, f64)> {
    assert!(d >= 2, "slope fit needs at least two depths (got d = {d})");
    let df = d as f64;
    eps_grid
        .iter()
        .map(|&eps| {
            let mut sum_y = 0.0;
            let mut sum_ky = 0.0;
            for k in 1..=d {
                let f_k = (1.0 - eps).powi(k as i32) + worst_case_s2(eps, k);
                let y = f_k.ln();
                sum_y += y;
                sum_ky += k as f64 * y;
            }
            let slope = 12.0 * sum_ky / (df * (df * df - 1.0)) - 6.0 * sum_y / (df * (df - 1.0));
            (eps, 1.0 - slope.exp())
        })
        .collect()
}
