use bench_ghz::{dfe_estimate, ghz_circuit, sample_dfe_paulis, GhzBackend, GhzError, Topology};
use circuit_core::{Circuit, Gate, NoiseModel, PauliOp, PauliString};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

const BACKENDS: [GhzBackend; 2] = [GhzBackend::Stabilizer, GhzBackend::Statevector];

#[test]
fn noiseless_estimate_is_exactly_one_on_both_backends() {
    for n in [2usize, 3, 6, 10] {
        let prep = ghz_circuit(n, Topology::FanoutTree).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(500 + n as u64);
        let paulis = sample_dfe_paulis(n, 0.05, 0.1, &mut rng).unwrap();
        for backend in BACKENDS {
            // The amplitude backend repeats a full register simulation per
            // shot, so trim its plan at the larger sizes; every outcome must
            // be +1 regardless of how many are taken.
            let take = match backend {
                GhzBackend::Stabilizer => paulis.len(),
                GhzBackend::Statevector if n <= 3 => paulis.len(),
                GhzBackend::Statevector => 1200,
            };
            let mut shot_rng = ChaCha12Rng::seed_from_u64(600 + n as u64);
            let y = dfe_estimate(
                &prep,
                &paulis[..take],
                &NoiseModel::noiseless(),
                backend,
                &mut shot_rng,
            )
            .unwrap();
            assert_eq!(y, 1.0, "{backend:?} at n = {n} gave Y = {y}");
        }
    }
}

#[test]
fn basis_state_probes_pin_the_bit_convention() {
    use PauliOp::{I, Z};
    // Prepare |10> (qubit 0 flipped). Z on qubit 0 must read -1, Z on qubit 1
    // must read +1, and the parity probe ZZ must read -1, on both backends.
    let mut prep = Circuit::new(2);
    prep.push(Gate::x(0)).unwrap();
    let cases = [
        (PauliString::from_ops(1, &[Z, I]), -1.0),
        (PauliString::from_ops(1, &[I, Z]), 1.0),
        (PauliString::from_ops(1, &[Z, Z]), -1.0),
    ];
    for backend in BACKENDS {
        for (pauli, expected) in &cases {
            let mut rng = ChaCha12Rng::seed_from_u64(7);
            let y = dfe_estimate(
                &prep,
                std::slice::from_ref(pauli),
                &NoiseModel::noiseless(),
                backend,
                &mut rng,
            )
            .unwrap();
            assert_eq!(y, *expected, "{backend:?}: <{pauli}> on |10>");
        }
    }
}

/// Feeding the all-zeros state to a Bell-state plan: the lone diagonal
/// stabilizer ZZ always reads +1 while XX and -YY are fair coins, so
/// E[Y] = 1/3 and Var(Y) = (1 - 1/9)/l.
#[test]
fn impostor_zero_state_lands_at_one_third() {
    let plan_rng = &mut ChaCha12Rng::seed_from_u64(800);
    let paulis = sample_dfe_paulis(2, 0.05, 0.1, plan_rng).unwrap();
    let impostor = Circuit::new(2);
    let sigma = (8.0 / 9.0 / paulis.len() as f64).sqrt();
    for (backend, seed) in [(GhzBackend::Stabilizer, 801), (GhzBackend::Statevector, 802)] {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let y = dfe_estimate(&impostor, &paulis, &NoiseModel::noiseless(), backend, &mut rng)
            .unwrap();
        assert!(
            (y - 1.0 / 3.0).abs() <= 3.0 * sigma,
            "{backend:?}: Y = {y}, expected 1/3 within {}",
            3.0 * sigma
        );
    }
}

/// Per-moment global depolarizing noise with survival probability q turns a
/// state of ideal fidelity 1 into F_D = q^D + (1 - q^D)/2^n after D moments,
/// and the estimator obeys E[A] = (2^n F_D - 1)/(2^n - 1) per measurement
/// (which collapses to q^D). Diagonal stabilizers skip the basis-change
/// moment, so their D is one smaller; both backends must track the analytic
/// value within 3 sigma.
#[test]
fn trajectory_average_matches_the_depolarized_channel() {
    let n = 3usize;
    let q: f64 = 0.9;
    let dim = (1u64 << n) as f64;
    let prep = ghz_circuit(n, Topology::LinearChain).unwrap();
    assert_eq!(prep.depth(), 3);
    let noise = NoiseModel::global_depolarizing(q);

    let mut plan_rng = ChaCha12Rng::seed_from_u64(900);
    let paulis = sample_dfe_paulis(n, 0.05, 0.1, &mut plan_rng).unwrap();

    let per_shot_mean = |p: &PauliString| {
        let depth = prep.depth() + usize::from(!p.is_diagonal());
        let fidelity = q.powi(depth as i32) + (1.0 - q.powi(depth as i32)) / dim;
        (dim * fidelity - 1.0) / (dim - 1.0)
    };
    let expected: f64 =
        paulis.iter().map(&per_shot_mean).sum::<f64>() / paulis.len() as f64;
    let variance: f64 = paulis
        .iter()
        .map(|p| 1.0 - per_shot_mean(p).powi(2))
        .sum::<f64>()
        / (paulis.len() as f64).powi(2);
    let sigma = variance.sqrt();

    for (backend, seed) in [(GhzBackend::Stabilizer, 901), (GhzBackend::Statevector, 902)] {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let y = dfe_estimate(&prep, &paulis, &noise, backend, &mut rng).unwrap();
        assert!(
            (y - expected).abs() <= 3.0 * sigma,
            "{backend:?}: Y = {y}, analytic mean {expected}, sigma {sigma}"
        );
    }
}

#[test]
fn degradation_is_monotone_in_noise_strength() {
    let prep = ghz_circuit(4, Topology::FanoutTree).unwrap();
    let mut plan_rng = ChaCha12Rng::seed_from_u64(1000);
    let paulis = sample_dfe_paulis(4, 0.05, 0.1, &mut plan_rng).unwrap();
    let mut values = Vec::new();
    for (i, q) in [1.0, 0.95, 0.9, 0.8].into_iter().enumerate() {
        let mut rng = ChaCha12Rng::seed_from_u64(1001 + i as u64);
        let y = dfe_estimate(
            &prep,
            &paulis,
            &NoiseModel::global_depolarizing(q),
            GhzBackend::Stabilizer,
            &mut rng,
        )
        .unwrap();
        values.push(y);
    }
    let slack = 3.0 * (2.0 / paulis.len() as f64).sqrt();
    for pair in values.windows(2) {
        assert!(
            pair[1] <= pair[0] + slack,
            "stronger depolarizing must not raise Y: {values:?}"
        );
    }
    assert!(values[0] == 1.0 && values[3] < 0.8, "sanity: {values:?}");
}

#[test]
fn empty_measurement_plan_is_rejected() {
    let prep = ghz_circuit(2, Topology::FanoutTree).unwrap();
    let mut rng = ChaCha12Rng::seed_from_u64(1100);
    match dfe_estimate(&prep, &[], &NoiseModel::noiseless(), GhzBackend::Stabilizer, &mut rng) {
        Err(GhzError::Config(msg)) => assert!(msg.contains("at least one Pauli")),
        other => panic!("expected Config rejection, got {other:?}"),
    }
}

#[test]
fn estimates_are_deterministic_in_the_seed() {
    let prep = ghz_circuit(3, Topology::LinearChain).unwrap();
    let mut plan_rng = ChaCha12Rng::seed_from_u64(1200);
    let paulis = sample_dfe_paulis(3, 0.05, 0.1, &mut plan_rng).unwrap();
    let noise = NoiseModel::global_depolarizing(0.95);
    let run = |seed: u64, backend: GhzBackend| {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        dfe_estimate(&prep, &paulis, &noise, backend, &mut rng).unwrap()
    };
    for backend in BACKENDS {
        // Shots fan out over worker threads, so equality here checks that the
        // per-index RNG streams make the result schedule-independent.
        assert_eq!(run(1201, backend), run(1201, backend));
    }
    assert_ne!(run(1201, GhzBackend::Stabilizer), 1.0);
}
