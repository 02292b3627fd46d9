use circuit_core::{
    CircuitError, Gate, LayerNoise, NoiseModel, PauliOp, PauliString, WeightedPauli,
};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

#[test]
fn pauli_text_roundtrip() {
    for s in ["+XIZY", "-ZZ", "+I", "-YXIIX"] {
        let p: PauliString = s.parse().unwrap();
        assert_eq!(p.to_string(), s);
    }
    // Sign is optional on input and defaults to +.
    let p: PauliString = "XX".parse().unwrap();
    assert_eq!(p.to_string(), "+XX");
    assert!("".parse::<PauliString>().is_err());
    assert!("+".parse::<PauliString>().is_err());
    assert!("+XQ".parse::<PauliString>().is_err());
}

#[test]
fn pauli_accessors() {
    let p: PauliString = "-XIZY".parse().unwrap();
    assert_eq!(p.len(), 4);
    assert_eq!(p.sign(), -1);
    assert_eq!(p.op(0), PauliOp::X);
    assert_eq!(p.op(1), PauliOp::I);
    assert_eq!(p.op(2), PauliOp::Z);
    assert_eq!(p.op(3), PauliOp::Y);
    assert_eq!(p.weight(), 3);
    assert_eq!(p.support(), vec![0, 2, 3]);
    assert!(!p.is_identity());
    assert!(!p.is_diagonal());
    assert!("+IZZI".parse::<PauliString>().unwrap().is_diagonal());

    let id = PauliString::identity(3);
    assert!(id.is_identity());
    let mut neg_id = id.clone();
    neg_id.negate();
    assert!(!neg_id.is_identity(), "-I is not the identity element");
    assert!(neg_id.is_identity_up_to_sign());
}

#[test]
fn pauli_commutation() {
    let x: PauliString = "+X".parse().unwrap();
    let z: PauliString = "+Z".parse().unwrap();
    let y: PauliString = "+Y".parse().unwrap();
    assert!(x.anticommutes_with(&z));
    assert!(x.anticommutes_with(&y));
    assert!(!x.anticommutes_with(&x));

    let xx: PauliString = "+XX".parse().unwrap();
    let zz: PauliString = "+ZZ".parse().unwrap();
    assert!(!xx.anticommutes_with(&zz), "XX and ZZ commute");
    let zi: PauliString = "+ZI".parse().unwrap();
    assert!(xx.anticommutes_with(&zi));
}

#[test]
fn pauli_bitpacking_beyond_one_word() {
    let n = 130;
    let mut p = PauliString::identity(n);
    p.set_op(0, PauliOp::X);
    p.set_op(64, PauliOp::Y);
    p.set_op(129, PauliOp::Z);
    assert_eq!(p.weight(), 3);
    assert_eq!(p.support(), vec![0, 64, 129]);
    let q: PauliString = p.to_string().parse().unwrap();
    assert_eq!(p, q);
}

#[test]
fn noise_validation() {
    assert!(NoiseModel::noiseless().validate(5).is_ok());
    assert!(matches!(
        NoiseModel::depolarizing(-0.1, 0.0).validate(2),
        Err(CircuitError::InvalidProbability(_))
    ));
    assert!(matches!(
        NoiseModel::global_depolarizing(1.2).validate(2),
        Err(CircuitError::InvalidProbability(_))
    ));

    let over = NoiseModel {
        per_layer: LayerNoise::Explicit {
            paulis: vec![
                WeightedPauli {
                    pauli: "+XI".parse().unwrap(),
                    weight: 0.6,
                },
                WeightedPauli {
                    pauli: "+IZ".parse().unwrap(),
                    weight: 0.6,
                },
            ],
        },
        readout_flip: vec![],
    };
    assert!(matches!(
        over.validate(2),
        Err(CircuitError::WeightsExceedOne(_))
    ));

    let wrong_size = NoiseModel::noiseless().with_readout(vec![0.1, 0.1]);
    assert!(matches!(
        wrong_size.validate(3),
        Err(CircuitError::NoiseSizeMismatch { .. })
    ));
}

#[test]
fn zero_rate_noise_never_fires() {
    let mut rng = ChaCha12Rng::seed_from_u64(7);
    let nm = NoiseModel::depolarizing(0.0, 0.0);
    let moment = vec![Gate::h(0), Gate::cx(1, 2)];
    for _ in 0..200 {
        assert!(nm.sample_moment_error(&moment, 3, &mut rng).is_none());
    }
    // GlobalDepolarizing with p = 1 keeps the state untouched.
    let nm = NoiseModel::global_depolarizing(1.0);
    for _ in 0..200 {
        assert!(nm.sample_moment_error(&[], 3, &mut rng).is_none());
    }
}

#[test]
fn depolarizing_error_rate_matches_p1() {
    let mut rng = ChaCha12Rng::seed_from_u64(11);
    let nm = NoiseModel::depolarizing(0.25, 0.0);
    let moment = vec![Gate::h(0)];
    let trials = 40_000;
    let mut hits = 0;
    for _ in 0..trials {
        if let Some(e) = nm.sample_moment_error(&moment, 1, &mut rng) {
            assert!(!e.is_identity_up_to_sign());
            assert_eq!(e.support(), vec![0]);
            hits += 1;
        }
    }
    let rate = hits as f64 / trials as f64;
    // 3-sigma window around 0.25 for 40k Bernoulli trials.
    let sigma = (0.25 * 0.75 / trials as f64).sqrt();
    assert!(
        (rate - 0.25).abs() < 3.0 * sigma,
        "rate {rate} too far from 0.25"
    );
}

#[test]
fn two_qubit_depolarizing_hits_gate_support_only() {
    let mut rng = ChaCha12Rng::seed_from_u64(13);
    let nm = NoiseModel::depolarizing(0.0, 1.0);
    let moment = vec![Gate::cx(0, 2)];
    for _ in 0..200 {
        let e = nm.sample_moment_error(&moment, 4, &mut rng).unwrap();
        assert!(e.support().iter().all(|&q| q == 0 || q == 2));
        assert!(e.weight() >= 1);
    }
}

#[test]
fn explicit_noise_draws_listed_paulis() {
    let mut rng = ChaCha12Rng::seed_from_u64(17);
    let xi: PauliString = "+XI".parse().unwrap();
    let nm = NoiseModel {
        per_layer: LayerNoise::Explicit {
            paulis: vec![WeightedPauli {
                pauli: xi.clone(),
                weight: 0.5,
            }],
        },
        readout_flip: vec![],
    };
    let trials = 20_000;
    let mut hits = 0;
    for _ in 0..trials {
        if let Some(e) = nm.sample_moment_error(&[], 2, &mut rng) {
            assert_eq!(e, xi);
            hits += 1;
        }
    }
    let rate = hits as f64 / trials as f64;
    let sigma = (0.5f64 * 0.5 / trials as f64).sqrt();
    assert!((rate - 0.5).abs() < 3.0 * sigma);
}

#[test]
fn readout_flip_mask() {
    let mut rng = ChaCha12Rng::seed_from_u64(19);
    let nm = NoiseModel::noiseless().with_readout(vec![1.0, 0.0, 1.0]);
    let mask = nm.sample_readout_flips(&mut rng);
    assert_eq!(mask.len(), 1);
    assert_eq!(mask[0], 0b101);
    assert!(NoiseModel::noiseless().sample_readout_flips(&mut rng).is_empty());
}

#[test]
fn noise_model_serde_roundtrip() {
    let nm = NoiseModel::depolarizing(0.001, 0.01).with_uniform_readout(4, 0.02);
    let json = serde_json::to_string(&nm).unwrap();
    let back: NoiseModel = serde_json::from_str(&json).unwrap();
    assert_eq!(nm, back);
}
