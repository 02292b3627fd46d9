use bench_ghz::{
    passes, search_max_n, search_max_n_with, GhzBackend, GhzConfig, GhzError, SizeRecord,
    Topology,
};
use circuit_core::NoiseModel;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn scripted(pass: impl Fn(usize) -> bool + Copy) -> impl FnMut(usize) -> Result<SizeRecord, GhzError>
{
    move |n| {
        Ok(SizeRecord {
            n,
            sample_count: 11805,
            y: if pass(n) { 0.9 } else { 0.3 },
            pass: pass(n),
        })
    }
}

fn probed(result: &bench_ghz::GhzResult) -> Vec<usize> {
    result.records.iter().map(|r| r.n).collect()
}

#[test]
fn pass_criterion_is_strict() {
    // 0.5625 - 0.0625 is exactly 1/2 in binary floating point, so the strict
    // inequality must fail it.
    assert!(!passes(0.5625, 0.0625));
    assert!(passes(0.5635, 0.0625));
    assert!(passes(1.0, 0.05));
    assert!(!passes(0.54, 0.05));
    assert!(!passes(0.5, 0.0));
}

#[test]
fn monotone_device_is_bisected_exactly() {
    let result = search_max_n_with(scripted(|n| n <= 9), 16).unwrap();
    assert_eq!(probed(&result), [2, 4, 8, 16, 12, 10, 9]);
    assert_eq!(result.n_max, 9);
    assert!(result.diagnostic.is_none());
    for record in &result.records {
        assert_eq!(record.pass, record.n <= 9);
    }
}

#[test]
fn doubling_caps_at_the_limit() {
    let result = search_max_n_with(scripted(|_| true), 12).unwrap();
    assert_eq!(probed(&result), [2, 4, 8, 12]);
    assert_eq!(result.n_max, 12);

    let result = search_max_n_with(scripted(|_| true), 2).unwrap();
    assert_eq!(probed(&result), [2]);
    assert_eq!(result.n_max, 2);
}

#[test]
fn nonmonotone_device_reports_the_bracket_result() {
    // Passes at 2, 4 and 16 but fails at 8: the bracket [4, 8] is bisected
    // and the later pass at 16 is never revisited.
    let result = search_max_n_with(scripted(|n| matches!(n, 2 | 4 | 16)), 16).unwrap();
    assert_eq!(probed(&result), [2, 4, 8, 6, 5]);
    assert_eq!(result.n_max, 4);
}

#[test]
fn hopeless_device_reports_zero_with_diagnostic() {
    let result = search_max_n_with(scripted(|_| false), 16).unwrap();
    assert_eq!(probed(&result), [2]);
    assert_eq!(result.n_max, 0);
    let diagnostic = result.diagnostic.expect("diagnostic present");
    assert!(diagnostic.contains("no size in [2, 16]"), "{diagnostic}");
    assert!(diagnostic.contains("Y - eps > 1/2"), "{diagnostic}");
}

#[test]
fn tiny_limits_are_rejected() {
    for n_limit in [0, 1] {
        match search_max_n_with(scripted(|_| true), n_limit) {
            Err(GhzError::Config(msg)) => assert!(msg.contains("n_limit >= 2"), "{msg}"),
            other => panic!("expected Config rejection, got {other:?}"),
        }
    }
}

#[test]
fn evaluator_errors_propagate() {
    let result = search_max_n_with(|_| Err(GhzError::Config("scripted failure".into())), 8);
    match result {
        Err(GhzError::Config(msg)) => assert_eq!(msg, "scripted failure"),
        other => panic!("expected the scripted failure, got {other:?}"),
    }
}

#[test]
fn noiseless_search_certifies_the_limit() {
    let cfg = GhzConfig::standard();
    let mut rng = ChaCha12Rng::seed_from_u64(31);
    let result = search_max_n(
        &cfg,
        12,
        GhzBackend::Stabilizer,
        &NoiseModel::noiseless(),
        &mut rng,
    )
    .unwrap();
    assert_eq!(result.n_max, 12);
    assert_eq!(probed(&result), [2, 4, 8, 12]);
    assert!(result.diagnostic.is_none());
    for record in &result.records {
        assert_eq!(record.y, 1.0);
        assert!(record.pass);
        assert_eq!(record.sample_count, 11805);
    }
}

#[test]
fn cx_noise_shrinks_the_certified_size() {
    let cfg = GhzConfig {
        topology: Topology::LinearChain,
        ..GhzConfig::standard()
    };
    let mut sizes = Vec::new();
    for (i, p2) in [0.02, 0.05, 0.1].into_iter().enumerate() {
        let noise = NoiseModel::depolarizing(0.0, p2);
        let mut rng = ChaCha12Rng::seed_from_u64(37 + i as u64);
        let result =
            search_max_n(&cfg, 16, GhzBackend::Stabilizer, &noise, &mut rng).unwrap();
        for record in &result.records {
            assert_eq!(record.pass, passes(record.y, cfg.eps));
        }
        sizes.push(result.n_max);
    }
    assert!(
        sizes.windows(2).all(|w| w[1] <= w[0]),
        "certified size grew with noise: {sizes:?}"
    );
    assert!(sizes[0] >= 2, "weakest noise must certify at least a Bell pair");
    assert!(sizes[2] < 16, "strongest noise must not reach the limit: {sizes:?}");
}
