use crate::gate::GateKind;

/// Errors produced by circuit construction and structural operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CircuitError {
    #[error("qubit index {index} out of range for {qubit_count} qubits")]
    QubitOutOfRange { index: usize, qubit_count: usize },
    #[error("qubit {0} used more than once by gates in the same moment")]
    MomentOverlap(usize),
    #[error("gate {kind:?} expects {expected} angle parameter(s), got {got}")]
    AngleCountMismatch {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("gate {kind:?} expects {expected} target qubit(s), got {got}")]
    TargetCountMismatch {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("control bit-pattern has {bits} bit(s) for {controls} control(s)")]
    ControlPatternMismatch { bits: usize, controls: usize },
    #[error("qubit {0} appears more than once in a gate's target/control sets")]
    DuplicateQubit(usize),
    #[error("mu = {0} is outside (0, 1]")]
    MuOutOfRange(f64),
    #[error("window start {s} exceeds the largest admissible start {max}")]
    WindowOutOfRange { s: usize, max: usize },
    #[error("qubit counts differ: {0} vs {1}")]
    QubitCountMismatch(usize, usize),
    #[error("cannot parse pauli string: {0}")]
    PauliParse(String),
    #[error("pauli operator must not be the identity")]
    IdentityPauli,
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("explicit noise pauli weights sum to {0}, which exceeds 1")]
    WeightsExceedOne(f64),
    #[error("noise model is sized for {expected} qubits, circuit has {got}")]
    NoiseSizeMismatch { expected: usize, got: usize },
}
