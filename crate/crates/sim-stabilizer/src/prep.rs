//! Preparation circuits for random tensor-product stabilizer eigenstates.

use circuit_core::{Circuit, Gate, PauliOp, PauliString};
use rand::Rng;

use crate::error::StabError;

/// Gate list preparing the six single-qubit stabilizer states from |0⟩,
/// indexed as |0⟩, |1⟩, |+⟩, |−⟩, |+i⟩, |−i⟩.
fn single_qubit_state(q: usize, which: u8) -> Vec<Gate> {
    match which {
        0 => vec![],
        1 => vec![Gate::x(q)],
        2 => vec![Gate::h(q)],
        3 => vec![Gate::h(q), Gate::z(q)],
        4 => vec![Gate::h(q), Gate::s(q)],
        _ => vec![Gate::h(q), Gate::sdg(q)],
    }
}

/// Gates preparing the eigenstate of `op` with eigenvalue (−1)^minus.
fn eigenstate(q: usize, op: PauliOp, minus: bool) -> Vec<Gate> {
    let which = match (op, minus) {
        (PauliOp::Z, false) => 0,
        (PauliOp::Z, true) => 1,
        (PauliOp::X, false) => 2,
        (PauliOp::X, true) => 3,
        (PauliOp::Y, false) => 4,
        _ => 5,
    };
    single_qubit_state(q, which)
}

/// Build a circuit preparing a uniformly random tensor-product stabilizer
/// state stabilized by `p` (that is, `p|ψ⟩ = |ψ⟩`). Qubits outside the
/// support of `p` get an independent uniformly random single-qubit
/// stabilizer state.
pub fn stabilizer_product_state_prep<R: Rng + ?Sized>(
    p: &PauliString,
    rng: &mut R,
) -> Result<Circuit, StabError> {
    if p.is_identity_up_to_sign() {
        return Err(StabError::IdentityPauli);
    }
    let n = p.len();
    let support = p.support();
    let last = *support.last().expect("non-identity Pauli has support");
    // Per-factor eigenvalue signs: free coins except the last support qubit,
    // which is forced so the product of factor eigenvalues matches sign(p).
    let mut parity = p.sign() < 0;
    let mut circuit = Circuit::new(n);
    for q in 0..n {
        let gates = match p.op(q) {
            PauliOp::I => single_qubit_state(q, rng.random_range(0..6u8)),
            op => {
                let minus = if q == last {
                    parity
                } else {
                    let coin: bool = rng.random();
                    parity ^= coin;
                    coin
                };
                eigenstate(q, op, minus)
            }
        };
        for gate in gates {
            circuit.push(gate).expect("single-qubit gate is valid");
        }
    }
    Ok(circuit)
}
