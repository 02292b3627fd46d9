use circuit_core::{Circuit, Gate};

use crate::config::Topology;
use crate::error::GhzError;

/// Build a circuit preparing the n-qubit GHZ state (|0...0> + |1...1>)/sqrt(2)
/// from |0...0>: a Hadamard on qubit 0 followed by a CX spread.
///
/// The linear chain entangles neighbours one at a time (depth n); the fan-out
/// tree lets every entangled qubit act as a control each round, reaching depth
/// 1 + ceil(log2 n).
pub fn ghz_circuit(n: usize, topology: Topology) -> Result<Circuit, GhzError> {
    if n < 2 {
        return Err(GhzError::TooFewQubits(n));
    }
    let mut c = Circuit::new(n);
    c.push(Gate::h(0))?;
    match topology {
        Topology::LinearChain => {
            for q in 0..n - 1 {
                c.push(Gate::cx(q, q + 1))?;
            }
        }
        Topology::FanoutTree => {
            let mut prepared = 1;
            while prepared < n {
                let gates: Vec<Gate> = (0..prepared)
                    .map_while(|src| {
                        let tgt = prepared + src;
                        (tgt < n).then(|| Gate::cx(src, tgt))
                    })
                    .collect();
                prepared += gates.len();
                c.push_moment(gates)?;
            }
        }
    }
    Ok(c)
}
