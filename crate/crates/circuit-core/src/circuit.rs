use serde::{Deserialize, Serialize};

use crate::error::CircuitError;
use crate::gate::Gate;
use crate::pauli::{PauliOp, PauliString};

/// An ordered list of moments over a fixed qubit register.
///
/// A moment is a list of gates with pairwise-disjoint qubit support; the
/// circuit depth is the number of moments. [`Circuit::push`] packs gates
/// greedily: a gate lands in the earliest moment after the last moment that
/// touches any of its qubits. [`Circuit::push_moment`] appends an explicit
/// layer instead (used for structured layers that must keep their boundary).
///
/// Serialization is `{ qubit_count, moments: [[gate, ...], ...] }` with each
/// gate as `{ kind, targets, controls, ctrl_bits, params }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CircuitData", into = "CircuitData")]
pub struct Circuit {
    qubit_count: usize,
    moments: Vec<Vec<Gate>>,
}

/// Raw serialized form; conversion into [`Circuit`] re-validates invariants.
#[derive(Serialize, Deserialize)]
struct CircuitData {
    qubit_count: usize,
    moments: Vec<Vec<Gate>>,
}

impl From<Circuit> for CircuitData {
    fn from(c: Circuit) -> CircuitData {
        CircuitData {
            qubit_count: c.qubit_count,
            moments: c.moments,
        }
    }
}

impl TryFrom<CircuitData> for Circuit {
    type Error = CircuitError;

    fn try_from(d: CircuitData) -> Result<Circuit, CircuitError> {
        Circuit::from_moments(d.qubit_count, d.moments)
    }
}

impl Circuit {
    /// Empty circuit (zero moments) on `qubit_count` qubits.
    pub fn new(qubit_count: usize) -> Circuit {
        Circuit {
            qubit_count,
            moments: Vec::new(),
        }
    }

    /// Build from explicit moments, validating every gate and the disjointness
    /// of each moment. Moment boundaries are kept exactly as given.
    pub fn from_moments(qubit_count: usize, moments: Vec<Vec<Gate>>) -> Result<Circuit, CircuitError> {
        let mut c = Circuit::new(qubit_count);
        for m in moments {
            c.push_moment(m)?;
        }
        Ok(c)
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    /// Number of moments.
    pub fn depth(&self) -> usize {
        self.moments.len()
    }

    pub fn moments(&self) -> &[Vec<Gate>] {
        &self.moments
    }

    /// Total number of gates across all moments.
    pub fn gate_count(&self) -> usize {
        self.moments.iter().map(|m| m.len()).sum()
    }

    /// The adjoint circuit: moments in reverse order, every gate inverted.
    /// Gates within a moment are disjoint, so their relative order is free.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            qubit_count: self.qubit_count,
            moments: self
                .moments
                .iter()
                .rev()
                .map(|m| m.iter().rev().map(Gate::inverse).collect())
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }

    fn check_gate(&self, gate: &Gate) -> Result<(), CircuitError> {
        gate.validate()?;
        for q in gate.qubits() {
            if q >= self.qubit_count {
                return Err(CircuitError::QubitOutOfRange {
                    index: q,
                    qubit_count: self.qubit_count,
                });
            }
        }
        Ok(())
    }

    /// Append a gate, packing it into the earliest moment that is after every
    /// moment touching one of its qubits (new moment if none is free).
    pub fn push(&mut self, gate: Gate) -> Result<&mut Self, CircuitError> {
        self.check_gate(&gate)?;
        let mut place = 0;
        for (i, moment) in self.moments.iter().enumerate().rev() {
            let blocked = moment
                .iter()
                .any(|g| g.qubits().any(|q| gate.qubits().any(|p| p == q)));
            if blocked {
                place = i + 1;
                break;
            }
        }
        if place == self.moments.len() {
            self.moments.push(Vec::new());
        }
        self.moments[place].push(gate);
        Ok(self)
    }

    /// Append the gates as one explicit moment (may be empty: an idle layer).
    pub fn push_moment(&mut self, gates: Vec<Gate>) -> Result<&mut Self, CircuitError> {
        let mut used: Vec<usize> = Vec::new();
        for g in &gates {
            self.check_gate(g)?;
            for q in g.qubits() {
                if used.contains(&q) {
                    return Err(CircuitError::MomentOverlap(q));
                }
                used.push(q);
            }
        }
        self.moments.push(gates);
        Ok(self)
    }

    /// The contiguous window of `floor(depth * mu)` moments starting at
    /// moment `s`. `mu` must lie in (0, 1] and `s` in
    /// `0 ..= floor(depth * (1 - mu))`.
    pub fn truncate_fraction(&self, mu: f64, s: usize) -> Result<Circuit, CircuitError> {
        if !(mu > 0.0 && mu <= 1.0) {
            return Err(CircuitError::MuOutOfRange(mu));
        }
        let d = self.depth() as f64;
        // The small epsilon keeps exact products like 10 * 0.3 from flooring
        // one short of their mathematical value.
        let window = (d * mu + 1e-9).floor() as usize;
        let max_s = (d * (1.0 - mu) + 1e-9).floor() as usize;
        if s > max_s {
            return Err(CircuitError::WindowOutOfRange { s, max: max_s });
        }
        Ok(Circuit {
            qubit_count: self.qubit_count,
            moments: self.moments[s..s + window].to_vec(),
        })
    }
}

/// Moments of `a` followed by moments of `b`; moment boundaries are preserved
/// verbatim (layers are never repacked across the seam).
pub fn concat(a: &Circuit, b: &Circuit) -> Result<Circuit, CircuitError> {
    if a.qubit_count != b.qubit_count {
        return Err(CircuitError::QubitCountMismatch(a.qubit_count, b.qubit_count));
    }
    let mut moments = a.moments.clone();
    moments.extend(b.moments.iter().cloned());
    Ok(Circuit {
        qubit_count: a.qubit_count,
        moments,
    })
}

/// Single-qubit layer `U` such that `U p U^dag` has only Z and I factors with
/// the sign unchanged: X factors get `H`, Y factors get `Rx(pi/2)`, Z and I
/// factors get no gate. Returns an empty circuit when `p` is already diagonal.
pub fn basis_change_layer(p: &PauliString) -> Circuit {
    let mut gates = Vec::new();
    for q in 0..p.len() {
        match p.op(q) {
            PauliOp::X => gates.push(Gate::h(q)),
            PauliOp::Y => gates.push(Gate::rx(q, std::f64::consts::FRAC_PI_2)),
            PauliOp::I | PauliOp::Z => {}
        }
    }
    let mut c = Circuit::new(p.len());
    if !gates.is_empty() {
        c.push_moment(gates).expect("disjoint single-qubit gates");
    }
    c
}
