use circuit_core::{BaseMatrix, Circuit, Gate, PauliString};
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::SimError;

type C = Complex64;

/// Maximum qubit count for [`dense_unitary`] (memory guard: 2^12 x 2^12).
pub const DENSE_UNITARY_MAX_QUBITS: usize = 12;

/// Dense n-qubit state. Amplitude index bit layout puts qubit 0 as the most
/// significant bit: qubit `q` of index `i` is `(i >> (n - 1 - q)) & 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<C>,
}

impl StateVector {
    /// |0...0> on `n` qubits.
    pub fn zero(n: usize) -> StateVector {
        let mut amps = vec![C::new(0.0, 0.0); 1 << n];
        amps[0] = C::new(1.0, 0.0);
        StateVector { n, amps }
    }

    /// Computational basis state |index>.
    pub fn basis(n: usize, index: u64) -> StateVector {
        let mut amps = vec![C::new(0.0, 0.0); 1 << n];
        amps[index as usize] = C::new(1.0, 0.0);
        StateVector { n, amps }
    }

    pub fn from_amplitudes(n: usize, amps: Vec<C>) -> StateVector {
        assert_eq!(amps.len(), 1 << n);
        StateVector { n, amps }
    }

    pub fn qubit_count(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Index-bit position of qubit `q` (qubit 0 is the most significant bit).
    fn bit(&self, q: usize) -> usize {
        self.n - 1 - q
    }

    fn control_mask(&self, gate: &Gate) -> Result<(usize, usize), SimError> {
        let mut mask = 0usize;
        let mut value = 0usize;
        for (q, &b) in gate.controls.iter().zip(&gate.ctrl_bits) {
            if *q >= self.n {
                return Err(SimError::QubitOutOfRange {
                    index: *q,
                    qubit_count: self.n,
                });
            }
            let pos = self.bit(*q);
            mask |= 1 << pos;
            if b {
                value |= 1 << pos;
            }
        }
        Ok((mask, value))
    }

    /// Apply one gate in place (controls honored by index masking).
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<(), SimError> {
        gate.validate()?;
        for q in gate.qubits() {
            if q >= self.n {
                return Err(SimError::QubitOutOfRange {
                    index: q,
                    qubit_count: self.n,
                });
            }
        }
        let (cmask, cval) = self.control_mask(gate)?;
        match gate.base_matrix() {
            BaseMatrix::One(m) => {
                let t = 1usize << self.bit(gate.targets[0]);
                for i in 0..self.amps.len() {
                    if i & t != 0 || (i & cmask) != cval {
                        continue;
                    }
                    let j = i | t;
                    let a0 = self.amps[i];
                    let a1 = self.amps[j];
                    self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                    self.amps[j] = m[1][0] * a0 + m[1][1] * a1;
                }
            }
            BaseMatrix::Two(m) => {
                // targets[0] is the more significant bit of the 4x4 basis.
                let t0 = 1usize << self.bit(gate.targets[0]);
                let t1 = 1usize << self.bit(gate.targets[1]);
                for i in 0..self.amps.len() {
                    if i & (t0 | t1) != 0 || (i & cmask) != cval {
                        continue;
                    }
                    let idx = [i, i | t1, i | t0, i | t0 | t1];
                    let a = [
                        self.amps[idx[0]],
                        self.amps[idx[1]],
                        self.amps[idx[2]],
                        self.amps[idx[3]],
                    ];
                    for r in 0..4 {
                        let mut acc = C::new(0.0, 0.0);
                        for c in 0..4 {
                            acc += m[r][c] * a[c];
                        }
                        self.amps[idx[r]] = acc;
                    }
                }
            }
        }
        Ok(())
    }

    /// Apply every moment of `c` in order.
    pub fn apply_circuit(&mut self, c: &Circuit) -> Result<(), SimError> {
        if c.qubit_count() != self.n {
            return Err(SimError::QubitOutOfRange {
                index: c.qubit_count(),
                qubit_count: self.n,
            });
        }
        for moment in c.moments() {
            for gate in moment {
                self.apply_gate(gate)?;
            }
        }
        Ok(())
    }

    /// Apply a signed Pauli operator exactly (including Y phases).
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<(), SimError> {
        let coef = self.pauli_coefficients(p)?;
        let xmask = self.pauli_xmask(p);
        let old = self.amps.clone();
        for (i, a) in old.iter().enumerate() {
            let j = i ^ xmask;
            self.amps[j] = coef(i) * a;
        }
        Ok(())
    }

    fn pauli_xmask(&self, p: &PauliString) -> usize {
        let mut xmask = 0usize;
        for q in 0..p.len() {
            if p.x_bit(q) {
                xmask |= 1 << self.bit(q);
            }
        }
        xmask
    }

    /// Per-basis-state coefficient of P|b>: P|b> = coef(b) |b ^ xmask>.
    fn pauli_coefficients(&self, p: &PauliString) -> Result<impl Fn(usize) -> C, SimError> {
        if p.len() != self.n {
            return Err(SimError::PauliSizeMismatch {
                pauli: p.len(),
                qubits: self.n,
            });
        }
        let mut zmask = 0usize;
        let mut y_count = 0u32;
        for q in 0..p.len() {
            if p.z_bit(q) {
                zmask |= 1 << self.bit(q);
            }
            if p.x_bit(q) && p.z_bit(q) {
                y_count += 1;
            }
        }
        let base = C::i().powu(y_count) * C::new(p.sign() as f64, 0.0);
        Ok(move |b: usize| {
            if (b & zmask).count_ones() % 2 == 1 {
                -base
            } else {
                base
            }
        })
    }

    /// Exact <psi|P|psi> (real for Hermitian P).
    pub fn expectation_pauli(&self, p: &PauliString) -> Result<f64, SimError> {
        let coef = self.pauli_coefficients(p)?;
        let xmask = self.pauli_xmask(p);
        let mut acc = C::new(0.0, 0.0);
        for (i, a) in self.amps.iter().enumerate() {
            let j = i ^ xmask;
            acc += self.amps[j].conj() * coef(i) * a;
        }
        Ok(acc.re)
    }

    /// Probability of measuring basis index `i`.
    pub fn probability(&self, i: u64) -> f64 {
        self.amps[i as usize].norm_sqr()
    }

    /// Project onto the given (qubit, bit) pattern and renormalize. Returns
    /// the projected state and the probability mass it carried.
    pub fn postselect(&self, pattern: &[(usize, bool)]) -> Result<(StateVector, f64), SimError> {
        let mut mask = 0usize;
        let mut value = 0usize;
        for &(q, b) in pattern {
            if q >= self.n {
                return Err(SimError::QubitOutOfRange {
                    index: q,
                    qubit_count: self.n,
                });
            }
            mask |= 1 << self.bit(q);
            if b {
                value |= 1 << self.bit(q);
            }
        }
        let mut amps = self.amps.clone();
        let mut prob = 0.0;
        for (i, a) in amps.iter_mut().enumerate() {
            if (i & mask) == value {
                prob += a.norm_sqr();
            } else {
                *a = C::new(0.0, 0.0);
            }
        }
        if prob <= 0.0 {
            return Err(SimError::ImpossiblePostselection);
        }
        let scale = C::new(1.0 / prob.sqrt(), 0.0);
        for a in &mut amps {
            *a *= scale;
        }
        Ok((StateVector { n: self.n, amps }, prob))
    }
}

/// Run `c` on |0...0> without noise.
pub fn run_circuit(c: &Circuit) -> Result<StateVector, SimError> {
    let mut s = StateVector::zero(c.qubit_count());
    s.apply_circuit(c)?;
    Ok(s)
}

/// Exact noiseless <psi|P|psi> after running `c` on |0...0>.
pub fn expectation(c: &Circuit, observable: &PauliString) -> Result<f64, SimError> {
    run_circuit(c)?.expectation_pauli(observable)
}

/// Exact circuit unitary as a dense matrix (memory-guarded to 12 qubits).
pub fn dense_unitary(c: &Circuit) -> Result<DMatrix<Complex64>, SimError> {
    let n = c.qubit_count();
    if n > DENSE_UNITARY_MAX_QUBITS {
        return Err(SimError::SizeGuard {
            n,
            max: DENSE_UNITARY_MAX_QUBITS,
        });
    }
    let dim = 1usize << n;
    let mut u = DMatrix::<Complex64>::zeros(dim, dim);
    for col in 0..dim {
        let mut s = StateVector::basis(n, col as u64);
        s.apply_circuit(c)?;
        for row in 0..dim {
            u[(row, col)] = s.amplitudes()[row];
        }
    }
    Ok(u)
}
