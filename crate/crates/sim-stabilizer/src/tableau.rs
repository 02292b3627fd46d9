//! Bit-packed binary-symplectic tableau over 2N Pauli rows.

use circuit_core::{Circuit, Gate, PauliString};

use crate::clifford::{lower_gate, Prim, RowBits};
use crate::error::StabError;

/// A 2N-row tableau of Pauli strings with signs.
///
/// Rows `0..n` hold the destabilizers (images of `X_i`), rows `n..2n` the
/// stabilizers (images of `Z_i`). Freshly constructed it describes both the
/// state `|0…0⟩` and the identity map, so the same object serves as a state
/// tableau (tracking a stabilizer state) or a unitary tableau (tracking the
/// conjugation action of an accumulated Clifford circuit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerTableau {
    n: usize,
    words: usize,
    /// Row-major x bit-planes: row r occupies `x[r*words..(r+1)*words]`.
    x: Vec<u64>,
    /// Row-major z bit-planes, same layout.
    z: Vec<u64>,
    /// Sign bits, one per row, packed.
    signs: Vec<u64>,
}

impl StabilizerTableau {
    /// Identity tableau on `n` qubits: row i is `X_i`, row n+i is `Z_i`.
    pub fn new(n: usize) -> StabilizerTableau {
        assert!(n > 0, "tableau needs at least one qubit");
        let words = n.div_ceil(64);
        let mut t = StabilizerTableau {
            n,
            words,
            x: vec![0; 2 * n * words],
            z: vec![0; 2 * n * words],
            signs: vec![0; (2 * n).div_ceil(64)],
        };
        for i in 0..n {
            t.x[i * words + i / 64] |= 1 << (i % 64);
            t.z[(n + i) * words + i / 64] |= 1 << (i % 64);
        }
        t
    }

    /// Tableau of a whole circuit applied to the identity.
    pub fn from_circuit(c: &Circuit) -> Result<StabilizerTableau, StabError> {
        let mut t = StabilizerTableau::new(c.qubit_count());
        t.apply_circuit(c)?;
        t
            .check_symplectic()
            .then_some(t)
            .ok_or_else(|| StabError::UnsupportedGate("tableau left symplectic group".into()))
    }

    pub fn qubit_count(&self) -> usize {
        self.n
    }

    fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        r * self.words..(r + 1) * self.words
    }

    fn sign_bit(&self, r: usize) -> bool {
        self.signs[r / 64] >> (r % 64) & 1 == 1
    }

    fn set_sign_bit(&mut self, r: usize, v: bool) {
        let mask = 1u64 << (r % 64);
        if v {
            self.signs[r / 64] |= mask;
        } else {
            self.signs[r / 64] &= !mask;
        }
    }

    /// Copy row r out as a standalone Pauli string.
    pub fn row(&self, r: usize) -> PauliString {
        PauliString::from_parts(
            self.n,
            self.sign_bit(r),
            self.x[self.row_range(r)].to_vec(),
            self.z[self.row_range(r)].to_vec(),
        )
    }

    /// Apply one primitive to every row.
    fn apply_prim(&mut self, p: Prim) {
        for r in 0..2 * self.n {
            let range = self.row_range(r);
            let mut sign = self.sign_bit(r);
            {
                let mut row = RowBits {
                    x: &mut self.x[range.clone()],
                    z: &mut self.z[range],
                    sign: &mut sign,
                };
                row.apply(p);
            }
            self.set_sign_bit(r, sign);
        }
    }

    /// Apply one gate (conjugating every row).
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<(), StabError> {
        for prim in lower_gate(gate)? {
            self.apply_prim(prim);
        }
        Ok(())
    }

    /// Apply a circuit moment by moment.
    pub fn apply_circuit(&mut self, c: &Circuit) -> Result<(), StabError> {
        if c.qubit_count() != self.n {
            return Err(StabError::QubitCountMismatch {
                circuit: c.qubit_count(),
                operand: self.n,
            });
        }
        for moment in c.moments() {
            for gate in moment {
                self.apply_gate(gate)?;
            }
        }
        Ok(())
    }

    /// Symplectic inner product (commutation parity) of rows a and b.
    fn rows_anticommute(&self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.row_range(a), self.row_range(b));
        let mut parity = 0u64;
        for w in 0..self.words {
            parity ^= (self.x[ra.start + w] & self.z[rb.start + w]).count_ones() as u64
                ^ (self.z[ra.start + w] & self.x[rb.start + w]).count_ones() as u64;
        }
        parity & 1 == 1
    }

    /// Verify the defining pairing: row i anticommutes with row n+i and
    /// commutes with every other row.
    pub fn check_symplectic(&self) -> bool {
        let n = self.n;
        for a in 0..2 * n {
            for b in a..2 * n {
                let want = b == a + n;
                if self.rows_anticommute(a, b) != want {
                    return false;
                }
            }
        }
        true
    }

    /// Phase exponent of row r as a power of i in `i^e · X^x Z^z` form.
    fn row_phase(&self, r: usize) -> u8 {
        let range = self.row_range(r);
        let mut overlap = 0u32;
        for w in range.clone() {
            overlap += (self.x[w] & self.z[w]).count_ones();
        }
        ((overlap as u8) & 3).wrapping_add(if self.sign_bit(r) { 2 } else { 0 }) & 3
    }

    /// Image of a hermitian Pauli string under the tableau's map,
    /// `U p U†`, computed as a signed product of rows.
    pub fn image(&self, p: &PauliString) -> Result<PauliString, StabError> {
        if p.len() != self.n {
            return Err(StabError::QubitCountMismatch {
                circuit: self.n,
                operand: p.len(),
            });
        }
        let words = self.words;
        let mut acc_x = vec![0u64; words];
        let mut acc_z = vec![0u64; words];
        // Write p as i^e ∏_q X_q^{x_q} Z_q^{z_q} with e = 2·neg + |x∧z| mod 4,
        // then substitute each factor's image, tracking the i-power of the
        // reordering terms Z·X = i^2 X·Z picked up qubit by qubit.
        let mut phase: u8 = if p.sign() < 0 { 2 } else { 0 };
        let mut overlap = 0u32;
        for (xw, zw) in p.x_words().iter().zip(p.z_words()) {
            overlap += (xw & zw).count_ones();
        }
        phase = (phase + (overlap as u8 & 3)) & 3;
        let mul_row = |r: usize, acc_x: &mut [u64], acc_z: &mut [u64], phase: &mut u8| {
            let range = self.row_range(r);
            let mut cross = 0u32;
            for w in 0..words {
                cross += (acc_z[w] & self.x[range.start + w]).count_ones();
            }
            *phase = (*phase + self.row_phase(r) + 2 * (cross as u8 & 1)) & 3;
            for w in 0..words {
                acc_x[w] ^= self.x[range.start + w];
                acc_z[w] ^= self.z[range.start + w];
            }
        };
        for q in 0..self.n {
            if p.x_bit(q) {
                mul_row(q, &mut acc_x, &mut acc_z, &mut phase);
            }
            if p.z_bit(q) {
                mul_row(self.n + q, &mut acc_x, &mut acc_z, &mut phase);
            }
        }
        // Convert back to hermitian form: i^phase X^x Z^z = ±1 · i^|x∧z| X^x Z^z.
        let mut out_overlap = 0u32;
        for w in 0..words {
            out_overlap += (acc_x[w] & acc_z[w]).count_ones();
        }
        let residue = (phase + 4 - (out_overlap as u8 & 3)) & 3;
        debug_assert!(residue % 2 == 0, "conjugated hermitian Pauli stayed hermitian");
        Ok(PauliString::from_parts(self.n, residue == 2, acc_x, acc_z))
    }

    /// For a diagonal observable `Z^mask` on the state tableau: `None` when
    /// the outcome is uniformly random (some stabilizer anticommutes), or
    /// `Some(sign)` with the deterministic eigenvalue sign bit otherwise.
    pub fn deterministic_eigenvalue(&self, mask: &[u64]) -> Option<bool> {
        assert_eq!(mask.len(), self.words);
        for r in self.n..2 * self.n {
            let range = self.row_range(r);
            let mut parity = 0u32;
            for w in 0..self.words {
                parity ^= (self.x[range.start + w] & mask[w]).count_ones();
            }
            if parity & 1 == 1 {
                return None;
            }
        }
        // Z^mask = ± ∏ stabilizer_i over destabilizers that anticommute with it.
        let mut acc_x = vec![0u64; self.words];
        let mut acc_z = vec![0u64; self.words];
        let mut phase: u8 = 0;
        for i in 0..self.n {
            let range = self.row_range(i);
            let mut parity = 0u32;
            for w in 0..self.words {
                parity ^= (self.x[range.start + w] & mask[w]).count_ones();
            }
            if parity & 1 == 1 {
                let srange = self.row_range(self.n + i);
                let mut cross = 0u32;
                for w in 0..self.words {
                    cross += (acc_z[w] & self.x[srange.start + w]).count_ones();
                }
                phase = (phase + self.row_phase(self.n + i) + 2 * (cross as u8 & 1)) & 3;
                for w in 0..self.words {
                    acc_x[w] ^= self.x[srange.start + w];
                    acc_z[w] ^= self.z[srange.start + w];
                }
            }
        }
        debug_assert!(acc_x.iter().all(|&w| w == 0), "representation is diagonal");
        debug_assert_eq!(acc_z, mask, "representation reproduces the observable");
        debug_assert!(phase % 2 == 0);
        Some(phase == 2)
    }
}
