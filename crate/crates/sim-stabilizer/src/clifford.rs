//! Lowering of the gate alphabet to a nine-element Clifford primitive set and
//! the symplectic update rules shared by the Pauli walker and the tableau.

use circuit_core::{Circuit, Gate, GateKind, PauliString};

use crate::error::StabError;

/// Tolerance for recognising a rotation angle as a multiple of pi/2.
pub(crate) const ANGLE_TOL: f64 = 1e-9;

/// Primitive Clifford actions on one or two qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Prim {
    H(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Cx(usize, usize),
    Cz(usize, usize),
    Swap(usize, usize),
}

/// Reduce a rotation angle to a quarter-turn count in 0..4, or report the
/// offending angle.
fn quarter_turns(kind: &'static str, angle: f64) -> Result<usize, StabError> {
    let steps = (angle / std::f64::consts::FRAC_PI_2).round();
    if (angle - steps * std::f64::consts::FRAC_PI_2).abs() > ANGLE_TOL {
        return Err(StabError::NonCliffordAngle { kind, angle });
    }
    Ok(steps.rem_euclid(4.0) as usize % 4)
}

fn push_rz(out: &mut Vec<Prim>, q: usize, k: usize) {
    match k {
        0 => {}
        1 => out.push(Prim::S(q)),
        2 => out.push(Prim::Z(q)),
        _ => out.push(Prim::Sdg(q)),
    }
}

fn push_rx(out: &mut Vec<Prim>, q: usize, k: usize) {
    if k == 0 {
        return;
    }
    out.push(Prim::H(q));
    push_rz(out, q, k);
    out.push(Prim::H(q));
}

fn push_ry(out: &mut Vec<Prim>, q: usize, k: usize) {
    if k == 0 {
        return;
    }
    // Ry(a) = S Rx(a) Sdg, so the Sdg acts first in time.
    out.push(Prim::Sdg(q));
    push_rx(out, q, k);
    out.push(Prim::S(q));
}

/// Lower one gate to primitives in time order.
pub(crate) fn lower_gate(gate: &Gate) -> Result<Vec<Prim>, StabError> {
    if !gate.controls.is_empty() {
        return Err(StabError::UnsupportedGate(format!(
            "multi-controlled {:?} is outside the Clifford subset handled here",
            gate.kind
        )));
    }
    let t = &gate.targets;
    let mut out = Vec::new();
    match gate.kind {
        GateKind::H => out.push(Prim::H(t[0])),
        GateKind::S => out.push(Prim::S(t[0])),
        GateKind::Sdg => out.push(Prim::Sdg(t[0])),
        GateKind::X => out.push(Prim::X(t[0])),
        GateKind::Y => out.push(Prim::Y(t[0])),
        GateKind::Z => out.push(Prim::Z(t[0])),
        GateKind::Cx => out.push(Prim::Cx(t[0], t[1])),
        GateKind::Cz => out.push(Prim::Cz(t[0], t[1])),
        GateKind::Swap => out.push(Prim::Swap(t[0], t[1])),
        GateKind::Rx => push_rx(&mut out, t[0], quarter_turns("Rx", gate.params[0])?),
        GateKind::Ry => push_ry(&mut out, t[0], quarter_turns("Ry", gate.params[0])?),
        GateKind::Rz => push_rz(&mut out, t[0], quarter_turns("Rz", gate.params[0])?),
        GateKind::Euler => {
            // Euler(a, b, c) = Rz(a) Ry(b) Rz(c); c acts first in time.
            push_rz(&mut out, t[0], quarter_turns("Euler", gate.params[2])?);
            push_ry(&mut out, t[0], quarter_turns("Euler", gate.params[1])?);
            push_rz(&mut out, t[0], quarter_turns("Euler", gate.params[0])?);
        }
    }
    Ok(out)
}

/// Lower a whole circuit, keeping the per-moment grouping.
pub(crate) fn lower_circuit(c: &Circuit) -> Result<Vec<Vec<Prim>>, StabError> {
    c.moments()
        .iter()
        .map(|moment| {
            let mut prims = Vec::new();
            for gate in moment {
                prims.extend(lower_gate(gate)?);
            }
            Ok(prims)
        })
        .collect()
}

/// One Pauli row as mutable bit-plane slices plus a sign bit.
///
/// The update rules below are the images of the hermitian Pauli basis under
/// conjugation, e.g. `H X H = Z`, `S X Sdg = Y`, `CX (X⊗I) CX = X⊗X`.
pub(crate) struct RowBits<'a> {
    pub x: &'a mut [u64],
    pub z: &'a mut [u64],
    pub sign: &'a mut bool,
}

#[inline]
fn get(words: &[u64], q: usize) -> bool {
    words[q / 64] >> (q % 64) & 1 == 1
}

#[inline]
fn set(words: &mut [u64], q: usize, v: bool) {
    let mask = 1u64 << (q % 64);
    if v {
        words[q / 64] |= mask;
    } else {
        words[q / 64] &= !mask;
    }
}

impl RowBits<'_> {
    /// Apply one primitive to this row.
    pub fn apply(&mut self, p: Prim) {
        match p {
            Prim::H(q) => {
                let (x, z) = (get(self.x, q), get(self.z, q));
                *self.sign ^= x & z;
                set(self.x, q, z);
                set(self.z, q, x);
            }
            Prim::S(q) => {
                let (x, z) = (get(self.x, q), get(self.z, q));
                *self.sign ^= x & z;
                set(self.z, q, z ^ x);
            }
            Prim::Sdg(q) => {
                let (x, z) = (get(self.x, q), get(self.z, q));
                *self.sign ^= x & !z;
                set(self.z, q, z ^ x);
            }
            Prim::X(q) => *self.sign ^= get(self.z, q),
            Prim::Y(q) => *self.sign ^= get(self.x, q) ^ get(self.z, q),
            Prim::Z(q) => *self.sign ^= get(self.x, q),
            Prim::Cx(c, t) => {
                let (xc, zc) = (get(self.x, c), get(self.z, c));
                let (xt, zt) = (get(self.x, t), get(self.z, t));
                *self.sign ^= xc & zt & (xt ^ zc ^ true);
                set(self.x, t, xt ^ xc);
                set(self.z, c, zc ^ zt);
            }
            Prim::Cz(a, b) => {
                let (xa, za) = (get(self.x, a), get(self.z, a));
                let (xb, zb) = (get(self.x, b), get(self.z, b));
                *self.sign ^= xa & xb & (za ^ zb);
                set(self.z, a, za ^ xb);
                set(self.z, b, zb ^ xa);
            }
            Prim::Swap(a, b) => {
                let (xa, za) = (get(self.x, a), get(self.z, a));
                let (xb, zb) = (get(self.x, b), get(self.z, b));
                set(self.x, a, xb);
                set(self.z, a, zb);
                set(self.x, b, xa);
                set(self.z, b, za);
            }
        }
    }

}

/// Conjugate a Pauli string through a circuit: returns `U p U†` with sign.
pub fn conjugate_pauli(c: &Circuit, p: &PauliString) -> Result<PauliString, StabError> {
    if c.qubit_count() != p.len() {
        return Err(StabError::QubitCountMismatch {
            circuit: c.qubit_count(),
            operand: p.len(),
        });
    }
    let mut x = p.x_words().to_vec();
    let mut z = p.z_words().to_vec();
    let mut sign = p.sign() < 0;
    {
        let mut row = RowBits {
            x: &mut x,
            z: &mut z,
            sign: &mut sign,
        };
        for moment in c.moments() {
            for gate in moment {
                for prim in lower_gate(gate)? {
                    row.apply(prim);
                }
            }
        }
    }
    Ok(PauliString::from_parts(p.len(), sign, x, z))
}
