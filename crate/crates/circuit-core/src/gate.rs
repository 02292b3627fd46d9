use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CircuitError;

type C = Complex64;

/// The gate alphabet understood by both simulator backends.
///
/// `Euler` is a generic single-qubit unitary parameterized by three Euler
/// angles `(a, b, c)` and denotes `Rz(a) * Ry(b) * Rz(c)` (the `c` rotation is
/// applied first). Any kind can additionally carry a multi-control
/// specification on the enclosing [`Gate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GateKind {
    H,
    S,
    Sdg,
    X,
    Y,
    Z,
    Cx,
    Cz,
    Swap,
    Rx,
    Ry,
    Rz,
    Euler,
}

impl GateKind {
    /// Number of target qubits the kind acts on.
    pub fn target_count(self) -> usize {
        match self {
            GateKind::Cx | GateKind::Cz | GateKind::Swap => 2,
            _ => 1,
        }
    }

    /// Number of real angle parameters the kind carries.
    pub fn param_count(self) -> usize {
        match self {
            GateKind::Rx | GateKind::Ry | GateKind::Rz => 1,
            GateKind::Euler => 3,
            _ => 0,
        }
    }
}

/// One gate instance: a kind, its target qubits, optional control qubits with
/// a required bit-pattern, and angle parameters in radians.
///
/// For `Cx`, `targets[0]` is the control and `targets[1]` the target; `Cz` and
/// `Swap` are symmetric in their two targets. The `controls`/`ctrl_bits` pair
/// turns any gate into its multi-controlled variant: the base unitary is
/// applied exactly on basis states where control qubit `controls[i]` reads
/// bit `ctrl_bits[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    #[serde(default)]
    pub controls: Vec<usize>,
    #[serde(default)]
    pub ctrl_bits: Vec<bool>,
    #[serde(default)]
    pub params: Vec<f64>,
}

impl Gate {
    fn plain(kind: GateKind, targets: Vec<usize>, params: Vec<f64>) -> Gate {
        Gate {
            kind,
            targets,
            controls: Vec::new(),
            ctrl_bits: Vec::new(),
            params,
        }
    }

    pub fn h(q: usize) -> Gate {
        Gate::plain(GateKind::H, vec![q], vec![])
    }
    pub fn s(q: usize) -> Gate {
        Gate::plain(GateKind::S, vec![q], vec![])
    }
    pub fn sdg(q: usize) -> Gate {
        Gate::plain(GateKind::Sdg, vec![q], vec![])
    }
    pub fn x(q: usize) -> Gate {
        Gate::plain(GateKind::X, vec![q], vec![])
    }
    pub fn y(q: usize) -> Gate {
        Gate::plain(GateKind::Y, vec![q], vec![])
    }
    pub fn z(q: usize) -> Gate {
        Gate::plain(GateKind::Z, vec![q], vec![])
    }
    /// Controlled-X with control `c` and target `t`.
    pub fn cx(c: usize, t: usize) -> Gate {
        Gate::plain(GateKind::Cx, vec![c, t], vec![])
    }
    pub fn cz(a: usize, b: usize) -> Gate {
        Gate::plain(GateKind::Cz, vec![a, b], vec![])
    }
    pub fn swap(a: usize, b: usize) -> Gate {
        Gate::plain(GateKind::Swap, vec![a, b], vec![])
    }
    pub fn rx(q: usize, theta: f64) -> Gate {
        Gate::plain(GateKind::Rx, vec![q], vec![theta])
    }
    pub fn ry(q: usize, theta: f64) -> Gate {
        Gate::plain(GateKind::Ry, vec![q], vec![theta])
    }
    pub fn rz(q: usize, theta: f64) -> Gate {
        Gate::plain(GateKind::Rz, vec![q], vec![theta])
    }
    /// Generic single-qubit unitary `Rz(a) * Ry(b) * Rz(c)`.
    pub fn euler(q: usize, a: f64, b: f64, c: f64) -> Gate {
        Gate::plain(GateKind::Euler, vec![q], vec![a, b, c])
    }

    /// Attach a multi-control specification; `bits[i]` is the basis value
    /// required on `controls[i]` for the base gate to fire.
    pub fn with_controls(mut self, controls: Vec<usize>, bits: Vec<bool>) -> Gate {
        self.controls = controls;
        self.ctrl_bits = bits;
        self
    }

    /// The gate implementing the adjoint of this gate. Controls carry over
    /// unchanged: a controlled unitary inverts to the controlled inverse with
    /// the same firing pattern.
    pub fn inverse(&self) -> Gate {
        let mut g = self.clone();
        match g.kind {
            GateKind::S => g.kind = GateKind::Sdg,
            GateKind::Sdg => g.kind = GateKind::S,
            GateKind::Rx | GateKind::Ry | GateKind::Rz => g.params[0] = -g.params[0],
            GateKind::Euler => {
                let (a, b, c) = (g.params[0], g.params[1], g.params[2]);
                g.params = vec![-c, -b, -a];
            }
            GateKind::H
            | GateKind::X
            | GateKind::Y
            | GateKind::Z
            | GateKind::Cx
            | GateKind::Cz
            | GateKind::Swap => {}
        }
        g
    }

    /// All qubits the gate touches (targets first, then controls).
    pub fn qubits(&self) -> impl Iterator<Item = usize> + '_ {
        self.targets.iter().chain(self.controls.iter()).copied()
    }

    /// Structural validity: arity, parameter count, control pattern length,
    /// and pairwise-distinct qubits. Range checks against a qubit count happen
    /// when the gate is added to a circuit.
    pub fn validate(&self) -> Result<(), CircuitError> {
        let expected = self.kind.target_count();
        if self.targets.len() != expected {
            return Err(CircuitError::TargetCountMismatch {
                kind: self.kind,
                expected,
                got: self.targets.len(),
            });
        }
        let expected = self.kind.param_count();
        if self.params.len() != expected {
            return Err(CircuitError::AngleCountMismatch {
                kind: self.kind,
                expected,
                got: self.params.len(),
            });
        }
        if self.controls.len() != self.ctrl_bits.len() {
            return Err(CircuitError::ControlPatternMismatch {
                bits: self.ctrl_bits.len(),
                controls: self.controls.len(),
            });
        }
        let mut seen: Vec<usize> = Vec::with_capacity(self.targets.len() + self.controls.len());
        for q in self.qubits() {
            if seen.contains(&q) {
                return Err(CircuitError::DuplicateQubit(q));
            }
            seen.push(q);
        }
        Ok(())
    }

    /// Dense matrix of the *base* unitary on the target qubits (controls are
    /// handled by the simulators via index masking). Basis order puts
    /// `targets[0]` as the more significant bit.
    pub fn base_matrix(&self) -> BaseMatrix {
        let z = C::new(0.0, 0.0);
        let o = C::new(1.0, 0.0);
        match self.kind {
            GateKind::H => {
                let s = C::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                BaseMatrix::One([[s, s], [s, -s]])
            }
            GateKind::S => BaseMatrix::One([[o, z], [z, C::new(0.0, 1.0)]]),
            GateKind::Sdg => BaseMatrix::One([[o, z], [z, C::new(0.0, -1.0)]]),
            GateKind::X => BaseMatrix::One([[z, o], [o, z]]),
            GateKind::Y => BaseMatrix::One([[z, C::new(0.0, -1.0)], [C::new(0.0, 1.0), z]]),
            GateKind::Z => BaseMatrix::One([[o, z], [z, -o]]),
            GateKind::Rx => BaseMatrix::One(rx(self.params[0])),
            GateKind::Ry => BaseMatrix::One(ry(self.params[0])),
            GateKind::Rz => BaseMatrix::One(rz(self.params[0])),
            GateKind::Euler => {
                let m = mat2_mul(rz(self.params[0]), mat2_mul(ry(self.params[1]), rz(self.params[2])));
                BaseMatrix::One(m)
            }
            GateKind::Cx => BaseMatrix::Two([
                [o, z, z, z],
                [z, o, z, z],
                [z, z, z, o],
                [z, z, o, z],
            ]),
            GateKind::Cz => BaseMatrix::Two([
                [o, z, z, z],
                [z, o, z, z],
                [z, z, o, z],
                [z, z, z, -o],
            ]),
            GateKind::Swap => BaseMatrix::Two([
                [o, z, z, z],
                [z, z, o, z],
                [z, o, z, z],
                [z, z, z, o],
            ]),
        }
    }
}

/// Dense matrix of a gate's base unitary: 2x2 for one target, 4x4 for two.
#[derive(Debug, Clone, Copy)]
pub enum BaseMatrix {
    One([[Complex64; 2]; 2]),
    Two([[Complex64; 4]; 4]),
}

fn rx(theta: f64) -> [[C; 2]; 2] {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    [
        [C::new(c, 0.0), C::new(0.0, -s)],
        [C::new(0.0, -s), C::new(c, 0.0)],
    ]
}

fn ry(theta: f64) -> [[C; 2]; 2] {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    [
        [C::new(c, 0.0), C::new(-s, 0.0)],
        [C::new(s, 0.0), C::new(c, 0.0)],
    ]
}

fn rz(theta: f64) -> [[C; 2]; 2] {
    let z = C::new(0.0, 0.0);
    [
        [C::from_polar(1.0, -theta / 2.0), z],
        [z, C::from_polar(1.0, theta / 2.0)],
    ]
}

fn mat2_mul(a: [[C; 2]; 2], b: [[C; 2]; 2]) -> [[C; 2]; 2] {
    let mut out = [[C::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}
