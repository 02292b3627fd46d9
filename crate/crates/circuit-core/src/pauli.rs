use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CircuitError;

/// Single-qubit Pauli factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliOp {
    I,
    X,
    Y,
    Z,
}

impl PauliOp {
    pub fn from_bits(x: bool, z: bool) -> PauliOp {
        match (x, z) {
            (false, false) => PauliOp::I,
            (true, false) => PauliOp::X,
            (true, true) => PauliOp::Y,
            (false, true) => PauliOp::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliOp::I => (false, false),
            PauliOp::X => (true, false),
            PauliOp::Y => (true, true),
            PauliOp::Z => (false, true),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            PauliOp::I => 'I',
            PauliOp::X => 'X',
            PauliOp::Y => 'Y',
            PauliOp::Z => 'Z',
        }
    }
}

/// A signed N-qubit Pauli operator.
///
/// Qubit `i` carries an X factor iff bit `i` of `x` is set and a Z factor iff
/// bit `i` of `z` is set; both set means Y. The bit vectors are packed into
/// `u64` words (bit `i` lives in word `i / 64` at position `i % 64`), so
/// products and commutation checks are word-wise XOR/AND loops.
///
/// The text form is a sign character followed by one letter per qubit, qubit 0
/// first: `"+XIZY"`, `"-ZZ"`. Serialization uses the text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    neg: bool,
    x: Vec<u64>,
    z: Vec<u64>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl PauliString {
    /// The positive identity on `n` qubits.
    pub fn identity(n: usize) -> PauliString {
        PauliString {
            n,
            neg: false,
            x: vec![0; words_for(n)],
            z: vec![0; words_for(n)],
        }
    }

    /// Build from per-qubit factors and a sign (+1 / -1).
    pub fn from_ops(sign: i8, ops: &[PauliOp]) -> PauliString {
        let mut p = PauliString::identity(ops.len());
        for (i, op) in ops.iter().enumerate() {
            p.set_op(i, *op);
        }
        p.neg = sign < 0;
        p
    }

    /// Low-level constructor from packed words; unused high bits must be zero.
    pub fn from_parts(n: usize, neg: bool, x: Vec<u64>, z: Vec<u64>) -> PauliString {
        debug_assert_eq!(x.len(), words_for(n));
        debug_assert_eq!(z.len(), words_for(n));
        PauliString { n, neg, x, z }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        if self.neg {
            -1
        } else {
            1
        }
    }

    pub fn set_sign(&mut self, sign: i8) {
        self.neg = sign < 0;
    }

    pub fn negate(&mut self) {
        self.neg = !self.neg;
    }

    pub fn x_bit(&self, i: usize) -> bool {
        (self.x[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn z_bit(&self, i: usize) -> bool {
        (self.z[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set_x_bit(&mut self, i: usize, v: bool) {
        let (w, b) = (i / 64, i % 64);
        if v {
            self.x[w] |= 1 << b;
        } else {
            self.x[w] &= !(1 << b);
        }
    }

    pub fn set_z_bit(&mut self, i: usize, v: bool) {
        let (w, b) = (i / 64, i % 64);
        if v {
            self.z[w] |= 1 << b;
        } else {
            self.z[w] &= !(1 << b);
        }
    }

    pub fn op(&self, i: usize) -> PauliOp {
        PauliOp::from_bits(self.x_bit(i), self.z_bit(i))
    }

    pub fn set_op(&mut self, i: usize, op: PauliOp) {
        let (x, z) = op.bits();
        self.set_x_bit(i, x);
        self.set_z_bit(i, z);
    }

    /// Packed X-part words (low-level access for the simulators).
    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    /// Packed Z-part words (low-level access for the simulators).
    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    /// Number of qubits with a non-identity factor.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Indices of qubits with a non-identity factor, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.op(i) != PauliOp::I).collect()
    }

    /// True exactly for the positive identity (all factors I, sign +1).
    pub fn is_identity(&self) -> bool {
        !self.neg && self.is_identity_up_to_sign()
    }

    /// True when every factor is I regardless of sign.
    pub fn is_identity_up_to_sign(&self) -> bool {
        self.x.iter().all(|&w| w == 0) && self.z.iter().all(|&w| w == 0)
    }

    /// True when the factors are all Z or I (diagonal in the computational
    /// basis).
    pub fn is_diagonal(&self) -> bool {
        self.x.iter().all(|&w| w == 0)
    }

    /// Symplectic product: true iff the two operators anticommute.
    pub fn anticommutes_with(&self, other: &PauliString) -> bool {
        debug_assert_eq!(self.n, other.n);
        let mut parity = 0u32;
        for w in 0..self.x.len() {
            parity ^= (self.x[w] & other.z[w]).count_ones() & 1;
            parity ^= (self.z[w] & other.x[w]).count_ones() & 1;
        }
        parity & 1 == 1
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.neg { '-' } else { '+' })?;
        for i in 0..self.n {
            write!(f, "{}", self.op(i).to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = CircuitError;

    fn from_str(s: &str) -> Result<PauliString, CircuitError> {
        let bad = || CircuitError::PauliParse(s.to_string());
        let mut chars = s.chars().peekable();
        let neg = match chars.peek() {
            Some('+') => {
                chars.next();
                false
            }
            Some('-') => {
                chars.next();
                true
            }
            _ => false,
        };
        let ops: Vec<PauliOp> = chars
            .map(|c| match c {
                'I' | 'i' => Ok(PauliOp::I),
                'X' | 'x' => Ok(PauliOp::X),
                'Y' | 'y' => Ok(PauliOp::Y),
                'Z' | 'z' => Ok(PauliOp::Z),
                _ => Err(bad()),
            })
            .collect::<Result<_, _>>()?;
        if ops.is_empty() {
            return Err(bad());
        }
        let mut p = PauliString::from_ops(1, &ops);
        p.neg = neg;
        Ok(p)
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<PauliString, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
