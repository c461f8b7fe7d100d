use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::linalg::BitVector;

use super::CodeError;

/// `i^phase_exp` times a tensor product of Hermitian single-qubit Paulis.
///
/// Qubit `t` carries I, X, Y, Z for `(x_t, z_t)` = 00, 10, 11, 01.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliString {
    x: BitVector,
    z: BitVector,
    phase_exp: u8,
}

impl PauliString {
    pub fn new(x: BitVector, z: BitVector, phase_exp: u8) -> Result<Self, CodeError> {
        if x.len() != z.len() {
            return Err(CodeError::Length {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self {
            x,
            z,
            phase_exp: phase_exp % 4,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase_exp: 0,
        }
    }

    pub fn x_type(x: BitVector) -> Self {
        let n = x.len();
        Self {
            x,
            z: BitVector::zeros(n),
            phase_exp: 0,
        }
    }

    pub fn z_type(z: BitVector) -> Self {
        let n = z.len();
        Self {
            x: BitVector::zeros(n),
            z,
            phase_exp: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitVector {
        &self.x
    }

    pub fn z(&self) -> &BitVector {
        &self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn with_phase(mut self, phase_exp: u8) -> Self {
        self.phase_exp = phase_exp % 4;
        self
    }

    pub fn negated(self) -> Self {
        let p = self.phase_exp + 2;
        self.with_phase(p)
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase_exp.is_multiple_of(2)
    }

    pub fn weight(&self) -> usize {
        let mut support = self.x.clone();
        support.or_assign(&self.z).expect("x and z share length");
        support.weight()
    }

    pub fn y_count(&self) -> usize {
        let mut y = self.x.clone();
        y.and_assign(&self.z).expect("x and z share length");
        y.weight()
    }

    /// Pure X-type: no Z or Y content.
    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// Concatenation `(x | z)` as a 2n-bit row, ignoring phase.
    pub fn symplectic_row(&self) -> BitVector {
        let mut bits = self.x.to_bools();
        bits.extend(self.z.to_bools());
        BitVector::from_bools(&bits)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        let a = self.x.dot(&other.z).expect("equal qubit count");
        let b = self.z.dot(&other.x).expect("equal qubit count");
        a == b
    }

    /// Operator product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        let c1 = self.phase_exp as usize + self.y_count();
        let c2 = other.phase_exp as usize + other.y_count();
        let sign = if self.z.dot(&other.x).expect("equal qubit count") { 2 } else { 0 };
        let mut x = self.x.clone();
        x.xor_assign(&other.x).expect("equal qubit count");
        let mut z = self.z.clone();
        z.xor_assign(&other.z).expect("equal qubit count");
        let mut out = Self { x, z, phase_exp: 0 };
        let c = c1 + c2 + sign;
        out.phase_exp = ((c + 4 * out.n() - out.y_count()) % 4) as u8;
        out
    }

    /// Qubit mask of the X part; bit `t` is qubit `t`. Requires `n <= 64`.
    pub fn x_mask(&self) -> u64 {
        self.x.to_u64().expect("mask form needs n <= 64")
    }

    pub fn z_mask(&self) -> u64 {
        self.z.to_u64().expect("mask form needs n <= 64")
    }

    /// `P|b> = i^e |b ^ x>`; returns `(e mod 4, b ^ x)`. Requires `n <= 64`.
    pub fn act_on_basis(&self, b: u64) -> (u8, u64) {
        let (x, z) = (self.x_mask(), self.z_mask());
        let sign = if (z & b).count_ones() % 2 == 1 { 2 } else { 0 };
        let e = (self.phase_exp as u32 + (x & z).count_ones() + sign) % 4;
        (e as u8, b ^ x)
    }

    /// Conjugation by S on qubit `t`: X -> Y, Y -> -X, Z -> Z.
    pub fn conjugate_s(&self, t: usize) -> Self {
        let mut out = self.clone();
        let xt = self.x.get(t).expect("qubit in range");
        let zt = self.z.get(t).expect("qubit in range");
        match (xt, zt) {
            (true, false) => out.z.set(t, true).expect("qubit in range"),
            (true, true) => {
                out.z.set(t, false).expect("qubit in range");
                out.phase_exp = (out.phase_exp + 2) % 4;
            }
            _ => {}
        }
        out
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.phase_exp {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        })?;
        for (x, z) in self.x.to_bools().into_iter().zip(self.z.to_bools()) {
            f.write_str(match (x, z) {
                (false, false) => "I",
                (true, false) => "X",
                (true, true) => "Y",
                (false, true) => "Z",
            })?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = CodeError;

    /// Optional `+`, `-`, `i`, `+i` or `-i` prefix, then letters from `IXYZ`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (phase, body) = if let Some(rest) = s.strip_prefix("-i") {
            (3, rest)
        } else if let Some(rest) = s.strip_prefix("+i") {
            (1, rest)
        } else if let Some(rest) = s.strip_prefix('i') {
            (1, rest)
        } else if let Some(rest) = s.strip_prefix('-') {
            (2, rest)
        } else if let Some(rest) = s.strip_prefix('+') {
            (0, rest)
        } else {
            (0, s)
        };
        let mut xs = Vec::with_capacity(body.len());
        let mut zs = Vec::with_capacity(body.len());
        for c in body.chars() {
            let (x, z) = match c {
                'I' => (false, false),
                'X' => (true, false),
                'Y' => (true, true),
                'Z' => (false, true),
                other => return Err(CodeError::PauliChar(other)),
            };
            xs.push(x);
            zs.push(z);
        }
        if xs.is_empty() {
            return Err(CodeError::EmptyPauli);
        }
        Ok(Self {
            x: BitVector::from_bools(&xs),
            z: BitVector::from_bools(&zs),
            phase_exp: phase,
        })
    }
}
