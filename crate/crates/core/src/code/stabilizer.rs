use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{gf2_rank, BitMatrix, EchelonBasis};

use super::{CodeError, PauliString};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerCode {
    pub n: usize,
    pub k: usize,
    pub generators: Vec<PauliString>,
    pub logical_x: Vec<PauliString>,
    pub logical_z: Vec<PauliString>,
    pub name: Option<String>,
}

/// Names one operator of a code in file order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpRef {
    Generator(usize),
    LogicalX(usize),
    LogicalZ(usize),
}

impl fmt::Display for OpRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpRef::Generator(i) => write!(f, "generator {i}"),
            OpRef::LogicalX(j) => write!(f, "logical_x {j}"),
            OpRef::LogicalZ(j) => write!(f, "logical_z {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Count { section: &'static str, expected: usize, found: usize },
    Width { op: OpRef, expected: usize, found: usize },
    NonHermitian(OpRef),
    GeneratorsAnticommute(usize, usize),
    DependentGenerators { rank: usize, expected: usize },
    LogicalAnticommutesWithGenerator { logical: OpRef, generator: usize },
    LogicalPairing { x: usize, z: usize },
    LogicalsAnticommute(OpRef, OpRef),
    LogicalInStabilizer(OpRef),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Count { section, expected, found } => {
                write!(f, "[{section}] needs {expected} operators, found {found}")
            }
            Violation::Width { op, expected, found } => {
                write!(f, "{op} acts on {found} qubits, expected {expected}")
            }
            Violation::NonHermitian(op) => write!(f, "{op} has an imaginary phase"),
            Violation::GeneratorsAnticommute(i, j) => {
                write!(f, "generators {i} and {j} anticommute")
            }
            Violation::DependentGenerators { rank, expected } => {
                write!(f, "dependent generators: rank {rank}, expected {expected}")
            }
            Violation::LogicalAnticommutesWithGenerator { logical, generator } => {
                write!(f, "{logical} anticommutes with generator {generator}")
            }
            Violation::LogicalPairing { x, z } if x == z => {
                write!(f, "logical pairing: logical_x {x} commutes with logical_z {z}")
            }
            Violation::LogicalPairing { x, z } => {
                write!(f, "logical pairing: logical_x {x} anticommutes with logical_z {z}")
            }
            Violation::LogicalsAnticommute(a, b) => write!(f, "{a} anticommutes with {b}"),
            Violation::LogicalInStabilizer(op) => write!(f, "{op} lies in the stabilizer group"),
        }
    }
}

impl StabilizerCode {
    /// Builds and validates.
    pub fn new(
        n: usize,
        k: usize,
        generators: Vec<PauliString>,
        logical_x: Vec<PauliString>,
        logical_z: Vec<PauliString>,
    ) -> Result<Self, CodeError> {
        let code = Self {
            n,
            k,
            generators,
            logical_x,
            logical_z,
            name: None,
        };
        code.validate().map_err(CodeError::Invalid)?;
        Ok(code)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("[[{},{}]]", self.n, self.k))
    }

    pub fn operator(&self, op: OpRef) -> &PauliString {
        match op {
            OpRef::Generator(i) => &self.generators[i],
            OpRef::LogicalX(j) => &self.logical_x[j],
            OpRef::LogicalZ(j) => &self.logical_z[j],
        }
    }

    fn all_ops(&self) -> impl Iterator<Item = (OpRef, &PauliString)> {
        let g = self.generators.iter().enumerate().map(|(i, p)| (OpRef::Generator(i), p));
        let x = self.logical_x.iter().enumerate().map(|(j, p)| (OpRef::LogicalX(j), p));
        let z = self.logical_z.iter().enumerate().map(|(j, p)| (OpRef::LogicalZ(j), p));
        g.chain(x).chain(z)
    }

    /// Rows `(x | z)` of the generators.
    pub fn symplectic_matrix(&self) -> BitMatrix {
        BitMatrix::new(
            2 * self.n,
            self.generators.iter().map(PauliString::symplectic_row).collect(),
        )
        .expect("generators have width n")
    }

    /// X parts of the generators, one row each.
    pub fn x_matrix(&self) -> BitMatrix {
        BitMatrix::new(self.n, self.generators.iter().map(|g| g.x().clone()).collect())
            .expect("generators have width n")
    }

    /// Every violated invariant; empty means valid.
    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let r = self.n.saturating_sub(self.k);
        for (section, expected, found) in [
            ("stabilizers", r, self.generators.len()),
            ("logical_x", self.k, self.logical_x.len()),
            ("logical_z", self.k, self.logical_z.len()),
        ] {
            if expected != found || self.k > self.n {
                out.push(Violation::Count { section, expected, found });
            }
        }
        let mut widths_ok = true;
        for (op, p) in self.all_ops() {
            if p.n() != self.n {
                widths_ok = false;
                out.push(Violation::Width {
                    op,
                    expected: self.n,
                    found: p.n(),
                });
            }
        }
        for (op, p) in self.all_ops() {
            if !p.is_hermitian() {
                out.push(Violation::NonHermitian(op));
            }
        }
        if !widths_ok {
            return out;
        }

        let gens = &self.generators;
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !gens[i].commutes_with(&gens[j]) {
                    out.push(Violation::GeneratorsAnticommute(i, j));
                }
            }
        }
        let rank = gf2_rank(&self.symplectic_matrix());
        if rank != gens.len() {
            out.push(Violation::DependentGenerators {
                rank,
                expected: gens.len(),
            });
        }

        let logicals: Vec<(OpRef, &PauliString)> =
            self.all_ops().filter(|(op, _)| !matches!(op, OpRef::Generator(_))).collect();
        for &(op, l) in &logicals {
            for (i, g) in gens.iter().enumerate() {
                if !l.commutes_with(g) {
                    out.push(Violation::LogicalAnticommutesWithGenerator {
                        logical: op,
                        generator: i,
                    });
                }
            }
        }
        for (j, x) in self.logical_x.iter().enumerate() {
            for (l, z) in self.logical_z.iter().enumerate() {
                if x.commutes_with(z) == (j == l) {
                    out.push(Violation::LogicalPairing { x: j, z: l });
                }
            }
        }
        for (ops, mk) in [
            (&self.logical_x, OpRef::LogicalX as fn(usize) -> OpRef),
            (&self.logical_z, OpRef::LogicalZ as fn(usize) -> OpRef),
        ] {
            for a in 0..ops.len() {
                for b in a + 1..ops.len() {
                    if !ops[a].commutes_with(&ops[b]) {
                        out.push(Violation::LogicalsAnticommute(mk(a), mk(b)));
                    }
                }
            }
        }
        let span = EchelonBasis::new(&self.symplectic_matrix());
        for &(op, l) in &logicals {
            if span.contains(&l.symplectic_row()).expect("width 2n") {
                out.push(Violation::LogicalInStabilizer(op));
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let v = self.check();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// Product of the generators selected by the bits of `subset`, lowest index leftmost.
    pub fn group_element(&self, subset: u64) -> PauliString {
        let mut acc = PauliString::identity(self.n);
        for (i, g) in self.generators.iter().enumerate() {
            if subset >> i & 1 == 1 {
                acc = acc.mul(g);
            }
        }
        acc
    }

    /// Conjugates every operator by S on qubit `t`.
    pub fn conjugate_s(&self, t: usize) -> Self {
        let map = |ps: &Vec<PauliString>| ps.iter().map(|p| p.conjugate_s(t)).collect();
        Self {
            n: self.n,
            k: self.k,
            generators: map(&self.generators),
            logical_x: map(&self.logical_x),
            logical_z: map(&self.logical_z),
            name: self.name.as_ref().map(|s| format!("{s}-s{t}")),
        }
    }
}
