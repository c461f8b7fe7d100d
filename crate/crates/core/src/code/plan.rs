use serde::{Deserialize, Serialize};

use crate::linalg::{gf2_kernel, gf2_solve, BitMatrix, BitVector, EchelonBasis};

use super::{CodeError, PauliString, StabilizerCode};

/// How pair `j` was resolved while choosing the operator that moves between
/// logical basis states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairCase {
    /// X part of `Z_j` already lies in the accumulated span; flip with `X_j`.
    ZEigen,
    /// X part of `X_j` lies in the span; flip with `Z_j`.
    XEigen,
    /// X part of `X_j Z_j` lies in the span; `Z_j` is redefined as `X_j Z_j`, flip with `X_j`.
    Redefined,
    /// None of the three lies in the span; flip with `X_j`.
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FlipOp {
    LogicalX(usize),
    LogicalZ(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanStep {
    pub pair: usize,
    pub case: PairCase,
    pub flip: FlipOp,
    pub flip_x: BitVector,
}

/// Coset structure of the codespace in the computational basis.
///
/// Logical basis state `m` is supported on `representative(m) + span(x(G))`,
/// where bit `j` of `m` selects the flip of pair `j`. The representative of
/// state 0 is the seed: the lexicographically smallest basis state (qubit 0
/// first) that satisfies every Z-only stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorPlan {
    pub n: usize,
    pub k: usize,
    pub seed: BitVector,
    /// Echelon basis of the X parts of the generators.
    pub stabilizer_x: EchelonBasis,
    pub steps: Vec<PlanStep>,
    /// `Z_j`, or `X_j Z_j` (made Hermitian) after a redefinition.
    pub effective_z: Vec<PauliString>,
}

impl SectorPlan {
    pub fn new(code: &StabilizerCode) -> Result<Self, CodeError> {
        let n = code.n;
        let seed = seed_state(code)?;
        let stabilizer_x = EchelonBasis::new(&code.x_matrix());
        let mut span = stabilizer_x.clone();
        let mut steps = Vec::with_capacity(code.k);
        let mut effective_z = Vec::with_capacity(code.k);
        for j in 0..code.k {
            let (xj, zj) = (&code.logical_x[j], &code.logical_z[j]);
            let xz = xj.mul(zj);
            let (case, flip, flip_op, z_eff) = if span.contains(zj.x())? {
                (PairCase::ZEigen, FlipOp::LogicalX(j), xj, zj.clone())
            } else if span.contains(xj.x())? {
                (PairCase::XEigen, FlipOp::LogicalZ(j), zj, zj.clone())
            } else if span.contains(xz.x())? {
                let herm = if xz.is_hermitian() { xz.clone() } else { xz.clone().with_phase(xz.phase_exp() + 1) };
                (PairCase::Redefined, FlipOp::LogicalX(j), xj, herm)
            } else {
                (PairCase::Neither, FlipOp::LogicalX(j), xj, zj.clone())
            };
            if !span.insert(flip_op.x())? {
                return Err(CodeError::Plan(format!(
                    "no flip for logical pair {j} leaves the current coset span"
                )));
            }
            steps.push(PlanStep {
                pair: j,
                case,
                flip,
                flip_x: flip_op.x().clone(),
            });
            effective_z.push(z_eff);
        }
        Ok(Self {
            n,
            k: code.k,
            seed,
            stabilizer_x,
            steps,
            effective_z,
        })
    }

    pub fn sector_count(&self) -> usize {
        1 << self.k
    }

    /// Rank of the X parts; each sector holds `2^rank` basis states.
    pub fn support_exponent(&self) -> usize {
        self.stabilizer_x.rank()
    }

    pub fn representative(&self, m: usize) -> BitVector {
        let mut r = self.seed.clone();
        for step in &self.steps {
            if m >> step.pair & 1 == 1 {
                r.xor_assign(&step.flip_x).expect("width n");
            }
        }
        r
    }

    /// Representative as a qubit mask; requires `n <= 64`.
    pub fn representative_mask(&self, m: usize) -> u64 {
        self.representative(m).to_u64().expect("mask form needs n <= 64")
    }

    pub fn flip_operator<'a>(&self, code: &'a StabilizerCode, j: usize) -> &'a PauliString {
        match self.steps[j].flip {
            FlipOp::LogicalX(i) => &code.logical_x[i],
            FlipOp::LogicalZ(i) => &code.logical_z[i],
        }
    }

    /// Which sector a basis state belongs to, if any.
    pub fn sector_of(&self, b: &BitVector) -> Option<usize> {
        (0..self.sector_count()).find(|&m| {
            let mut d = self.representative(m);
            d.xor_assign(b).expect("width n");
            self.stabilizer_x.contains(&d).expect("width n")
        })
    }
}

/// Lexicographically smallest basis state fixed by every Z-only stabilizer.
fn seed_state(code: &StabilizerCode) -> Result<BitVector, CodeError> {
    let n = code.n;
    let xm = code.x_matrix();
    // Generator combinations whose X parts cancel.
    let combos = gf2_kernel(&xm.transpose());
    let mut rows = Vec::with_capacity(combos.len());
    let mut rhs = Vec::with_capacity(combos.len());
    for c in &combos {
        let mut s = PauliString::identity(n);
        for i in c.ones_iter() {
            s = s.mul(&code.generators[i]);
        }
        debug_assert!(s.x().is_zero());
        if !s.is_hermitian() {
            return Err(CodeError::Plan("Z-only stabilizer with imaginary phase".into()));
        }
        rows.push(s.z().clone());
        rhs.push(s.phase_exp() == 2);
    }
    let zm = BitMatrix::new(n, rows)?;
    let sol = gf2_solve(&zm, &BitVector::from_bools(&rhs))?
        .ok_or_else(|| CodeError::Plan("Z-only stabilizers have no common eigenstate".into()))?;
    let free = EchelonBasis::new(&BitMatrix::new(n, sol.kernel)?);
    Ok(free.reduce(&sol.particular)?)
}
