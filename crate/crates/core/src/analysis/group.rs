use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, DiagonalGate1Q, RationalAngle};
use crate::code::{SectorPlan, StabilizerCode};

use super::witness::{mask_indices, subset_cmp};
use super::{cap, ensure_valid, AnalysisError, ConstraintWitness, Verdict, WitnessKind};

/// Integer phase function `b -> Σ_t P_t b_t mod 2Q`.
pub(crate) struct PhaseFn {
    p: Vec<u128>,
    uniform: Option<u128>,
    pub q: u128,
    pub modulus: u128,
}

impl PhaseFn {
    pub fn new(angles: &AngleVector) -> Result<Self, AnalysisError> {
        let (p, q) = angles.integer_form()?;
        let modulus = q.checked_mul(2).ok_or(AnalysisError::Overflow)?;
        let uniform = p.first().copied().filter(|f| p.iter().all(|x| x == f));
        Ok(Self { p, uniform, q, modulus })
    }

    pub fn eval(&self, b: u64) -> u128 {
        if let Some(u) = self.uniform {
            return u * b.count_ones() as u128 % self.modulus;
        }
        let mut s = 0u128;
        let mut bits = b;
        while bits != 0 {
            s = (s + self.p[bits.trailing_zeros() as usize]) % self.modulus;
            bits &= bits - 1;
        }
        s
    }

    pub fn angle(&self, v: u128) -> RationalAngle {
        RationalAngle::from_i128(v as i128, self.q as i128).expect("denominator fits")
    }
}

/// X part of every group element, indexed by generator subset mask.
pub(crate) fn group_x_parts(code: &StabilizerCode) -> Vec<u64> {
    let xs: Vec<u64> = code.generators.iter().map(|g| g.x_mask()).collect();
    let r = xs.len();
    let mut out = vec![0u64; 1 << r];
    for s in 1..out.len() {
        let low = s.trailing_zeros() as usize;
        out[s] = out[s & (s - 1)] ^ xs[low];
    }
    out
}

/// Reference engine: the phase must be constant on each logical coset.
pub(crate) fn coset_engine(
    code: &StabilizerCode,
    angles: &AngleVector,
    group_cap: usize,
) -> Result<Verdict, AnalysisError> {
    ensure_valid(code)?;
    angles.check_len(code.n)?;
    cap("n", code.n, 64)?;
    cap("n - k", code.generators.len(), group_cap)?;
    let plan = SectorPlan::new(code)?;
    let f = PhaseFn::new(angles)?;
    let seed = plan.seed.to_u64().expect("n <= 64");
    let base = f.eval(seed);

    // Logical Z operators that act within the seed's coset must not move its phase.
    let xm = code.x_matrix();
    for (j, z) in plan.effective_z.iter().enumerate() {
        if let Some(c) = xm.row_combination(z.x())? {
            let v = f.eval(seed ^ z.x_mask());
            if v != base {
                return Ok(Verdict::rejected(ConstraintWitness {
                    kind: WitnessKind::ZLogical { pair: j },
                    subset: c.ones_iter().collect(),
                    partner_subset: vec![],
                    logical_rows: vec![],
                    sector: 0,
                    required_modulus: f.modulus,
                    observed_value: (v + f.modulus - base) % f.modulus,
                }));
            }
        }
    }

    let xs = group_x_parts(code);
    let mut phases = Vec::with_capacity(plan.sector_count());
    for m in 0..plan.sector_count() {
        let rep = plan.representative_mask(m);
        let reference = f.eval(rep);
        let mut worst: Option<(u64, u128)> = None;
        for (s, &x) in xs.iter().enumerate() {
            let v = f.eval(rep ^ x);
            if v != reference {
                let s = s as u64;
                if worst.is_none_or(|(w, _)| subset_cmp(s, w).is_lt()) {
                    worst = Some((s, v));
                }
            }
        }
        if let Some((s, v)) = worst {
            return Ok(Verdict::rejected(ConstraintWitness {
                kind: WitnessKind::Coset,
                subset: mask_indices(s),
                partner_subset: vec![],
                logical_rows: (0..code.k).filter(|j| m >> j & 1 == 1).collect(),
                sector: m,
                required_modulus: f.modulus,
                observed_value: (v + f.modulus - reference) % f.modulus,
            }));
        }
        phases.push(f.angle(reference));
    }
    Ok(Verdict::preserved(phases))
}

/// `gate^{⊗n}` on any valid stabilizer code; only `θ - φ` enters, so the
/// reported phases drop the global factor `e^{iπnφ}`.
pub fn group_enumeration_check(
    code: &StabilizerCode,
    gate: &DiagonalGate1Q,
    group_cap: usize,
) -> Result<Verdict, AnalysisError> {
    coset_engine(code, &AngleVector::uniform(code.n, gate.difference()), group_cap)
}

/// Per-qubit `Z(θ_t)` through the group engine.
pub fn group_enumeration_check_angles(
    code: &StabilizerCode,
    angles: &AngleVector,
    group_cap: usize,
) -> Result<Verdict, AnalysisError> {
    coset_engine(code, angles, group_cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedVerdict {
    pub verdict: Verdict,
    /// Qubits with angle 0; they impose no condition and are left out of the reduced code.
    pub dropped_qubits: Vec<usize>,
}

/// Per-qubit angles. Identity qubits carry zero weight in every congruence,
/// so evaluating the full vector equals evaluating the code with them removed.
pub fn check_mixed(
    code: &StabilizerCode,
    angles: &AngleVector,
    group_cap: usize,
) -> Result<MixedVerdict, AnalysisError> {
    Ok(MixedVerdict {
        verdict: coset_engine(code, angles, group_cap)?,
        dropped_qubits: angles.identity_qubits(),
    })
}
