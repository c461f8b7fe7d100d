use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, DiagonalGate2Q, RationalAngle};
use crate::code::{SectorPlan, StabilizerCode};

use super::classify::classify_with;
use super::group::group_x_parts;
use super::witness::{mask_indices, subset_cmp};
use super::{cap, ensure_valid, AnalysisError, Caps, ConstraintWitness, Verdict, WitnessKind};

/// Two-block gates admitted by a code with single-block exponent `k`:
/// `θ01 = a/2^k`, `θ10 = b/2^k`, `θ11 - θ01 - θ10 = c/2^(k-1)` with `θ00 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoQubitReport {
    pub code_name: String,
    pub k: u32,
    pub theta01_step: RationalAngle,
    pub theta10_step: RationalAngle,
    pub theta11_prime_step: RationalAngle,
    /// Members with `(a, b, c)` equal to `(1,0,0)`, `(0,1,0)` and `(0,0,1)`.
    pub generators: [DiagonalGate2Q; 3],
}

impl TwoQubitReport {
    pub fn new(code_name: String, k: u32) -> Result<Self, AnalysisError> {
        if k == 0 {
            return Err(AnalysisError::NoTwoQubitFamily);
        }
        let s = RationalAngle::dyadic(1, k);
        let s2 = RationalAngle::dyadic(1, k - 1);
        let z = RationalAngle::ZERO;
        Ok(Self {
            code_name,
            k,
            theta01_step: s,
            theta10_step: s,
            theta11_prime_step: s2,
            generators: [
                DiagonalGate2Q::new([z, s, z, s]),
                DiagonalGate2Q::new([z, z, s, s]),
                DiagonalGate2Q::new([z, z, z, s2]),
            ],
        })
    }

    pub fn member(&self, a: i64, b: i64, c: i64) -> DiagonalGate2Q {
        let t01 = RationalAngle::dyadic(a, self.k);
        let t10 = RationalAngle::dyadic(b, self.k);
        let t11 = t01 + t10 + RationalAngle::dyadic(c, self.k - 1);
        DiagonalGate2Q::new([RationalAngle::ZERO, t01, t10, t11])
    }

    /// Membership up to a global phase.
    pub fn contains(&self, gate: &DiagonalGate2Q) -> bool {
        let g = gate.normalized();
        let [_, t01, t10, t11] = g.phases();
        let fits = |a: RationalAngle, e: u32| (1u64 << e).is_multiple_of(a.den());
        fits(t01, self.k) && fits(t10, self.k) && fits(t11 - t01 - t10, self.k - 1)
    }

    pub fn describe(&self) -> String {
        format!(
            "θ01 ∈ {{c/{0}}}, θ10 ∈ {{c/{0}}}, θ11 − θ01 − θ10 ∈ {{c/{1}}} (θ00 = 0)",
            1u64 << self.k,
            1u64 << (self.k - 1)
        )
    }
}

pub fn two_qubit_family(code: &StabilizerCode, caps: &Caps) -> Result<TwoQubitReport, AnalysisError> {
    let report = classify_with(code, caps)?;
    match report.k_max {
        Some(k) if k >= 1 => TwoQubitReport::new(report.code_name, k),
        _ => Err(AnalysisError::NoTwoQubitFamily),
    }
}

/// Pair engine: the gate acts on qubit `t` of block A and qubit `t` of block B,
/// and its phase must be constant on every pair of logical cosets.
pub fn check_two_qubit(code: &StabilizerCode, gate: &DiagonalGate2Q, pair_cap: usize) -> Result<Verdict, AnalysisError> {
    ensure_valid(code)?;
    cap("n", code.n, 64)?;
    let r = code.generators.len();
    cap("2(n - k)", 2 * r, pair_cap)?;
    let plan = SectorPlan::new(code)?;
    let (p, q) = AngleVector::new(gate.phases().to_vec()).integer_form()?;
    let modulus = q.checked_mul(2).ok_or(AnalysisError::Overflow)?;
    let n = code.n as u32;
    let eval = |u: u64, v: u64| -> u128 {
        let c11 = (u & v).count_ones();
        let c10 = (u & !v).count_ones();
        let c01 = (!u & v).count_ones();
        let c00 = n - c11 - c10 - c01;
        (p[0] * c00 as u128 + p[1] * c01 as u128 + p[2] * c10 as u128 + p[3] * c11 as u128) % modulus
    };

    let xs = group_x_parts(code);
    let sectors = plan.sector_count();
    let mut phases = Vec::with_capacity(sectors * sectors);
    for ma in 0..sectors {
        let ra = plan.representative_mask(ma);
        for mb in 0..sectors {
            let rb = plan.representative_mask(mb);
            let reference = eval(ra, rb);
            let mut worst: Option<(u64, u128)> = None;
            for (si, &xi) in xs.iter().enumerate() {
                for (sj, &xj) in xs.iter().enumerate() {
                    let v = eval(ra ^ xi, rb ^ xj);
                    if v != reference {
                        let s = si as u64 | (sj as u64) << r;
                        if worst.is_none_or(|(w, _)| subset_cmp(s, w).is_lt()) {
                            worst = Some((s, v));
                        }
                    }
                }
            }
            if let Some((s, v)) = worst {
                let low = (1u64 << r) - 1;
                return Ok(Verdict::rejected(ConstraintWitness {
                    kind: WitnessKind::PairCoset,
                    subset: mask_indices(s & low),
                    partner_subset: mask_indices(s >> r),
                    logical_rows: (0..code.k)
                        .filter(|j| ma >> j & 1 == 1)
                        .chain((0..code.k).filter(|j| mb >> j & 1 == 1).map(|j| j + code.k))
                        .collect(),
                    sector: ma * sectors + mb,
                    required_modulus: modulus,
                    observed_value: (v + modulus - reference) % modulus,
                }));
            }
            phases.push(RationalAngle::from_i128(reference as i128, q as i128)?);
        }
    }
    Ok(Verdict::preserved(phases))
}
