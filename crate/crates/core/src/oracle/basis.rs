use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, DiagonalGate2Q, RationalAngle};
use crate::code::{CodeError, PauliString, PlanStep, SectorPlan, StabilizerCode};

use super::{OracleError, Phase};

/// Uniform-magnitude superposition: amplitude `2^(-norm_exponent/2)` times the
/// stored phase on every support element. Basis index bit `t` is qubit `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseCodeword {
    pub n: usize,
    pub support: BTreeMap<u64, Phase>,
    pub norm_exponent: u32,
    /// Coset representative from the plan; reference point for phase comparisons.
    pub representative: u64,
}

impl SparseCodeword {
    /// Applies a Pauli exactly; `None` when `p` has the wrong width.
    pub fn apply_pauli(&self, p: &PauliString) -> Option<Self> {
        if p.n() != self.n {
            return None;
        }
        let support = self
            .support
            .iter()
            .map(|(&b, &ph)| {
                let (e, out) = p.act_on_basis(b);
                (out, ph.times_i_power(e))
            })
            .collect();
        Some(Self {
            n: self.n,
            support,
            norm_exponent: self.norm_exponent,
            representative: self.representative ^ p.x_mask(),
        })
    }

    /// Squared norm, exactly `support.len() / 2^norm_exponent`.
    pub fn norm_squared(&self) -> f64 {
        self.support.len() as f64 / 2f64.powi(self.norm_exponent as i32)
    }

    pub fn has_pure_i_powers(&self) -> bool {
        self.support.values().all(|p| p.extra.is_zero())
    }
}

/// `2^k` codewords with pairwise disjoint supports, labelled by the plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalBasis {
    pub n: usize,
    pub k: usize,
    pub states: Vec<SparseCodeword>,
    pub plan: SectorPlan,
}

impl LogicalBasis {
    /// Per-pair case analysis and flip operators, in pair order.
    pub fn construction_log(&self) -> &[PlanStep] {
        &self.plan.steps
    }

    pub fn supports_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.states
            .iter()
            .all(|s| s.support.keys().all(|b| seen.insert(*b)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LogicalAction {
    /// Per-state phases; `normalized` is shifted so state 0 has phase 0.
    Diagonal {
        raw: Vec<RationalAngle>,
        normalized: Vec<RationalAngle>,
    },
    /// Within logical state `state`, basis element `element` picked up a phase
    /// different from the one at `reference`. Two-block witnesses list one
    /// element per block.
    NotPreserved {
        state: usize,
        element: Vec<u64>,
        reference: Vec<u64>,
    },
}

impl LogicalAction {
    pub fn from_raw(raw: Vec<RationalAngle>) -> Self {
        let base = raw.first().copied().unwrap_or_default();
        let normalized = raw.iter().map(|&a| a - base).collect();
        LogicalAction::Diagonal { raw, normalized }
    }

    pub fn is_preserved(&self) -> bool {
        matches!(self, LogicalAction::Diagonal { .. })
    }

    pub fn raw(&self) -> Option<&[RationalAngle]> {
        match self {
            LogicalAction::Diagonal { raw, .. } => Some(raw),
            LogicalAction::NotPreserved { .. } => None,
        }
    }
}

/// Pauli with qubit masks, `i^phase X^x Z^z` in the XZ-ordered form.
#[derive(Clone, Copy)]
struct MaskPauli {
    x: u64,
    z: u64,
    /// Power of i in front of `X^x Z^z`.
    c: u32,
}

impl MaskPauli {
    fn from(p: &PauliString) -> Self {
        let (x, z) = (p.x_mask(), p.z_mask());
        Self {
            x,
            z,
            c: (p.phase_exp() as u32 + (x & z).count_ones()) % 4,
        }
    }

    fn mul(self, o: Self) -> Self {
        let sign = 2 * ((self.z & o.x).count_ones() % 2);
        Self {
            x: self.x ^ o.x,
            z: self.z ^ o.z,
            c: (self.c + o.c + sign) % 4,
        }
    }

    /// `(i-power, image)` of `|b>`.
    fn act(self, b: u64) -> (u8, u64) {
        let sign = 2 * ((self.z & b).count_ones() % 2);
        (((self.c + sign) % 4) as u8, b ^ self.x)
    }
}

/// Expands `Σ_S S|seed>` over the whole stabilizer group, then reaches the
/// other logical states by applying the plan's flip operators.
pub fn build_logical_basis(code: &StabilizerCode, group_cap: usize) -> Result<LogicalBasis, OracleError> {
    code.validate().map_err(CodeError::Invalid)?;
    if code.n > 64 {
        return Err(OracleError::CapExceeded { what: "n", value: code.n, cap: 64 });
    }
    let r = code.generators.len();
    if r > group_cap {
        return Err(OracleError::CapExceeded { what: "n - k", value: r, cap: group_cap });
    }
    let plan = SectorPlan::new(code)?;
    let seed = plan.seed.to_u64().expect("n <= 64");

    let gens: Vec<MaskPauli> = code.generators.iter().map(MaskPauli::from).collect();
    let mut support: BTreeMap<u64, Phase> = BTreeMap::new();
    let mut current = MaskPauli { x: 0, z: 0, c: 0 };
    for s in 0u64..(1u64 << r) {
        if s > 0 {
            current = current.mul(gens[s.trailing_zeros() as usize]);
        }
        let (e, b) = current.act(seed);
        match support.get(&b) {
            None => {
                support.insert(b, Phase::from_i_power(e));
            }
            Some(p) if p.i_power == e => {}
            Some(_) => {
                return Err(OracleError::Inconsistent(format!(
                    "basis state {b:#b} receives cancelling contributions"
                )))
            }
        }
    }
    let exponent = plan.support_exponent();
    if support.len() != 1 << exponent {
        return Err(OracleError::Inconsistent(format!(
            "support has {} elements, expected 2^{exponent}",
            support.len()
        )));
    }
    let mut states = vec![SparseCodeword {
        n: code.n,
        support,
        norm_exponent: exponent as u32,
        representative: seed,
    }];
    for m in 1..plan.sector_count() {
        let j = (usize::BITS - 1 - m.leading_zeros()) as usize;
        let prev = &states[m ^ (1 << j)];
        let next = prev
            .apply_pauli(plan.flip_operator(code, j))
            .expect("flip operator has width n");
        debug_assert_eq!(next.representative, plan.representative_mask(m));
        states.push(next);
    }
    let basis = LogicalBasis {
        n: code.n,
        k: code.k,
        states,
        plan,
    };
    if !basis.supports_disjoint() {
        return Err(OracleError::Inconsistent("logical supports overlap".into()));
    }
    Ok(basis)
}

/// Exact phase `Σ_t P_t b_t / Q` reduced mod 2.
fn mask_phase(p: &[u128], q: u128, b: u64) -> RationalAngle {
    let mut s: u128 = 0;
    let mut bits = b;
    while bits != 0 {
        let t = bits.trailing_zeros() as usize;
        s = (s + p[t]) % (2 * q);
        bits &= bits - 1;
    }
    RationalAngle::from_i128(s as i128, q as i128).expect("nonzero denominator")
}

pub fn apply_diagonal(basis: &LogicalBasis, angles: &AngleVector) -> Result<LogicalBasis, OracleError> {
    angles.check_len(basis.n)?;
    let (p, q) = angles.integer_form()?;
    let mut out = basis.clone();
    for s in &mut out.states {
        for (&b, ph) in s.support.iter_mut() {
            *ph = ph.plus(mask_phase(&p, q, b));
        }
    }
    Ok(out)
}

/// Reads each state's phase off its representative and checks it is the same
/// on every other support element.
pub fn extract_logical_action(
    basis: &LogicalBasis,
    transformed: &LogicalBasis,
) -> Result<LogicalAction, OracleError> {
    if basis.states.len() != transformed.states.len() {
        return Err(OracleError::SupportMismatch);
    }
    let mut raw = Vec::with_capacity(basis.states.len());
    for (m, (before, after)) in basis.states.iter().zip(&transformed.states).enumerate() {
        if before.support.len() != after.support.len() {
            return Err(OracleError::SupportMismatch);
        }
        let ratio = |b: &u64| -> Result<RationalAngle, OracleError> {
            let x = before.support.get(b).ok_or(OracleError::SupportMismatch)?;
            let y = after.support.get(b).ok_or(OracleError::SupportMismatch)?;
            Ok(y.angle() - x.angle())
        };
        let reference = ratio(&before.representative)?;
        for b in before.support.keys() {
            if ratio(b)? != reference {
                return Ok(LogicalAction::NotPreserved {
                    state: m,
                    element: vec![*b],
                    reference: vec![before.representative],
                });
            }
        }
        raw.push(reference);
    }
    Ok(LogicalAction::from_raw(raw))
}

/// Phases on the pair basis `|m_a> ⊗ |m_b>`, indexed `m_a · 2^k + m_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTransformed {
    pub k: usize,
    pub states: Vec<PairState>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairState {
    pub representative: (u64, u64),
    /// `(u, v, phase before, phase after)`.
    pub elements: Vec<(u64, u64, Phase, Phase)>,
}

/// Two blocks of the same code with the gate on each qubit pair `(t, n + t)`.
pub fn apply_diagonal_2q(
    a: &LogicalBasis,
    b: &LogicalBasis,
    gate: &DiagonalGate2Q,
    pair_cap: usize,
) -> Result<PairTransformed, OracleError> {
    if a.n != b.n || a.k != b.k {
        return Err(OracleError::DimensionMismatch { expected: a.n, found: b.n });
    }
    let exps = a.plan.support_exponent() + b.plan.support_exponent() ;
    if exps > pair_cap {
        return Err(OracleError::CapExceeded { what: "pair support exponent", value: exps, cap: pair_cap });
    }
    let phases = AngleVector::new(gate.phases().to_vec());
    let (p, q) = phases.integer_form()?;
    let n = a.n as u32;
    let modulus = 2 * q;
    let mut states = Vec::with_capacity(a.states.len() * b.states.len());
    for sa in &a.states {
        for sb in &b.states {
            let mut elements = Vec::with_capacity(sa.support.len() * sb.support.len());
            for (&u, &pu) in &sa.support {
                for (&v, &pv) in &sb.support {
                    let c11 = (u & v).count_ones();
                    let c10 = (u & !v).count_ones();
                    let c01 = (!u & v).count_ones();
                    let c00 = n - (u | v).count_ones();
                    let s = (p[0] * c00 as u128 + p[1] * c01 as u128 + p[2] * c10 as u128 + p[3] * c11 as u128) % modulus;
                    let before = Phase {
                        i_power: (pu.i_power + pv.i_power) % 4,
                        extra: pu.extra + pv.extra,
                    };
                    let after = before.plus(RationalAngle::from_i128(s as i128, q as i128)?);
                    elements.push((u, v, before, after));
                }
            }
            states.push(PairState {
                representative: (sa.representative, sb.representative),
                elements,
            });
        }
    }
    Ok(PairTransformed { k: a.k, states })
}

pub fn extract_pair_action(t: &PairTransformed) -> LogicalAction {
    let mut raw = Vec::with_capacity(t.states.len());
    for (m, st) in t.states.iter().enumerate() {
        let (ru, rv) = st.representative;
        let reference = st
            .elements
            .iter()
            .find(|e| e.0 == ru && e.1 == rv)
            .map(|e| e.3.angle() - e.2.angle())
            .expect("representative lies in the support");
        if let Some(bad) = st.elements.iter().find(|e| e.3.angle() - e.2.angle() != reference) {
            return LogicalAction::NotPreserved {
                state: m,
                element: vec![bad.0, bad.1],
                reference: vec![ru, rv],
            };
        }
        raw.push(reference);
    }
    LogicalAction::from_raw(raw)
}

/// Whether every generator of `code` fixes `state` exactly.
pub fn membership_check(state: &SparseCodeword, code: &StabilizerCode) -> Result<bool, OracleError> {
    if state.n != code.n {
        return Err(OracleError::DimensionMismatch { expected: code.n, found: state.n });
    }
    for g in &code.generators {
        let image = state.apply_pauli(g).expect("widths checked");
        let same = image.support.len() == state.support.len()
            && image
                .support
                .iter()
                .all(|(b, p)| state.support.get(b).is_some_and(|q| q.angle() == p.angle()));
        if !same {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the basis, applies `angles` and extracts the logical action.
pub fn verify(code: &StabilizerCode, angles: &AngleVector, group_cap: usize) -> Result<LogicalAction, OracleError> {
    let basis = build_logical_basis(code, group_cap)?;
    let after = apply_diagonal(&basis, angles)?;
    extract_logical_action(&basis, &after)
}

/// Two-block version of [`verify`].
pub fn verify_2q(
    code: &StabilizerCode,
    gate: &DiagonalGate2Q,
    group_cap: usize,
    pair_cap: usize,
) -> Result<LogicalAction, OracleError> {
    let basis = build_logical_basis(code, group_cap)?;
    let t = apply_diagonal_2q(&basis, &basis, gate, pair_cap)?;
    Ok(extract_pair_action(&t))
}
