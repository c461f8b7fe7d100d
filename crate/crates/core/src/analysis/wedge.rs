use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, RationalAngle};
use crate::code::CssView;
use crate::linalg::BitVector;

use super::{AnalysisError, ConstraintWitness, Verdict, WitnessKind};

/// Largest number of row subsets the wedge engine will enumerate.
const WEDGE_SUBSET_CAP: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WedgeOutcome {
    Satisfied {
        logical_phases: Vec<RationalAngle>,
        nontrivial: bool,
    },
    Violated(ConstraintWitness),
}

impl WedgeOutcome {
    pub fn into_verdict(self) -> Verdict {
        match self {
            WedgeOutcome::Satisfied { logical_phases, .. } => Verdict::preserved(logical_phases),
            WedgeOutcome::Violated(w) => Verdict::rejected(w),
        }
    }
}

/// `Z(θ)` on every qubit of a CSS code.
pub fn wedge_conditions_css(view: &CssView, theta: RationalAngle) -> Result<WedgeOutcome, AnalysisError> {
    wedge_conditions_weighted(view, &AngleVector::uniform(view.n, theta))
}

/// Overlap ladder with per-qubit angles.
///
/// With `θ'_t = ±θ_t` (negated where the seed has a one) and `R` ranging over
/// row sets holding at least one X generator plus any flip rows, the gate
/// preserves the code iff `2^{|R|-1} Σ_t θ'_t [∧R]_t ≡ 0 (mod 2)` for every
/// `R`. For `Q = 2^k` rows beyond `k + 1` vanish automatically.
pub fn wedge_conditions_weighted(view: &CssView, angles: &AngleVector) -> Result<WedgeOutcome, AnalysisError> {
    angles.check_len(view.n)?;
    if let Some(column) = view.zero_column() {
        return Err(AnalysisError::TrivialCode { column });
    }
    let (p, q) = angles.integer_form()?;
    let modulus = q.checked_mul(2).ok_or(AnalysisError::Overflow)?;
    let seed = &view.plan.seed;
    let signed: Vec<u128> = (0..view.n)
        .map(|t| {
            if seed.get(t).expect("width n") {
                (modulus - p[t]) % modulus
            } else {
                p[t]
            }
        })
        .collect();

    let stab = view.gx_rows.rows();
    let flips: Vec<&BitVector> = view.plan.steps.iter().map(|s| &s.flip_x).collect();
    let rows: Vec<&BitVector> = stab.iter().chain(flips.iter().copied()).collect();
    let total = rows.len();
    let max_order = match u64::try_from(q).ok().filter(|q| q.is_power_of_two()) {
        Some(qq) => (qq.trailing_zeros() as usize + 1).min(total),
        None => total,
    };
    let count: u128 = (1..=max_order).map(|s| binomial(total, s)).sum();
    if count > WEDGE_SUBSET_CAP {
        return Err(AnalysisError::CapExceeded {
            what: "wedge row subsets",
            value: count.min(usize::MAX as u128) as usize,
            cap: WEDGE_SUBSET_CAP as usize,
        });
    }

    for order in 1..=max_order {
        let mut idx: Vec<usize> = (0..order).collect();
        loop {
            if idx[0] < stab.len() {
                let mut w = rows[idx[0]].clone();
                for &i in &idx[1..] {
                    w.and_assign(rows[i])?;
                }
                let weighted = w.ones_iter().fold(0u128, |acc, t| (acc + signed[t]) % modulus);
                let value = mul_pow2_mod(weighted, order - 1, modulus);
                if value != 0 {
                    let logical_rows: Vec<usize> =
                        idx.iter().filter(|&&i| i >= stab.len()).map(|&i| i - stab.len()).collect();
                    return Ok(WedgeOutcome::Violated(ConstraintWitness {
                        kind: WitnessKind::Wedge { order },
                        subset: idx.iter().filter(|&&i| i < stab.len()).map(|&i| view.gx_index[i]).collect(),
                        partner_subset: vec![],
                        sector: logical_rows.iter().map(|j| 1 << j).sum(),
                        logical_rows,
                        required_modulus: modulus,
                        observed_value: value,
                    }));
                }
            }
            if !next_combination(&mut idx, total) {
                break;
            }
        }
    }

    let logical_phases: Vec<RationalAngle> = (0..view.plan.sector_count())
        .map(|m| {
            let r = view.plan.representative(m);
            let s = r.ones_iter().fold(0u128, |acc, t| (acc + p[t]) % modulus);
            RationalAngle::from_i128(s as i128, q as i128).expect("denominator fits")
        })
        .collect();
    let nontrivial = logical_phases.iter().any(|x| x != &logical_phases[0]);
    Ok(WedgeOutcome::Satisfied {
        logical_phases,
        nontrivial,
    })
}

fn mul_pow2_mod(mut v: u128, e: usize, modulus: u128) -> u128 {
    for _ in 0..e {
        v = v * 2 % modulus;
        if v == 0 {
            break;
        }
    }
    v
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let w = c.len();
    let Some(i) = (0..w).rev().find(|&i| c[i] < n - w + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..w {
        c[j] = c[j - 1] + 1;
    }
    true
}
