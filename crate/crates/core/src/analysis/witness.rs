use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::angles::RationalAngle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    /// Overlap congruence on `order` rows.
    Wedge { order: usize },
    /// Phase not constant on a logical coset.
    Coset,
    /// Effective logical Z of `pair` changes the phase of the seed.
    ZLogical { pair: usize },
    /// Two-block phase not constant on a pair of cosets.
    PairCoset,
}

/// A violated congruence: `observed_value ≢ 0 (mod required_modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintWitness {
    pub kind: WitnessKind,
    /// Generator indices in file order.
    pub subset: Vec<usize>,
    /// Second-block generator indices for two-block witnesses.
    pub partner_subset: Vec<usize>,
    /// Logical pairs whose flip rows take part.
    pub logical_rows: Vec<usize>,
    pub sector: usize,
    pub required_modulus: u128,
    pub observed_value: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub preserves_codespace: bool,
    /// Phase of each logical basis state, present when preserved.
    pub logical_diagonal: Option<Vec<RationalAngle>>,
    /// Some state's phase differs from state 0's.
    pub nontrivial: bool,
    pub witness: Option<ConstraintWitness>,
}

impl Verdict {
    pub fn preserved(phases: Vec<RationalAngle>) -> Self {
        let nontrivial = phases.iter().any(|p| Some(p) != phases.first());
        Self {
            preserves_codespace: true,
            logical_diagonal: Some(phases),
            nontrivial,
            witness: None,
        }
    }

    pub fn rejected(witness: ConstraintWitness) -> Self {
        Self {
            preserves_codespace: false,
            logical_diagonal: None,
            nontrivial: false,
            witness: Some(witness),
        }
    }

    /// Phases shifted so state 0 has phase 0.
    pub fn normalized_diagonal(&self) -> Option<Vec<RationalAngle>> {
        self.logical_diagonal.as_ref().map(|p| {
            let base = p.first().copied().unwrap_or_default();
            p.iter().map(|&a| a - base).collect()
        })
    }
}

/// Graded-lex order on subset masks: fewer elements first, then the
/// lexicographically smaller sorted index list.
pub(crate) fn subset_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let d = a ^ b;
        if d == 0 {
            Ordering::Equal
        } else if a >> d.trailing_zeros() & 1 == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

pub(crate) fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}
