use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, DiagonalGate1Q};
use crate::code::StabilizerCode;
use crate::oracle::{apply_diagonal, build_logical_basis, membership_check, verify};

use super::group::coset_engine;
use super::{ensure_valid, AnalysisError, Caps, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConversionReport {
    /// `preserves_codespace` means the source codespace lands in the target's.
    /// Phases are present when source state `m` maps onto target state `m`.
    pub verdict: Verdict,
    /// The gate applied four times maps the source codespace to itself.
    pub d4_preserves_source: bool,
    /// First source state whose image leaves the target codespace.
    pub failing_state: Option<usize>,
}

/// `gate^{⊗n}` from `source` into `target`.
pub fn check_conversion(
    source: &StabilizerCode,
    target: &StabilizerCode,
    gate: &DiagonalGate1Q,
    caps: &Caps,
) -> Result<ConversionReport, AnalysisError> {
    check_conversion_angles(source, target, &AngleVector::uniform(source.n, gate.difference()), caps)
}

pub fn check_conversion_angles(
    source: &StabilizerCode,
    target: &StabilizerCode,
    angles: &AngleVector,
    caps: &Caps,
) -> Result<ConversionReport, AnalysisError> {
    ensure_valid(source)?;
    ensure_valid(target)?;
    if (source.n, source.k) != (target.n, target.k) {
        return Err(AnalysisError::DimensionMismatch(source.n, source.k, target.n, target.k));
    }
    angles.check_len(source.n)?;
    let src = build_logical_basis(source, caps.oracle)?;
    let moved = apply_diagonal(&src, angles)?;
    let tgt = build_logical_basis(target, caps.oracle)?;

    let mut failing_state = None;
    for (m, st) in moved.states.iter().enumerate() {
        if !membership_check(st, target)? {
            failing_state = Some(m);
            break;
        }
    }
    let phases = if failing_state.is_none() {
        moved
            .states
            .iter()
            .zip(&tgt.states)
            .map(|(a, b)| {
                if a.support.len() != b.support.len() {
                    return None;
                }
                let mut diffs = a.support.iter().map(|(x, pa)| b.support.get(x).map(|pb| pa.angle() - pb.angle()));
                let first = diffs.next()??;
                diffs.all(|d| d == Some(first)).then_some(first)
            })
            .collect::<Option<Vec<_>>>()
    } else {
        None
    };
    let mut verdict = match phases {
        Some(p) => Verdict::preserved(p),
        None => Verdict {
            preserves_codespace: failing_state.is_none(),
            logical_diagonal: None,
            nontrivial: false,
            witness: None,
        },
    };

    if source.generators == target.generators && source.logical_x == target.logical_x && source.logical_z == target.logical_z {
        let g = coset_engine(source, angles, caps.group)?;
        if g.preserves_codespace != verdict.preserves_codespace || g.logical_diagonal != verdict.logical_diagonal {
            return Err(AnalysisError::Disagreement(format!(
                "self-conversion of {}: group {:?} vs membership {:?}",
                source.display_name(),
                g.logical_diagonal,
                verdict.logical_diagonal
            )));
        }
        verdict = g;
    }

    let d4_preserves_source = verify(source, &angles.scaled(4), caps.oracle)?.is_preserved();
    Ok(ConversionReport {
        verdict,
        d4_preserves_source,
        failing_state,
    })
}
