use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, RationalAngle};
use crate::code::{css_view, has_distance_at_least_two, StabilizerCode};

use super::group::coset_engine;
use super::wedge::wedge_conditions_weighted;
use super::{ensure_valid, AnalysisError, Caps, ConstraintWitness, Verdict};

/// Largest dyadic exponent tried before a code is declared trivial.
const MAX_DYADIC_EXPONENT: u32 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub theta: RationalAngle,
    pub preserves_codespace: bool,
    pub witness: Option<ConstraintWitness>,
}

/// Every reduced `p/q` with `q <= q_cap` and `q` not a power of two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddSweep {
    pub q_cap: u64,
    pub entries: Vec<SweepEntry>,
    pub all_rejected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub code_name: String,
    /// Largest `k` with `Z(1/2^k)` admissible; `None` when even `Z(1)` fails.
    pub k_max: Option<u32>,
    /// Phases of the logical basis states under `Z(1/2^k_max)`.
    pub logical_action: Option<Vec<RationalAngle>>,
    pub nontrivial: bool,
    /// Witness rejecting `Z(1/2^(k_max+1))`.
    pub violation_witness_at_k_max_plus_1: Option<ConstraintWitness>,
    pub odd_sweep: OddSweep,
    pub wedge_ran: bool,
    pub group_ran: bool,
    /// Why an engine did not run.
    pub skipped: Vec<String>,
}

impl OverlapReport {
    /// Admissible single-angle set as text.
    pub fn admissible_set(&self) -> String {
        match self.k_max {
            None => "{ } (no Z(1/2^k) preserves the codespace)".into(),
            Some(0) => "{c : c integer}".into(),
            Some(k) => format!("{{c/{} : c integer}}", 1u64 << k),
        }
    }

    pub fn admits(&self, theta: RationalAngle) -> bool {
        match self.k_max {
            None => theta.is_zero(),
            Some(k) => theta.den() <= 1u64 << k && theta.den().is_power_of_two(),
        }
    }
}

pub fn classify(code: &StabilizerCode) -> Result<OverlapReport, AnalysisError> {
    classify_with(code, &Caps::default())
}

pub fn classify_with(code: &StabilizerCode, caps: &Caps) -> Result<OverlapReport, AnalysisError> {
    ensure_valid(code)?;
    if !has_distance_at_least_two(code) {
        return Err(AnalysisError::DistanceOne);
    }
    let runner = Runner::new(code, caps)?;

    let mut k_max = None;
    let mut action = None;
    let mut next_witness = None;
    for k in 0..=MAX_DYADIC_EXPONENT {
        let v = runner.run(&AngleVector::uniform(code.n, RationalAngle::dyadic(1, k)))?;
        if v.preserves_codespace {
            k_max = Some(k);
            action = Some(v);
        } else {
            next_witness = v.witness;
            break;
        }
    }
    if next_witness.is_none() {
        if let Some(k) = k_max {
            return Err(AnalysisError::Unbounded(k));
        }
    }

    let mut entries = Vec::new();
    for q in 3..=caps.q_sweep {
        if q.is_power_of_two() {
            continue;
        }
        for p in (1..2 * q).filter(|p| p.gcd(&q) == 1) {
            let theta = RationalAngle::from_i128(p as i128, q as i128)?;
            let v = runner.run(&AngleVector::uniform(code.n, theta))?;
            entries.push(SweepEntry {
                theta,
                preserves_codespace: v.preserves_codespace,
                witness: v.witness,
            });
        }
    }
    let all_rejected = entries.iter().all(|e| !e.preserves_codespace);

    Ok(OverlapReport {
        code_name: code.display_name(),
        k_max,
        nontrivial: action.as_ref().is_some_and(|v| v.nontrivial),
        logical_action: action.and_then(|v| v.logical_diagonal),
        violation_witness_at_k_max_plus_1: next_witness,
        odd_sweep: OddSweep {
            q_cap: caps.q_sweep,
            entries,
            all_rejected,
        },
        wedge_ran: runner.view.is_some(),
        group_ran: runner.group,
        skipped: runner.skipped,
    })
}

/// Runs every applicable engine and insists they agree.
struct Runner<'a> {
    code: &'a StabilizerCode,
    view: Option<crate::code::CssView>,
    group: bool,
    group_cap: usize,
    skipped: Vec<String>,
}

impl<'a> Runner<'a> {
    fn new(code: &'a StabilizerCode, caps: &Caps) -> Result<Self, AnalysisError> {
        let mut skipped = Vec::new();
        let view = match css_view(code) {
            Ok(v) if v.is_nontrivial() => Some(v),
            Ok(v) => {
                skipped.push(format!(
                    "wedge: qubit {} has no X-type support",
                    v.zero_column().expect("trivial view")
                ));
                None
            }
            Err(e) => {
                skipped.push(format!("wedge: {e}"));
                None
            }
        };
        let r = code.generators.len();
        let group = r <= caps.group && code.n <= 64;
        if !group {
            skipped.push(format!("group: n - k = {r} exceeds the cap of {}", caps.group));
        }
        if view.is_none() && !group {
            return Err(AnalysisError::CapExceeded {
                what: "n - k (no engine applicable)",
                value: r,
                cap: caps.group,
            });
        }
        Ok(Self {
            code,
            view,
            group,
            group_cap: caps.group,
            skipped,
        })
    }

    fn run(&self, angles: &AngleVector) -> Result<Verdict, AnalysisError> {
        let wedge = match &self.view {
            Some(v) => Some(wedge_conditions_weighted(v, angles)?.into_verdict()),
            None => None,
        };
        let group = if self.group {
            Some(coset_engine(self.code, angles, self.group_cap)?)
        } else {
            None
        };
        match (wedge, group) {
            (Some(w), Some(g)) => {
                if w.preserves_codespace != g.preserves_codespace || w.logical_diagonal != g.logical_diagonal {
                    return Err(AnalysisError::Disagreement(format!(
                        "{} at {:?}: wedge {:?} vs group {:?}",
                        self.code.display_name(),
                        angles.thetas,
                        w.logical_diagonal,
                        g.logical_diagonal
                    )));
                }
                Ok(g)
            }
            (Some(v), None) | (None, Some(v)) => Ok(v),
            (None, None) => unreachable!("checked in Runner::new"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{c422, fivequbit, rm15, rm_family, steane7};

    fn a(s: &str) -> RationalAngle {
        s.parse().unwrap()
    }

    #[test]
    fn exact_k_max_of_catalog() {
        let cases = [(steane7(), Some(1)), (rm15(), Some(2)), (c422(), Some(1)), (fivequbit(), Some(0))];
        for (code, k) in cases {
            let r = classify(&code).unwrap();
            assert_eq!(r.k_max, k, "{}", r.code_name);
            assert!(r.odd_sweep.all_rejected);
            assert!(r.violation_witness_at_k_max_plus_1.is_some());
        }
    }

    #[test]
    fn steane_report() {
        let r = classify(&steane7()).unwrap();
        assert_eq!(r.logical_action, Some(vec![a("0"), a("3/2")]));
        assert!(r.nontrivial && r.wedge_ran && r.group_ran);
        assert_eq!(r.admissible_set(), "{c/2 : c integer}");
        assert!(r.admits(a("3/2")) && !r.admits(a("1/4")) && !r.admits(a("2/3")));
    }

    #[test]
    fn rm31_uses_wedge_only() {
        let r = classify(&rm_family(5).unwrap()).unwrap();
        assert_eq!(r.k_max, Some(3));
        assert!(r.wedge_ran && !r.group_ran);
        assert_eq!(r.skipped.len(), 1);
    }

    #[test]
    fn fivequbit_uses_group_only() {
        let r = classify(&fivequbit()).unwrap();
        assert!(!r.wedge_ran && r.group_ran);
        assert_eq!(r.logical_action, Some(vec![a("0"), a("1")]));
    }

    #[test]
    fn distance_one_rejected() {
        let code = StabilizerCode::new(
            2,
            1,
            vec!["ZZ".parse().unwrap()],
            vec!["XX".parse().unwrap()],
            vec!["ZI".parse().unwrap()],
        )
        .unwrap();
        assert_eq!(classify(&code), Err(AnalysisError::DistanceOne));
    }
}
