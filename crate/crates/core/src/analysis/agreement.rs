use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, DiagonalGate2Q, RationalAngle};
use crate::code::{css_view, StabilizerCode};
use crate::oracle::{float_statevector_check, float_statevector_check_2q, verify, verify_2q, FloatAction, LogicalAction};

use super::group::coset_engine;
use super::two_qubit::check_two_qubit;
use super::wedge::wedge_conditions_weighted;
use super::{AnalysisError, Caps, Verdict};

/// What every engine and oracle must agree on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub preserves_codespace: bool,
    pub logical_diagonal: Option<Vec<RationalAngle>>,
}

impl From<&Verdict> for VerdictSummary {
    fn from(v: &Verdict) -> Self {
        Self {
            preserves_codespace: v.preserves_codespace,
            logical_diagonal: v.logical_diagonal.clone(),
        }
    }
}

impl From<&LogicalAction> for VerdictSummary {
    fn from(a: &LogicalAction) -> Self {
        Self {
            preserves_codespace: a.is_preserved(),
            logical_diagonal: a.raw().map(<[_]>::to_vec),
        }
    }
}

impl From<&FloatAction> for VerdictSummary {
    fn from(a: &FloatAction) -> Self {
        match a {
            FloatAction::Diagonal(p) => Self {
                preserves_codespace: true,
                logical_diagonal: Some(p.clone()),
            },
            FloatAction::NotPreserved { .. } => Self {
                preserves_codespace: false,
                logical_diagonal: None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum EngineRun {
    Ran(VerdictSummary),
    Skipped(String),
}

impl EngineRun {
    pub fn summary(&self) -> Option<&VerdictSummary> {
        match self {
            EngineRun::Ran(s) => Some(s),
            EngineRun::Skipped(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    /// `(name, run)` in the order engines were tried.
    pub runs: Vec<(String, EngineRun)>,
    /// Every engine that ran produced the same summary.
    pub agree: bool,
}

impl CrossCheck {
    fn new(runs: Vec<(String, EngineRun)>) -> Self {
        let mut ran = runs.iter().filter_map(|(_, r)| r.summary());
        let agree = match ran.next() {
            Some(first) => ran.all(|s| s == first),
            None => true,
        };
        Self { runs, agree }
    }

    pub fn ran(&self, name: &str) -> bool {
        self.runs.iter().any(|(n, r)| n == name && r.summary().is_some())
    }

    /// The agreed summary, if anything ran and all agree.
    pub fn consensus(&self) -> Option<&VerdictSummary> {
        self.agree.then(|| self.runs.iter().find_map(|(_, r)| r.summary())).flatten()
    }
}

fn record<T, E: std::fmt::Display>(result: Result<T, E>) -> EngineRun
where
    for<'a> VerdictSummary: From<&'a T>,
{
    match result {
        Ok(v) => EngineRun::Ran(VerdictSummary::from(&v)),
        Err(e) => EngineRun::Skipped(e.to_string()),
    }
}

/// Wedge engine, group engine, exact oracle and float oracle on one gate.
pub fn cross_check(code: &StabilizerCode, angles: &AngleVector, caps: &Caps) -> Result<CrossCheck, AnalysisError> {
    code.validate().map_err(AnalysisError::InvalidCode)?;
    angles.check_len(code.n)?;
    let wedge = match css_view(code) {
        Ok(v) if v.is_nontrivial() => record(wedge_conditions_weighted(&v, angles).map(|o| o.into_verdict())),
        Ok(_) => EngineRun::Skipped("not applicable: an X column is empty".into()),
        Err(e) => EngineRun::Skipped(format!("not applicable: {e}")),
    };
    let runs = vec![
        ("wedge".to_string(), wedge),
        ("group".to_string(), record(coset_engine(code, angles, caps.group))),
        ("oracle".to_string(), record(verify(code, angles, caps.oracle))),
        (
            "float".to_string(),
            record(float_statevector_check(code, angles, caps.float)),
        ),
    ];
    Ok(CrossCheck::new(runs))
}

/// Pair engine, exact pair oracle and dense two-block oracle.
pub fn cross_check_2q(code: &StabilizerCode, gate: &DiagonalGate2Q, caps: &Caps) -> Result<CrossCheck, AnalysisError> {
    code.validate().map_err(AnalysisError::InvalidCode)?;
    let runs = vec![
        ("pair".to_string(), record(check_two_qubit(code, gate, caps.pair))),
        (
            "oracle".to_string(),
            record(verify_2q(code, gate, caps.oracle, caps.pair)),
        ),
        (
            "float".to_string(),
            record(float_statevector_check_2q(code, gate, caps.float)),
        ),
    ];
    Ok(CrossCheck::new(runs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{catalog, rm_family, steane7};

    #[test]
    fn catalog_agrees_on_small_grid() {
        for code in catalog() {
            for th in ["0", "1", "1/2", "1/4", "1/3"] {
                let c = cross_check(&code, &AngleVector::uniform(code.n, th.parse().unwrap()), &Caps::default()).unwrap();
                assert!(c.agree, "{} {th}: {:?}", code.display_name(), c.runs);
                assert!(c.ran("group") && c.ran("oracle"));
            }
        }
    }

    #[test]
    fn large_code_skips_oracles() {
        let code = rm_family(5).unwrap();
        let c = cross_check(&code, &AngleVector::uniform(31, "1/8".parse().unwrap()), &Caps::default()).unwrap();
        assert!(c.ran("wedge"));
        assert!(!c.ran("group") && !c.ran("oracle") && !c.ran("float"));
        assert!(c.consensus().unwrap().preserves_codespace);
    }

    #[test]
    fn steane_pair_agreement() {
        let c = cross_check_2q(&steane7(), &"0,0,0,1".parse().unwrap(), &Caps::default()).unwrap();
        assert!(c.agree);
        assert!(c.ran("float") && c.ran("oracle"));
    }
}
