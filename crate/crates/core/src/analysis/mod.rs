//! Classification engines.
//!
//! The wedge engine evaluates overlap congruences on the X rows of a CSS code.
//! The group engine enumerates the stabilizer group and checks that the gate
//! phase is constant on every logical coset; it needs no CSS structure and is
//! the reference. Around them sit the classifier, mixed-angle and two-block
//! checks, decompression, code conversion and the irrational-angle system.

mod agreement;
mod classify;
mod conversion;
mod decompress;
mod group;
mod irrational;
mod two_qubit;
mod wedge;
mod witness;

pub use agreement::{cross_check, cross_check_2q, CrossCheck, EngineRun, VerdictSummary};
pub use classify::{classify, classify_with, OddSweep, OverlapReport, SweepEntry};
pub use conversion::{check_conversion, check_conversion_angles, ConversionReport};
pub use decompress::decompress;
pub use group::{check_mixed, group_enumeration_check, group_enumeration_check_angles, MixedVerdict};
pub use irrational::{irrational_admissibility, IrrationalReport};
pub use two_qubit::{check_two_qubit, two_qubit_family, TwoQubitReport};
pub use wedge::{wedge_conditions_css, wedge_conditions_weighted, WedgeOutcome};
pub use witness::{ConstraintWitness, Verdict, WitnessKind};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::angles::AngleError;
use crate::code::{CodeError, Violation};
use crate::linalg::LinalgError;
use crate::oracle::OracleError;

/// Enumeration bounds shared by the engines and oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest `n - k` for group enumeration.
    pub group: usize,
    /// Largest `n - k` for the exact sparse oracle.
    pub oracle: usize,
    /// Largest `2(n - k)` for two-block enumeration.
    pub pair: usize,
    /// Largest qubit count simulated densely.
    pub float: usize,
    /// Largest `n - k` for the irrational-angle system.
    pub irrational: usize,
    /// Largest denominator in the odd-denominator sweep.
    pub q_sweep: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            group: 22,
            oracle: 22,
            pair: 24,
            float: 15,
            irrational: 18,
            q_sweep: 15,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("invalid code: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidCode(Vec<Violation>),
    #[error("qubit {column} is untouched by every X-type generator (trivial code)")]
    TrivialCode { column: usize },
    #[error("code has distance 1")]
    DistanceOne,
    #[error("every dyadic angle down to 1/2^{0} is admissible; the code is trivial")]
    Unbounded(u32),
    #[error("codes differ in size: [[{0},{1}]] vs [[{2},{3}]]")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("qubit index {index} out of range for n = {n}")]
    BadIndex { index: usize, n: usize },
    #[error("decompression needs m >= 2, got {0}")]
    BadMultiplicity(u64),
    #[error("two-qubit family needs k_max >= 1")]
    NoTwoQubitFamily,
    #[error("phase arithmetic overflowed 128 bits")]
    Overflow,
    #[error("engines disagree: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Angle(#[from] AngleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn ensure_valid(code: &crate::code::StabilizerCode) -> Result<(), AnalysisError> {
    code.validate().map_err(AnalysisError::InvalidCode)
}

fn cap(what: &'static str, value: usize, cap: usize) -> Result<(), AnalysisError> {
    if value > cap {
        Err(AnalysisError::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
