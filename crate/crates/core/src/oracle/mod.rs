//! Ground truth for the analysis engines.
//!
//! The exact oracle writes every logical basis state as a sparse sum of
//! computational basis states with power-of-i phases, applies diagonal gates
//! with exact rational phases and reads off the induced logical action. The
//! float oracle repeats the check on dense state vectors.

mod basis;
mod float;
mod phase;

pub use basis::{
    apply_diagonal, apply_diagonal_2q, build_logical_basis, extract_logical_action,
    extract_pair_action, membership_check, verify, verify_2q, LogicalAction, LogicalBasis,
    PairState, PairTransformed, SparseCodeword,
};
pub use float::{
    float_statevector_check, float_statevector_check_2q, recover_rational, FloatAction,
    FLOAT_DENOMINATOR_CAP, FLOAT_TOLERANCE,
};
pub use phase::Phase;

use thiserror::Error;

use crate::angles::AngleError;
use crate::code::CodeError;

/// Default bound on `n - k` for the exact basis (the group sum has `2^(n-k)` terms).
pub const DEFAULT_GROUP_CAP: usize = 22;
/// Default bound on qubits simulated densely by the float oracle.
pub const DEFAULT_FLOAT_CAP: usize = 15;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("state acts on {found} qubits but the code has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("transformed basis does not share supports with the original")]
    SupportMismatch,
    #[error("group expansion is inconsistent: {0}")]
    Inconsistent(String),
    #[error("no rational with denominator <= {cap} within tolerance of {value}")]
    NoRational { value: f64, cap: u64 },
    #[error("phase {value} is ambiguous between {first} and {second}")]
    Ambiguous { value: f64, first: String, second: String },
    #[error("numerical projection vanished for logical state {0}")]
    Vanished(usize),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Angle(#[from] AngleError),
}
