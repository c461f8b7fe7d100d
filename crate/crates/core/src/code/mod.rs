//! Stabilizer codes: Pauli strings, the code type and its validation, CSS
//! views, the built-in catalog, the text file format and the coset plan
//! that fixes how logical basis states are labelled.

mod catalog;
mod codec;
mod css;
mod distance;
mod pauli;
mod plan;
mod stabilizer;

pub use catalog::{c422, catalog, catalog_code, fivequbit, rm15, rm_family, steane7};
pub use codec::{parse_code, serialize_code};
pub use css::{css_view, CssView};
pub use distance::{distance_bruteforce, has_distance_at_least_two, DEFAULT_DISTANCE_CAP};
pub use pauli::PauliString;
pub use plan::{FlipOp, PairCase, PlanStep, SectorPlan};
pub use stabilizer::{OpRef, StabilizerCode, Violation};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("length mismatch: expected {expected}, found {found}")]
    Length { expected: usize, found: usize },
    #[error("invalid Pauli character {0:?}")]
    PauliChar(char),
    #[error("empty Pauli string")]
    EmptyPauli,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid code: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("code is not CSS: generator {0} mixes X and Z support")]
    NotCss(usize),
    #[error("Reed-Muller family needs m >= 3, got {0}")]
    ReedMullerOrder(u32),
    #[error("n = {n} exceeds the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("coset plan failed: {0}")]
    Plan(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
