//! Exact phase angles in units of π, diagonal gate descriptions and
//! Clifford-hierarchy levels of one- and two-qubit diagonal gates.

mod angle;
mod gates;
mod hierarchy;

pub use angle::{dyadic_exponent, normalize, AngleVector, RationalAngle};
pub use gates::{DiagonalGate1Q, DiagonalGate2Q};
pub use hierarchy::{
    conjugation_orbit, hierarchy_level_1q, hierarchy_level_2q_diagonal, is_pauli_phase,
    HierarchyLevel, MAX_ORBIT_STEPS,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AngleError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid angle literal {0:?}: expected `p/q` or `p`")]
    Literal(String),
    #[error("angle arithmetic overflowed 64-bit denominators")]
    Overflow,
    #[error("expected {expected} angles, found {found}")]
    Length { expected: usize, found: usize },
}
