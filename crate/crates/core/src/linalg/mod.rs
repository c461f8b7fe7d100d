//! Exact low-level algebra: packed GF(2) vectors and matrices, and dense
//! matrices over the rationals with an affine solver.
//!
//! Everything here is a pure function of its inputs. Bit vectors are packed
//! into `u64` words so that the weight and wedge kernels reduce to popcounts.

mod bitmatrix;
mod bitvec;
mod rational;

pub use bitmatrix::{gf2_kernel, gf2_rank, gf2_solve, BitMatrix, EchelonBasis, Gf2Solution};
pub use bitvec::{wedge, weight, xor, xor_weight_by_inclusion_exclusion, BitVector};
pub use rational::{rational_solve_affine, AffineSolution, RationalMatrix};

use thiserror::Error;

/// Largest row count accepted by [`xor_weight_by_inclusion_exclusion`].
pub const INCLUSION_EXCLUSION_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("bit index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("operation needs at least one input vector")]
    EmptyInput,
    #[error("inclusion-exclusion over {count} rows exceeds the cap of {cap}")]
    TooManyRows { count: usize, cap: usize },
    #[error("matrix is not rectangular: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("invalid bit string character {0:?}")]
    BadBitChar(char),
}
