use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::code::{SectorPlan, StabilizerCode};
use crate::linalg::{rational_solve_affine, AffineSolution, RationalMatrix};

use super::group::group_x_parts;
use super::{cap, ensure_valid, AnalysisError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrationalReport {
    pub code_name: String,
    /// Every real solution gives each logical state the same phase as state 0.
    pub logical_phase_forced_zero: bool,
    pub nullspace_dimension: usize,
    pub equations: usize,
    pub unknowns: usize,
}

/// Real-valued phase system. Unknowns are per-qubit angles `x` and the
/// sector offsets `t_1..t_{2^k-1}`; equations say the phase is constant on
/// state 0's coset and shifted by `t_m` on state `m`'s coset, without any
/// reduction mod 2.
pub fn irrational_admissibility(code: &StabilizerCode, irrational_cap: usize) -> Result<IrrationalReport, AnalysisError> {
    ensure_valid(code)?;
    cap("n", code.n, 64)?;
    cap("n - k", code.generators.len(), irrational_cap)?;
    let support = code.generators.iter().fold(0u64, |acc, g| acc | g.x_mask());
    if let Some(column) = (0..code.n).find(|t| support >> t & 1 == 0) {
        return Err(AnalysisError::TrivialCode { column });
    }
    let plan = SectorPlan::new(code)?;
    let xs: BTreeSet<u64> = group_x_parts(code).into_iter().filter(|&x| x != 0).collect();

    let n = code.n;
    let sectors = plan.sector_count();
    let unknowns = n + sectors - 1;
    let r0 = plan.representative_mask(0);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for m in 0..sectors {
        let rm = plan.representative_mask(m);
        let shifts = std::iter::once(0u64).chain(xs.iter().copied());
        for g in shifts {
            if m == 0 && g == 0 {
                continue;
            }
            let b = rm ^ g;
            let mut row: Vec<i64> = (0..n).map(|t| (b >> t & 1) as i64 - (r0 >> t & 1) as i64).collect();
            row.extend((1..sectors).map(|j| if j == m { -1 } else { 0 }));
            rows.push(row);
        }
    }
    let a = RationalMatrix::from_i64(unknowns, &rows)?;
    let rhs = vec![BigRational::zero(); rows.len()];
    let (particular, nullspace) = match rational_solve_affine(&a, &rhs)? {
        AffineSolution::Solution { particular, nullspace } => (particular, nullspace),
        AffineSolution::Infeasible => unreachable!("homogeneous system"),
    };
    let t_zero = |v: &Vec<BigRational>| v[n..].iter().all(|c| c == &BigRational::from_integer(BigInt::zero()));
    Ok(IrrationalReport {
        code_name: code.display_name(),
        logical_phase_forced_zero: t_zero(&particular) && nullspace.iter().all(t_zero),
        nullspace_dimension: nullspace.len(),
        equations: rows.len(),
        unknowns,
    })
}
