use crate::linalg::{BitVector, EchelonBasis};

use super::{CodeError, PauliString, StabilizerCode};

pub const DEFAULT_DISTANCE_CAP: usize = 12;

/// Minimum weight of a Pauli in the normalizer but outside the stabilizer group.
pub fn distance_bruteforce(code: &StabilizerCode, n_cap: usize) -> Result<usize, CodeError> {
    if code.n > n_cap || code.n > 64 {
        return Err(CodeError::CapExceeded { n: code.n, cap: n_cap.min(64) });
    }
    if code.k == 0 {
        return Err(CodeError::Plan("a k = 0 code has no logical operators".into()));
    }
    let search = Search::new(code);
    for w in 1..=code.n {
        if search.exists_logical_of_weight(w) {
            return Ok(w);
        }
    }
    unreachable!("k >= 1 guarantees a logical operator of weight <= n")
}

/// No single-qubit Pauli acts as a nontrivial logical operator.
pub fn has_distance_at_least_two(code: &StabilizerCode) -> bool {
    let span = EchelonBasis::new(&code.symplectic_matrix());
    for t in 0..code.n {
        for (x, z) in [(true, false), (true, true), (false, true)] {
            let mut xs = BitVector::zeros(code.n);
            let mut zs = BitVector::zeros(code.n);
            xs.set(t, x).expect("qubit in range");
            zs.set(t, z).expect("qubit in range");
            let p = PauliString::new(xs, zs, 0).expect("equal widths");
            if code.generators.iter().all(|g| g.commutes_with(&p))
                && !span.contains(&p.symplectic_row()).expect("width 2n")
            {
                return false;
            }
        }
    }
    true
}

struct Search {
    n: usize,
    gens: Vec<(u64, u64)>,
    span: EchelonBasis,
}

impl Search {
    fn new(code: &StabilizerCode) -> Self {
        Self {
            n: code.n,
            gens: code.generators.iter().map(|g| (g.x_mask(), g.z_mask())).collect(),
            span: EchelonBasis::new(&code.symplectic_matrix()),
        }
    }

    fn is_logical(&self, x: u64, z: u64) -> bool {
        let commutes = self
            .gens
            .iter()
            .all(|&(gx, gz)| ((x & gz) ^ (z & gx)).count_ones().is_multiple_of(2));
        if !commutes {
            return false;
        }
        let mut row = BitVector::zeros(2 * self.n);
        for t in 0..self.n {
            row.set(t, x >> t & 1 == 1).expect("in range");
            row.set(self.n + t, z >> t & 1 == 1).expect("in range");
        }
        !self.span.contains(&row).expect("width 2n")
    }

    fn exists_logical_of_weight(&self, w: usize) -> bool {
        let mut positions: Vec<usize> = (0..w).collect();
        loop {
            // Each support qubit takes X, Y or Z.
            for letters in 0..3usize.pow(w as u32) {
                let (mut x, mut z, mut l) = (0u64, 0u64, letters);
                for &t in &positions {
                    match l % 3 {
                        0 => x |= 1 << t,
                        1 => {
                            x |= 1 << t;
                            z |= 1 << t;
                        }
                        _ => z |= 1 << t,
                    }
                    l /= 3;
                }
                if self.is_logical(x, z) {
                    return true;
                }
            }
            if !next_combination(&mut positions, self.n) {
                return false;
            }
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let w = c.len();
    let Some(i) = (0..w).rev().find(|&i| c[i] < n - w + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..w {
        c[j] = c[j - 1] + 1;
    }
    true
}
