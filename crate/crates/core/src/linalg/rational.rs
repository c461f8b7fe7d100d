use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LinalgError;

/// Dense matrix over the rationals; `BigRational` keeps entries reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<Vec<BigRational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineSolution {
    /// Every solution is `particular + span(nullspace)`.
    Solution {
        particular: Vec<BigRational>,
        nullspace: Vec<Vec<BigRational>>,
    },
    Infeasible,
}

impl RationalMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self, LinalgError> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::Ragged {
                    row: i,
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(Self { cols, rows })
    }

    pub fn from_i64(cols: usize, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        Self::new(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::LengthMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().zip(x).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }
}

/// Gauss-Jordan elimination of `A x = b` over the rationals.
pub fn rational_solve_affine(
    a: &RationalMatrix,
    b: &[BigRational],
) -> Result<AffineSolution, LinalgError> {
    if b.len() != a.nrows() {
        return Err(LinalgError::LengthMismatch {
            expected: a.nrows(),
            found: b.len(),
        });
    }
    let n = a.cols;
    let mut m: Vec<Vec<BigRational>> = a
        .rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }

    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return Ok(AffineSolution::Infeasible);
    }

    let mut particular = vec![BigRational::zero(); n];
    for (row, &p) in m.iter().zip(&pivots) {
        particular[p] = row[n].clone();
    }

    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let nullspace = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![BigRational::zero(); n];
            v[free] = BigRational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect();

    Ok(AffineSolution::Solution {
        particular,
        nullspace,
    })
}
