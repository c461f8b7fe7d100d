use serde::{Deserialize, Serialize};

use super::{BitVector, LinalgError};

/// Rectangular GF(2) matrix stored as packed rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitMatrix {
    width: usize,
    rows: Vec<BitVector>,
}

/// Solution set `particular + span(kernel)` of `M x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Solution {
    pub particular: BitVector,
    pub kernel: Vec<BitVector>,
}

impl BitMatrix {
    pub fn new(width: usize, rows: Vec<BitVector>) -> Result<Self, LinalgError> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != width {
                return Err(LinalgError::Ragged {
                    row: i,
                    expected: width,
                    found: r.len(),
                });
            }
        }
        Ok(Self { width, rows })
    }

    pub fn empty(width: usize) -> Self {
        Self { width, rows: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn push(&mut self, row: BitVector) -> Result<(), LinalgError> {
        if row.len() != self.width {
            return Err(LinalgError::Ragged {
                row: self.rows.len(),
                expected: self.width,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![BitVector::zeros(self.rows.len()); self.width];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones_iter() {
                cols[j].flip(i).expect("index within transposed length");
            }
        }
        Self {
            width: self.rows.len(),
            rows: cols,
        }
    }

    /// Whether `v` lies in the row span.
    pub fn spans(&self, v: &BitVector) -> Result<bool, LinalgError> {
        Ok(self.row_combination(v)?.is_some())
    }

    /// Coefficients `c` with `sum c_i row_i = v`, if any.
    pub fn row_combination(&self, v: &BitVector) -> Result<Option<BitVector>, LinalgError> {
        if v.len() != self.width {
            return Err(LinalgError::LengthMismatch {
                expected: self.width,
                found: v.len(),
            });
        }
        Ok(gf2_solve(&self.transpose(), v)?.map(|s| s.particular))
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Vec<BitVector>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.width {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col).unwrap_or(false)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col).unwrap_or(false) {
                    row.xor_assign(&pivot).expect("rows share width");
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (rows, pivots)
    }
}

/// Reduced row echelon basis of a row span, for repeated membership tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(m: &BitMatrix) -> Self {
        let (rows, pivots) = m.rref();
        Self {
            width: m.width,
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears every pivot position of `v`; the result is zero iff `v` is in the span.
    /// Among the coset `v + span`, the result is the lexicographic minimum with bit 0 first.
    pub fn reduce(&self, v: &BitVector) -> Result<BitVector, LinalgError> {
        if v.len() != self.width {
            return Err(LinalgError::LengthMismatch {
                expected: self.width,
                found: v.len(),
            });
        }
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p)? {
                out.xor_assign(row)?;
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v` to the span; returns false when it was already inside.
    pub fn insert(&mut self, v: &BitVector) -> Result<bool, LinalgError> {
        let r = self.reduce(v)?;
        let Some(p) = r.first_one() else {
            return Ok(false);
        };
        for row in self.rows.iter_mut() {
            if row.get(p)? {
                row.xor_assign(&r)?;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        Ok(true)
    }
}

pub fn gf2_rank(m: &BitMatrix) -> usize {
    m.rref().1.len()
}

/// Basis of `{x : M x = 0}`, one vector per free column, in increasing free-column order.
pub fn gf2_kernel(m: &BitMatrix) -> Vec<BitVector> {
    let (rows, pivots) = m.rref();
    let mut is_pivot = vec![false; m.width];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.width)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = BitVector::zeros(m.width);
            x.set(free, true).expect("free column in range");
            for (row, &p) in rows.iter().zip(&pivots) {
                if row.get(free).expect("free column in range") {
                    x.set(p, true).expect("pivot in range");
                }
            }
            x
        })
        .collect()
}

/// Solves `M x = b` with `b` indexed by rows of `M`; `None` when inconsistent.
/// The particular solution has zeros on every free column.
pub fn gf2_solve(m: &BitMatrix, b: &BitVector) -> Result<Option<Gf2Solution>, LinalgError> {
    if b.len() != m.nrows() {
        return Err(LinalgError::LengthMismatch {
            expected: m.nrows(),
            found: b.len(),
        });
    }
    // Augment with b as an extra column.
    let w = m.width;
    let aug_rows = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut bits = r.to_bools();
            bits.push(b.get(i).expect("row index in range"));
            BitVector::from_bools(&bits)
        })
        .collect();
    let aug = BitMatrix::new(w + 1, aug_rows)?;
    let (rows, pivots) = aug.rref();
    if pivots.last() == Some(&w) {
        return Ok(None);
    }
    let mut particular = BitVector::zeros(w);
    for (row, &p) in rows.iter().zip(&pivots) {
        if row.get(w).expect("augmented column") {
            particular.set(p, true)?;
        }
    }
    Ok(Some(Gf2Solution {
        particular,
        kernel: gf2_kernel(m),
    }))
}
