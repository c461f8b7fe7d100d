use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{LinalgError, INCLUSION_EXCLUSION_CAP};

const WORD: usize = 64;

/// Fixed-length binary vector packed into 64-bit words.
///
/// Bits past `len` in the last word are always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; len.div_ceil(WORD)],
        };
        v.clear_tail();
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        v
    }

    /// Bit `i` of the result is bit `i` of `mask`; requires `len <= 64`.
    pub fn from_u64(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_u64 needs len <= 64");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask;
            v.clear_tail();
        }
        v
    }

    /// Inverse of [`BitVector::from_u64`]; `None` when `len > 64`.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Result<bool, LinalgError> {
        self.check(i)?;
        Ok(self.words[i / WORD] >> (i % WORD) & 1 == 1)
    }

    pub fn set(&mut self, i: usize, value: bool) -> Result<(), LinalgError> {
        self.check(i)?;
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
        Ok(())
    }

    pub fn flip(&mut self, i: usize) -> Result<(), LinalgError> {
        self.check(i)?;
        self.words[i / WORD] ^= 1 << (i % WORD);
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of the AND with `other`.
    pub fn dot(&self, other: &Self) -> Result<bool, LinalgError> {
        self.same_len(other)?;
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones % 2 == 1)
    }

    pub fn xor_assign(&mut self, other: &Self) -> Result<(), LinalgError> {
        self.same_len(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn and_assign(&mut self, other: &Self) -> Result<(), LinalgError> {
        self.same_len(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        Ok(())
    }

    pub fn or_assign(&mut self, other: &Self) -> Result<(), LinalgError> {
        self.same_len(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        Ok(())
    }

    /// Indices of set bits in increasing order.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.words[i / WORD] >> (i % WORD) & 1 == 1)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len)
            .map(|i| self.words[i / WORD] >> (i % WORD) & 1 == 1)
            .collect()
    }

    fn check(&self, i: usize) -> Result<(), LinalgError> {
        if i < self.len {
            Ok(())
        } else {
            Err(LinalgError::OutOfRange { index: i, len: self.len })
        }
    }

    fn same_len(&self, other: &Self) -> Result<(), LinalgError> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(LinalgError::LengthMismatch {
                expected: self.len,
                found: other.len,
            })
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.to_bools() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = LinalgError;

    /// Leftmost character is bit 0.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(LinalgError::BadBitChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_bools(&bits))
    }
}

pub fn weight(v: &BitVector) -> usize {
    v.weight()
}

/// XOR fold; an empty slice yields the zero vector of length `len`.
pub fn xor(vs: &[BitVector], len: usize) -> Result<BitVector, LinalgError> {
    let mut acc = BitVector::zeros(len);
    for v in vs {
        acc.xor_assign(v)?;
    }
    Ok(acc)
}

/// AND fold over a non-empty slice.
pub fn wedge(vs: &[BitVector]) -> Result<BitVector, LinalgError> {
    let (first, rest) = vs.split_first().ok_or(LinalgError::EmptyInput)?;
    let mut acc = first.clone();
    for v in rest {
        acc.and_assign(v)?;
    }
    Ok(acc)
}

/// Weight of the XOR of `vs` expanded as a signed sum of wedge weights:
/// `sum over nonempty R of (-2)^(|R|-1) |AND R|`.
pub fn xor_weight_by_inclusion_exclusion(vs: &[BitVector]) -> Result<i64, LinalgError> {
    let m = vs.len();
    if m == 0 {
        return Err(LinalgError::EmptyInput);
    }
    if m > INCLUSION_EXCLUSION_CAP {
        return Err(LinalgError::TooManyRows {
            count: m,
            cap: INCLUSION_EXCLUSION_CAP,
        });
    }
    let len = vs[0].len();
    for v in vs {
        if v.len() != len {
            return Err(LinalgError::LengthMismatch {
                expected: len,
                found: v.len(),
            });
        }
    }
    let words = vs[0].words.len();
    let mut total = 0i64;
    let mut scratch = vec![0u64; words];
    for subset in 1u32..(1 << m) {
        scratch.fill(u64::MAX);
        for (i, v) in vs.iter().enumerate() {
            if subset >> i & 1 == 1 {
                for (s, w) in scratch.iter_mut().zip(&v.words) {
                    *s &= w;
                }
            }
        }
        let w: i64 = scratch.iter().map(|x| x.count_ones() as i64).sum();
        let r = subset.count_ones();
        let coeff = 1i64 << (r - 1);
        if r % 2 == 1 {
            total += coeff * w;
        } else {
            total -= coeff * w;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&bv("0000000")), 0);
        assert_eq!(weight(&bv("1111")), 4);
        assert_eq!(weight(&bv("1110000")), 3);
    }

    #[test]
    fn xor_fold() {
        assert_eq!(xor(&[bv("1100"), bv("1010")], 4).unwrap(), bv("0110"));
        let v = bv("1011");
        assert_eq!(xor(std::slice::from_ref(&v), 4).unwrap(), v);
        assert!(xor(&[v.clone(), v.clone()], 4).unwrap().is_zero());
        assert_eq!(xor(&[], 5).unwrap(), BitVector::zeros(5));
        assert!(matches!(
            xor(&[bv("10"), bv("101")], 2),
            Err(LinalgError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn wedge_fold() {
        assert_eq!(wedge(&[bv("1100"), bv("1010")]).unwrap(), bv("1000"));
        let v = bv("0110");
        assert_eq!(wedge(&[v.clone(), BitVector::ones(4)]).unwrap(), v);
        assert_eq!(wedge(&[bv("1110"), bv("0111"), bv("1011")]).unwrap(), bv("0010"));
        assert_eq!(wedge(&[]), Err(LinalgError::EmptyInput));
    }

    #[test]
    fn inclusion_exclusion_small() {
        assert_eq!(xor_weight_by_inclusion_exclusion(&[bv("1100"), bv("1010")]).unwrap(), 2);
        assert_eq!(xor_weight_by_inclusion_exclusion(&[bv("10111")]).unwrap(), 4);
        let many = vec![bv("1"); 21];
        assert!(matches!(
            xor_weight_by_inclusion_exclusion(&many),
            Err(LinalgError::TooManyRows { count: 21, .. })
        ));
    }

    #[test]
    fn out_of_range() {
        let mut v = BitVector::zeros(3);
        assert!(v.get(3).is_err());
        assert!(v.set(5, true).is_err());
        v.set(2, true).unwrap();
        assert!(v.get(2).unwrap());
    }

    #[test]
    fn wide_vectors_cross_words() {
        let mut v = BitVector::ones(130);
        assert_eq!(v.weight(), 130);
        v.flip(64).unwrap();
        assert_eq!(v.weight(), 129);
        assert_eq!(v.to_u64(), None);
        assert_eq!(BitVector::from_u64(5, 0b10110).to_string(), "01101");
    }

    fn vecs(max_rows: usize, max_len: usize) -> impl Strategy<Value = Vec<BitVector>> {
        (1..=max_len).prop_flat_map(move |len| {
            prop::collection::vec(prop::collection::vec(any::<bool>(), len), 1..=max_rows)
                .prop_map(|rows| rows.iter().map(|r| BitVector::from_bools(r)).collect())
        })
    }

    proptest! {
        #[test]
        fn inclusion_exclusion_matches_direct(vs in vecs(6, 80)) {
            let direct = weight(&xor(&vs, vs[0].len()).unwrap()) as i64;
            prop_assert_eq!(xor_weight_by_inclusion_exclusion(&vs).unwrap(), direct);
        }

        #[test]
        fn display_round_trip(bits in prop::collection::vec(any::<bool>(), 0..150)) {
            let v = BitVector::from_bools(&bits);
            prop_assert_eq!(v.to_string().parse::<BitVector>().unwrap(), v);
        }
    }
}
