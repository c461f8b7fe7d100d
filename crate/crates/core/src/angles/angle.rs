use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::AngleError;

/// `num/den` in units of π, reduced, with `0 <= num/den < 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct RationalAngle {
    num: u64,
    den: u64,
}

/// Reduces `p/q` into `[0, 2)`.
pub fn normalize(p: i64, q: i64) -> Result<RationalAngle, AngleError> {
    RationalAngle::from_i128(p as i128, q as i128)
}

impl RationalAngle {
    pub const ZERO: Self = Self { num: 0, den: 1 };
    pub const ONE: Self = Self { num: 1, den: 1 };

    pub fn from_i128(p: i128, q: i128) -> Result<Self, AngleError> {
        if q == 0 {
            return Err(AngleError::ZeroDenominator);
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        let g = p.gcd(&q);
        let (p, q) = (p / g, q / g);
        let p = p.rem_euclid(2 * q);
        let den = u64::try_from(q).map_err(|_| AngleError::Overflow)?;
        Ok(Self { num: p as u64, den })
    }

    /// `1 / 2^k`.
    pub fn dyadic(c: i64, k: u32) -> Self {
        assert!(k < 63, "dyadic exponent below 63");
        Self::from_i128(c as i128, 1i128 << k).expect("nonzero denominator")
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn checked_add(self, other: Self) -> Result<Self, AngleError> {
        let den = (self.den as i128).lcm(&(other.den as i128));
        let p = self.num as i128 * (den / self.den as i128) + other.num as i128 * (den / other.den as i128);
        Self::from_i128(p, den)
    }

    pub fn checked_mul_int(self, c: i128) -> Result<Self, AngleError> {
        let p = (self.num as i128).checked_mul(c.rem_euclid(2 * self.den as i128)).ok_or(AngleError::Overflow)?;
        Self::from_i128(p, self.den as i128)
    }

    pub fn mul_int(self, c: i128) -> Self {
        self.checked_mul_int(c).expect("angle multiple fits")
    }

    /// `self / m`, the angle whose `m`-th multiple is `self` with no wraparound.
    pub fn checked_div_int(self, m: u64) -> Result<Self, AngleError> {
        if m == 0 {
            return Err(AngleError::ZeroDenominator);
        }
        let den = (self.den as i128).checked_mul(m as i128).ok_or(AngleError::Overflow)?;
        Self::from_i128(self.num as i128, den)
    }

    /// Numerator over a denominator that `self.den` divides; result in `[0, 2*den)`.
    pub fn numerator_over(&self, den: u128) -> u128 {
        debug_assert_eq!(den % self.den as u128, 0);
        self.num as u128 * (den / self.den as u128)
    }
}

impl Add for RationalAngle {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("angle sum fits in 64-bit denominators")
    }
}

impl Neg for RationalAngle {
    type Output = Self;

    fn neg(self) -> Self {
        Self::from_i128(-(self.num as i128), self.den as i128).expect("nonzero denominator")
    }
}

impl Sub for RationalAngle {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Default for RationalAngle {
    fn default() -> Self {
        Self::ZERO
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for RationalAngle {
    type Err = AngleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AngleError::Literal(s.to_string());
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: i128 = p.parse().map_err(|_| bad())?;
        let q: i128 = q.parse().map_err(|_| bad())?;
        if q <= 0 {
            return Err(if q == 0 { AngleError::ZeroDenominator } else { bad() });
        }
        Self::from_i128(p, q)
    }
}

impl From<RationalAngle> for String {
    fn from(a: RationalAngle) -> Self {
        a.to_string()
    }
}

impl TryFrom<String> for RationalAngle {
    type Error = AngleError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// `k` when the reduced denominator is `2^k`.
pub fn dyadic_exponent(a: RationalAngle) -> Option<u32> {
    a.den.is_power_of_two().then(|| a.den.trailing_zeros())
}

/// One angle per physical qubit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AngleVector {
    pub thetas: Vec<RationalAngle>,
}

impl AngleVector {
    pub fn new(thetas: Vec<RationalAngle>) -> Self {
        Self { thetas }
    }

    pub fn uniform(n: usize, theta: RationalAngle) -> Self {
        Self { thetas: vec![theta; n] }
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn check_len(&self, n: usize) -> Result<(), AngleError> {
        if self.thetas.len() == n {
            Ok(())
        } else {
            Err(AngleError::Length {
                expected: n,
                found: self.thetas.len(),
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.thetas.iter().all(RationalAngle::is_zero)
    }

    /// Indices of qubits with angle 0.
    pub fn identity_qubits(&self) -> Vec<usize> {
        (0..self.thetas.len()).filter(|&t| self.thetas[t].is_zero()).collect()
    }

    /// Common denominator `Q` and numerators `P_t` with `theta_t = P_t / Q`.
    pub fn integer_form(&self) -> Result<(Vec<u128>, u128), AngleError> {
        let mut q: u128 = 1;
        for a in &self.thetas {
            q = q.lcm(&(a.den as u128));
            if q > u64::MAX as u128 {
                return Err(AngleError::Overflow);
            }
        }
        Ok((self.thetas.iter().map(|a| a.numerator_over(q)).collect(), q))
    }

    pub fn scaled(&self, c: i128) -> Self {
        Self::new(self.thetas.iter().map(|a| a.mul_int(c)).collect())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AngleError> {
        other.check_len(self.len())?;
        Ok(Self::new(
            self.thetas
                .iter()
                .zip(&other.thetas)
                .map(|(a, b)| a.checked_add(*b))
                .collect::<Result<_, _>>()?,
        ))
    }
}

impl FromStr for AngleVector {
    type Err = AngleError;

    /// Comma-separated angle literals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Self::new(s.split(',').map(str::parse).collect::<Result<_, _>>()?))
    }
}
