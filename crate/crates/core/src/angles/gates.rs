use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{AngleError, RationalAngle};

/// `diag(e^{iπφ}, e^{iπθ})`; only `θ - φ` matters for classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalGate1Q {
    pub phi: RationalAngle,
    pub theta: RationalAngle,
}

impl DiagonalGate1Q {
    pub fn new(phi: RationalAngle, theta: RationalAngle) -> Self {
        Self { phi, theta }
    }

    /// `Z(θ) = diag(1, e^{iπθ})`.
    pub fn z(theta: RationalAngle) -> Self {
        Self {
            phi: RationalAngle::ZERO,
            theta,
        }
    }

    pub fn difference(&self) -> RationalAngle {
        self.theta - self.phi
    }
}

/// `diag(e^{iπθ00}, e^{iπθ01}, e^{iπθ10}, e^{iπθ11})`; the first label bit is the first qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalGate2Q {
    pub theta00: RationalAngle,
    pub theta01: RationalAngle,
    pub theta10: RationalAngle,
    pub theta11: RationalAngle,
}

impl DiagonalGate2Q {
    pub fn new(t: [RationalAngle; 4]) -> Self {
        Self {
            theta00: t[0],
            theta01: t[1],
            theta10: t[2],
            theta11: t[3],
        }
    }

    pub fn phases(&self) -> [RationalAngle; 4] {
        [self.theta00, self.theta01, self.theta10, self.theta11]
    }

    /// Phase on `|ab>`.
    pub fn phase(&self, a: bool, b: bool) -> RationalAngle {
        self.phases()[(a as usize) << 1 | b as usize]
    }

    /// Shifts by a global phase so that `θ00 = 0`.
    pub fn normalized(&self) -> Self {
        let z = self.theta00;
        Self::new(self.phases().map(|t| t - z))
    }

    /// `diag(1, e^{iπa}) ⊗ diag(1, e^{iπb})` as a two-qubit gate.
    pub fn tensor(first: DiagonalGate1Q, second: DiagonalGate1Q) -> Self {
        Self::new([
            first.phi + second.phi,
            first.phi + second.theta,
            first.theta + second.phi,
            first.theta + second.theta,
        ])
    }

    /// `θ11 - θ01 - θ10 + θ00`, the entangling part.
    pub fn entangling_angle(&self) -> RationalAngle {
        self.theta11 - self.theta01 - self.theta10 + self.theta00
    }
}

impl FromStr for DiagonalGate2Q {
    type Err = AngleError;

    /// `t00,t01,t10,t11`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<RationalAngle> = s.split(',').map(str::parse).collect::<Result<_, _>>()?;
        let arr: [RationalAngle; 4] = parts.try_into().map_err(|v: Vec<_>| AngleError::Length {
            expected: 4,
            found: v.len(),
        })?;
        Ok(Self::new(arr))
    }
}
