use serde::{Deserialize, Serialize};

use crate::angles::RationalAngle;

/// `i^i_power · e^{iπ·extra}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Phase {
    pub i_power: u8,
    pub extra: RationalAngle,
}

impl Phase {
    pub fn from_i_power(e: u8) -> Self {
        Self {
            i_power: e % 4,
            extra: RationalAngle::ZERO,
        }
    }

    /// Total phase angle in units of π.
    pub fn angle(&self) -> RationalAngle {
        self.extra + RationalAngle::dyadic(self.i_power as i64, 1)
    }

    pub fn times_i_power(self, e: u8) -> Self {
        Self {
            i_power: (self.i_power + e) % 4,
            extra: self.extra,
        }
    }

    pub fn plus(self, a: RationalAngle) -> Self {
        Self {
            i_power: self.i_power,
            extra: self.extra + a,
        }
    }
}
