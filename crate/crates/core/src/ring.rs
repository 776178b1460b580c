use std::fmt;

use crate::error::{Error, Result};

/// The coefficient ring: `Z` when `modulus == 0`, otherwise `Z/m` with `m >= 2`.
///
/// All modular computation is done by lifting to `Z` and adjoining `m`-multiples
/// as extra relations, so a single integer kernel/solver backend serves both rings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingSpec {
    modulus: u64,
}

impl RingSpec {
    pub const INTEGERS: RingSpec = RingSpec { modulus: 0 };

    pub fn integers() -> Self {
        Self::INTEGERS
    }

    pub fn modular(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::RingMismatch(format!(
                "modulus must be 0 (for Z) or >= 2, got {m}"
            )));
        }
        Ok(RingSpec { modulus: m })
    }

    /// 0 for `Z`, the modulus otherwise.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.modulus == 0
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}
