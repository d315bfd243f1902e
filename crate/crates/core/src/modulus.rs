use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The gonality `k`, always at least 2. Residues live in `0..k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Modulus(usize);

impl Modulus {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidModulus(k));
        }
        Ok(Modulus(k))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Reduces an integer to its residue in `0..k`.
    #[inline]
    pub fn reduce(self, v: i64) -> usize {
        v.rem_euclid(self.0 as i64) as usize
    }

    /// The residue preceding `a`, cyclically.
    #[inline]
    pub fn prev(self, a: usize) -> usize {
        (a + self.0 - 1) % self.0
    }

    pub fn check_residue(self, a: usize) -> Result<()> {
        if a >= self.0 {
            return Err(Error::Precondition(format!(
                "residue {a} is not in 0..{}",
                self.0
            )));
        }
        Ok(())
    }

    pub(crate) fn expect(self, found: Modulus) -> Result<()> {
        if self != found {
            return Err(Error::ModulusMismatch {
                expected: self.0,
                found: found.0,
            });
        }
        Ok(())
    }
}

impl TryFrom<usize> for Modulus {
    type Error = Error;

    fn try_from(k: usize) -> Result<Self> {
        Modulus::new(k)
    }
}

impl From<Modulus> for usize {
    fn from(k: Modulus) -> usize {
        k.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
