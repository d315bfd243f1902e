use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modulus::Modulus;

/// Column-height statistics indexed by residue. The length is the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CVector {
    entries: Vec<usize>,
}

impl CVector {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        Modulus::new(entries.len()).map_err(|_| {
            Error::InvalidCVector(format!("need at least 2 entries, got {}", entries.len()))
        })?;
        Ok(CVector { entries })
    }

    /// Like [`CVector::new`], also checking the length against `k`.
    pub fn with_modulus(k: Modulus, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != k.get() {
            return Err(Error::ModulusMismatch {
                expected: k.get(),
                found: entries.len(),
            });
        }
        Ok(CVector { entries })
    }

    pub(crate) fn from_entries_trusted(k: Modulus, entries: Vec<usize>) -> Self {
        debug_assert_eq!(entries.len(), k.get());
        CVector { entries }
    }

    pub fn zero(k: Modulus) -> Self {
        CVector {
            entries: vec![0; k.get()],
        }
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::new(self.entries.len()).expect("length checked at construction")
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, a: usize) -> usize {
        self.entries[a]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&c| c == 0)
    }

    /// The sum of the entries, which is the rank in the poset.
    pub fn rank(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Residues `a` with `c[a-1] < c[a]`, ascending.
    pub fn cover_moves(&self) -> Vec<usize> {
        let k = self.entries.len();
        (0..k)
            .filter(|&a| self.entries[(a + k - 1) % k] < self.entries[a])
            .collect()
    }

    pub fn is_legal_move(&self, a: usize) -> bool {
        let k = self.entries.len();
        a < k && self.entries[(a + k - 1) % k] < self.entries[a]
    }

    /// The vector below `self` along the cover move at `a`:
    /// `c[a-1]` becomes `c[a] - 1` and `c[a]` becomes the old `c[a-1]`.
    pub fn downward(&self, a: usize) -> Result<CVector> {
        if !self.is_legal_move(a) {
            return Err(Error::IllegalMove {
                residue: a,
                cvec: self.to_string(),
            });
        }
        let k = self.entries.len();
        let p = (a + k - 1) % k;
        let mut entries = self.entries.clone();
        entries[p] = self.entries[a] - 1;
        entries[a] = self.entries[p];
        Ok(CVector { entries })
    }

    /// Shifts entries so that entry `s` comes first.
    pub fn rotate(&self, s: usize) -> CVector {
        let mut entries = self.entries.clone();
        entries.rotate_left(s % self.entries.len());
        CVector { entries }
    }

    /// The lexicographically least cyclic rotation.
    pub fn canonical_rotation(&self) -> CVector {
        (0..self.entries.len())
            .map(|s| self.rotate(s))
            .min()
            .expect("at least two rotations")
    }
}

impl TryFrom<Vec<usize>> for CVector {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        CVector::new(entries)
    }
}

impl From<CVector> for Vec<usize> {
    fn from(c: CVector) -> Vec<usize> {
        c.entries
    }
}

/// Comma-separated entries, optionally in parentheses.
impl FromStr for CVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s);
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("C-vector entry `{}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        CVector::new(entries)
    }
}

impl fmt::Display for CVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
