//! Splitting types and their staircase partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cvector::CVector;
use crate::error::{Error, Result};
use crate::modulus::Modulus;
use crate::partition::Partition;

/// An integer vector `mu_1 <= ... <= mu_k` with `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType {
    mu: Vec<i64>,
}

/// One rank jump `alpha_m = x_m - x_{m-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankJump {
    pub m: i64,
    pub alpha: u64,
    pub strict: bool,
}

impl SplittingType {
    /// Sorts the entries ascending.
    pub fn new(mut mu: Vec<i64>) -> Result<Self> {
        if mu.len() < 2 {
            return Err(Error::InvalidSplittingType(format!(
                "need at least 2 entries, got {}",
                mu.len()
            )));
        }
        mu.sort_unstable();
        Ok(SplittingType { mu })
    }

    pub fn entries(&self) -> &[i64] {
        &self.mu
    }

    pub fn k(&self) -> Modulus {
        Modulus::new(self.mu.len()).expect("length checked at construction")
    }

    pub fn sum(&self) -> i64 {
        self.mu.iter().sum()
    }

    /// `(x_m, y_m)`: the sums of `max(0, mu_i + m + 1)` and `max(0, -mu_i - m - 1)`.
    pub fn h_invariants(&self, m: i64) -> (u64, u64) {
        self.mu.iter().fold((0, 0), |(x, y), &u| {
            let v = u + m + 1;
            (x + v.max(0) as u64, y + (-v).max(0) as u64)
        })
    }

    pub fn x(&self, m: i64) -> u64 {
        self.h_invariants(m).0
    }

    pub fn y(&self, m: i64) -> u64 {
        self.h_invariants(m).1
    }

    /// `sum_{i<j} max(0, mu_j - mu_i - 1)`.
    pub fn magnitude(&self) -> usize {
        let mut total = 0i64;
        for (i, &a) in self.mu.iter().enumerate() {
            for &b in &self.mu[i + 1..] {
                total += (b - a - 1).max(0);
            }
        }
        total as usize
    }

    /// `g - 1 + sum (mu_i + 1)`.
    pub fn degree(&self, g: u32) -> i64 {
        g as i64 - 1 + self.sum() + self.mu.len() as i64
    }

    /// The twists `m` that can contribute a nonempty rectangle.
    pub fn window(&self) -> std::ops::RangeInclusive<i64> {
        let lo = -1 - self.mu[self.mu.len() - 1];
        let hi = -1 - self.mu[0];
        lo..=hi
    }

    /// The union of the rectangles `x <= x_m`, `y <= y_m`.
    pub fn lambda(&self) -> Partition {
        let rects: Vec<(u64, u64)> = self
            .window()
            .map(|m| self.h_invariants(m))
            .filter(|&(x, y)| x > 0 && y > 0)
            .collect();
        let height = rects.iter().map(|r| r.1).max().unwrap_or(0);
        let rows = (1..=height)
            .map(|y| {
                rects
                    .iter()
                    .filter(|r| r.1 >= y)
                    .map(|r| r.0 as usize)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Partition::from_rows_trusted(rows)
    }

    /// `alpha_m` for every `m` in [`window`](Self::window).
    pub fn rank_jumps(&self) -> Vec<RankJump> {
        self.window()
            .map(|m| {
                let prev = self.x(m - 1);
                let (x, y) = self.h_invariants(m);
                RankJump {
                    m,
                    alpha: x - prev,
                    strict: prev > 0 && y > 0,
                }
            })
            .collect()
    }

    pub fn strict_rank_jumps(&self) -> Vec<RankJump> {
        self.rank_jumps().into_iter().filter(|j| j.strict).collect()
    }

    fn has_staircase(&self) -> bool {
        self.mu[self.mu.len() - 1] - self.mu[0] >= 2
    }

    /// The splitting type whose staircase is `lambda()` minus its first row:
    /// raise the last copy of the smallest entry.
    pub fn mu_plus(&self) -> Result<SplittingType> {
        if !self.has_staircase() {
            return Err(Error::EmptyStaircase);
        }
        let s = (0..self.mu.len() - 1)
            .find(|&s| self.mu[s] < self.mu[s + 1])
            .expect("entries are not all equal");
        let mut mu = self.mu.clone();
        mu[s] += 1;
        Ok(SplittingType { mu })
    }

    /// The splitting type whose staircase is `lambda()` minus its first
    /// column: lower the first copy of the largest entry.
    pub fn mu_minus(&self) -> Result<SplittingType> {
        if !self.has_staircase() {
            return Err(Error::EmptyStaircase);
        }
        let s = (1..self.mu.len())
            .rev()
            .find(|&s| self.mu[s] > self.mu[s - 1])
            .expect("entries are not all equal");
        let mut mu = self.mu.clone();
        mu[s] -= 1;
        Ok(SplittingType { mu })
    }

    /// `alpha_m` at `m = -2 - mu_1`, the largest rank jump. It is the drop in
    /// magnitude from `mu` to `mu_plus`, and the largest strict rank jump
    /// whenever there is one.
    pub fn top_rank_jump(&self) -> u64 {
        let m = -2 - self.mu[0];
        self.x(m) - self.x(m - 1)
    }

    /// `alpha_m` at `m = 1 - mu_k`, the smallest rank jump. `k` minus it is
    /// the drop in magnitude from `mu` to `mu_minus`.
    pub fn bottom_rank_jump(&self) -> u64 {
        let m = 1 - self.mu[self.mu.len() - 1];
        self.x(m) - self.x(m - 1)
    }

    /// `(-mu_k, ..., -mu_1)`, whose staircase is the transpose.
    pub fn serre_dual(&self) -> SplittingType {
        SplittingType {
            mu: self.mu.iter().rev().map(|&u| -u).collect(),
        }
    }

    pub fn twist(&self, m: i64) -> SplittingType {
        SplittingType {
            mu: self.mu.iter().map(|&u| u + m).collect(),
        }
    }

    /// Dominance order: every prefix sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &SplittingType) -> Result<bool> {
        if self.mu.len() != other.mu.len() {
            return Err(Error::ComparisonUndefined(format!(
                "lengths {} and {} differ",
                self.mu.len(),
                other.mu.len()
            )));
        }
        if self.sum() != other.sum() {
            return Err(Error::ComparisonUndefined(format!(
                "sums {} and {} differ",
                self.sum(),
                other.sum()
            )));
        }
        let mut sa = 0;
        let mut sb = 0;
        for (a, b) in self.mu.iter().zip(&other.mu) {
            sa += a;
            sb += b;
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The residue `-sum mu_i mod k`; every inside corner of the staircase lies in it.
    pub fn corner_diagonal(&self) -> usize {
        self.k().reduce(-self.sum())
    }

    /// The C-vector of the staircase, in closed form.
    pub fn c_vector(&self) -> CVector {
        let k = self.mu.len();
        let c = self.corner_diagonal();
        let mut entries = vec![0usize; k];
        for i in 0..k {
            let top = self.mu[k - 1 - i];
            let v: i64 = self.mu[..k - 1 - i]
                .iter()
                .map(|&u| (top - u - 1).max(0))
                .sum();
            entries[(c + i) % k] = v as usize;
        }
        CVector::from_entries_trusted(self.k(), entries)
    }
}

impl TryFrom<Vec<i64>> for SplittingType {
    type Error = Error;

    fn try_from(mu: Vec<i64>) -> Result<Self> {
        SplittingType::new(mu)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(mu: SplittingType) -> Vec<i64> {
        mu.mu
    }
}

/// Comma-separated integers such as `-3,-1,1`, optionally in parentheses.
impl FromStr for SplittingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s);
        let mu = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("splitting type entry `{}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        SplittingType::new(mu)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, u) in self.mu.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str(")")
    }
}
