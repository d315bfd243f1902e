//! Ferrers diagrams in English notation.
//!
//! Box `(x, y)` is column `x`, row `y`, both 1-based, with row 1 on top.
//! Its diagonal is `y - x`; the diagonal class `D_a` collects boxes whose
//! diagonal is congruent to `a` modulo `k`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cvector::CVector;
use crate::error::{Error, Result};
use crate::modulus::Modulus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub x: usize,
    pub y: usize,
}

impl BoxCoord {
    pub fn new(x: usize, y: usize) -> Result<Self> {
        if x == 0 || y == 0 {
            return Err(Error::Precondition(format!(
                "box coordinates are 1-based, got ({x},{y})"
            )));
        }
        Ok(BoxCoord { x, y })
    }

    #[inline]
    pub fn diagonal(self) -> i64 {
        self.y as i64 - self.x as i64
    }

    #[inline]
    pub fn residue(self, k: Modulus) -> usize {
        k.reduce(self.diagonal())
    }

    pub fn transpose(self) -> BoxCoord {
        BoxCoord {
            x: self.y,
            y: self.x,
        }
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A partition stored as its weakly decreasing, strictly positive row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "rows must be positive: {rows:?}"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "rows must be weakly decreasing: {rows:?}"
            )));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// Builds a partition from row lengths that are known to be valid,
    /// dropping trailing zeros.
    pub(crate) fn from_rows_trusted(mut rows: Vec<usize>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        Partition { rows }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of row `y` (1-based); 0 past the last row.
    pub fn row_len(&self, y: usize) -> usize {
        if y == 0 {
            return 0;
        }
        self.rows.get(y - 1).copied().unwrap_or(0)
    }

    /// Height of column `x` (1-based); 0 past the last column.
    pub fn col_height(&self, x: usize) -> usize {
        if x == 0 {
            return 0;
        }
        self.rows.partition_point(|&r| r >= x)
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.x >= 1 && b.x <= self.row_len(b.y)
    }

    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.rows.len() <= other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a <= b)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |x| BoxCoord { x, y: i + 1 }))
    }

    /// Boxes `(x, y)` with neither `(x+1, y)` nor `(x, y+1)` in the partition,
    /// ordered by row.
    pub fn inside_corners(&self) -> Vec<BoxCoord> {
        let n = self.rows.len();
        (0..n)
            .filter(|&i| i + 1 == n || self.rows[i + 1] < self.rows[i])
            .map(|i| BoxCoord {
                x: self.rows[i],
                y: i + 1,
            })
            .collect()
    }

    /// Boxes whose addition yields a partition, ordered by row.
    pub fn outside_corners(&self) -> Vec<BoxCoord> {
        (1..=self.rows.len() + 1)
            .filter_map(|y| {
                let x = self.row_len(y) + 1;
                (y == 1 || self.row_len(y - 1) >= x).then_some(BoxCoord { x, y })
            })
            .collect()
    }

    pub fn corners(&self) -> (Vec<BoxCoord>, Vec<BoxCoord>) {
        (self.inside_corners(), self.outside_corners())
    }

    pub fn transpose(&self) -> Partition {
        let rows = (1..=self.num_cols()).map(|x| self.col_height(x)).collect();
        Partition { rows }
    }

    /// Adds every outside corner in `D_a`.
    pub fn upward_displacement(&self, a: usize, k: Modulus) -> Result<Partition> {
        k.check_residue(a)?;
        let mut rows = self.rows.clone();
        for c in self.outside_corners() {
            if c.residue(k) == a {
                if c.y > rows.len() {
                    rows.push(1);
                } else {
                    rows[c.y - 1] += 1;
                }
            }
        }
        Ok(Partition { rows })
    }

    /// Deletes every inside corner in `D_a`.
    pub fn downward_displacement(&self, a: usize, k: Modulus) -> Result<Partition> {
        k.check_residue(a)?;
        let mut rows = self.rows.clone();
        for c in self.inside_corners() {
            if c.residue(k) == a {
                rows[c.y - 1] -= 1;
            }
        }
        Ok(Partition::from_rows_trusted(rows))
    }

    /// `C_a` for each residue `a`: the tallest column whose last box is in `D_a`.
    pub fn c_vector(&self, k: Modulus) -> CVector {
        let mut entries = vec![0usize; k.get()];
        for x in 1..=self.num_cols() {
            let h = self.col_height(x);
            let a = k.reduce(h as i64 - x as i64);
            entries[a] = entries[a].max(h);
        }
        CVector::from_entries_trusted(k, entries)
    }

    pub fn rho(&self, k: Modulus) -> usize {
        self.c_vector(k).rank()
    }

    /// Every row-end box `(x, y)` in `D_a` has `C_{a-1} < y`.
    pub fn satisfies_k_descent(&self, k: Modulus) -> bool {
        let c = self.c_vector(k);
        self.rows.iter().enumerate().all(|(i, &len)| {
            let y = i + 1;
            let a = k.reduce(y as i64 - len as i64);
            c.get(k.prev(a)) < y
        })
    }

    pub fn is_k_core(&self, k: Modulus) -> bool {
        self.satisfies_k_descent(k) && self.transpose().satisfies_k_descent(k)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.rows
    }
}

/// Comma-separated row lengths; `[` `]` are optional and an empty string is `∅`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("row length `{}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { rows: cur.clone() });
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
