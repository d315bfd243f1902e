//! Closed formulas for the chain count on families of C-vectors, each paired
//! with the vector(s) on which the recurrence should reproduce it.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::cvector::CVector;
use crate::error::{Error, Result};
use crate::poset::{count_maximal_chains, ChainCount};
use crate::splitting::SplittingType;
use crate::tableau::hook_length_count;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourShape {
    /// `(z, z, 0, 0)`
    Even,
    /// `(z+1, z-1, 0, 0)`
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiveShape {
    /// `(z, z, 0, 0, 0)`
    Even,
    /// `(z+2, z-1, 0, 0, 0)`
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Six2Shape {
    /// `(z, z, 0, 0, 0, 0)`
    Equal,
    /// `(z+2, z-2, 0, 0, 0, 0)`
    Split,
    /// `(z+1, 0, 0, z-1, 0, 0)`
    Apart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Six3Shape {
    /// `(z, z, z, 0, 0, 0)`
    Equal,
    /// `(z+1, z+1, z-2, 0, 0, 0)`
    Low,
    /// `(z+2, z-1, z-1, 0, 0, 0)`
    High,
    /// `(z-1, 0, z, 0, z+1, 0)`
    Spread,
}

/// A member of one of the families with a known chain count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `(z, 0, ..., 0)` of length `k`: exactly one chain.
    OneCol { k: usize, z: usize },
    /// `k = 3` with `mu_3 > mu_2 + 1 > mu_1 + 2`: `C(mu_3-mu_1-2, mu_2-mu_1-1)`.
    Trigonal { mu: SplittingType },
    /// Powers of two.
    Four { shape: FourShape, z: usize },
    /// Fibonacci numbers with `F_0 = F_1 = 1`.
    Five { shape: FiveShape, z: usize },
    /// Halves of `3^(z-1) ± 1`, and `3^(z-1)`.
    Six2 { shape: Six2Shape, z: usize },
    /// Thirds of `2^(3z-2)` corrected by `β`, and `2^(3z-2)`.
    Six3 { shape: Six3Shape, z: usize },
    /// `mu_2 = ... = mu_{k-1}` with a long first row and a tall first column.
    OneRowOneCol { mu: SplittingType },
    /// `(z2^(k-2-i), (z2-1)^(i), 0)` with `z1` inserted at position `j`.
    OneRowOneColVector {
        k: usize,
        i: usize,
        j: usize,
        z1: usize,
        z2: usize,
    },
    /// The `rows` by `cols` rectangle: hook length formula.
    Classic { rows: usize, cols: usize },
    /// `(-3, -2, ..., -2, 0, 0)`: one less than a Catalan number.
    Catalan { k: usize },
    /// Two plus the counts for `(-3,-3,-2^(i),-1^(k-4-i),0,0)` over
    /// `i = 0..=k-4`, against twice the degree of the rank 4 quadric locus.
    Quadric { k: usize },
}

fn binom(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `F_0 = F_1 = 1`.
fn fibonacci(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

fn pow(base: u32, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), e)
}

fn beta(n: usize) -> i64 {
    if n.is_multiple_of(3) {
        2
    } else {
        -1
    }
}

fn exact_div(num: BigInt, den: u32) -> BigUint {
    let q = &num / den;
    debug_assert_eq!(&q * den, num);
    q.to_biguint().expect("nonnegative quotient")
}

fn need(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutsideHypotheses(what()))
    }
}

fn cvec(entries: Vec<usize>) -> CVector {
    CVector::new(entries).expect("families have k >= 2")
}

fn quadric_types(k: usize) -> Vec<SplittingType> {
    (0..=k - 4)
        .map(|i| {
            let mut mu = vec![-3, -3];
            mu.extend(std::iter::repeat_n(-2, i));
            mu.extend(std::iter::repeat_n(-1, k - 4 - i));
            mu.extend([0, 0]);
            SplittingType::new(mu).expect("length k")
        })
        .collect()
}

fn catalan_type(k: usize) -> SplittingType {
    let mut mu = vec![-3];
    mu.extend(std::iter::repeat_n(-2, k - 3));
    mu.extend([0, 0]);
    SplittingType::new(mu).expect("length k")
}

fn classic_type(rows: usize, cols: usize) -> SplittingType {
    let mut mu = vec![-2; rows];
    mu.extend(std::iter::repeat_n(0, cols));
    SplittingType::new(mu).expect("at least two entries")
}

impl Family {
    /// Rejects parameters outside the family's hypotheses.
    pub fn check(&self) -> Result<()> {
        match self {
            Family::OneCol { k, .. } => need(*k >= 2, || format!("k = {k} < 2")),
            Family::Trigonal { mu } => {
                let m = mu.entries();
                need(m.len() == 3, || format!("{mu} does not have k = 3"))?;
                need(m[2] > m[1] + 1 && m[1] > m[0] + 1, || {
                    format!("{mu} needs mu_3 > mu_2 + 1 and mu_2 > mu_1 + 1")
                })
            }
            Family::Four { z, .. } | Family::Five { z, .. } => {
                need(*z >= 1, || "z must be at least 1".into())
            }
            Family::Six2 { shape, z } => match shape {
                Six2Shape::Split => need(*z >= 2, || "z must be at least 2".into()),
                _ => need(*z >= 1, || "z must be at least 1".into()),
            },
            Family::Six3 { shape, z } => match shape {
                Six3Shape::Low => need(*z >= 2, || "z must be at least 2".into()),
                _ => need(*z >= 1, || "z must be at least 1".into()),
            },
            Family::OneRowOneCol { mu } => {
                let m = mu.entries();
                let k = m.len();
                need(k >= 3, || format!("{mu} needs k >= 3"))?;
                need(m[1..k - 1].iter().all(|&u| u == m[1]), || {
                    format!("{mu} needs mu_2 = ... = mu_(k-1)")
                })?;
                need(m[k - 1] > m[1] + 1 && m[0] < m[1] - 1, || {
                    format!("{mu} needs mu_k > mu_2 + 1 and mu_1 < mu_2 - 1")
                })
            }
            Family::OneRowOneColVector { k, i, j, z1, z2 } => {
                let (k, i, j, z1, z2) = (*k, *i, *j, *z1, *z2);
                need(k >= 3, || format!("k = {k} < 3"))?;
                need(i <= k - 2, || format!("i = {i} exceeds k - 2"))?;
                need(j < k, || format!("j = {j} exceeds k - 1"))?;
                need(z1 >= z2, || format!("z1 = {z1} < z2 = {z2}"))?;
                need(z2 >= 1 || i == 0, || "z2 = 0 forces i = 0".into())?;
                let want = (k - 2 + z1 - z2 + (k - 1) * (i + 1) - i) % (k - 1);
                need(j % (k - 1) == want, || {
                    format!("position j = {j} is not congruent to {want} mod {}", k - 1)
                })
            }
            Family::Classic { rows, cols } => need(*rows >= 1 && *cols >= 1, || {
                "the rectangle must be nonempty".into()
            }),
            Family::Catalan { k } => need(*k >= 3, || format!("k = {k} < 3")),
            Family::Quadric { k } => need(*k >= 4, || format!("k = {k} < 4")),
        }
    }

    /// The C-vector whose chain count the formula predicts, when there is one.
    pub fn cvector(&self) -> Result<Option<CVector>> {
        self.check()?;
        Ok(Some(match *self {
            Family::OneCol { k, z } => {
                let mut e = vec![0; k];
                e[0] = z;
                cvec(e)
            }
            Family::Trigonal { ref mu } | Family::OneRowOneCol { ref mu } => mu.c_vector(),
            Family::Four { shape, z } => match shape {
                FourShape::Even => cvec(vec![z, z, 0, 0]),
                FourShape::Odd => cvec(vec![z + 1, z - 1, 0, 0]),
            },
            Family::Five { shape, z } => match shape {
                FiveShape::Even => cvec(vec![z, z, 0, 0, 0]),
                FiveShape::Odd => cvec(vec![z + 2, z - 1, 0, 0, 0]),
            },
            Family::Six2 { shape, z } => match shape {
                Six2Shape::Equal => cvec(vec![z, z, 0, 0, 0, 0]),
                Six2Shape::Split => cvec(vec![z + 2, z - 2, 0, 0, 0, 0]),
                Six2Shape::Apart => cvec(vec![z + 1, 0, 0, z - 1, 0, 0]),
            },
            Family::Six3 { shape, z } => match shape {
                Six3Shape::Equal => cvec(vec![z, z, z, 0, 0, 0]),
                Six3Shape::Low => cvec(vec![z + 1, z + 1, z - 2, 0, 0, 0]),
                Six3Shape::High => cvec(vec![z + 2, z - 1, z - 1, 0, 0, 0]),
                Six3Shape::Spread => cvec(vec![z - 1, 0, z, 0, z + 1, 0]),
            },
            Family::OneRowOneColVector { k, i, j, z1, z2 } => {
                let mut e = vec![z2; k - 2 - i];
                e.extend(std::iter::repeat_n(z2.saturating_sub(1), i));
                e.push(0);
                e.insert(j, z1);
                cvec(e)
            }
            Family::Classic { rows, cols } => classic_type(rows, cols).c_vector(),
            Family::Catalan { k } => catalan_type(k).c_vector(),
            Family::Quadric { .. } => return Ok(None),
        }))
    }

    /// The family's closed formula.
    pub fn closed_form(&self) -> Result<ChainCount> {
        self.check()?;
        let v = match *self {
            Family::OneCol { .. } => BigUint::one(),
            Family::Trigonal { ref mu } => {
                let m = mu.entries();
                binom((m[2] - m[0] - 2) as u64, (m[1] - m[0] - 1) as u64)
            }
            Family::Four { z, .. } => pow(2, z - 1),
            Family::Five { shape, z } => match shape {
                FiveShape::Even => fibonacci(2 * z - 2),
                FiveShape::Odd => fibonacci(2 * z - 1),
            },
            Family::Six2 { shape, z } => match shape {
                Six2Shape::Equal => (pow(3, z - 1) + 1u32) / 2u32,
                Six2Shape::Split => (pow(3, z - 1) - 1u32) / 2u32,
                Six2Shape::Apart => pow(3, z - 1),
            },
            Family::Six3 { shape, z } => {
                let main = BigInt::from(pow(2, 3 * z - 2));
                let sign = if z % 2 == 0 { 1 } else { -1 };
                match shape {
                    Six3Shape::Equal => exact_div(main + sign * beta(z), 3),
                    Six3Shape::Low => exact_div(main + sign * beta(z - 1), 3),
                    Six3Shape::High => exact_div(main + sign * beta(z + 1), 3),
                    Six3Shape::Spread => pow(2, 3 * z - 2),
                }
            }
            Family::OneRowOneCol { ref mu } => {
                let m = mu.entries();
                let k = m.len() as i64;
                let n = (k - 2) * (m[k as usize - 1] - m[0] - 2);
                let r = (k - 2) * (m[1] - m[0] - 1);
                binom(n as u64, r as u64)
            }
            Family::OneRowOneColVector { k, i, z2, z1, .. } => {
                let total = z1 + (k - 2) * z2 - i;
                let n = (k - 2) * total / (k - 1);
                binom(n as u64, ((k - 2) * z2 - i) as u64)
            }
            Family::Classic { rows, cols } => hook_length_count(rows, cols),
            Family::Catalan { k } => {
                let n = (k - 1) as u64;
                binom(2 * n, n) / (n + 1) - 1u32
            }
            Family::Quadric { k } => {
                let (mut num, mut den) = (BigUint::one(), BigUint::one());
                for i in 0..=(k - 4) as u64 {
                    num *= binom(k as u64 + 1 + i, k as u64 - 3 - i);
                    den *= binom(2 * i + 1, i);
                }
                BigUint::from(2u32) * num / den
            }
        };
        Ok(ChainCount(v))
    }

    /// The same quantity computed by the chain-count recurrence.
    pub fn recurrence(&self) -> Result<ChainCount> {
        if let Family::Quadric { k } = *self {
            self.check()?;
            let sum = quadric_types(k)
                .iter()
                .map(|mu| count_maximal_chains(&mu.c_vector()).0)
                .fold(BigUint::from(2u32), |acc, v| acc + v);
            return Ok(ChainCount(sum));
        }
        let c = self
            .cvector()?
            .expect("only the quadric family lacks a vector");
        Ok(count_maximal_chains(&c))
    }

    /// The splitting types behind the family member, where it is defined by one.
    pub fn splitting_types(&self) -> Vec<SplittingType> {
        match *self {
            Family::Trigonal { ref mu } | Family::OneRowOneCol { ref mu } => vec![mu.clone()],
            Family::Classic { rows, cols } => vec![classic_type(rows, cols)],
            Family::Catalan { k } => vec![catalan_type(k)],
            Family::Quadric { k } if k >= 4 => quadric_types(k),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::OneCol { k, z } => write!(f, "one-col k={k} z={z}"),
            Family::Trigonal { mu } => write!(f, "trigonal mu={mu}"),
            Family::Four { shape, z } => write!(f, "four {shape:?} z={z}"),
            Family::Five { shape, z } => write!(f, "fibonacci {shape:?} z={z}"),
            Family::Six2 { shape, z } => write!(f, "six2 {shape:?} z={z}"),
            Family::Six3 { shape, z } => write!(f, "six3 {shape:?} z={z}"),
            Family::OneRowOneCol { mu } => write!(f, "one-row-one-col mu={mu}"),
            Family::OneRowOneColVector { k, i, j, z1, z2 } => {
                write!(f, "one-row-one-col k={k} i={i} j={j} z1={z1} z2={z2}")
            }
            Family::Classic { rows, cols } => write!(f, "classic {rows}x{cols}"),
            Family::Catalan { k } => write!(f, "catalan k={k}"),
            Family::Quadric { k } => write!(f, "quadric k={k}"),
        }
    }
}

/// The closed formula for a family member.
pub fn closed_form_alpha(family: &Family) -> Result<ChainCount> {
    family.closed_form()
}

/// Family names accepted by [`family_grid`].
pub const FAMILY_NAMES: &[&str] = &[
    "one-col",
    "trigonal",
    "four",
    "fibonacci",
    "six2",
    "six3",
    "one-row-one-col",
    "classic",
    "catalan",
    "quadric",
];

/// The sorted integer vectors of length `k` with entries in `lo..=hi`.
fn sorted_vectors(k: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(k: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for v in start..=hi {
            cur.push(v);
            rec(k, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Every in-hypothesis member of a named family up to a size bound.
///
/// The bound caps `z` for the vector families, `|mu_i|` for the families
/// given by splitting types, `z1` and `z2` for the one-row-one-column
/// vectors, the column count for `classic` (with at most 3 rows), and `k`
/// for `catalan` and `quadric`.
pub fn family_grid(name: &str, bound: usize) -> Result<Vec<Family>> {
    let z_range = 1..=bound;
    let mut out = Vec::new();
    match name {
        "one-col" => {
            for k in 2..=7 {
                for z in z_range.clone() {
                    out.push(Family::OneCol { k, z });
                }
            }
        }
        "trigonal" => {
            for mu in sorted_vectors(3, -(bound as i64), 0) {
                let f = Family::Trigonal {
                    mu: SplittingType::new(mu)?,
                };
                if f.check().is_ok() {
                    out.push(f);
                }
            }
        }
        "four" => {
            for z in z_range {
                out.push(Family::Four {
                    shape: FourShape::Even,
                    z,
                });
                out.push(Family::Four {
                    shape: FourShape::Odd,
                    z,
                });
            }
        }
        "fibonacci" | "five" => {
            for z in z_range {
                out.push(Family::Five {
                    shape: FiveShape::Even,
                    z,
                });
                out.push(Family::Five {
                    shape: FiveShape::Odd,
                    z,
                });
            }
        }
        "six2" => {
            for z in z_range {
                for shape in [Six2Shape::Equal, Six2Shape::Split, Six2Shape::Apart] {
                    out.push(Family::Six2 { shape, z });
                }
            }
        }
        "six3" => {
            for z in z_range {
                for shape in [
                    Six3Shape::Equal,
                    Six3Shape::Low,
                    Six3Shape::High,
                    Six3Shape::Spread,
                ] {
                    out.push(Family::Six3 { shape, z });
                }
            }
        }
        "one-row-one-col" => {
            for k in 3..=6 {
                for mu in sorted_vectors(k, -(bound as i64), 0) {
                    let f = Family::OneRowOneCol {
                        mu: SplittingType::new(mu)?,
                    };
                    if f.check().is_ok() {
                        out.push(f);
                    }
                }
                for z2 in 0..=bound {
                    for z1 in z2..=bound {
                        for i in 0..=k - 2 {
                            for j in 0..k {
                                let f = Family::OneRowOneColVector { k, i, j, z1, z2 };
                                if f.check().is_ok() {
                                    out.push(f);
                                }
                            }
                        }
                    }
                }
            }
        }
        "classic" => {
            for rows in 1..=3 {
                for cols in 1..=bound {
                    out.push(Family::Classic { rows, cols });
                }
            }
        }
        "catalan" => {
            for k in 3..=bound.max(3) {
                out.push(Family::Catalan { k });
            }
        }
        "quadric" => {
            for k in 4..=bound.max(4) {
                out.push(Family::Quadric { k });
            }
        }
        _ => return Err(Error::UnknownFamily(name.to_string())),
    }
    // members that skip their own lower bounds on z
    out.retain(|f| f.check().is_ok());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let t = Family::Trigonal {
            mu: mu(&[-4, -2, 0]),
        };
        assert_eq!(t.closed_form().unwrap(), ChainCount::from(2));
        assert_eq!(t.recurrence().unwrap(), ChainCount::from(2));
        let four = Family::Four {
            shape: FourShape::Even,
            z: 1,
        };
        assert_eq!(closed_form_alpha(&four).unwrap(), ChainCount::from(1));
        let six3 = Family::Six3 {
            shape: Six3Shape::Low,
            z: 4,
        };
        assert_eq!(six3.closed_form().unwrap(), ChainCount::from(342));
        assert_eq!(
            six3.cvector().unwrap().unwrap().canonical_rotation(),
            mu(&[-3, -3, -2, -1, 0, 0]).c_vector().canonical_rotation()
        );
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(Family::Trigonal {
            mu: mu(&[-3, -1, 1])
        }
        .closed_form()
        .is_ok());
        assert!(matches!(
            Family::Trigonal {
                mu: mu(&[-2, -1, 1])
            }
            .closed_form(),
            Err(Error::OutsideHypotheses(_))
        ));
        assert!(Family::Four {
            shape: FourShape::Odd,
            z: 0
        }
        .closed_form()
        .is_err());
        assert!(Family::Six2 {
            shape: Six2Shape::Split,
            z: 1
        }
        .closed_form()
        .is_err());
        assert!(Family::Six3 {
            shape: Six3Shape::Low,
            z: 1
        }
        .closed_form()
        .is_err());
        assert!(Family::OneRowOneCol {
            mu: mu(&[-4, -2, -1, 0])
        }
        .closed_form()
        .is_err());
        assert!(Family::Catalan { k: 2 }.closed_form().is_err());
        assert!(Family::Quadric { k: 3 }.closed_form().is_err());
        assert!(matches!(
            family_grid("nope", 3),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn small_sequences() {
        let fib: Vec<String> = (0..9).map(|n| fibonacci(n).to_string()).collect();
        assert_eq!(fib, ["1", "1", "2", "3", "5", "8", "13", "21", "34"]);
        assert_eq!(binom(7, 3), BigUint::from(35u32));
        assert_eq!(binom(3, 7), BigUint::zero());
    }

    #[test]
    fn quadric_values() {
        let v: Vec<String> = (4..=6)
            .map(|k| Family::Quadric { k }.closed_form().unwrap().to_string())
            .collect();
        assert_eq!(v, ["10", "70", "588"]);
    }

    #[test]
    fn one_row_one_col_example_vector() {
        // the splitting type family lands on (z1, z2^(k-2), 0) up to rotation
        let m = mu(&[-5, -2, -2, 0]);
        let z1 = 3 * (0 - 1) - 2 * -2 + 5;
        let z2 = 2;
        assert_eq!(
            m.c_vector().canonical_rotation(),
            CVector::new(vec![z1 as usize, z2, z2, 0])
                .unwrap()
                .canonical_rotation()
        );
    }
}
