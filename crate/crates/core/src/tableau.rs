//! Tableaux on partitions, k-uniform displacement, saturation and the moves
//! that relate tori of a splitting locus.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::modulus::Modulus;
use crate::partition::{BoxCoord, Partition};

/// A filling of a partition by symbols from `1..=alphabet`, strictly
/// increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    alphabet: u32,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>, alphabet: u32) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let at = BoxCoord { x: j + 1, y: i + 1 };
                if v == 0 || v > alphabet {
                    return Err(Error::InvalidTableau(format!(
                        "symbol {v} at {at} is outside [{alphabet}]"
                    )));
                }
                if j > 0 && row[j - 1] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is not strictly increasing at {at}",
                        i + 1
                    )));
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not strictly increasing at {at}",
                        j + 1
                    )));
                }
            }
        }
        Ok(Tableau {
            shape,
            rows,
            alphabet,
        })
    }

    pub fn empty(alphabet: u32) -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
            alphabet,
        }
    }

    /// Parses one row per line with whitespace-separated symbols. Blank lines
    /// are skipped.
    pub fn from_text(text: &str, alphabet: u32) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|e| Error::Parse(format!("tableau entry `{t}`: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows, alphabet)
    }

    /// One row per line, symbols separated by single spaces, each line
    /// terminated by `\n`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn get(&self, b: BoxCoord) -> Option<u32> {
        self.rows
            .get(b.y.checked_sub(1)?)?
            .get(b.x.checked_sub(1)?)
            .copied()
    }

    /// `(box, symbol)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (BoxCoord, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &v)| (BoxCoord { x: j + 1, y: i + 1 }, v))
        })
    }

    pub fn symbols(&self) -> BTreeSet<u32> {
        self.entries().map(|(_, v)| v).collect()
    }

    pub fn num_symbols(&self) -> usize {
        self.symbols().len()
    }

    pub fn contains_symbol(&self, s: u32) -> bool {
        self.rows.iter().any(|r| r.contains(&s))
    }

    pub fn boxes_of(&self, s: u32) -> Vec<BoxCoord> {
        self.entries()
            .filter(|&(_, v)| v == s)
            .map(|(b, _)| b)
            .collect()
    }

    /// Each of `1..=n` appears exactly once, where `n` is the number of boxes.
    pub fn is_standard(&self) -> bool {
        let n = self.shape.size();
        let syms = self.symbols();
        syms.len() == n && syms.iter().copied().eq(1..=n as u32)
    }

    pub fn transpose(&self) -> Tableau {
        let rows = (1..=self.shape.num_cols())
            .map(|x| {
                (1..=self.shape.col_height(x))
                    .map(|y| self.rows[y - 1][x - 1])
                    .collect()
            })
            .collect();
        Tableau {
            shape: self.shape.transpose(),
            rows,
            alphabet: self.alphabet,
        }
    }

    /// Maps each symbol to the common residue of its boxes, or `None` if some
    /// symbol sits on two diagonal classes.
    pub fn symbol_residues(&self, k: Modulus) -> Option<BTreeMap<u32, usize>> {
        let mut seen = BTreeMap::new();
        for (b, v) in self.entries() {
            let r = b.residue(k);
            if *seen.entry(v).or_insert(r) != r {
                return None;
            }
        }
        Some(seen)
    }

    /// Equal symbols sit on boxes whose diagonals agree mod `k`.
    pub fn is_k_uniform(&self, k: Modulus) -> bool {
        self.symbol_residues(k).is_some()
    }

    /// The level set of symbols `<= s`, as a partition.
    pub fn level_set(&self, s: u32) -> Partition {
        Partition::from_rows_trusted(
            self.rows
                .iter()
                .map(|r| r.partition_point(|&v| v <= s))
                .collect(),
        )
    }

    /// Whether the tableau is `phi(symbols, chain)` for some maximal chain:
    /// each level set is the upward displacement of the previous one.
    pub fn is_k_saturated(&self, k: Modulus) -> bool {
        if !self.is_k_uniform(k) {
            return false;
        }
        let mut level = Partition::empty();
        for s in self.symbols() {
            let a = self.boxes_of(s)[0].residue(k);
            let next = self.level_set(s);
            match level.upward_displacement(a, k) {
                Ok(up) if up == next => level = next,
                _ => return false,
            }
        }
        true
    }

    fn set(&mut self, b: BoxCoord, v: u32) {
        self.rows[b.y - 1][b.x - 1] = v;
    }

    fn map_symbols(&self, f: impl Fn(u32) -> u32) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| f(v)).collect())
                .collect(),
            alphabet: self.alphabet,
        }
    }

    fn check_symbol(&self, s: u32) -> Result<()> {
        if s == 0 || s > self.alphabet {
            return Err(Error::Precondition(format!(
                "symbol {s} is outside [{}]",
                self.alphabet
            )));
        }
        Ok(())
    }

    fn check_boxes_hold(&self, boxes: &[BoxCoord], s: u32) -> Result<()> {
        if boxes.is_empty() {
            return Err(Error::Precondition("no boxes given".into()));
        }
        let distinct: BTreeSet<_> = boxes.iter().collect();
        if distinct.len() != boxes.len() {
            return Err(Error::Precondition("repeated box".into()));
        }
        for &b in boxes {
            if self.get(b) != Some(s) {
                return Err(Error::Precondition(format!("box {b} does not hold {s}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Serialized as its list of rows.
impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// A maximal chain `∅ = λ_0 < λ_1 < ... < λ_n` recorded by the residue of
/// the upward displacement taken at each step, bottom-up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MaximalChain {
    #[serde(skip)]
    k: Modulus,
    residues: Vec<usize>,
}

impl MaximalChain {
    /// Checks that every step adds at least one box.
    pub fn new(k: Modulus, residues: Vec<usize>) -> Result<Self> {
        let chain = MaximalChain { k, residues };
        chain.partitions()?;
        Ok(chain)
    }

    pub(crate) fn from_residues_trusted(k: Modulus, residues: Vec<usize>) -> Self {
        MaximalChain { k, residues }
    }

    pub fn modulus(&self) -> Modulus {
        self.k
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// `λ_0, ..., λ_n`.
    pub fn partitions(&self) -> Result<Vec<Partition>> {
        let mut out = vec![Partition::empty()];
        for (i, &a) in self.residues.iter().enumerate() {
            let last = out.last().expect("nonempty");
            let next = last.upward_displacement(a, self.k)?;
            if &next == last {
                return Err(Error::InvalidChain(format!(
                    "step {} at residue {a} adds no box to {last}",
                    i + 1
                )));
            }
            out.push(next);
        }
        Ok(out)
    }

    pub fn top(&self) -> Result<Partition> {
        Ok(self.partitions()?.pop().expect("nonempty"))
    }
}

impl fmt::Display for MaximalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.residues.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// The tableau putting `symbols[j]` on `λ_{j+1} \ λ_j`.
pub fn phi(symbols: &[u32], chain: &MaximalChain, alphabet: u32) -> Result<Tableau> {
    if symbols.len() != chain.len() {
        return Err(Error::SizeMismatch {
            expected: chain.len(),
            found: symbols.len(),
        });
    }
    if symbols.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(
            "symbols must be strictly increasing".into(),
        ));
    }
    let levels = chain.partitions()?;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (j, &s) in symbols.iter().enumerate() {
        let next = &levels[j + 1];
        rows.resize_with(next.num_rows(), Vec::new);
        for (y, row) in rows.iter_mut().enumerate() {
            row.resize(next.row_len(y + 1), s);
        }
    }
    Tableau::new(rows, alphabet)
}

/// The saturation of a k-uniform tableau together with the symbols and
/// maximal chain that produce it through [`phi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub tableau: Tableau,
    pub symbols: Vec<u32>,
    pub chain: MaximalChain,
}

/// Repeatedly takes the largest symbol `h` on the current shape, writes `h`
/// on every inside corner of its diagonal class and displaces that class
/// downward.
pub fn saturation(t: &Tableau, k: Modulus) -> Result<Saturation> {
    if !t.shape.is_k_core(k) {
        return Err(Error::NotACore(t.shape.to_string(), k.get()));
    }
    if !t.is_k_uniform(k) {
        return Err(Error::NotUniform(k.get()));
    }
    let mut out = t.clone();
    let mut shape = t.shape.clone();
    let mut symbols = Vec::new();
    let mut residues = Vec::new();
    while !shape.is_empty() {
        let (h, at) = shape
            .boxes()
            .map(|b| (t.get(b).expect("shape is a subset of t"), b))
            .max_by_key(|&(v, _)| v)
            .expect("nonempty shape");
        let a = at.residue(k);
        for c in shape.inside_corners() {
            if c.residue(k) == a {
                out.set(c, h);
            }
        }
        shape = shape.downward_displacement(a, k)?;
        symbols.push(h);
        residues.push(a);
    }
    symbols.reverse();
    residues.reverse();
    let tableau = Tableau::new(out.rows, t.alphabet)?;
    Ok(Saturation {
        tableau,
        symbols,
        chain: MaximalChain::from_residues_trusted(k, residues),
    })
}

pub fn saturate(t: &Tableau, k: Modulus) -> Result<Tableau> {
    Ok(saturation(t, k)?.tableau)
}

/// Replaces the symbol `b` by the absent symbol `a` on `boxes`, where `b` is
/// the nearest symbol of `t` above or below `a`.
pub fn swap(t: &Tableau, a: u32, b: u32, boxes: &[BoxCoord]) -> Result<Tableau> {
    t.check_symbol(a)?;
    if t.contains_symbol(a) {
        return Err(Error::Precondition(format!(
            "symbol {a} is already present"
        )));
    }
    let syms = t.symbols();
    if !syms.contains(&b) {
        return Err(Error::Precondition(format!("symbol {b} is absent")));
    }
    let nearest = if b > a {
        syms.range(a..).next()
    } else {
        syms.range(..a).next_back()
    };
    if nearest != Some(&b) {
        return Err(Error::Precondition(format!(
            "{b} is not the nearest symbol to {a} on its side"
        )));
    }
    t.check_boxes_hold(boxes, b)?;
    let mut out = t.clone();
    for &c in boxes {
        out.set(c, a);
    }
    Ok(out)
}

/// Writes `symbol` on `boxes`, overwriting whatever they hold, and checks that
/// the result is still a k-uniform tableau.
pub fn restamp(t: &Tableau, symbol: u32, boxes: &[BoxCoord], k: Modulus) -> Result<Tableau> {
    t.check_symbol(symbol)?;
    if boxes.is_empty() {
        return Err(Error::Precondition("no boxes given".into()));
    }
    let mut out = t.clone();
    for &c in boxes {
        if !t.shape.contains(c) {
            return Err(Error::Precondition(format!("box {c} is outside the shape")));
        }
        out.set(c, symbol);
    }
    let out = Tableau::new(out.rows, t.alphabet)?;
    if !out.is_k_uniform(k) {
        return Err(Error::NotUniform(k.get()));
    }
    Ok(out)
}

/// Removes `b` by shifting every symbol between `b` and the absent symbol
/// `a` one step toward `a`.
pub fn cycle_out_toward(t: &Tableau, b: u32, a: u32) -> Result<Tableau> {
    t.check_symbol(a)?;
    if !t.contains_symbol(b) {
        return Err(Error::Precondition(format!("symbol {b} is absent")));
    }
    if t.contains_symbol(a) {
        return Err(Error::Precondition(format!("symbol {a} is present")));
    }
    Ok(if a < b {
        t.map_symbols(|v| if a < v && v <= b { v - 1 } else { v })
    } else {
        t.map_symbols(|v| if b <= v && v < a { v + 1 } else { v })
    })
}

/// [`cycle_out_toward`] the nearest absent symbol, preferring the smaller one
/// on a tie.
pub fn cycle_out(t: &Tableau, b: u32) -> Result<Tableau> {
    let syms = t.symbols();
    let a = (1..=t.alphabet)
        .filter(|s| !syms.contains(s))
        .min_by_key(|&s| (s.abs_diff(b), s))
        .ok_or(Error::NoAbsentSymbol(t.alphabet))?;
    cycle_out_toward(t, b, a)
}

/// Number of standard Young tableaux on the `rows` by `cols` rectangle.
pub fn hook_length_count(rows: usize, cols: usize) -> BigUint {
    let fact = |n: usize| -> BigUint { (1..=n).fold(BigUint::one(), |acc, i| acc * i) };
    let mut num = fact(rows * cols);
    let mut den = BigUint::one();
    for j in 0..cols {
        num *= fact(j);
        den *= fact(rows + j);
    }
    num / den
}

/// Depth-first enumeration of the k-uniform tableaux on a shape, filling
/// boxes in row-major order with increasing symbols, so fillings come out in
/// lexicographic order.
pub struct KUniformTableaux {
    alphabet: u32,
    boxes: Vec<BoxCoord>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    residue: Vec<usize>,
    cap: Vec<u32>,
    vals: Vec<u32>,
    uses: Vec<u32>,
    class: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

pub fn enumerate_k_uniform(
    shape: &Partition,
    k: Modulus,
    alphabet: u32,
) -> Result<KUniformTableaux> {
    enumerate_k_uniform_with(shape, k, alphabet, &Guards::default())
}

pub fn enumerate_k_uniform_with(
    shape: &Partition,
    k: Modulus,
    alphabet: u32,
    guards: &Guards,
) -> Result<KUniformTableaux> {
    if shape.size() > guards.max_boxes {
        return Err(Error::GuardExceeded {
            what: "tableau enumeration shape size",
            limit: guards.max_boxes as u128,
        });
    }
    let boxes: Vec<BoxCoord> = shape.boxes().collect();
    let index = |b: BoxCoord| boxes.iter().position(|&c| c == b);
    let left = boxes
        .iter()
        .map(|b| {
            (b.x > 1)
                .then(|| index(BoxCoord { x: b.x - 1, y: b.y }))
                .flatten()
        })
        .collect();
    let above = boxes
        .iter()
        .map(|b| {
            (b.y > 1)
                .then(|| index(BoxCoord { x: b.x, y: b.y - 1 }))
                .flatten()
        })
        .collect();
    // the longest strictly increasing path from a box forces room above it
    let cap = boxes
        .iter()
        .map(|b| {
            let reach = (b.y..=shape.num_rows())
                .filter(|&y| shape.row_len(y) >= b.x)
                .map(|y| shape.row_len(y) - b.x + y - b.y)
                .max()
                .unwrap_or(0);
            alphabet.saturating_sub(reach as u32)
        })
        .collect();
    let n = boxes.len();
    Ok(KUniformTableaux {
        alphabet,
        residue: boxes.iter().map(|b| b.residue(k)).collect(),
        boxes,
        left,
        above,
        cap,
        vals: vec![0; n],
        uses: vec![0; alphabet as usize + 1],
        class: vec![0; alphabet as usize + 1],
        pos: 0,
        started: false,
        done: false,
    })
}

impl KUniformTableaux {
    fn build(&self) -> Tableau {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (b, &v) in self.boxes.iter().zip(&self.vals) {
            if rows.len() < b.y {
                rows.push(Vec::new());
            }
            rows[b.y - 1].push(v);
        }
        Tableau::new(rows, self.alphabet).expect("enumeration keeps rows and columns increasing")
    }
}

impl Iterator for KUniformTableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.boxes.is_empty() {
                self.done = true;
                return Some(Tableau::empty(self.alphabet));
            }
        }
        loop {
            let i = self.pos;
            let cur = self.vals[i];
            if cur != 0 {
                self.uses[cur as usize] -= 1;
            }
            let floor = [self.left[i], self.above[i]]
                .into_iter()
                .flatten()
                .map(|j| self.vals[j])
                .max()
                .unwrap_or(0);
            let r = self.residue[i];
            let found = (cur.max(floor) + 1..=self.cap[i])
                .find(|&v| self.uses[v as usize] == 0 || self.class[v as usize] == r);
            match found {
                Some(v) => {
                    self.vals[i] = v;
                    self.uses[v as usize] += 1;
                    self.class[v as usize] = r;
                    if i + 1 == self.boxes.len() {
                        return Some(self.build());
                    }
                    self.pos += 1;
                    self.vals[self.pos] = 0;
                }
                None => {
                    self.vals[i] = 0;
                    if i == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(k: usize) -> Modulus {
        Modulus::new(k).unwrap()
    }

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn tab(text: &str, g: u32) -> Tableau {
        Tableau::from_text(&text.replace('/', "\n"), g).unwrap()
    }

    fn b(x: usize, y: usize) -> BoxCoord {
        BoxCoord { x, y }
    }

    /// Every filling of `shape` from `[g]`, strictly increasing or not.
    fn all_fillings(shape: &Partition, g: u32) -> Vec<Vec<Vec<u32>>> {
        let boxes: Vec<BoxCoord> = shape.boxes().collect();
        let mut out = Vec::new();
        let mut vals = vec![1u32; boxes.len()];
        loop {
            let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.num_rows()];
            for (c, &v) in boxes.iter().zip(&vals) {
                rows[c.y - 1].push(v);
            }
            out.push(rows);
            let mut i = 0;
            loop {
                if i == vals.len() {
                    return out;
                }
                if vals[i] < g {
                    vals[i] += 1;
                    break;
                }
                vals[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn validates_fillings() {
        assert!(Tableau::new(vec![vec![1, 1]], 3).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]], 3).is_err());
        assert!(Tableau::new(vec![vec![1, 4]], 3).is_err());
        assert!(Tableau::new(vec![vec![0]], 3).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]], 3).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![3]], 3).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let text = "1 3 4 5\n2 5\n3\n5\n";
        let t = Tableau::from_text(text, 5).unwrap();
        assert_eq!(t.to_text(), text);
        assert_eq!(t.shape(), &p(&[4, 2, 1, 1]));
        assert_eq!(Tableau::from_text("", 3).unwrap().to_text(), "");
        assert!(Tableau::from_text("1 x\n", 3).is_err());
    }

    #[test]
    fn uniformity_examples() {
        assert!(tab("1 3 4 5/2 5/3/5", 5).is_k_uniform(k(3)));
        assert!(tab("1 2 3/4 5", 5).is_k_uniform(k(2)));
        assert!(!tab("1 2/2 3", 3).is_k_uniform(k(3)));
    }

    #[test]
    fn transpose_preserves_uniformity() {
        let t = tab("1 3 4 5/2 5/3/5", 5);
        let tt = t.transpose();
        assert_eq!(tt.to_text(), "1 2 3 5\n3 5\n4\n5\n");
        assert!(tt.is_k_uniform(k(3)));
        assert_eq!(tt.transpose(), t);
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<Tableau> = enumerate_k_uniform(&p(&[4, 2, 1, 1]), k(3), 5)
            .unwrap()
            .collect();
        let full: Vec<&Tableau> = all.iter().filter(|t| t.num_symbols() == 5).collect();
        assert_eq!(full.len(), 2);

        let empty: Vec<Tableau> = enumerate_k_uniform(&Partition::empty(), k(3), 4)
            .unwrap()
            .collect();
        assert_eq!(empty, vec![Tableau::empty(4)]);

        let standard = enumerate_k_uniform(&p(&[2, 2]), k(2), 4)
            .unwrap()
            .filter(Tableau::is_standard)
            .count();
        assert_eq!(standard, 2);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (shape, kk, g) in [
            (p(&[2, 1]), 2, 4),
            (p(&[3, 1]), 3, 5),
            (p(&[2, 2]), 2, 4),
            (p(&[4, 2, 1, 1]), 3, 5),
            (p(&[3, 1, 1]), 3, 6),
            (p(&[2, 2, 1]), 4, 5),
        ] {
            let fast: Vec<Tableau> = enumerate_k_uniform(&shape, k(kk), g).unwrap().collect();
            let mut slow: Vec<Tableau> = all_fillings(&shape, g)
                .into_iter()
                .filter_map(|rows| Tableau::new(rows, g).ok())
                .filter(|t| t.is_k_uniform(k(kk)))
                .collect();
            slow.sort_by_key(|t| t.rows().concat());
            assert_eq!(fast, slow, "{shape} k={kk} g={g}");
        }
    }

    #[test]
    fn enumeration_guard() {
        let big = p(&[5, 5, 5, 2]);
        assert!(matches!(
            enumerate_k_uniform(&big, k(3), 20),
            Err(Error::GuardExceeded { .. })
        ));
        let guards = Guards {
            max_boxes: 17,
            ..Guards::default()
        };
        assert!(enumerate_k_uniform_with(&big, k(3), 20, &guards).is_ok());
    }

    #[test]
    fn saturate_restamps_corner_classes() {
        let t = tab("1 2 4 5/3 7/6/8", 8);
        let s = saturate(&t, k(3)).unwrap();
        assert_eq!(s, tab("1 2 4 8/4 8/6/8", 8));
        assert!(!t.is_k_saturated(k(3)));
        assert!(s.is_k_saturated(k(3)));
    }

    #[test]
    fn saturate_fixed_points() {
        let d = tab("1 3 4 5/2 5/3/5", 5);
        assert!(d.is_k_saturated(k(3)));
        assert_eq!(saturate(&d, k(3)).unwrap(), d);
        assert!(Tableau::empty(3).is_k_saturated(k(3)));
        assert_eq!(
            saturate(&Tableau::empty(3), k(3)).unwrap(),
            Tableau::empty(3)
        );
    }

    #[test]
    fn saturate_rejects_non_cores() {
        let t = tab("1 2/3 4/5", 5);
        assert!(matches!(saturate(&t, k(4)), Err(Error::NotACore(..))));
        // [2,1] is a 4-core; symbol 2 sits on residues 3 and 1
        let t = tab("1 2/2", 3);
        assert!(matches!(saturate(&t, k(4)), Err(Error::NotUniform(4))));
    }

    #[test]
    fn saturation_is_phi_of_its_chain() {
        let t = tab("1 2 4 5/3 7/6/8", 8);
        let s = saturation(&t, k(3)).unwrap();
        assert_eq!(s.symbols, vec![1, 2, 4, 6, 8]);
        assert_eq!(phi(&s.symbols, &s.chain, 8).unwrap(), s.tableau);
    }

    #[test]
    fn phi_examples() {
        // through [1,1], [2,1,1], [3,1,1]
        let chain = MaximalChain::new(k(3), vec![0, 1, 2, 1, 0]).unwrap();
        assert_eq!(
            phi(&[1, 2, 3, 4, 5], &chain, 5).unwrap(),
            tab("1 3 4 5/2 5/3/5", 5)
        );
        let relabeled = phi(&[2, 4, 6, 8, 10], &chain, 10).unwrap();
        assert_eq!(relabeled, tab("2 6 8 10/4 10/6/10", 10));
        assert!(relabeled.is_k_uniform(k(3)));

        let empty = MaximalChain::new(k(3), vec![]).unwrap();
        assert_eq!(phi(&[], &empty, 3).unwrap(), Tableau::empty(3));

        assert!(matches!(
            phi(&[1, 2], &chain, 5),
            Err(Error::SizeMismatch {
                expected: 5,
                found: 2
            })
        ));
        assert!(MaximalChain::new(k(3), vec![1]).is_err());
    }

    #[test]
    fn swap_examples() {
        let t = tab("5", 5);
        assert_eq!(swap(&t, 3, 5, &[b(1, 1)]).unwrap(), tab("3", 5));

        let t = tab("1 2 3 5/3 5/4/5", 6);
        let fives = t.boxes_of(5);
        let there = swap(&t, 6, 5, &fives).unwrap();
        assert_eq!(there, tab("1 2 3 6/3 6/4/6", 6));
        let back = swap(&there, 5, 6, &fives).unwrap();
        assert_eq!(back, t);

        // a proper subset adds a symbol
        let partial = swap(&t, 6, 5, &[b(4, 1)]).unwrap();
        assert_eq!(partial.num_symbols(), t.num_symbols() + 1);
        assert!(partial.is_k_uniform(k(3)));
    }

    #[test]
    fn swap_preconditions() {
        let t = tab("1 2 4/3 5", 6);
        // 4 is present
        assert!(swap(&t, 4, 5, &[b(2, 2)]).is_err());
        // 5, not 4, is the nearest present symbol below 6
        assert!(swap(&t, 6, 4, &[b(3, 1)]).is_err());
        assert!(swap(&t, 6, 5, &[b(2, 2)]).is_ok());
        // box does not hold b
        assert!(swap(&t, 6, 5, &[b(1, 1)]).is_err());
        assert!(swap(&t, 6, 5, &[]).is_err());
        assert!(swap(&t, 7, 5, &[b(2, 2)]).is_err());
    }

    #[test]
    fn cycle_out_examples() {
        let t = tab("1 2 3 5/3 5/4/5", 6);
        assert_eq!(cycle_out(&t, 5).unwrap(), tab("1 2 3 6/3 6/4/6", 6));

        let t = tab("2", 2);
        assert_eq!(cycle_out(&t, 2).unwrap(), tab("1", 2));

        // toward a smaller absent symbol, everything in between moves down
        let t = tab("2 3/4", 4);
        let c = cycle_out(&t, 4).unwrap();
        assert_eq!(c, tab("1 2/3", 4));
        assert!(!c.contains_symbol(4));

        let full = tab("1 2/3", 3);
        assert_eq!(cycle_out(&full, 2), Err(Error::NoAbsentSymbol(3)));
    }

    #[test]
    fn cycle_out_prefers_below_on_tie() {
        let t = tab("1 3/5", 5);
        // 2 and 4 are both one step from 3
        assert_eq!(cycle_out(&t, 3).unwrap(), tab("1 2/5", 5));
    }

    #[test]
    fn connect_sequence_between_saturated_tableaux() {
        let k3 = k(3);
        let t1 = tab("1 2 3 5/3 5/4/5", 6);
        let target = tab("1 3 4 5/2 5/3/5", 6);
        let t2 = cycle_out(&t1, 5).unwrap();
        assert_eq!(t2, tab("1 2 3 6/3 6/4/6", 6));
        // 5 goes wherever the target holds 4
        let t3 = restamp(&t2, 5, &target.boxes_of(4), k3).unwrap();
        assert_eq!(t3, tab("1 2 5 6/3 6/4/6", 6));
        let t4 = saturate(&t3, k3).unwrap();
        assert_eq!(t4, tab("1 4 5 6/3 6/4/6", 6));
        let t5 = cycle_out(&t4, 6).unwrap();
        assert_eq!(t5, target);
        for t in [&t1, &t2, &t3, &t4, &t5] {
            assert!(t.is_k_uniform(k3));
        }
        assert!(t5.is_k_saturated(k3));
    }

    #[test]
    fn restamp_rejects_broken_results() {
        let t = tab("1 2 3/4", 4);
        assert!(restamp(&t, 4, &[b(1, 1)], k(3)).is_err());
        assert!(restamp(&t, 2, &[b(3, 1)], k(3)).is_err());
        assert!(restamp(&t, 2, &[b(5, 1)], k(3)).is_err());
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(hook_length_count(2, 2), BigUint::from(2u32));
        for n in 0..8 {
            assert_eq!(hook_length_count(1, n), BigUint::one());
        }
        let catalan = [1u32, 1, 2, 5, 14, 42, 132];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(hook_length_count(2, n), BigUint::from(c));
        }
        assert_eq!(hook_length_count(3, 4), BigUint::from(462u32));
    }
}
