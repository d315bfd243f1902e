//! Tori in the Picard group of a k-gonal chain of loops, cut out by
//! tableaux, and the splitting type loci they assemble into.
//!
//! Only residues mod `k` of the loop coordinates are modelled; edge lengths
//! and metric positions never appear.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::modulus::Modulus;
use crate::poset::{count_maximal_chains, enumerate_maximal_chains_with, ChainCount};
use crate::splitting::SplittingType;
use crate::tableau::{phi, MaximalChain, Tableau};

/// A chain of `g` loops whose middle loops have torsion `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOfLoops {
    g: u32,
    k: Modulus,
}

impl ChainOfLoops {
    /// The usual regime is `k <= g`; smaller genera are accepted so that
    /// loci with `g < k` can still be assembled, and the profiles below are
    /// evaluated literally there.
    pub fn new(g: u32, k: Modulus) -> Self {
        ChainOfLoops { g, k }
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn modulus(&self) -> Modulus {
        self.k
    }

    /// `τ_j`: 0 when `j < k` or `j > g - k + 1`, else `k`.
    pub fn torsion(&self) -> Vec<u32> {
        let k = self.k.get() as i64;
        let last = self.g as i64 - k + 1;
        (1..=self.g as i64)
            .map(|j| if j < k || j > last { 0 } else { k as u32 })
            .collect()
    }

    /// The shifted coordinates of the `g^1_k`: 0 up to loop `g - k + 1`,
    /// then `k`.
    pub fn gonality_profile(&self) -> Vec<u32> {
        let k = self.k.get() as i64;
        let last = self.g as i64 - k + 1;
        (1..=self.g as i64)
            .map(|j| if j <= last { 0 } else { k as u32 })
            .collect()
    }
}

/// A coordinate subtorus of `Pic^d`: loop `j` is pinned to a residue for
/// every `j` in the domain of `constraints`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Torus {
    #[serde(skip)]
    pub genus: u32,
    #[serde(skip)]
    pub modulus: Modulus,
    #[serde(skip)]
    pub degree: i64,
    pub constraints: BTreeMap<u32, usize>,
}

impl Torus {
    pub fn dimension(&self) -> usize {
        self.genus as usize - self.constraints.len()
    }

    fn check_comparable(&self, other: &Torus) -> Result<()> {
        if self.genus != other.genus || self.degree != other.degree {
            return Err(Error::Precondition(format!(
                "tori live in different Picard groups: (g={}, d={}) vs (g={}, d={})",
                self.genus, self.degree, other.genus, other.degree
            )));
        }
        self.modulus.expect(other.modulus)
    }

    /// The union of both constraint maps when they agree on shared loops.
    pub fn merge(&self, other: &Torus) -> Option<BTreeMap<u32, usize>> {
        let mut merged = self.constraints.clone();
        for (&j, &r) in &other.constraints {
            if *merged.entry(j).or_insert(r) != r {
                return None;
            }
        }
        Some(merged)
    }

    /// Two tori of dimension `g - n` meet in codimension one exactly when
    /// their merged constraints are consistent and pin `n + 1` loops.
    pub fn meets_in_codimension_one(&self, other: &Torus) -> bool {
        self.constraints.len() == other.constraints.len()
            && self
                .merge(other)
                .is_some_and(|m| m.len() == self.constraints.len() + 1)
    }
}

/// The value `Z(x, y)` read off box `(x, y)` of a tableau on `λ(μ)`.
fn z_value(mu: &SplittingType, graph: &ChainOfLoops, x: usize, y: usize, symbol: u32) -> i64 {
    let diag = y as i64 - x as i64;
    let k = graph.k.get() as i64;
    if symbol as i64 <= graph.g as i64 - k + 1 {
        return diag;
    }
    let m = mu
        .window()
        .find(|&m| mu.x(m) >= x as u64)
        .expect("x lies within the staircase");
    diag + m * k
}

/// The torus of divisors `D` with `ξ_{t(x,y)}(D) = Z(x, y)` on every box.
pub fn torus_from_tableau(t: &Tableau, graph: &ChainOfLoops, mu: &SplittingType) -> Result<Torus> {
    let k = graph.k;
    k.expect(mu.k())?;
    let lam = mu.lambda();
    if t.shape() != &lam {
        return Err(Error::ShapeMismatch {
            expected: lam.to_string(),
            found: t.shape().to_string(),
        });
    }
    if t.alphabet() != graph.g {
        return Err(Error::Precondition(format!(
            "tableau alphabet [{}] differs from the genus {}",
            t.alphabet(),
            graph.g
        )));
    }
    let mut constraints = BTreeMap::new();
    for (b, s) in t.entries() {
        let r = k.reduce(z_value(mu, graph, b.x, b.y, s));
        if *constraints.entry(s).or_insert(r) != r {
            return Err(Error::NotUniform(k.get()));
        }
    }
    Ok(Torus {
        genus: graph.g,
        modulus: k,
        degree: mu.degree(graph.g),
        constraints,
    })
}

/// Whether `outer` contains `inner`: every loop pinned by `outer` is pinned
/// to the same residue by `inner`.
pub fn torus_contains(outer: &Torus, inner: &Torus) -> Result<bool> {
    outer.check_comparable(inner)?;
    Ok(outer
        .constraints
        .iter()
        .all(|(j, r)| inner.constraints.get(j) == Some(r)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocusTorus {
    pub tableau: Tableau,
    #[serde(flatten)]
    pub torus: Torus,
}

/// The tori of all k-saturated tableaux on `λ(μ)` with alphabet `[g]`.
#[derive(Debug, Clone)]
pub struct SplittingLocus {
    pub mu: SplittingType,
    pub graph: ChainOfLoops,
    pub tori: Vec<LocusTorus>,
}

/// The `n`-subsets of `1..=g` in colexicographic order, produced lazily.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    g: u32,
    current: Option<Vec<u32>>,
}

impl ColexSubsets {
    pub fn new(g: u32, n: usize) -> Self {
        ColexSubsets {
            g,
            current: (n as u64 <= g as u64).then(|| (1..=n as u32).collect()),
        }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut c = out.clone();
        let n = c.len();
        // bump the first entry that has room below its successor
        for i in 0..n {
            let ceiling = if i + 1 < n { c[i + 1] } else { self.g + 1 };
            if c[i] + 1 < ceiling {
                c[i] += 1;
                for (t, v) in c.iter_mut().take(i).enumerate() {
                    *v = t as u32 + 1;
                }
                self.current = Some(c);
                break;
            }
        }
        Some(out)
    }
}

pub fn colex_subsets(g: u32, n: usize) -> Vec<Vec<u32>> {
    ColexSubsets::new(g, n).collect()
}

fn binom_u128(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::from(0u32);
    }
    (0..r).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

pub fn splitting_locus(mu: &SplittingType, graph: &ChainOfLoops) -> Result<SplittingLocus> {
    splitting_locus_with(mu, graph, &Guards::default())
}

pub fn splitting_locus_with(
    mu: &SplittingType,
    graph: &ChainOfLoops,
    guards: &Guards,
) -> Result<SplittingLocus> {
    graph.k.expect(mu.k())?;
    let n = mu.magnitude();
    let g = graph.g;
    if (g as usize) < n {
        return Ok(SplittingLocus {
            mu: mu.clone(),
            graph: *graph,
            tori: Vec::new(),
        });
    }
    let c = mu.c_vector();
    let alpha = count_maximal_chains(&c);
    let total = binom_u128(g as u64, n as u64) * &alpha.0;
    if total > BigUint::from(guards.max_tori) {
        return Err(Error::GuardExceeded {
            what: "splitting locus size",
            limit: guards.max_tori,
        });
    }
    let chain_guard = Guards {
        max_chains: guards.max_tori,
        ..*guards
    };
    let chains: Vec<MaximalChain> = enumerate_maximal_chains_with(&c, &chain_guard)?.collect();
    let subsets = colex_subsets(g, n);
    let per_subset: Vec<Vec<LocusTorus>> = subsets
        .par_iter()
        .map(|symbols| {
            chains
                .iter()
                .map(|chain| {
                    let tableau = phi(symbols, chain, g)?;
                    let torus = torus_from_tableau(&tableau, graph, mu)?;
                    Ok(LocusTorus { tableau, torus })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SplittingLocus {
        mu: mu.clone(),
        graph: *graph,
        tori: per_subset.into_iter().flatten().collect(),
    })
}

/// The tori of the locus one at a time, in the same order as
/// [`splitting_locus`], without the cap on their total number. Only the
/// maximal chains are held in memory.
pub fn splitting_locus_stream(
    mu: &SplittingType,
    graph: &ChainOfLoops,
    guards: &Guards,
) -> Result<impl Iterator<Item = Result<LocusTorus>>> {
    graph.k.expect(mu.k())?;
    let chains: Vec<MaximalChain> =
        enumerate_maximal_chains_with(&mu.c_vector(), guards)?.collect();
    let (mu, graph) = (mu.clone(), *graph);
    let g = graph.g;
    Ok(
        ColexSubsets::new(g, mu.magnitude()).flat_map(move |symbols| {
            let (mu, chains) = (mu.clone(), chains.clone());
            (0..chains.len()).map(move |i| {
                let tableau = phi(&symbols, &chains[i], g)?;
                let torus = torus_from_tableau(&tableau, &graph, &mu)?;
                Ok(LocusTorus { tableau, torus })
            })
        }),
    )
}

impl SplittingLocus {
    pub fn is_empty(&self) -> bool {
        self.tori.is_empty()
    }

    /// `g - |μ|`, or `None` for an empty locus.
    pub fn dimension(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.graph.g as usize - self.mu.magnitude())
    }

    /// The distinct constraint maps, in order of first appearance.
    pub fn distinct_constraints(&self) -> Vec<&BTreeMap<u32, usize>> {
        let mut seen = BTreeSet::new();
        self.tori
            .iter()
            .map(|t| &t.torus.constraints)
            .filter(|c| seen.insert(*c))
            .collect()
    }

    /// The number of points of a zero-dimensional locus.
    pub fn cardinality(&self) -> Result<ChainCount> {
        let n = self.mu.magnitude();
        if self.graph.g as usize != n {
            return Err(Error::WrongRegime(format!(
                "cardinality needs g = |mu| = {n}, got g = {}",
                self.graph.g
            )));
        }
        Ok(ChainCount::from(self.distinct_constraints().len() as u64))
    }

    /// Whether the graph on tori, joined when they meet in codimension one,
    /// is connected.
    pub fn is_connected_in_codimension_one(&self) -> Result<bool> {
        let n = self.mu.magnitude();
        if self.graph.g as usize <= n {
            return Err(Error::WrongRegime(format!(
                "connectivity needs g > |mu| = {n}, got g = {}",
                self.graph.g
            )));
        }
        let maps = self.distinct_constraints();
        if maps.len() <= 1 {
            return Ok(true);
        }
        // Two maps meet in codimension one iff they agree after dropping one
        // loop from each, and the dropped loops differ.
        let mut uf = UnionFind::new(maps.len());
        // key: the map minus one loop; value: (dropped loop, map id)
        let mut buckets: HashMap<Constraints, Vec<(u32, usize)>> = HashMap::new();
        for (id, m) in maps.iter().enumerate() {
            for &drop in m.keys() {
                let key: Constraints = m
                    .iter()
                    .filter(|(j, _)| **j != drop)
                    .map(|(&j, &r)| (j, r))
                    .collect();
                buckets.entry(key).or_default().push((drop, id));
            }
        }
        for members in buckets.values() {
            let Some(&(first_drop, first)) = members.first() else {
                continue;
            };
            if let Some(&(_, other)) = members.iter().find(|(d, _)| *d != first_drop) {
                // everything in the bucket meets `first` or `other`
                uf.union(first, other);
                for &(d, id) in members {
                    uf.union(if d != first_drop { first } else { other }, id);
                }
            }
        }
        let root = uf.find(0);
        Ok((1..maps.len()).all(|i| uf.find(i) == root))
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            mu: &'a [i64],
            g: u32,
            k: usize,
            dimension: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            cardinality: Option<ChainCount>,
            tori: &'a [LocusTorus],
        }
        let doc = Doc {
            mu: self.mu.entries(),
            g: self.graph.g,
            k: self.graph.k.get(),
            dimension: self.dimension(),
            cardinality: self.cardinality().ok(),
            tori: &self.tori,
        };
        serde_json::to_string_pretty(&doc).expect("locus serializes")
    }
}

/// `g - |μ|`, or `None` for an empty locus.
pub fn locus_dimension(locus: &SplittingLocus) -> Option<usize> {
    locus.dimension()
}

pub fn locus_cardinality(locus: &SplittingLocus) -> Result<ChainCount> {
    locus.cardinality()
}

pub fn connectivity_check(locus: &SplittingLocus) -> Result<bool> {
    locus.is_connected_in_codimension_one()
}

type Constraints = Vec<(u32, usize)>;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
