//! The graded poset of k-cores, seen through C-vectors.
//!
//! A cover move at residue `a` is legal when `c[a-1] < c[a]`; the number of
//! maximal chains below a vector satisfies `α(0) = 1` and
//! `α(c) = Σ_a α(c↓a)` over the legal moves. The recurrence commutes with
//! cyclic rotation, so the least rotation serves as the memo key.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::cvector::CVector;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::modulus::Modulus;
use crate::tableau::MaximalChain;

/// The number of maximal chains in an interval.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ChainCount(pub BigUint);

impl ChainCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }
}

impl From<u64> for ChainCount {
    fn from(v: u64) -> Self {
        ChainCount(BigUint::from(v))
    }
}

impl From<BigUint> for ChainCount {
    fn from(v: BigUint) -> Self {
        ChainCount(v)
    }
}

impl fmt::Display for ChainCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Serialized as a decimal string so that large counts survive JSON readers
/// limited to 64-bit or floating point numbers.
impl Serialize for ChainCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// A memoized chain counter that may be shared across threads.
#[derive(Debug, Default)]
pub struct ChainCounter {
    memo: RwLock<HashMap<CVector, BigUint>>,
}

impl ChainCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    fn lookup(&self, key: &CVector) -> Option<BigUint> {
        self.memo.read().expect("memo lock").get(key).cloned()
    }

    pub fn count(&self, c: &CVector) -> ChainCount {
        let root = c.canonical_rotation();
        if let Some(v) = self.lookup(&root) {
            return ChainCount(v);
        }
        // Post-order walk on an explicit stack, so deep ideals cannot
        // overflow the call stack.
        let mut stack = vec![root.clone()];
        let mut local: HashMap<CVector, BigUint> = HashMap::new();
        while let Some(v) = stack.last() {
            if local.contains_key(v) {
                stack.pop();
                continue;
            }
            if let Some(known) = self.lookup(v) {
                let v = stack.pop().expect("nonempty");
                local.insert(v, known);
                continue;
            }
            if v.is_zero() {
                let v = stack.pop().expect("nonempty");
                local.insert(v, BigUint::one());
                continue;
            }
            let children: Vec<CVector> = v
                .cover_moves()
                .into_iter()
                .map(|a| v.downward(a).expect("legal move").canonical_rotation())
                .collect();
            let missing: Vec<CVector> = children
                .iter()
                .filter(|c| !local.contains_key(*c))
                .cloned()
                .collect();
            if missing.is_empty() {
                let total = children
                    .iter()
                    .fold(BigUint::zero(), |acc, c| acc + &local[c]);
                let v = stack.pop().expect("nonempty");
                local.insert(v, total);
            } else {
                stack.extend(missing);
            }
        }
        let result = local[&root].clone();
        let mut memo = self.memo.write().expect("memo lock");
        for (key, val) in local {
            memo.entry(key).or_insert(val);
        }
        ChainCount(result)
    }
}

fn shared_counter() -> &'static ChainCounter {
    static COUNTER: OnceLock<ChainCounter> = OnceLock::new();
    COUNTER.get_or_init(ChainCounter::new)
}

/// `α(c)`, memoized in a process-wide table.
pub fn count_maximal_chains(c: &CVector) -> ChainCount {
    shared_counter().count(c)
}

/// Depth-first stream of the maximal chains below a C-vector, each given
/// bottom-up as the residues of its upward displacements.
#[derive(Debug)]
pub struct MaximalChains {
    k: Modulus,
    stack: Vec<Frame>,
    path: Vec<usize>,
}

#[derive(Debug)]
struct Frame {
    vec: CVector,
    moves: Vec<usize>,
    next: usize,
}

impl Frame {
    fn new(vec: CVector) -> Self {
        let moves = vec.cover_moves();
        Frame {
            vec,
            moves,
            next: 0,
        }
    }
}

pub fn enumerate_maximal_chains(c: &CVector) -> Result<MaximalChains> {
    enumerate_maximal_chains_with(c, &Guards::default())
}

pub fn enumerate_maximal_chains_with(c: &CVector, guards: &Guards) -> Result<MaximalChains> {
    let alpha = count_maximal_chains(c);
    if alpha.0 > BigUint::from(guards.max_chains) {
        return Err(Error::GuardExceeded {
            what: "maximal chain enumeration",
            limit: guards.max_chains,
        });
    }
    Ok(MaximalChains {
        k: c.modulus(),
        stack: vec![Frame::new(c.clone())],
        path: Vec::new(),
    })
}

impl MaximalChains {
    fn pop_frame(&mut self) {
        self.stack.pop();
        if !self.stack.is_empty() {
            self.path.pop();
        }
    }
}

impl Iterator for MaximalChains {
    type Item = MaximalChain;

    fn next(&mut self) -> Option<MaximalChain> {
        loop {
            let top = self.stack.last_mut()?;
            if top.vec.is_zero() {
                let mut residues = self.path.clone();
                residues.reverse();
                self.pop_frame();
                return Some(MaximalChain::from_residues_trusted(self.k, residues));
            }
            if top.next < top.moves.len() {
                let a = top.moves[top.next];
                top.next += 1;
                let child = top.vec.downward(a).expect("legal move");
                self.path.push(a);
                self.stack.push(Frame::new(child));
            } else {
                self.pop_frame();
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseNode {
    pub cvec: CVector,
    pub rho: usize,
    pub alpha: ChainCount,
}

/// A cover relation, pointing from the smaller vector to the larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub residue: usize,
}

/// The principal order ideal below a vector. Node 0 is the root; nodes are
/// numbered in breadth-first order with children visited by residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<HasseEdge>,
}

pub fn build_hasse(root: &CVector) -> Result<HasseDiagram> {
    build_hasse_with(root, &Guards::default())
}

pub fn build_hasse_with(root: &CVector, guards: &Guards) -> Result<HasseDiagram> {
    let mut index: HashMap<CVector, usize> = HashMap::new();
    let mut order: Vec<CVector> = vec![root.clone()];
    let mut edges = Vec::new();
    index.insert(root.clone(), 0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head].clone();
        for a in v.cover_moves() {
            let child = v.downward(a).expect("legal move");
            let id = match index.get(&child) {
                Some(&id) => id,
                None => {
                    if order.len() >= guards.max_nodes {
                        return Err(Error::GuardExceeded {
                            what: "Hasse diagram size",
                            limit: guards.max_nodes as u128,
                        });
                    }
                    index.insert(child.clone(), order.len());
                    order.push(child);
                    order.len() - 1
                }
            };
            edges.push(HasseEdge {
                from: id,
                to: head,
                residue: a,
            });
        }
        head += 1;
    }
    // Ranks drop by one along every edge, so breadth-first order lists every
    // child after its parents and a reverse sweep sees children first.
    let mut alpha = vec![BigUint::zero(); order.len()];
    for (i, v) in order.iter().enumerate().rev() {
        if v.is_zero() {
            alpha[i] = BigUint::one();
        }
    }
    for e in edges.iter().rev() {
        let child = alpha[e.from].clone();
        alpha[e.to] += child;
    }
    let nodes = order
        .into_iter()
        .zip(alpha)
        .map(|(cvec, a)| HasseNode {
            rho: cvec.rank(),
            cvec,
            alpha: ChainCount(a),
        })
        .collect();
    Ok(HasseDiagram { nodes, edges })
}

impl HasseDiagram {
    pub fn root(&self) -> &HasseNode {
        &self.nodes[0]
    }

    pub fn find(&self, c: &CVector) -> Option<&HasseNode> {
        self.nodes.iter().find(|n| &n.cvec == c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }

    /// Graphviz source, drawn with the root on top.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\\n{}\"];\n", n.cvec, n.alpha));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"];\n",
                e.from, e.to, e.residue
            ));
        }
        s.push_str("}\n");
        s
    }
}
