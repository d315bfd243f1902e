#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use splitloci::{
    enumerate_k_uniform_with, partitions_of, saturate, torus_from_tableau, ChainOfLoops, Guards,
    Modulus, Partition, SplittingType, Tableau,
};

pub fn k(k: usize) -> Modulus {
    Modulus::new(k).unwrap()
}

pub fn mu(v: &[i64]) -> SplittingType {
    SplittingType::new(v.to_vec()).unwrap()
}

/// Guards roomy enough for the test grids.
pub fn roomy() -> Guards {
    Guards {
        max_boxes: 64,
        ..Guards::default()
    }
}

/// Cores by definition: everything reachable from the empty partition by
/// upward displacements, up to `max_boxes` boxes.
pub fn reachable_cores(k: Modulus, max_boxes: usize) -> BTreeSet<Partition> {
    let mut seen = BTreeSet::from([Partition::empty()]);
    let mut queue = VecDeque::from([Partition::empty()]);
    while let Some(p) = queue.pop_front() {
        for a in 0..k.get() {
            let up = p.upward_displacement(a, k).unwrap();
            if up.size() <= max_boxes && seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
    }
    seen
}

/// Cores by the descent test, up to `max_boxes` boxes.
pub fn cores(k: Modulus, max_boxes: usize) -> Vec<Partition> {
    (0..=max_boxes)
        .flat_map(partitions_of)
        .filter(|p| p.is_k_core(k))
        .collect()
}

/// Weakly increasing sequences of length `k` with entries in `lo..=hi`.
pub fn splitting_types(k: usize, lo: i64, hi: i64) -> Vec<SplittingType> {
    fn go(k: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<SplittingType>) {
        if cur.len() == k {
            out.push(SplittingType::new(cur.clone()).unwrap());
            return;
        }
        let from = cur.last().copied().unwrap_or(lo);
        for v in from..=hi {
            cur.push(v);
            go(k, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// The oracle grid: `k <= 4`, entries in `[-4, 0]`, `|mu| <= 7`.
pub fn oracle_grid() -> Vec<SplittingType> {
    (2..=4)
        .flat_map(|k| splitting_types(k, -4, 0))
        .filter(|m| m.magnitude() <= 7)
        .collect()
}

/// Every k-uniform tableau on `λ(μ)` with alphabet `[g]`.
pub fn all_uniform(m: &SplittingType, g: u32) -> Vec<Tableau> {
    enumerate_k_uniform_with(&m.lambda(), m.k(), g, &roomy())
        .unwrap()
        .collect()
}

/// Constraint maps of the saturations of every k-uniform tableau.
pub fn brute_force_maps(m: &SplittingType, g: u32) -> BTreeSet<BTreeMap<u32, usize>> {
    let graph = ChainOfLoops::new(g, m.k());
    all_uniform(m, g)
        .iter()
        .map(|t| {
            let s = saturate(t, m.k()).unwrap();
            torus_from_tableau(&s, &graph, m).unwrap().constraints
        })
        .collect()
}

/// Conditions (1) and (2) for `s` as a saturation of `t`: every symbol of
/// `s` is a symbol of `t`, sitting on congruent diagonals in both.
pub fn saturation_conditions(t: &Tableau, s: &Tableau, k: Modulus) -> bool {
    let rt = t.symbol_residues(k).unwrap();
    let Some(rs) = s.symbol_residues(k) else {
        return false;
    };
    s.shape() == t.shape()
        && s.num_symbols() == t.shape().rho(k)
        && s.is_k_saturated(k)
        && rs.iter().all(|(v, r)| rt.get(v) == Some(r))
}
