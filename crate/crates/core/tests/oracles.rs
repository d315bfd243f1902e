mod common;

use std::collections::BTreeSet;

use common::*;
use splitloci::{
    build_hasse, count_maximal_chains, enumerate_k_uniform, enumerate_k_uniform_with,
    enumerate_maximal_chains, hook_length_count, partitions_of, saturate, splitting_locus,
    torus_contains, torus_from_tableau, BoxCoord, CVector, ChainCount, ChainOfLoops, Partition,
    Tableau,
};

#[test]
fn core_test_matches_reachability() {
    for kk in 2..=6 {
        let k = k(kk);
        let reachable = reachable_cores(k, 12);
        let by_descent: BTreeSet<Partition> = cores(k, 12).into_iter().collect();
        assert_eq!(reachable, by_descent, "k = {kk}");
    }
}

/// Corners by scanning every cell of a bounding box.
#[test]
fn corners_match_cell_scan() {
    for n in 0..=10 {
        for p in partitions_of(n) {
            let (w, h) = (p.num_cols() + 1, p.num_rows() + 1);
            let cell = |x: usize, y: usize| x >= 1 && y >= 1 && p.contains(BoxCoord { x, y });
            let mut inside = Vec::new();
            let mut outside = Vec::new();
            for y in 1..=h {
                for x in 1..=w {
                    if cell(x, y) && !cell(x + 1, y) && !cell(x, y + 1) {
                        inside.push(BoxCoord { x, y });
                    }
                    if !cell(x, y) && (x == 1 || cell(x - 1, y)) && (y == 1 || cell(x, y - 1)) {
                        outside.push(BoxCoord { x, y });
                    }
                }
            }
            assert_eq!(p.inside_corners(), inside, "{p}");
            assert_eq!(p.outside_corners(), outside, "{p}");
        }
    }
}

/// Maximal chains by walking partitions down from the core itself.
fn chains_by_partitions(p: &Partition, k: splitloci::Modulus) -> u64 {
    if p.is_empty() {
        return 1;
    }
    let residues: BTreeSet<usize> = p.inside_corners().iter().map(|c| c.residue(k)).collect();
    residues
        .into_iter()
        .map(|a| chains_by_partitions(&p.downward_displacement(a, k).unwrap(), k))
        .sum()
}

#[test]
fn chain_counts_match_partition_walk() {
    for kk in 2..=5 {
        let k = k(kk);
        for p in cores(k, 12) {
            assert_eq!(
                count_maximal_chains(&p.c_vector(k)),
                ChainCount::from(chains_by_partitions(&p, k)),
                "{p}, k = {kk}"
            );
        }
    }
}

#[test]
fn enumeration_matches_recurrence() {
    for kk in 2..=6 {
        let k = k(kk);
        for p in cores(k, 12) {
            let c = p.c_vector(k);
            let alpha = count_maximal_chains(&c).to_u128().unwrap();
            if alpha > 10_000 {
                continue;
            }
            let chains: Vec<_> = enumerate_maximal_chains(&c).unwrap().collect();
            assert_eq!(chains.len() as u128, alpha, "{c}");
            let distinct: BTreeSet<Vec<usize>> =
                chains.iter().map(|ch| ch.residues().to_vec()).collect();
            assert_eq!(distinct.len(), chains.len());
            for ch in &chains {
                assert_eq!(ch.len(), c.rank());
                assert_eq!(ch.top().unwrap(), p);
            }
        }
    }
}

#[test]
fn hasse_counts_match_recurrence() {
    let roots = [
        vec![0, 0, 0, 5, 5, 2],
        vec![4, 1, 0],
        vec![3, 3, 0, 0],
        vec![4, 0, 5, 0, 6, 0],
    ];
    for r in roots {
        let c = CVector::new(r).unwrap();
        let h = build_hasse(&c).unwrap();
        for node in &h.nodes {
            assert_eq!(
                node.alpha,
                count_maximal_chains(&node.cvec),
                "{}",
                node.cvec
            );
            assert_eq!(node.rho, node.cvec.rank());
        }
        assert_eq!(h.root().cvec, c);
    }
}

#[test]
fn hook_lengths_match_standard_fillings() {
    for rows in 1..=3 {
        for cols in 1..=4 {
            let shape = Partition::new(vec![cols; rows]).unwrap();
            let n = (rows * cols) as u32;
            // k exceeds every diagonal difference, so uniformity only forbids repeats
            let standard = enumerate_k_uniform(&shape, k(rows + cols), n)
                .unwrap()
                .filter(Tableau::is_standard)
                .count();
            assert_eq!(
                hook_length_count(rows, cols),
                (standard as u64).into(),
                "{rows}x{cols}"
            );
        }
    }
}

#[test]
fn minimality_on_small_cores() {
    for kk in 2..=4 {
        let k = k(kk);
        for p in cores(k, 8) {
            let n = p.size() as u32;
            let fewest = enumerate_k_uniform(&p, k, n)
                .unwrap()
                .map(|t| t.num_symbols())
                .min()
                .unwrap();
            assert_eq!(fewest, p.rho(k), "{p}, k = {kk}");
        }
    }
}

#[test]
fn saturation_on_small_cores() {
    for kk in 2..=5 {
        let k = k(kk);
        for p in cores(k, 9) {
            let g = p.rho(k) as u32 + 2;
            for t in enumerate_k_uniform_with(&p, k, g, &roomy())
                .unwrap()
                .take(400)
            {
                let s = saturate(&t, k).unwrap();
                assert!(saturation_conditions(&t, &s, k), "{t}");
            }
        }
    }
}

#[test]
fn classification_at_desk_scale() {
    for kk in 2..=5 {
        for m in splitting_types(kk, -4, 0) {
            let n = m.magnitude();
            if n > 8 {
                continue;
            }
            let g = n as u32;
            let locus = splitting_locus(&m, &ChainOfLoops::new(g, m.k())).unwrap();
            let from_phi: BTreeSet<_> = locus.distinct_constraints().into_iter().cloned().collect();
            assert_eq!(from_phi, brute_force_maps(&m, g), "{m}");
            assert_eq!(
                ChainCount::from(from_phi.len() as u64),
                count_maximal_chains(&m.c_vector()),
                "{m}"
            );
        }
    }
}

#[test]
fn phi_is_injective_on_symbol_sets() {
    for m in oracle_grid() {
        let g = m.magnitude() as u32 + 1;
        let graph = ChainOfLoops::new(g, m.k());
        let locus = splitting_locus(&m, &graph).unwrap();
        let maps: BTreeSet<_> = locus.tori.iter().map(|t| &t.torus.constraints).collect();
        assert_eq!(maps.len(), locus.tori.len(), "{m}");
    }
}

#[test]
fn saturation_enlarges_tori() {
    for m in oracle_grid().into_iter().filter(|m| m.magnitude() <= 5) {
        let g = m.magnitude() as u32 + 1;
        let graph = ChainOfLoops::new(g, m.k());
        for t in all_uniform(&m, g) {
            let s = saturate(&t, m.k()).unwrap();
            let tt = torus_from_tableau(&t, &graph, &m).unwrap();
            let ts = torus_from_tableau(&s, &graph, &m).unwrap();
            assert_eq!(torus_contains(&ts, &tt), Ok(true), "{t}");
        }
    }
}

#[test]
fn dominance_gives_containment() {
    for kk in 2..=4 {
        let types = splitting_types(kk, -3, 1);
        for a in &types {
            for b in &types {
                if a == b || a.dominance_leq(b) != Ok(true) {
                    continue;
                }
                let g = a.magnitude() as u32;
                if g > 6 {
                    continue;
                }
                let graph = ChainOfLoops::new(g, a.k());
                let small = splitting_locus(a, &graph).unwrap();
                let big = splitting_locus(b, &graph).unwrap();
                for t in &small.tori {
                    assert!(
                        big.tori
                            .iter()
                            .any(|u| torus_contains(&u.torus, &t.torus) == Ok(true)),
                        "{a} <= {b}: {}",
                        t.tableau
                    );
                }
            }
        }
    }
}
