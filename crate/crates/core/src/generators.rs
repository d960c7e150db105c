//! Named graphs and seeded random families.
//!
//! Random graphs draw from ChaCha8 seeded with [`rand_core::SeedableRng::seed_from_u64`],
//! so a `(n, p, seed)` triple yields the same edge set on every platform.
//! For `G(n, p)` the candidate pairs `(u, v)`, `u < v`, are visited in
//! lexicographic order and each draws one `u32`; the edge is present iff the
//! draw is below `⌊p · 2³²⌋` (all draws for `p = 1`).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("generator produced an invalid edge")
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).with_name(alloc::format!("K{n}"))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v))).with_name(alloc::format!("P{n}"))
}

/// The cycle `0-1-…-(n-1)-0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n))).with_name(alloc::format!("C{n}"))
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v))).with_name(alloc::format!("K1,{leaves}"))
}

/// Outer 5-cycle `0..5`, spokes from `v` to `v+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|v| (v, (v + 1) % 5));
    let spokes = (0..5).map(|v| (v, v + 5));
    let inner = (0..5).map(|v| (5 + v, 5 + (v + 2) % 5));
    build(10, outer.chain(spokes).chain(inner)).with_name("petersen")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).with_name(alloc::format!("K{a},{b}"))
}

/// Parameters of a seeded `G(n, p)` graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

impl RandomGraphSpec {
    pub fn new(n: usize, edge_probability: f64, seed: u64) -> Self {
        RandomGraphSpec { n, edge_probability, seed }
    }

    pub fn generate(&self) -> Graph {
        gnp(self.n, self.edge_probability, self.seed)
    }
}

fn threshold(p: f64) -> u64 {
    let p = if p.is_nan() { 0.0 } else { p.clamp(0.0, 1.0) };
    // exact for p = 1: 2^32 exceeds every u32 draw
    (p * 4_294_967_296.0) as u64
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cut = threshold(p);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u64::from(rng.next_u32()) < cut {
                edges.push((u, v));
            }
        }
    }
    build(n, edges).with_name(alloc::format!("gnp-{n}-{p}-{seed}"))
}

fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    (rng.next_u64() % bound as u64) as usize
}

/// A random recursive tree on `n` vertices (vertex `v > 0` hangs below a
/// uniform earlier vertex) plus `extra` distinct random non-edges. The feedback
/// vertex number is at most `extra`.
pub fn tree_plus_edges(n: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: BTreeSet<(usize, usize)> = (1..n).map(|v| (below(&mut rng, v), v)).collect();
    let max_edges = n * n.saturating_sub(1) / 2;
    let target = (edges.len() + extra).min(max_edges);
    while edges.len() < target {
        let a = below(&mut rng, n);
        let b = below(&mut rng, n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    build(n, edges).with_name(alloc::format!("tree-plus-{extra}-{n}-{seed}"))
}

/// A uniformly random assignment of colors `1..=k` to `n` vertices.
pub fn random_coloring(n: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| 1 + below(&mut rng, k)).collect()
}

/// A uniformly random subset of `0..n`, each vertex kept with probability 1/2.
pub fn random_subset(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).filter(|_| rng.next_u32() & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::is_forest;

    #[test]
    fn named_graphs() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(star(5).degree(0), 5);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
    }

    #[test]
    fn gnp_is_reproducible_and_extreme_probabilities_work() {
        assert_eq!(gnp(12, 0.5, 7), gnp(12, 0.5, 7));
        assert_ne!(gnp(12, 0.5, 7), gnp(12, 0.5, 8));
        assert_eq!(gnp(6, 1.0, 1), complete(6));
        assert_eq!(gnp(6, 0.0, 1).edge_count(), 0);
    }

    #[test]
    fn tree_plus_zero_edges_is_a_tree() {
        let g = tree_plus_edges(40, 0, 3);
        assert!(is_forest(&g));
        assert_eq!(g.edge_count(), 39);
        assert_eq!(tree_plus_edges(40, 6, 3).edge_count(), 45);
    }
}
