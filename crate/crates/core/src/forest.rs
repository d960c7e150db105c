//! Rooted-forest decomposition into merge (`←`) steps.
//!
//! `T1 ← T2` joins the root of `T1` to the root of `T2` and keeps the root of
//! `T1`. Every rooted tree arises from its singleton vertices by a sequence of
//! such merges; [`decompose_forest`] produces one such sequence per tree.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One `survivor ← absorbed` merge. Both are roots of their current trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeStep {
    pub survivor: usize,
    pub absorbed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: usize,
    /// Vertices of the tree, ascending.
    pub vertices: Vec<usize>,
    /// Merge steps in replay order.
    pub merges: Vec<MergeStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForestPlan {
    pub trees: Vec<RootedTree>,
}

impl RootedForestPlan {
    /// Replays every merge from singletons and returns the edges created, as
    /// `(min, max)` pairs sorted. Returns `None` if some step is not a merge
    /// of two distinct current roots, or a designated root is absorbed.
    pub fn replay(&self) -> Option<Vec<(usize, usize)>> {
        let size = self
            .trees
            .iter()
            .flat_map(|t| t.vertices.iter().copied())
            .max()
            .map_or(0, |m| m + 1);
        // current_root[v] is the root of the tree containing v
        let mut owner: Vec<Option<usize>> = vec![None; size];
        let mut is_root = vec![false; size];
        let mut absorbed = vec![false; size];
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); size];
        for tree in &self.trees {
            for &v in &tree.vertices {
                if owner[v].is_some() {
                    return None;
                }
                owner[v] = Some(v);
                is_root[v] = true;
                members[v].push(v);
            }
        }
        let mut edges = Vec::new();
        for tree in &self.trees {
            for step in &tree.merges {
                let (r1, r2) = (step.survivor, step.absorbed);
                if r1 >= size || r2 >= size || r1 == r2 || !is_root[r1] || !is_root[r2] || absorbed[r2] {
                    return None;
                }
                if r2 == tree.root {
                    return None;
                }
                absorbed[r2] = true;
                is_root[r2] = false;
                let moved = core::mem::take(&mut members[r2]);
                for &v in &moved {
                    owner[v] = Some(r1);
                }
                members[r1].extend(moved);
                edges.push((r1.min(r2), r1.max(r2)));
            }
            if !is_root[tree.root] || members[tree.root].len() != tree.vertices.len() {
                return None;
            }
        }
        edges.sort_unstable();
        Some(edges)
    }

    /// Parent of every planned vertex (`None` for roots), by replaying merges.
    pub fn parents(&self, n: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; n];
        for tree in &self.trees {
            for step in &tree.merges {
                parent[step.absorbed] = Some(step.survivor);
            }
        }
        parent
    }
}

/// Decomposes an acyclic graph. Each component is rooted at its lowest id;
/// children are absorbed in ascending id order after their own subtrees are
/// complete (depth-first).
pub fn decompose_forest(g: &Graph) -> Result<RootedForestPlan> {
    decompose_forest_within(g, &vec![true; g.n()])
}

/// As [`decompose_forest`], restricted to the subgraph induced by the
/// vertices with `active[v]`. Vertex ids are kept.
pub fn decompose_forest_within(g: &Graph, active: &[bool]) -> Result<RootedForestPlan> {
    let n = g.n();
    assert_eq!(active.len(), n, "activity mask length must equal n");
    let mut visited = vec![false; n];
    let mut trees = Vec::new();
    // explicit stack of (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, Option<usize>, usize)> = Vec::new();
    for root in 0..n {
        if !active[root] || visited[root] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut merges = Vec::new();
        visited[root] = true;
        stack.push((root, None, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            let nbrs = g.neighbors(v);
            if idx < nbrs.len() {
                top.2 += 1;
                let w = nbrs[idx];
                if !active[w] || Some(w) == parent {
                    continue;
                }
                if visited[w] {
                    return Err(Error::NotAForest { vertex: w });
                }
                visited[w] = true;
                stack.push((w, Some(v), 0));
            } else {
                stack.pop();
                vertices.push(v);
                if let Some(p) = parent {
                    merges.push(MergeStep { survivor: p, absorbed: v });
                }
            }
        }
        vertices.sort_unstable();
        trees.push(RootedTree { root, vertices, merges });
    }
    Ok(RootedForestPlan { trees })
}

/// Whether the subgraph induced by `active` has no cycle (union-find).
pub fn is_acyclic_within(g: &Graph, active: &[bool]) -> bool {
    let mut dsu = Dsu::new(g.n());
    g.edges()
        .filter(|&(u, v)| active[u] && active[v])
        .all(|(u, v)| dsu.union(u, v))
}

pub fn is_forest(g: &Graph) -> bool {
    is_acyclic_within(g, &vec![true; g.n()])
}

/// Whether deleting `removed` leaves a forest.
pub fn leaves_forest(g: &Graph, removed: &[usize]) -> bool {
    let mut active = vec![true; g.n()];
    for &v in removed {
        if v < g.n() {
            active[v] = false;
        }
    }
    is_acyclic_within(g, &active)
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
