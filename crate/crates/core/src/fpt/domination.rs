//! Domination and independent domination by dynamic programming over the
//! forest `G − F*`, for each fixed restriction `D = DS ∩ F*` of the solution.
//!
//! For a rooted subtree `T` (root `v`), a set `S ⊆ F*` and a state `d`,
//! `A(T, S, d)` is the minimum size of `D' ⊆ V(T)` with `N[D ∪ D'] ∩ F* = S`
//! and:
//! - `d = 0`: `v ∈ D'` and `D ∪ D'` dominates `T`;
//! - `d = 1`: `v ∉ D'` and `D ∪ D'` dominates `T`;
//! - `d = 2`: `D ∪ D'` dominates `T − v` but not `v`.
//!
//! Singletons are filled directly and `T1 ← T2` is combined from the tables
//! of `T1` and `T2` with a minimum over all `S1 ∪ S2 = S`. The trees
//! `T_1 … T_k` are then chained by `B(i, S)`, and the best dominating set
//! meeting `F*` in exactly `D` has size `|D| + B(k, F*)`. The independent
//! variant only admits independent `D`, forbids a singleton `D' = {v}` next to
//! `D`, and never takes both endpoints of a merge edge.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Add;

use super::Split;
use crate::error::{Error, Result};
use crate::forest::decompose_forest_within;
use crate::graph::{Graph, ParameterKind};
use crate::interrupt::{Interrupt, Poll};
use crate::solution::VertexSetSolution;

/// A natural number or `∞`; addition saturates and `∞` is the largest value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u32),
    Infinite,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Finite(x) => Some(x),
            ExtNat::Infinite => None,
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => a.checked_add(b).map_or(ExtNat::Infinite, ExtNat::Finite),
            _ => ExtNat::Infinite,
        }
    }
}

const INF: ExtNat = ExtNat::Infinite;

/// `(d, d1, d2)`: state `d` of `T1 ← T2` from state `d1` of `T1` and `d2` of `T2`.
const MERGES_DOMINATING: [(usize, usize, usize); 6] = [(0, 0, 0), (0, 0, 1), (0, 0, 2), (1, 1, 0), (1, 1, 1), (1, 2, 0)];
const MERGES_INDEPENDENT: [(usize, usize, usize); 5] = [(0, 0, 1), (0, 0, 2), (1, 1, 0), (1, 1, 1), (1, 2, 0)];
const MERGE_UNDOMINATED: (usize, usize, usize) = (2, 2, 1);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Choice {
    left_s: u32,
    left_d: u8,
    right_s: u32,
    right_d: u8,
}

#[derive(Debug, Clone)]
enum Origin {
    Leaf,
    Merge { left: usize, right: usize, choices: Vec<[Option<Choice>; 3]> },
}

/// The `A` table of one subtree occurring in the decomposition.
#[derive(Debug, Clone)]
pub struct SubtreeEntry {
    pub root: usize,
    /// Vertices of the subtree, ascending.
    pub vertices: Vec<usize>,
    /// `values[S][d] = A(T, S, d)`, `S` a mask over positions in `F*`.
    pub values: Vec<[ExtNat; 3]>,
    origin: Origin,
}

/// All `A` and `B` entries for one choice of `D`.
#[derive(Debug, Clone)]
pub struct DominationDpTable {
    /// `F*`, ascending; bit `j` of every mask stands for `fstar[j]`.
    pub fstar: Vec<usize>,
    /// `D` as a mask over `fstar`.
    pub d_choice: u32,
    pub independent: bool,
    /// Every subtree table, leaves and merges, in creation order.
    pub nodes: Vec<SubtreeEntry>,
    /// Node index of each complete tree `T_1 … T_k`.
    pub trees: Vec<usize>,
    /// `b[i][S] = B(i, S)` for `i = 0..=k`.
    b: Vec<Vec<ExtNat>>,
    b_choices: Vec<Vec<Option<(u32, u32, u8)>>>,
}

impl DominationDpTable {
    /// Fills the tables for `D = d_choice ⊆ F*`. `fstar` must be a feedback
    /// vertex set of `g`; in the independent variant `D` must be independent.
    pub fn build(
        g: &Graph,
        fstar: &[usize],
        d_choice: u32,
        independent: bool,
        stop: &dyn Interrupt,
    ) -> Result<Self> {
        let mut sorted = fstar.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        g.check_vertices(&sorted)?;
        let split = Split::with_fstar(g, sorted)?;
        Self::build_with(g, &split, d_choice, independent, &mut Poll::new(stop))
    }

    fn build_with(g: &Graph, split: &Split, d_choice: u32, independent: bool, poll: &mut Poll<'_>) -> Result<Self> {
        if d_choice & !split.full() != 0 {
            return Err(Error::Precondition("D must be a subset of F*"));
        }
        if independent && !split.independent(d_choice) {
            return Err(Error::Precondition("D must be independent"));
        }
        let plan = decompose_forest_within(g, &split.in_forest)?;
        let width = split.width();
        let rows = 1usize << width;
        let closed_d = (0..width)
            .filter(|&j| d_choice >> j & 1 == 1)
            .fold(0u32, |acc, j| acc | split.closed_in_fstar(j));

        // trees of the forest must not touch each other
        let mut tree_of = vec![usize::MAX; g.n()];
        for (t, tree) in plan.trees.iter().enumerate() {
            for &v in &tree.vertices {
                tree_of[v] = t;
            }
        }
        if let Some((u, v)) = g
            .edges()
            .find(|&(u, v)| split.in_forest[u] && split.in_forest[v] && tree_of[u] != tree_of[v])
        {
            return Err(Error::ContractViolation(alloc::format!("forest edge {u}-{v} joins two trees")));
        }

        let mut nodes: Vec<SubtreeEntry> = Vec::new();
        let mut current = vec![usize::MAX; g.n()];
        let mut trees = Vec::with_capacity(plan.trees.len());
        for tree in &plan.trees {
            for &v in &tree.vertices {
                poll.tick()?;
                let near_d = split.fmask[v] & d_choice != 0;
                let mut values = vec![[INF; 3]; rows];
                if !(independent && near_d) {
                    values[(closed_d | split.fmask[v]) as usize][0] = ExtNat::Finite(1);
                }
                values[closed_d as usize][if near_d { 1 } else { 2 }] = ExtNat::ZERO;
                current[v] = nodes.len();
                nodes.push(SubtreeEntry { root: v, vertices: vec![v], values, origin: Origin::Leaf });
            }
            for step in &tree.merges {
                let (left, right) = (current[step.survivor], current[step.absorbed]);
                let merged = merge(&nodes[left], &nodes[right], left, right, independent, rows, poll)?;
                current[step.survivor] = nodes.len();
                nodes.push(merged);
            }
            trees.push(current[tree.root]);
        }

        let mut b = vec![vec![INF; rows]];
        b[0][closed_d as usize] = ExtNat::ZERO;
        let mut b_choices = vec![vec![None; rows]];
        for &node in &trees {
            let prev = b.last().expect("B(0, ·) exists");
            let mut next = vec![INF; rows];
            let mut choice = vec![None; rows];
            let entry = &nodes[node];
            for s1 in (0..rows).filter(|&s| prev[s].is_finite()) {
                for (s2, row) in entry.values.iter().enumerate() {
                    poll.tick()?;
                    for (d, &cell) in row.iter().enumerate().take(2) {
                        let value = prev[s1] + cell;
                        let s = s1 | s2;
                        if value < next[s] {
                            next[s] = value;
                            choice[s] = Some((s1 as u32, s2 as u32, d as u8));
                        }
                    }
                }
            }
            b.push(next);
            b_choices.push(choice);
        }

        Ok(DominationDpTable {
            fstar: split.fstar.clone(),
            d_choice,
            independent,
            nodes,
            trees,
            b,
            b_choices,
        })
    }

    pub fn a(&self, node: usize, s: u32, d: usize) -> ExtNat {
        self.nodes[node].values[s as usize][d]
    }

    pub fn b(&self, i: usize, s: u32) -> ExtNat {
        self.b[i][s as usize]
    }

    /// `|D| + B(k, F*)`: the smallest (independent) dominating set meeting `F*` in `D`.
    pub fn best(&self) -> ExtNat {
        let full = ((1u64 << self.fstar.len()) - 1) as usize;
        ExtNat::Finite(self.d_choice.count_ones()) + self.b[self.trees.len()][full]
    }

    /// `D ∪ D'` for an optimal `D'`, ascending; `None` when [`Self::best`] is `∞`.
    pub fn reconstruct(&self) -> Option<Vec<usize>> {
        if !self.best().is_finite() {
            return None;
        }
        let mut chosen: Vec<usize> = (0..self.fstar.len())
            .filter(|&j| self.d_choice >> j & 1 == 1)
            .map(|j| self.fstar[j])
            .collect();
        let mut s = ((1u64 << self.fstar.len()) - 1) as u32;
        let mut pending = Vec::new();
        for i in (1..=self.trees.len()).rev() {
            let (s1, s2, d) = self.b_choices[i][s as usize]?;
            pending.push((self.trees[i - 1], s2, d as usize));
            s = s1;
        }
        while let Some((node, s, d)) = pending.pop() {
            let entry = &self.nodes[node];
            match &entry.origin {
                Origin::Leaf => {
                    if d == 0 {
                        chosen.push(entry.root);
                    }
                }
                Origin::Merge { left, right, choices } => {
                    let c = choices[s as usize][d]?;
                    pending.push((*left, c.left_s, c.left_d as usize));
                    pending.push((*right, c.right_s, c.right_d as usize));
                }
            }
        }
        chosen.sort_unstable();
        Some(chosen)
    }
}

fn merge(
    left: &SubtreeEntry,
    right: &SubtreeEntry,
    left_id: usize,
    right_id: usize,
    independent: bool,
    rows: usize,
    poll: &mut Poll<'_>,
) -> Result<SubtreeEntry> {
    let rules: &[(usize, usize, usize)] = if independent { &MERGES_INDEPENDENT } else { &MERGES_DOMINATING };
    let mut values = vec![[INF; 3]; rows];
    let mut choices = vec![[None; 3]; rows];
    let finite_rows = |e: &SubtreeEntry| -> Vec<usize> {
        (0..rows).filter(|&s| e.values[s].iter().any(|x| x.is_finite())).collect()
    };
    let right_rows = finite_rows(right);
    for s1 in finite_rows(left) {
        for &s2 in &right_rows {
            poll.tick()?;
            let s = s1 | s2;
            for &(d, d1, d2) in rules.iter().chain(core::iter::once(&MERGE_UNDOMINATED)) {
                let value = left.values[s1][d1] + right.values[s2][d2];
                if value < values[s][d] {
                    values[s][d] = value;
                    choices[s][d] = Some(Choice {
                        left_s: s1 as u32,
                        left_d: d1 as u8,
                        right_s: s2 as u32,
                        right_d: d2 as u8,
                    });
                }
            }
        }
    }
    let mut vertices = left.vertices.clone();
    vertices.extend_from_slice(&right.vertices);
    vertices.sort_unstable();
    Ok(SubtreeEntry {
        root: left.root,
        vertices,
        values,
        origin: Origin::Merge { left: left_id, right: right_id, choices },
    })
}

fn solve(g: &Graph, independent: bool, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    let split = Split::new(g, stop)?;
    let mut poll = Poll::new(stop);
    let mut best: Option<DominationDpTable> = None;
    for d in 0..=split.full() {
        if independent && !split.independent(d) {
            continue;
        }
        poll.check()?;
        let table = DominationDpTable::build_with(g, &split, d, independent, &mut poll)?;
        if best.as_ref().is_none_or(|b| table.best() < b.best()) {
            best = Some(table);
        }
    }
    let kind = if independent { ParameterKind::MinIndependentDominatingSet } else { ParameterKind::MinDominatingSet };
    let witness = best
        .and_then(|t| t.reconstruct())
        .ok_or_else(|| Error::ContractViolation("no finite dominating table".into()))?;
    Ok(VertexSetSolution::from_vertices(g, kind, witness))
}

/// Minimum dominating set, by branching over `D ⊆ F*`.
pub fn dominating_fpt_nu(g: &Graph, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    solve(g, false, stop)
}

/// Minimum independent dominating set, by branching over independent `D ⊆ F*`.
pub fn inddom_fpt_nu(g: &Graph, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    solve(g, true, stop)
}
