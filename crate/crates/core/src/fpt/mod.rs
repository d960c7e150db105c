//! Algorithms parameterized by the feedback vertex number `ν`.
//!
//! Each solver computes a minimum feedback vertex set `F*` with
//! [`crate::fvs::min_fvs`], enumerates subsets of `F*` as bitmasks over its
//! ascending vertex list, and handles the forest `G − F*` in polynomial time.
//! Since `τ ≥ ν`, every solver here is also FPT in the vertex cover number.

mod chromatic;
mod clique;
mod domination;
mod independent;

pub use chromatic::chromatic_fpt_nu;
pub use clique::clique_fpt_nu;
pub use domination::{dominating_fpt_nu, inddom_fpt_nu, DominationDpTable, ExtNat, SubtreeEntry};
pub use independent::{independent_set_fpt_nu, vertex_cover_fpt_nu};

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fvs::min_fvs;
use crate::graph::Graph;
use crate::interrupt::Interrupt;

/// Subset masks over `F*` are `u32`.
pub const MAX_FVS: usize = 31;

/// `G` split into `F*` and the forest `G − F*`.
#[derive(Debug, Clone)]
pub(crate) struct Split {
    /// `F*`, ascending.
    pub fstar: Vec<usize>,
    /// `in_forest[v]` iff `v ∉ F*`.
    pub in_forest: Vec<bool>,
    /// `N(v) ∩ F*` as a mask over positions in `fstar`, for every vertex.
    pub fmask: Vec<u32>,
}

impl Split {
    pub(crate) fn new(g: &Graph, stop: &dyn Interrupt) -> Result<Self> {
        let fvs = min_fvs(g, stop)?;
        Self::with_fstar(g, fvs.fvs)
    }

    pub(crate) fn with_fstar(g: &Graph, fstar: Vec<usize>) -> Result<Self> {
        if fstar.len() > MAX_FVS {
            return Err(Error::ParameterTooLarge { parameter: fstar.len(), limit: MAX_FVS });
        }
        let mut in_forest = vec![true; g.n()];
        let mut position = vec![usize::MAX; g.n()];
        for (i, &v) in fstar.iter().enumerate() {
            in_forest[v] = false;
            position[v] = i;
        }
        let fmask = (0..g.n())
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| !in_forest[w])
                    .fold(0u32, |m, &w| m | 1 << position[w])
            })
            .collect();
        Ok(Split { fstar, in_forest, fmask })
    }

    pub(crate) fn width(&self) -> usize {
        self.fstar.len()
    }

    pub(crate) fn full(&self) -> u32 {
        ((1u64 << self.width()) - 1) as u32
    }

    /// `N[v] ∩ F*` for `v = fstar[i]`, as a mask.
    pub(crate) fn closed_in_fstar(&self, i: usize) -> u32 {
        self.fmask[self.fstar[i]] | 1 << i
    }

    pub(crate) fn vertices_of(&self, mask: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.width()).filter(move |&i| mask >> i & 1 == 1).map(|i| self.fstar[i])
    }

    /// Whether `mask` is an independent set of `G[F*]`.
    pub(crate) fn independent(&self, mask: u32) -> bool {
        (0..self.width()).all(|i| mask >> i & 1 == 0 || self.fmask[self.fstar[i]] & mask == 0)
    }

    /// Whether `mask` is a clique of `G[F*]`.
    pub(crate) fn clique(&self, mask: u32) -> bool {
        (0..self.width()).all(|i| mask >> i & 1 == 0 || (self.fmask[self.fstar[i]] | 1 << i) & mask == mask)
    }
}
