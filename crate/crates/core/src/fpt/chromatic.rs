use alloc::vec;
use alloc::vec::Vec;

use super::Split;
use crate::error::{Error, Result};
use crate::forest::decompose_forest_within;
use crate::graph::Graph;
use crate::interrupt::{Interrupt, Poll};
use crate::solution::VertexSetSolution;

/// Rooted view of the forest `G − F*`: vertices listed parents-first.
struct ForestOrder {
    top_down: Vec<usize>,
    parent: Vec<Option<usize>>,
}

impl ForestOrder {
    fn new(g: &Graph, split: &Split) -> Result<Self> {
        let plan = decompose_forest_within(g, &split.in_forest)?;
        let parent = plan.parents(g.n());
        let mut children = vec![Vec::new(); g.n()];
        for tree in &plan.trees {
            for step in &tree.merges {
                children[step.survivor].push(step.absorbed);
            }
        }
        let mut top_down = Vec::new();
        for tree in &plan.trees {
            let start = top_down.len();
            top_down.push(tree.root);
            let mut i = start;
            while i < top_down.len() {
                let v = top_down[i];
                top_down.extend(children[v].iter().copied());
                i += 1;
            }
        }
        Ok(ForestOrder { top_down, parent })
    }
}

/// Chromatic number with a proper coloring. Since `χ(F*) ≤ χ(G) ≤ χ(F*) + 2`,
/// `k` runs from 1 to `ν + 2`; for each `k` every canonical `k`-coloring of
/// `G[F*]` is extended, if possible, by list-coloring the forest with
/// `L(v)` = colors absent from `N(v) ∩ F*`.
pub fn chromatic_fpt_nu(g: &Graph, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    let split = Split::new(g, stop)?;
    chromatic_with(g, &split, stop)
}

pub(crate) fn chromatic_with(g: &Graph, split: &Split, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    if g.n() == 0 {
        return Ok(VertexSetSolution::from_coloring(g, Vec::new()));
    }
    let order = ForestOrder::new(g, split)?;
    let mut poll = Poll::new(stop);
    for k in 1..=split.width() + 2 {
        let mut fcolors = vec![0usize; split.width()];
        if let Some(colors) = color_fstar(g, split, &order, k, 0, 0, &mut fcolors, &mut poll)? {
            return Ok(VertexSetSolution::from_coloring(g, colors));
        }
    }
    Err(Error::ContractViolation("no coloring with ν + 2 colors".into()))
}

/// Canonical colorings of `F*` position by position (each position uses at
/// most one color beyond those already used); extension is attempted at the
/// leaves of the enumeration.
#[allow(clippy::too_many_arguments)]
fn color_fstar(
    g: &Graph,
    split: &Split,
    order: &ForestOrder,
    k: usize,
    pos: usize,
    used: usize,
    fcolors: &mut Vec<usize>,
    poll: &mut Poll<'_>,
) -> Result<Option<Vec<usize>>> {
    poll.tick()?;
    if pos == split.width() {
        return Ok(extend_to_forest(g, split, order, k, fcolors));
    }
    let v = split.fstar[pos];
    for c in 1..=k.min(used + 1) {
        let clash = (0..pos).any(|j| fcolors[j] == c && g.has_edge(v, split.fstar[j]));
        if clash {
            continue;
        }
        fcolors[pos] = c;
        if let Some(found) = color_fstar(g, split, order, k, pos + 1, used.max(c), fcolors, poll)? {
            return Ok(Some(found));
        }
    }
    fcolors[pos] = 0;
    Ok(None)
}

/// Bottom-up: color `c` is feasible at `v` iff `c ∈ L(v)` and every child has
/// a feasible color other than `c`. Top-down: each vertex takes its lowest
/// feasible color different from its parent's.
fn extend_to_forest(g: &Graph, split: &Split, order: &ForestOrder, k: usize, fcolors: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let palette: u64 = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut feasible = vec![0u64; n];
    for &v in &order.top_down {
        let mut list = palette;
        for (pos, &w) in split.fstar.iter().enumerate() {
            if g.has_edge(v, w) {
                list &= !(1u64 << (fcolors[pos] - 1));
            }
        }
        feasible[v] = list;
    }
    for &v in order.top_down.iter().rev() {
        if let Some(p) = order.parent[v] {
            let allowed_at_parent = match feasible[v].count_ones() {
                0 => 0,
                1 => !feasible[v],
                _ => u64::MAX,
            };
            feasible[p] &= allowed_at_parent;
        }
    }
    let mut colors = vec![0usize; n];
    for (pos, &w) in split.fstar.iter().enumerate() {
        colors[w] = fcolors[pos];
    }
    for &v in &order.top_down {
        let mut options = feasible[v];
        if let Some(p) = order.parent[v] {
            options &= !(1u64 << (colors[p] - 1));
        }
        if options == 0 {
            return None;
        }
        colors[v] = options.trailing_zeros() as usize + 1;
    }
    Some(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::interrupt::Unlimited;

    fn chi(g: &Graph) -> VertexSetSolution {
        chromatic_fpt_nu(g, &Unlimited).unwrap()
    }

    #[test]
    fn cycles_and_petersen() {
        assert_eq!(chi(&generators::cycle(6)).value, 2);
        let c5 = chi(&generators::cycle(5));
        assert_eq!(c5.value, 3);
        assert!(c5.certified);
        assert_eq!(chi(&generators::petersen()).value, 3);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(chi(&Graph::empty(0)).value, 0);
        assert_eq!(chi(&Graph::empty(4)).value, 1);
        assert_eq!(chi(&generators::path(4)).value, 2);
        assert_eq!(chi(&generators::complete(5)).value, 5);
    }
}
