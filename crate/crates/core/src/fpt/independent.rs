use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::Split;
use crate::error::Result;
use crate::graph::{Graph, ParameterKind};
use crate::interrupt::{Interrupt, Poll};
use crate::solution::VertexSetSolution;

/// Maximum independent set: for every independent `S ⊆ F*`, add a maximum
/// independent set of the forest left after discarding `N(S) ∪ F*`.
pub fn independent_set_fpt_nu(g: &Graph, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    let split = Split::new(g, stop)?;
    independent_with(g, &split, stop)
}

/// Minimum vertex cover as the complement of [`independent_set_fpt_nu`]'s witness.
pub fn vertex_cover_fpt_nu(g: &Graph, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    let alpha = independent_set_fpt_nu(g, stop)?;
    let mut inside = vec![false; g.n()];
    for &v in alpha.witness.vertices().unwrap_or_default() {
        inside[v] = true;
    }
    let cover = (0..g.n()).filter(|&v| !inside[v]).collect();
    Ok(VertexSetSolution::from_vertices(g, ParameterKind::MinVertexCover, cover))
}

pub(crate) fn independent_with(g: &Graph, split: &Split, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    let mut poll = Poll::new(stop);
    let mut best: Option<Vec<usize>> = None;
    for s in 0..=split.full() {
        poll.tick()?;
        if !split.independent(s) {
            continue;
        }
        let available: Vec<bool> = (0..g.n()).map(|v| split.in_forest[v] && split.fmask[v] & s == 0).collect();
        let mut set: Vec<usize> = split.vertices_of(s).collect();
        set.extend(forest_mis(g, &available));
        if best.as_ref().is_none_or(|b| set.len() > b.len()) {
            best = Some(set);
        }
    }
    Ok(VertexSetSolution::from_vertices(g, ParameterKind::MaxIndependentSet, best.unwrap_or_default()))
}

/// Maximum independent set of the forest induced by `available`: repeatedly
/// take the lowest-id vertex of remaining degree at most one and discard its
/// neighbor. Taking a leaf is always safe in a forest.
pub(crate) fn forest_mis(g: &Graph, available: &[bool]) -> Vec<usize> {
    let n = g.n();
    let mut alive = available.to_vec();
    let mut degree: Vec<usize> =
        (0..n).map(|v| if alive[v] { g.neighbors(v).iter().filter(|&&w| alive[w]).count() } else { 0 }).collect();
    let mut low: BTreeSet<usize> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
    let mut chosen = Vec::new();
    while let Some(v) = low.pop_first() {
        if !alive[v] {
            continue;
        }
        chosen.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if !alive[w] {
                continue;
            }
            alive[w] = false;
            low.remove(&w);
            for &x in g.neighbors(w) {
                if alive[x] {
                    degree[x] -= 1;
                    if degree[x] <= 1 {
                        low.insert(x);
                    }
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::interrupt::Unlimited;

    #[test]
    fn examples() {
        assert_eq!(independent_set_fpt_nu(&generators::cycle(4), &Unlimited).unwrap().value, 2);
        assert_eq!(independent_set_fpt_nu(&generators::petersen(), &Unlimited).unwrap().value, 4);
        assert_eq!(independent_set_fpt_nu(&Graph::empty(6), &Unlimited).unwrap().value, 6);
    }

    #[test]
    fn vertex_cover_is_the_complement() {
        let g = generators::petersen();
        let alpha = independent_set_fpt_nu(&g, &Unlimited).unwrap();
        let tau = vertex_cover_fpt_nu(&g, &Unlimited).unwrap();
        assert!(tau.certified);
        assert_eq!(alpha.value + tau.value, g.n());
    }

    #[test]
    fn forest_mis_on_paths() {
        let g = generators::path(7);
        assert_eq!(forest_mis(&g, &[true; 7]), vec![0, 2, 4, 6]);
        let star = generators::star(4);
        assert_eq!(forest_mis(&star, &[true; 5]).len(), 4);
    }
}
