use alloc::vec::Vec;

use super::Split;
use crate::error::Result;
use crate::graph::{Graph, ParameterKind};
use crate::interrupt::{Interrupt, Poll};
use crate::solution::VertexSetSolution;

/// Maximum clique. A clique meets the forest in at most two vertices, so for
/// every clique `C ⊆ F*` it suffices to try extending `C` by a forest edge
/// complete to `C`, else by a single forest vertex complete to `C`.
pub fn clique_fpt_nu(g: &Graph, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    let split = Split::new(g, stop)?;
    clique_with(g, &split, stop)
}

pub(crate) fn clique_with(g: &Graph, split: &Split, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
    let mut poll = Poll::new(stop);
    let mut best: Vec<usize> = Vec::new();
    for c in 0..=split.full() {
        poll.tick()?;
        if !split.clique(c) {
            continue;
        }
        let complete_to_c = |v: usize| split.in_forest[v] && split.fmask[v] & c == c;
        let mut extension: Vec<usize> = Vec::new();
        for v in (0..g.n()).filter(|&v| complete_to_c(v)) {
            poll.tick()?;
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| w > v && complete_to_c(w)) {
                extension = alloc::vec![v, w];
                break;
            }
            if extension.is_empty() {
                extension.push(v);
            }
        }
        let size = c.count_ones() as usize + extension.len();
        if size > best.len() {
            best = split.vertices_of(c).chain(extension).collect();
        }
    }
    Ok(VertexSetSolution::from_vertices(g, ParameterKind::MaxClique, best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::interrupt::Unlimited;

    fn omega(g: &Graph) -> VertexSetSolution {
        clique_fpt_nu(g, &Unlimited).unwrap()
    }

    #[test]
    fn forests() {
        assert_eq!(omega(&Graph::empty(0)).value, 0);
        assert_eq!(omega(&Graph::empty(3)).value, 1);
        assert_eq!(omega(&generators::path(5)).value, 2);
    }

    #[test]
    fn named_graphs() {
        let k4 = omega(&generators::complete(4));
        assert_eq!(k4.value, 4);
        assert!(k4.certified);
        assert_eq!(omega(&generators::petersen()).value, 2);
        assert_eq!(omega(&generators::cycle(3)).value, 3);
    }
}
