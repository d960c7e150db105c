//! Witnesses and their feasibility check.

use alloc::vec;
use alloc::vec::Vec;

use crate::forest::leaves_forest;
use crate::graph::{Graph, ParameterKind, WitnessKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Sorted vertex ids.
    Vertices(Vec<usize>),
    /// `colors[v]` is the color of vertex `v`; colors start at 1.
    Coloring(Vec<usize>),
}

impl Witness {
    pub fn vertices(&self) -> Option<&[usize]> {
        match self {
            Witness::Vertices(v) => Some(v),
            Witness::Coloring(_) => None,
        }
    }

    pub fn coloring(&self) -> Option<&[usize]> {
        match self {
            Witness::Coloring(c) => Some(c),
            Witness::Vertices(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSetSolution {
    pub kind: ParameterKind,
    pub value: usize,
    pub witness: Witness,
    /// Set by the constructors from [`verify_witness`].
    pub certified: bool,
}

impl VertexSetSolution {
    pub fn new(g: &Graph, kind: ParameterKind, value: usize, witness: Witness) -> Self {
        let mut sol = VertexSetSolution { kind, value, witness, certified: false };
        sol.certified = verify_witness(g, &sol);
        sol
    }

    /// Vertex-set solution whose value is the witness size.
    pub fn from_vertices(g: &Graph, kind: ParameterKind, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        let value = vertices.len();
        Self::new(g, kind, value, Witness::Vertices(vertices))
    }

    /// Coloring solution whose value is the number of distinct colors.
    pub fn from_coloring(g: &Graph, colors: Vec<usize>) -> Self {
        let value = count_colors(&colors);
        Self::new(g, ParameterKind::ChromaticNumber, value, Witness::Coloring(colors))
    }
}

pub(crate) fn count_colors(colors: &[usize]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

/// Feasibility of the witness for its kind, plus size (or color count) equal
/// to the stated value. Never compares against the optimum.
pub fn verify_witness(g: &Graph, sol: &VertexSetSolution) -> bool {
    let n = g.n();
    match (&sol.witness, sol.kind.witness_kind()) {
        (Witness::Coloring(colors), WitnessKind::Coloring) => {
            colors.len() == n
                && g.edges().all(|(u, v)| colors[u] != colors[v])
                && count_colors(colors) == sol.value
        }
        (Witness::Vertices(set), WitnessKind::VertexSet) => {
            let mut inside = vec![false; n];
            for &v in set {
                if v >= n || inside[v] {
                    return false;
                }
                inside[v] = true;
            }
            set.len() == sol.value && feasible(g, sol.kind, set, &inside)
        }
        _ => false,
    }
}

fn feasible(g: &Graph, kind: ParameterKind, set: &[usize], inside: &[bool]) -> bool {
    let independent = || set.iter().all(|&v| g.neighbors(v).iter().all(|&w| !inside[w]));
    let dominating = || (0..g.n()).all(|v| inside[v] || g.neighbors(v).iter().any(|&w| inside[w]));
    match kind {
        ParameterKind::MaxIndependentSet => independent(),
        ParameterKind::MinVertexCover => g.edges().all(|(u, v)| inside[u] || inside[v]),
        ParameterKind::MaxClique => set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v))),
        ParameterKind::MinDominatingSet => dominating(),
        ParameterKind::MinIndependentDominatingSet => independent() && dominating(),
        ParameterKind::MinFeedbackVertexSet => leaves_forest(g, set),
        ParameterKind::ChromaticNumber => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn dominating_witnesses_on_c4() {
        let c4 = generators::cycle(4);
        let good = VertexSetSolution::new(&c4, ParameterKind::MinDominatingSet, 2, Witness::Vertices(vec![0, 2]));
        assert!(good.certified);
        let bad = VertexSetSolution::new(&c4, ParameterKind::MinDominatingSet, 1, Witness::Vertices(vec![0]));
        assert!(!bad.certified);
    }

    #[test]
    fn clique_coloring() {
        let k4 = generators::complete(4);
        let sol = VertexSetSolution::new(&k4, ParameterKind::ChromaticNumber, 4, Witness::Coloring(vec![1, 2, 3, 4]));
        assert!(sol.certified);
        let improper = VertexSetSolution::new(&k4, ParameterKind::ChromaticNumber, 3, Witness::Coloring(vec![1, 2, 3, 3]));
        assert!(!improper.certified);
    }

    #[test]
    fn size_mismatch_and_wrong_shape_fail() {
        let c4 = generators::cycle(4);
        let wrong_value = VertexSetSolution::new(&c4, ParameterKind::MaxIndependentSet, 1, Witness::Vertices(vec![0, 2]));
        assert!(!wrong_value.certified);
        let wrong_shape = VertexSetSolution::new(&c4, ParameterKind::MaxIndependentSet, 2, Witness::Coloring(vec![1, 2, 1, 2]));
        assert!(!wrong_shape.certified);
        let duplicate = VertexSetSolution::new(&c4, ParameterKind::MinVertexCover, 2, Witness::Vertices(vec![1, 1]));
        assert!(!duplicate.certified);
        let out_of_range = VertexSetSolution::new(&c4, ParameterKind::MinVertexCover, 1, Witness::Vertices(vec![9]));
        assert!(!out_of_range.certified);
    }

    #[test]
    fn each_kind_feasibility() {
        let c4 = generators::cycle(4);
        let check = |kind, set: &[usize]| VertexSetSolution::from_vertices(&c4, kind, set.to_vec()).certified;
        assert!(check(ParameterKind::MaxIndependentSet, &[1, 3]));
        assert!(!check(ParameterKind::MaxIndependentSet, &[0, 1]));
        assert!(check(ParameterKind::MinVertexCover, &[0, 2]));
        assert!(!check(ParameterKind::MinVertexCover, &[0, 1]));
        assert!(check(ParameterKind::MaxClique, &[0, 1]));
        assert!(!check(ParameterKind::MaxClique, &[0, 2]));
        assert!(check(ParameterKind::MinIndependentDominatingSet, &[0, 2]));
        assert!(!check(ParameterKind::MinIndependentDominatingSet, &[0, 1]));
        assert!(check(ParameterKind::MinFeedbackVertexSet, &[3]));
        assert!(!check(ParameterKind::MinFeedbackVertexSet, &[]));
    }
}
