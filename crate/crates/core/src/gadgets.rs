//! Graph constructions with proved parameter identities, and a harness that
//! measures both sides of every identity with the exact solver.
//!
//! Product and blowup gadgets number the copy `i` of vertex `v` as `i·n + v`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::graph::{Graph, ParameterKind};
use crate::interrupt::Interrupt;

fn non_empty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(Error::Precondition("gadget needs a non-empty graph"))
    } else {
        Ok(())
    }
}

/// `G̃`: `g` plus a new vertex `n` adjacent to every vertex.
pub fn add_dominating_vertex(g: &Graph) -> Result<Graph> {
    non_empty(g)?;
    let n = g.n();
    Graph::new(n + 1, g.edges().chain((0..n).map(|v| (v, n))))
}

/// Two copies `G_0` (ids `0..n`) and `G_1` (ids `n..2n`), an apex `u = 2n`
/// over `G_0`, an apex `v = 2n + 1` over `G_1`, and the edge `uv`.
pub fn double_copy_gadget(g: &Graph) -> Result<Graph> {
    non_empty(g)?;
    let n = g.n();
    let (u, v) = (2 * n, 2 * n + 1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (a, b) in g.edges() {
        edges.push((a, b));
        edges.push((n + a, n + b));
    }
    for x in 0..n {
        edges.push((u, x));
        edges.push((v, n + x));
    }
    edges.push((u, v));
    Graph::new(2 * n + 2, edges)
}

/// `G_{V′}`: a new pendant vertex `n + j` attached to the `j`-th vertex of
/// `vprime` (in the order given), so the new vertices form a stable set
/// perfectly matched to `V′`.
pub fn pendant_matching(g: &Graph, vprime: &[usize]) -> Result<Graph> {
    g.check_vertices(vprime)?;
    let mut seen = vec![false; g.n()];
    for &v in vprime {
        if core::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition("pendant vertices must be attached to distinct vertices"));
        }
    }
    let n = g.n();
    let pendants = vprime.iter().enumerate().map(|(j, &v)| (v, n + j));
    Graph::new(n + vprime.len(), g.edges().chain(pendants))
}

/// `G′` on `V × {0, 1}`: every vertex becomes an adjacent pair, and both
/// copies of `u` are adjacent to both copies of `v` whenever `uv ∈ E`.
pub fn edge_product(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, n + v)).collect();
    for (u, v) in g.edges() {
        for i in 0..2 {
            for j in 0..2 {
                edges.push((i * n + u, j * n + v));
            }
        }
    }
    Graph::new(2 * n, edges).expect("product edges are in range and loop-free")
}

/// `G_k`: `k` copies of `V`, each a clique, with `(u,i) ~ (v,j)` for `i ≠ j`
/// whenever `v ∈ N[u]`.
pub fn clique_blowup(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::Precondition("blowup factor must satisfy 1 <= k <= n"));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for u in 0..n {
            for v in u + 1..n {
                edges.push((i * n + u, i * n + v));
            }
            for j in i + 1..k {
                edges.push((i * n + u, j * n + u));
                for &v in g.neighbors(u) {
                    edges.push((i * n + u, j * n + v));
                }
            }
        }
    }
    Graph::new(k * n, edges)
}

/// Deletes every edge whose endpoints share a color. Colors run over `1..=k`.
pub fn prune_monochromatic_edges(g: &Graph, coloring: &[usize], k: usize) -> Result<Graph> {
    if coloring.len() != g.n() {
        return Err(Error::Precondition("coloring must assign every vertex"));
    }
    if coloring.iter().any(|&c| c == 0 || c > k) {
        return Err(Error::Precondition("colors must lie in 1..=k"));
    }
    Graph::new(g.n(), g.edges().filter(|&(u, v)| coloring[u] != coloring[v]))
}

/// A gadget together with its extra arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gadget {
    AddDominatingVertex,
    DoubleCopy,
    PendantMatching { vprime: Vec<usize> },
    EdgeProduct,
    /// `None` picks `k = i(g)`.
    CliqueBlowup { k: Option<usize> },
    PruneMonochromatic { coloring: Vec<usize>, k: usize },
}

impl Gadget {
    pub const NAMES: [&'static str; 6] = [
        "add-dominating-vertex",
        "double-copy",
        "pendant-matching",
        "edge-product",
        "clique-blowup",
        "prune-monochromatic",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Gadget::AddDominatingVertex => Self::NAMES[0],
            Gadget::DoubleCopy => Self::NAMES[1],
            Gadget::PendantMatching { .. } => Self::NAMES[2],
            Gadget::EdgeProduct => Self::NAMES[3],
            Gadget::CliqueBlowup { .. } => Self::NAMES[4],
            Gadget::PruneMonochromatic { .. } => Self::NAMES[5],
        }
    }

    /// Builds the output graph. `CliqueBlowup { k: None }` needs `i(g)` and so
    /// runs the exact solver.
    pub fn build(&self, g: &Graph, stop: &dyn Interrupt) -> Result<Graph> {
        match self {
            Gadget::AddDominatingVertex => add_dominating_vertex(g),
            Gadget::DoubleCopy => double_copy_gadget(g),
            Gadget::PendantMatching { vprime } => pendant_matching(g, vprime),
            Gadget::EdgeProduct => Ok(edge_product(g)),
            Gadget::CliqueBlowup { k } => clique_blowup(g, self.blowup_factor(g, *k, stop)?),
            Gadget::PruneMonochromatic { coloring, k } => prune_monochromatic_edges(g, coloring, *k),
        }
    }

    fn blowup_factor(&self, g: &Graph, k: Option<usize>, stop: &dyn Interrupt) -> Result<usize> {
        match k {
            Some(k) => Ok(k),
            None => solver().value(g, ParameterKind::MinIndependentDominatingSet, stop).map(|i| i.max(1)),
        }
    }
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Eq,
    Le,
    Ge,
}

impl Comparison {
    fn holds(self, lhs: usize, rhs: usize) -> bool {
        match self {
            Comparison::Eq => lhs == rhs,
            Comparison::Le => lhs <= rhs,
            Comparison::Ge => lhs >= rhs,
        }
    }
}

/// One relation with both sides measured. Boolean properties are encoded as
/// `0`/`1` on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub lhs: usize,
    pub rhs: usize,
    pub comparison: Comparison,
    pub holds: bool,
}

impl RelationCheck {
    fn new(relation: impl Into<String>, lhs: usize, comparison: Comparison, rhs: usize) -> Self {
        RelationCheck { relation: relation.into(), lhs, rhs, comparison, holds: comparison.holds(lhs, rhs) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReport {
    pub gadget: String,
    /// The input's name, or its fingerprint in hex.
    pub base_graph: String,
    pub input_n: usize,
    pub output_n: usize,
    pub relations: Vec<RelationCheck>,
    pub all_hold: bool,
}

fn solver() -> ExactSolver {
    ExactSolver::new(ExactSolver::MAX_CEILING)
}

/// Builds `gadget` on `g` and checks each of its relations with exact values.
/// Only the parameters a relation mentions are computed.
pub fn verify_identity(gadget: &Gadget, g: &Graph, stop: &dyn Interrupt) -> Result<GadgetReport> {
    use Comparison::*;
    use ParameterKind::*;

    let exact = solver();
    let out = gadget.build(g, stop)?;
    let on_in = |kind| exact.value(g, kind, stop);
    let on_out = |kind| exact.value(&out, kind, stop);
    let n = g.n();
    let mut relations = Vec::new();
    match gadget {
        Gadget::AddDominatingVertex => {
            relations.push(RelationCheck::new("α(out) = α(in)", on_out(MaxIndependentSet)?, Eq, on_in(MaxIndependentSet)?));
            for kind in [MaxClique, ChromaticNumber, MinVertexCover] {
                let s = kind.symbol();
                relations.push(RelationCheck::new(format!("{s}(out) = {s}(in)+1"), on_out(kind)?, Eq, on_in(kind)? + 1));
            }
            // over an edgeless input the output is a star
            if g.edge_count() > 0 {
                relations.push(RelationCheck::new(
                    "ν(out) = ν(in)+1",
                    on_out(MinFeedbackVertexSet)?,
                    Eq,
                    on_in(MinFeedbackVertexSet)? + 1,
                ));
            } else {
                relations.push(RelationCheck::new("ν(out) = 0", on_out(MinFeedbackVertexSet)?, Eq, 0));
            }
            relations.push(RelationCheck::new("γ(out) = 1", on_out(MinDominatingSet)?, Eq, 1));
            relations.push(RelationCheck::new("i(out) = 1", on_out(MinIndependentDominatingSet)?, Eq, 1));
        }
        Gadget::DoubleCopy => {
            relations.push(RelationCheck::new("γ(out) = 2", on_out(MinDominatingSet)?, Eq, 2));
            relations.push(RelationCheck::new(
                "i(out) = i(in)+1",
                on_out(MinIndependentDominatingSet)?,
                Eq,
                on_in(MinIndependentDominatingSet)? + 1,
            ));
        }
        Gadget::PendantMatching { vprime } => {
            let gamma_in = on_in(MinDominatingSet)?;
            let gamma_out = on_out(MinDominatingSet)?;
            let superset = exact.has_min_dominating_superset(g, vprime, stop)?;
            relations.push(RelationCheck::new("γ(out) ≥ γ(in)", gamma_out, Ge, gamma_in));
            relations.push(RelationCheck::new("γ(out) ≤ γ(in)+|V′|", gamma_out, Le, gamma_in + vprime.len()));
            relations.push(RelationCheck::new(
                "γ(out) = γ(in) ⟺ a minimum dominating set contains V′",
                usize::from(gamma_out == gamma_in),
                Eq,
                usize::from(superset),
            ));
        }
        Gadget::EdgeProduct => {
            let alpha = on_in(MaxIndependentSet)?;
            relations.push(RelationCheck::new("α(out) = α(in)", on_out(MaxIndependentSet)?, Eq, alpha));
            relations.push(RelationCheck::new("ν(out) = 2(n−α(in))", on_out(MinFeedbackVertexSet)?, Eq, 2 * (n - alpha)));
        }
        Gadget::CliqueBlowup { k } => {
            let k = gadget.blowup_factor(g, *k, stop)?;
            relations.push(RelationCheck::new("α(out) ≤ k", on_out(MaxIndependentSet)?, Le, k));
            let i_in = on_in(MinIndependentDominatingSet)?;
            if k >= i_in {
                let sol = exact.solve(&out, MinIndependentDominatingSet, stop)?;
                relations.push(RelationCheck::new("i(out) = i(in)", sol.value, Eq, i_in));
                let chosen = sol.witness.vertices().unwrap_or_default();
                if (0..k).any(|copy| chosen.iter().all(|&x| x / n != copy)) {
                    let mut projection: Vec<usize> = chosen.iter().map(|&x| x % n).collect();
                    projection.sort_unstable();
                    projection.dedup();
                    let ok = crate::solution::VertexSetSolution::from_vertices(
                        g,
                        MinIndependentDominatingSet,
                        projection,
                    )
                    .certified;
                    relations.push(RelationCheck::new(
                        "projection of a copy-missing witness is independent dominating",
                        usize::from(ok),
                        Eq,
                        1,
                    ));
                }
            }
        }
        Gadget::PruneMonochromatic { coloring, k } => {
            let k = *k;
            relations.push(RelationCheck::new("χ(out) ≤ k", on_out(ChromaticNumber)?, Le, k));
            let proper = out.edges().all(|(u, v)| coloring[u] != coloring[v]);
            relations.push(RelationCheck::new("coloring is proper on out", usize::from(proper), Eq, 1));
            let colorful = exact.has_colorful_clique(g, coloring, k, stop)?;
            relations.push(RelationCheck::new(
                "ω(out) = k ⟺ in has a colorful k-clique",
                usize::from(on_out(MaxClique)? == k),
                Eq,
                usize::from(colorful),
            ));
        }
    }
    let all_hold = relations.iter().all(|r| r.holds);
    Ok(GadgetReport {
        gadget: String::from(gadget.name()),
        base_graph: g.name().map(String::from).unwrap_or_else(|| format!("{:016x}", g.fingerprint())),
        input_n: n,
        output_n: out.n(),
        relations,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::interrupt::Unlimited;

    fn value(g: &Graph, kind: ParameterKind) -> usize {
        solver().value(g, kind, &Unlimited).unwrap()
    }

    #[test]
    fn dominating_vertex_examples() {
        let w4 = add_dominating_vertex(&generators::cycle(4)).unwrap();
        assert_eq!(value(&w4, ParameterKind::MinFeedbackVertexSet), 2);
        assert!(w4.has_universal_vertex());
        let k2 = add_dominating_vertex(&Graph::empty(1)).unwrap();
        assert_eq!(k2, generators::complete(2));
        let w5 = add_dominating_vertex(&generators::cycle(5)).unwrap();
        assert_eq!(value(&w5, ParameterKind::ChromaticNumber), 4);
        assert!(add_dominating_vertex(&Graph::empty(0)).is_err());
    }

    #[test]
    fn double_copy_examples() {
        let p4 = double_copy_gadget(&Graph::empty(1)).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.max_degree(), 2);
        for (g, gamma, i) in [
            (Graph::empty(1), 2, 2),
            (generators::complete(3), 2, 2),
            (generators::cycle(4), 2, 3),
        ] {
            let out = double_copy_gadget(&g).unwrap();
            assert_eq!(out.n(), 2 * g.n() + 2);
            assert!(!out.has_universal_vertex());
            assert_eq!(value(&out, ParameterKind::MinDominatingSet), gamma);
            assert_eq!(value(&out, ParameterKind::MinIndependentDominatingSet), i);
        }
    }

    #[test]
    fn pendant_examples() {
        let c4 = generators::cycle(4);
        assert_eq!(pendant_matching(&c4, &[]).unwrap(), c4);
        assert_eq!(value(&pendant_matching(&c4, &[0]).unwrap(), ParameterKind::MinDominatingSet), 2);
        let star = generators::star(5);
        assert_eq!(value(&pendant_matching(&star, &[1]).unwrap(), ParameterKind::MinDominatingSet), 2);
        assert!(pendant_matching(&c4, &[4]).is_err());
        assert!(pendant_matching(&c4, &[1, 1]).is_err());
    }

    #[test]
    fn two_pendants_can_raise_gamma_by_two() {
        let star = generators::star(3);
        let out = pendant_matching(&star, &[1, 2]).unwrap();
        assert_eq!(value(&out, ParameterKind::MinDominatingSet), 3);
        let report = verify_identity(&Gadget::PendantMatching { vprime: vec![1, 2] }, &star, &Unlimited).unwrap();
        assert!(report.all_hold, "{report:?}");
    }

    #[test]
    fn edge_product_examples() {
        assert_eq!(edge_product(&Graph::empty(1)), generators::complete(2));
        assert_eq!(edge_product(&generators::complete(3)), generators::complete(6));
        let out = edge_product(&generators::cycle(4));
        assert_eq!(out.n(), 8);
        assert_eq!(value(&out, ParameterKind::MaxIndependentSet), 2);
        assert_eq!(value(&out, ParameterKind::MinFeedbackVertexSet), 4);
        assert_eq!(edge_product(&Graph::empty(0)).n(), 0);
    }

    #[test]
    fn blowup_examples() {
        assert_eq!(clique_blowup(&Graph::empty(1), 1).unwrap().n(), 1);
        let c4 = generators::cycle(4);
        let g2 = clique_blowup(&c4, 2).unwrap();
        assert_eq!(g2.n(), 8);
        assert_eq!(value(&g2, ParameterKind::MinIndependentDominatingSet), 2);
        let g1 = clique_blowup(&c4, 1).unwrap();
        assert_eq!(g1, generators::complete(4));
        assert!(clique_blowup(&c4, 0).is_err());
        assert!(clique_blowup(&c4, 5).is_err());
    }

    #[test]
    fn prune_examples() {
        let k3 = generators::complete(3);
        assert_eq!(prune_monochromatic_edges(&k3, &[1, 1, 1], 1).unwrap().edge_count(), 0);
        assert_eq!(prune_monochromatic_edges(&k3, &[1, 2, 3], 3).unwrap(), k3);
        let c4 = generators::cycle(4);
        assert_eq!(prune_monochromatic_edges(&c4, &[1, 2, 1, 2], 2).unwrap(), c4);
        assert!(prune_monochromatic_edges(&k3, &[1, 2], 2).is_err());
        assert!(prune_monochromatic_edges(&k3, &[1, 2, 3], 2).is_err());
    }

    #[test]
    fn verify_examples() {
        let cases = [
            (Gadget::AddDominatingVertex, generators::cycle(4)),
            (Gadget::DoubleCopy, generators::complete(3)),
            (Gadget::EdgeProduct, generators::cycle(4)),
            (Gadget::CliqueBlowup { k: None }, generators::path(5)),
            (Gadget::PruneMonochromatic { coloring: vec![1, 2, 1, 3], k: 3 }, generators::complete(4)),
        ];
        for (gadget, g) in cases {
            let report = verify_identity(&gadget, &g, &Unlimited).unwrap();
            assert!(report.all_hold, "{report:?}");
            assert!(!report.relations.is_empty());
        }
    }
}
