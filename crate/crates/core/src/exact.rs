//! Exhaustive ground truth for the seven parameters.
//!
//! Subset problems enumerate candidate sets in lexicographic vertex order, one
//! size at a time, so the first feasible set found at the optimal size is the
//! lexicographically smallest witness. Minimization problems walk sizes
//! upwards from zero. Maximization problems (`α`, `ω`, maximum induced forest)
//! are hereditary, so they also walk upwards and stop at the first size with
//! no feasible set. The chromatic number is found by backtracking over
//! canonical colorings for `k = 1, 2, …`, capped by a greedy coloring.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forest::Dsu;
use crate::graph::{Graph, ParameterKind};
use crate::inequalities::ParameterValues;
use crate::interrupt::{Interrupt, Poll};
use crate::solution::VertexSetSolution;

/// Brute-force solver with a configurable vertex-count ceiling for the
/// subset-search kinds. The chromatic number has no ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSolver {
    pub ceiling: usize,
}

impl Default for ExactSolver {
    fn default() -> Self {
        ExactSolver { ceiling: Self::DEFAULT_CEILING }
    }
}

struct Search<'a> {
    n: usize,
    poll: Poll<'a>,
}

impl Search<'_> {
    /// First set of exactly `size` vertices in lexicographic order, drawn from
    /// `pool`, such that every prefix passes `extend` and the whole passes
    /// `complete`. `viable(chosen, remaining)` may cut hopeless branches.
    fn first_of_size(
        &mut self,
        pool: u64,
        size: usize,
        extend: &dyn Fn(u64, usize) -> bool,
        viable: &dyn Fn(u64, usize) -> bool,
        complete: &dyn Fn(u64) -> bool,
    ) -> Result<Option<u64>> {
        let candidates: Vec<usize> = (0..self.n).filter(|&v| pool >> v & 1 == 1).collect();
        self.descend(&candidates, 0, size, 0, extend, viable, complete)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &mut self,
        candidates: &[usize],
        start: usize,
        remaining: usize,
        chosen: u64,
        extend: &dyn Fn(u64, usize) -> bool,
        viable: &dyn Fn(u64, usize) -> bool,
        complete: &dyn Fn(u64) -> bool,
    ) -> Result<Option<u64>> {
        self.poll.tick()?;
        if remaining == 0 {
            return Ok(complete(chosen).then_some(chosen));
        }
        if !viable(chosen, remaining) {
            return Ok(None);
        }
        for idx in start..candidates.len() {
            if candidates.len() - idx < remaining {
                break;
            }
            let v = candidates[idx];
            if !extend(chosen, v) {
                continue;
            }
            if let Some(found) =
                self.descend(candidates, idx + 1, remaining - 1, chosen | 1 << v, extend, viable, complete)?
            {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn induces_forest(masks: &[u64], set: u64) -> bool {
    let vertices = mask_to_vec(set);
    let mut dsu = Dsu::new(masks.len());
    for &u in &vertices {
        let higher = u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
        let mut later = masks[u] & set & higher;
        while later != 0 {
            let v = later.trailing_zeros() as usize;
            later &= later - 1;
            if !dsu.union(u, v) {
                return false;
            }
        }
    }
    true
}

impl ExactSolver {
    pub const DEFAULT_CEILING: usize = 22;
    /// Subset searches use 64-bit vertex masks.
    pub const MAX_CEILING: usize = 64;

    pub fn new(ceiling: usize) -> Self {
        ExactSolver { ceiling: ceiling.min(Self::MAX_CEILING) }
    }

    fn guard(&self, g: &Graph) -> Result<()> {
        let ceiling = self.ceiling.min(Self::MAX_CEILING);
        if g.n() > ceiling {
            Err(Error::TooLarge { n: g.n(), ceiling })
        } else {
            Ok(())
        }
    }

    pub fn solve(&self, g: &Graph, kind: ParameterKind, stop: &dyn Interrupt) -> Result<VertexSetSolution> {
        Poll::new(stop).check()?;
        if kind == ParameterKind::ChromaticNumber {
            let colors = chromatic_coloring(g, stop)?;
            return Ok(VertexSetSolution::from_coloring(g, colors));
        }
        self.guard(g)?;
        let n = g.n();
        let masks = g.neighbor_masks();
        let all = full_mask(n);
        let mut search = Search { n, poll: Poll::new(stop) };
        let m = &masks;
        let never = |_: u64, _: usize| true;
        let set = match kind {
            ParameterKind::MaxIndependentSet => {
                largest(&mut search, n, &|chosen, v| m[v] & chosen == 0)?
            }
            ParameterKind::MaxClique => largest(&mut search, n, &|chosen, v| m[v] & chosen == chosen)?,
            ParameterKind::MinVertexCover => smallest(&mut search, n, all, &never, &never, &|chosen| {
                (0..n).all(|v| chosen >> v & 1 == 1 || m[v] & !chosen == 0)
            })?,
            ParameterKind::MinDominatingSet => {
                let reach = g.max_degree() + 1;
                let covered = |chosen: u64| {
                    mask_to_vec(chosen).into_iter().fold(chosen, |acc, v| acc | m[v])
                };
                smallest(
                    &mut search,
                    n,
                    all,
                    &never,
                    &|chosen, remaining| ((all & !covered(chosen)).count_ones() as usize) <= remaining * reach,
                    &|chosen| covered(chosen) == all,
                )?
            }
            ParameterKind::MinIndependentDominatingSet => {
                let covered = |chosen: u64| {
                    mask_to_vec(chosen).into_iter().fold(chosen, |acc, v| acc | m[v])
                };
                smallest(&mut search, n, all, &|chosen, v| m[v] & chosen == 0, &never, &|chosen| {
                    covered(chosen) == all
                })?
            }
            ParameterKind::MinFeedbackVertexSet => {
                smallest(&mut search, n, all, &never, &never, &|chosen| induces_forest(m, all & !chosen))?
            }
            ParameterKind::ChromaticNumber => unreachable!(),
        };
        Ok(VertexSetSolution::from_vertices(g, kind, mask_to_vec(set)))
    }

    pub fn value(&self, g: &Graph, kind: ParameterKind, stop: &dyn Interrupt) -> Result<usize> {
        self.solve(g, kind, stop).map(|s| s.value)
    }

    pub fn all_values(&self, g: &Graph, stop: &dyn Interrupt) -> Result<ParameterValues> {
        let mut values = ParameterValues::default();
        for kind in ParameterKind::ALL {
            values.set(kind, self.value(g, kind, stop)?);
        }
        Ok(values)
    }

    /// A maximum vertex set inducing a forest (lexicographically smallest).
    pub fn max_induced_forest(&self, g: &Graph, stop: &dyn Interrupt) -> Result<Vec<usize>> {
        self.guard(g)?;
        let masks = g.neighbor_masks();
        let m = &masks;
        let mut search = Search { n: g.n(), poll: Poll::new(stop) };
        let set = largest(&mut search, g.n(), &|chosen, v| induces_forest(m, chosen | 1 << v))?;
        Ok(mask_to_vec(set))
    }

    /// Whether some minimum dominating set contains every vertex of `required`.
    pub fn has_min_dominating_superset(&self, g: &Graph, required: &[usize], stop: &dyn Interrupt) -> Result<bool> {
        g.check_vertices(required)?;
        let gamma = self.value(g, ParameterKind::MinDominatingSet, stop)?;
        let masks = g.neighbor_masks();
        let n = g.n();
        let all = full_mask(n);
        let base = required.iter().fold(0u64, |acc, &v| acc | 1 << v);
        let need = base.count_ones() as usize;
        if need > gamma {
            return Ok(false);
        }
        let m = &masks;
        let mut search = Search { n, poll: Poll::new(stop) };
        let never = |_: u64, _: usize| true;
        let found = search.first_of_size(all & !base, gamma - need, &never, &never, &|chosen| {
            let set = chosen | base;
            mask_to_vec(set).into_iter().fold(set, |acc, v| acc | m[v]) == all
        })?;
        Ok(found.is_some())
    }

    /// Whether `g` has a clique on `k` vertices whose colors are pairwise distinct.
    pub fn has_colorful_clique(&self, g: &Graph, colors: &[usize], k: usize, stop: &dyn Interrupt) -> Result<bool> {
        self.guard(g)?;
        if colors.len() != g.n() {
            return Err(Error::Precondition("coloring must assign every vertex"));
        }
        let masks = g.neighbor_masks();
        let m = &masks;
        let mut search = Search { n: g.n(), poll: Poll::new(stop) };
        let never = |_: u64, _: usize| true;
        let found = search.first_of_size(
            full_mask(g.n()),
            k,
            &|chosen, v| m[v] & chosen == chosen && mask_to_vec(chosen).iter().all(|&u| colors[u] != colors[v]),
            &never,
            &|_| true,
        )?;
        Ok(found.is_some())
    }
}

fn smallest(
    search: &mut Search<'_>,
    n: usize,
    pool: u64,
    extend: &dyn Fn(u64, usize) -> bool,
    viable: &dyn Fn(u64, usize) -> bool,
    complete: &dyn Fn(u64) -> bool,
) -> Result<u64> {
    for size in 0..=n {
        if let Some(set) = search.first_of_size(pool, size, extend, viable, complete)? {
            return Ok(set);
        }
    }
    Err(Error::ContractViolation("no feasible set of any size".into()))
}

/// Largest set whose every prefix passes `extend`; requires the property to be
/// hereditary so that the first empty size ends the search.
fn largest(search: &mut Search<'_>, n: usize, extend: &dyn Fn(u64, usize) -> bool) -> Result<u64> {
    let never = |_: u64, _: usize| true;
    let mut best = 0;
    for size in 1..=n {
        match search.first_of_size(full_mask(n), size, extend, &never, &|_| true)? {
            Some(set) => best = set,
            None => break,
        }
    }
    Ok(best)
}

/// Colors `1..=k` in first-fit order of vertex ids.
fn greedy_color_count(g: &Graph) -> usize {
    let mut colors = vec![0usize; g.n()];
    let mut used = 0;
    for v in 0..g.n() {
        let mut c = 1;
        while g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
        used = used.max(c);
    }
    used
}

/// The lexicographically smallest optimal coloring among canonical colorings
/// (vertex 0 gets color 1, and each vertex uses at most one more than the
/// largest color before it).
pub fn chromatic_coloring(g: &Graph, stop: &dyn Interrupt) -> Result<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let upper = greedy_color_count(g);
    let mut poll = Poll::new(stop);
    for k in 1..=upper {
        let mut colors = vec![0usize; n];
        if color_from(g, 0, 0, k, &mut colors, &mut poll)? {
            return Ok(colors);
        }
    }
    Err(Error::ContractViolation("greedy bound admitted no coloring".into()))
}

fn color_from(g: &Graph, v: usize, used: usize, k: usize, colors: &mut [usize], poll: &mut Poll<'_>) -> Result<bool> {
    poll.tick()?;
    if v == colors.len() {
        return Ok(true);
    }
    for c in 1..=k.min(used + 1) {
        if g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if color_from(g, v + 1, used.max(c), k, colors, poll)? {
            return Ok(true);
        }
    }
    colors[v] = 0;
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::Witness;
    use crate::generators;
    use crate::interrupt::Unlimited;
    use crate::ParameterKind::*;

    fn value(g: &Graph, kind: ParameterKind) -> usize {
        ExactSolver::default().value(g, kind, &Unlimited).unwrap()
    }

    #[test]
    fn c5_gamma_and_matrix() {
        let c5 = generators::cycle(5);
        let v = ExactSolver::default().all_values(&c5, &Unlimited).unwrap();
        assert_eq!(v, ParameterValues { alpha: 2, tau: 3, omega: 2, chi: 3, gamma: 2, inddom: 2, nu: 1 });
    }

    #[test]
    fn k1_every_kind() {
        let k1 = Graph::empty(1);
        let v = ExactSolver::default().all_values(&k1, &Unlimited).unwrap();
        assert_eq!(v, ParameterValues { alpha: 1, tau: 0, omega: 1, chi: 1, gamma: 1, inddom: 1, nu: 0 });
    }

    #[test]
    fn empty_graph_is_all_zero() {
        let v = ExactSolver::default().all_values(&Graph::empty(0), &Unlimited).unwrap();
        assert_eq!(v, ParameterValues::default());
    }

    #[test]
    fn petersen_values() {
        let p = generators::petersen();
        assert_eq!(value(&p, MinFeedbackVertexSet), 3);
        assert_eq!(value(&p, MaxIndependentSet), 4);
        assert_eq!(value(&p, MaxClique), 2);
        assert_eq!(value(&p, ChromaticNumber), 3);
        assert_eq!(value(&p, MinDominatingSet), 3);
        assert_eq!(value(&p, MinIndependentDominatingSet), 3);
    }

    #[test]
    fn witnesses_are_lexicographically_smallest() {
        let c5 = generators::cycle(5);
        let sol = ExactSolver::default().solve(&c5, MaxIndependentSet, &Unlimited).unwrap();
        assert_eq!(sol.witness, Witness::Vertices(vec![0, 2]));
        let chi = ExactSolver::default().solve(&c5, ChromaticNumber, &Unlimited).unwrap();
        assert_eq!(chi.witness, Witness::Coloring(vec![1, 2, 1, 2, 3]));
        assert!(sol.certified && chi.certified);
    }

    #[test]
    fn ceiling_is_enforced_except_for_chi() {
        let g = generators::path(30);
        let solver = ExactSolver::default();
        assert_eq!(
            solver.value(&g, MaxIndependentSet, &Unlimited).unwrap_err(),
            Error::TooLarge { n: 30, ceiling: 22 }
        );
        assert_eq!(solver.value(&g, ChromaticNumber, &Unlimited).unwrap(), 2);
    }

    #[test]
    fn interrupt_is_reported_as_timeout() {
        let g = generators::gnp(20, 0.5, 1);
        let always = || true;
        assert_eq!(ExactSolver::default().value(&g, MinDominatingSet, &always).unwrap_err(), Error::Timeout);
    }

    #[test]
    fn induced_forest_and_superset_queries() {
        let c4 = generators::cycle(4);
        let solver = ExactSolver::default();
        assert_eq!(solver.max_induced_forest(&c4, &Unlimited).unwrap(), vec![0, 1, 2]);
        let star = generators::star(5);
        assert!(solver.has_min_dominating_superset(&star, &[0], &Unlimited).unwrap());
        assert!(!solver.has_min_dominating_superset(&star, &[3], &Unlimited).unwrap());
        let k3 = generators::complete(3);
        assert!(solver.has_colorful_clique(&k3, &[1, 2, 3], 3, &Unlimited).unwrap());
        assert!(!solver.has_colorful_clique(&k3, &[1, 1, 3], 3, &Unlimited).unwrap());
    }
}
