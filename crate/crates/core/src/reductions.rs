//! Oracle reductions: optimal value from a decision oracle, and optimal
//! witnesses from a value oracle. Every reduction reports how many oracle
//! calls it made against a per-reduction bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forest::is_forest;
use crate::gadgets::pendant_matching;
use crate::graph::{Direction, Graph, ParameterKind};
use crate::oracle::{DecisionOracle, ValueOracle};
use crate::solution::VertexSetSolution;

/// Oracle accounting for one reduction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub oracle_calls: usize,
    pub call_bound: usize,
    /// Vertex count of the instance passed to each call, in order.
    pub instance_sizes: Vec<usize>,
}

impl ReductionTrace {
    pub fn within_bound(&self) -> bool {
        self.oracle_calls <= self.call_bound
    }
}

fn ceil_log2(x: usize) -> usize {
    let x = x.max(1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// `2⌈log₂ R⌉ + 4` queries for a search range of width `R`.
pub fn decision_call_bound(range_bound: usize) -> usize {
    2 * ceil_log2(range_bound) + 4
}

/// Recovers the optimum from a decision oracle. `feasible_start` (`λ`) must be
/// the value of some feasible solution and the optimum must lie within
/// `range_bound` of it (above for maximization, below for minimization).
///
/// Thresholds `λ ± 2^k`, `k = 1, 2, …`, are asked until the first NO (or the
/// range is exhausted), then the bracket is closed by binary search.
pub fn value_from_decision(
    g: &Graph,
    oracle: &DecisionOracle<'_>,
    direction: Direction,
    feasible_start: i64,
    range_bound: usize,
) -> Result<(i64, ReductionTrace)> {
    let before = oracle.calls();
    let sign = match direction {
        Direction::Maximize => 1,
        Direction::Minimize => -1,
    };
    let range = range_bound as i64;
    let mut sizes = Vec::new();
    let mut ask = |offset: i64| -> Result<bool> {
        sizes.push(g.n());
        oracle.query(g, feasible_start + sign * offset)
    };
    // the optimum's offset from λ lies in [lo, hi)
    let mut lo = 0i64;
    let mut hi = range + 1;
    let mut k = 1;
    while k < 63 && (1i64 << k) <= range {
        let offset = 1i64 << k;
        if ask(offset)? {
            lo = offset;
            k += 1;
        } else {
            hi = offset;
            break;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ask(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if lo == 0 && !ask(0)? {
        return Err(Error::ContractViolation(alloc::format!(
            "decision oracle rejects the feasible start {feasible_start}"
        )));
    }
    let trace = ReductionTrace {
        oracle_calls: oracle.calls() - before,
        call_bound: decision_call_bound(range_bound),
        instance_sizes: sizes,
    };
    Ok((feasible_start + sign * lo, trace))
}

/// Feasible start `λ` and search range `n` for `kind` on `g`. Maximization
/// starts from a single vertex. Minimization starts from `V`, except `i`,
/// which starts from a greedy maximal independent set.
pub fn trivial_start(g: &Graph, kind: ParameterKind) -> (i64, usize) {
    let n = g.n();
    let start = match kind {
        ParameterKind::MaxIndependentSet | ParameterKind::MaxClique => usize::from(n > 0),
        ParameterKind::MinIndependentDominatingSet => greedy_maximal_independent(g).len(),
        _ => n,
    };
    (start as i64, n)
}

fn greedy_maximal_independent(g: &Graph) -> Vec<usize> {
    let mut blocked = vec![false; g.n()];
    let mut set = Vec::new();
    for v in 0..g.n() {
        if !blocked[v] {
            set.push(v);
            blocked[v] = true;
            g.neighbors(v).iter().for_each(|&w| blocked[w] = true);
        }
    }
    set
}

/// Hereditary maximization problems served by [`constructive_hereditary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HereditaryKind {
    IndependentSet,
    Clique,
    InducedForest,
}

impl HereditaryKind {
    fn holds(self, g: &Graph, set: &[usize]) -> bool {
        match self {
            HereditaryKind::IndependentSet => set.iter().all(|&u| set.iter().all(|&v| !g.has_edge(u, v))),
            HereditaryKind::Clique => set.iter().all(|&u| set.iter().all(|&v| u == v || g.has_edge(u, v))),
            HereditaryKind::InducedForest => {
                g.induced_subgraph(set).map(|ind| is_forest(&ind.graph)).unwrap_or(false)
            }
        }
    }
}

/// Builds an optimal solution of a hereditary maximization problem with a
/// value oracle for it: each vertex in turn is deleted if the optimum of the
/// remaining graph is unchanged and kept otherwise. Uses at most `n + 1` calls.
pub fn constructive_hereditary(
    g: &Graph,
    oracle: &ValueOracle<'_>,
    kind: HereditaryKind,
) -> Result<(Vec<usize>, ReductionTrace)> {
    let before = oracle.calls();
    let n = g.n();
    let mut sizes = Vec::new();
    let mut alive = vec![true; n];
    let current = |alive: &[bool]| -> Result<Graph> {
        let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        Ok(g.induced_subgraph(&keep)?.graph)
    };
    sizes.push(n);
    let value = oracle.query(g)?;
    for u in 0..n {
        alive[u] = false;
        let smaller = current(&alive)?;
        sizes.push(smaller.n());
        let after = oracle.query(&smaller)?;
        if after > value {
            return Err(Error::ContractViolation(alloc::format!(
                "optimum rose from {value} to {after} after deleting vertex {u}"
            )));
        }
        if after < value {
            alive[u] = true;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if kept.len() != value || !kind.holds(g, &kept) {
        return Err(Error::ContractViolation(alloc::format!(
            "kept {} vertices for optimum {value}; the value oracle is not exact",
            kept.len()
        )));
    }
    let trace = ReductionTrace { oracle_calls: oracle.calls() - before, call_bound: n + 1, instance_sizes: sizes };
    Ok((kept, trace))
}

/// `α` and `ω` directly; `τ` and `ν` as complements of a maximum independent
/// set and a maximum induced forest. The oracle must answer the hereditary
/// problem (`α` for `τ`, maximum induced forest size for `ν`).
pub fn constructive_via_hereditary(
    g: &Graph,
    oracle: &ValueOracle<'_>,
    target: ParameterKind,
) -> Result<(VertexSetSolution, ReductionTrace)> {
    let (kind, complement) = match target {
        ParameterKind::MaxIndependentSet => (HereditaryKind::IndependentSet, false),
        ParameterKind::MaxClique => (HereditaryKind::Clique, false),
        ParameterKind::MinVertexCover => (HereditaryKind::IndependentSet, true),
        ParameterKind::MinFeedbackVertexSet => (HereditaryKind::InducedForest, true),
        _ => return Err(Error::Precondition("hereditary reduction serves alpha, omega, tau and nu only")),
    };
    let (kept, trace) = constructive_hereditary(g, oracle, kind)?;
    let set = if complement {
        let mut inside = vec![false; g.n()];
        kept.iter().for_each(|&v| inside[v] = true);
        (0..g.n()).filter(|&v| !inside[v]).collect()
    } else {
        kept
    };
    Ok((VertexSetSolution::from_vertices(g, target, set), trace))
}

fn dominates(g: &Graph, set: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in set {
        covered[v] = true;
        g.neighbors(v).iter().for_each(|&w| covered[w] = true);
    }
    covered.iter().all(|&c| c)
}

/// Minimum dominating set from a `γ` value oracle. Vertices are committed
/// one at a time: `w` joins the committed set `V'` when the pendant-matching
/// gadget `G_{V' ∪ {w}}` keeps `γ` unchanged, i.e. some minimum dominating set
/// contains `V' ∪ {w}`. Every gadget has at most `2n` vertices and `γ` at most
/// `γ(G) + 1`. Uses at most `n·γ(G) + 1` calls.
pub fn constructive_gamma(g: &Graph, oracle: &ValueOracle<'_>) -> Result<(VertexSetSolution, ReductionTrace)> {
    let before = oracle.calls();
    let n = g.n();
    let mut sizes = vec![n];
    let target = oracle.query(g)?;
    let mut committed: Vec<usize> = Vec::new();
    while !dominates(g, &committed) {
        if committed.len() >= target {
            return Err(Error::ContractViolation("committed a full-size set that does not dominate".into()));
        }
        let mut found = None;
        for w in (0..n).filter(|w| !committed.contains(w)) {
            let mut trial = committed.clone();
            trial.push(w);
            let gadget = pendant_matching(g, &trial)?;
            if gadget.n() > 2 * n {
                return Err(Error::ContractViolation("gadget instance exceeds 2n vertices".into()));
            }
            sizes.push(gadget.n());
            let value = oracle.query(&gadget)?;
            if value > target + 1 {
                return Err(Error::ContractViolation(alloc::format!(
                    "gadget value {value} exceeds gamma + 1 = {}",
                    target + 1
                )));
            }
            if value == target {
                found = Some(w);
                break;
            }
        }
        match found {
            Some(w) => committed.push(w),
            None => return Err(Error::ContractViolation("no vertex extends the committed set".into())),
        }
    }
    if committed.len() != target {
        return Err(Error::ContractViolation(alloc::format!(
            "dominating set of size {} found for optimum {target}",
            committed.len()
        )));
    }
    let trace = ReductionTrace {
        oracle_calls: oracle.calls() - before,
        call_bound: n * target + 1,
        instance_sizes: sizes,
    };
    Ok((VertexSetSolution::from_vertices(g, ParameterKind::MinDominatingSet, committed), trace))
}

/// Minimum independent dominating set from an `i` value oracle: commit the
/// first `u` with `i(G − N[u]) = i(G) − 1`, then continue on `G − N[u]`.
/// Uses at most `n·i(G) + 1` calls.
pub fn constructive_inddom(g: &Graph, oracle: &ValueOracle<'_>) -> Result<(VertexSetSolution, ReductionTrace)> {
    let before = oracle.calls();
    let n = g.n();
    let mut sizes = vec![n];
    let mut target = oracle.query(g)?;
    let initial = target;
    let mut current = g.induced_subgraph(&(0..n).collect::<Vec<_>>())?;
    let mut committed = Vec::new();
    while current.graph.n() > 0 {
        if target == 0 {
            return Err(Error::ContractViolation("oracle reports i = 0 on a non-empty graph".into()));
        }
        let h = &current.graph;
        let mut found = None;
        for u in 0..h.n() {
            let mut closed = h.neighbors(u).to_vec();
            closed.push(u);
            let rest = h.without_vertices(&closed)?;
            sizes.push(rest.graph.n());
            if oracle.query(&rest.graph)? + 1 == target {
                found = Some((u, rest));
                break;
            }
        }
        let Some((u, rest)) = found else {
            return Err(Error::ContractViolation("no vertex lowers i by one".into()));
        };
        committed.push(current.new_to_old[u]);
        let new_to_old: Vec<usize> = rest.new_to_old.iter().map(|&v| current.new_to_old[v]).collect();
        let mut old_to_new = vec![None; n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        current = crate::graph::Induced { graph: rest.graph, old_to_new, new_to_old };
        target -= 1;
    }
    let trace = ReductionTrace {
        oracle_calls: oracle.calls() - before,
        call_bound: n * initial + 1,
        instance_sizes: sizes,
    };
    Ok((VertexSetSolution::from_vertices(g, ParameterKind::MinIndependentDominatingSet, committed), trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactSolver;
    use crate::generators;
    use crate::oracle::as_decision;

    fn exact(kind: ParameterKind) -> ValueOracle<'static> {
        ValueOracle::exact(kind, ExactSolver::default())
    }

    #[test]
    fn binary_search_on_a_threshold_predicate() {
        let oracle = DecisionOracle::from_predicate(|_, k| Ok(k <= 13));
        let (value, trace) = value_from_decision(&Graph::empty(0), &oracle, Direction::Maximize, 0, 32).unwrap();
        assert_eq!(value, 13);
        assert!(trace.within_bound(), "{trace:?}");
        assert_eq!(trace.call_bound, 14);
    }

    #[test]
    fn binary_search_alpha_and_gamma() {
        let alpha = exact(ParameterKind::MaxIndependentSet);
        let c5 = generators::cycle(5);
        let (value, trace) =
            value_from_decision(&c5, &as_decision(&alpha, Direction::Maximize), Direction::Maximize, 1, 5).unwrap();
        assert_eq!(value, 2);
        assert!(trace.within_bound());

        let gamma = exact(ParameterKind::MinDominatingSet);
        let star = generators::star(5);
        let (value, trace) =
            value_from_decision(&star, &as_decision(&gamma, Direction::Minimize), Direction::Minimize, 6, 6).unwrap();
        assert_eq!(value, 1);
        assert!(trace.within_bound());
    }

    #[test]
    fn infeasible_start_is_a_contract_violation() {
        let never = DecisionOracle::from_predicate(|_, _| Ok(false));
        assert!(matches!(
            value_from_decision(&Graph::empty(3), &never, Direction::Maximize, 1, 3),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn hereditary_examples() {
        let alpha = exact(ParameterKind::MaxIndependentSet);
        let (set, trace) = constructive_hereditary(&generators::cycle(5), &alpha, HereditaryKind::IndependentSet).unwrap();
        assert_eq!(set.len(), 2);
        assert!(trace.oracle_calls <= 6);

        let alpha = exact(ParameterKind::MaxIndependentSet);
        let (set, trace) = constructive_hereditary(&Graph::empty(4), &alpha, HereditaryKind::IndependentSet).unwrap();
        assert_eq!(set, vec![0, 1, 2, 3]);
        assert_eq!(trace.oracle_calls, 5);

        let forest = ValueOracle::exact_induced_forest(ExactSolver::default());
        let c4 = generators::cycle(4);
        let (sol, _) = constructive_via_hereditary(&c4, &forest, ParameterKind::MinFeedbackVertexSet).unwrap();
        assert_eq!(sol.value, 1);
        assert!(sol.certified);
    }

    #[test]
    fn rising_value_is_rejected() {
        let liar = ValueOracle::new(|g: &Graph| Ok(10 - g.n()));
        assert!(matches!(
            constructive_hereditary(&generators::cycle(4), &liar, HereditaryKind::IndependentSet),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn gamma_reduction_examples() {
        for (g, want) in [(generators::star(5), 1), (generators::cycle(4), 2), (generators::cycle(6), 2)] {
            let oracle = exact(ParameterKind::MinDominatingSet);
            let (sol, trace) = constructive_gamma(&g, &oracle).unwrap();
            assert_eq!(sol.value, want);
            assert!(sol.certified);
            assert!(trace.within_bound(), "{trace:?}");
            assert!(trace.instance_sizes.iter().all(|&s| s <= 2 * g.n()));
        }
    }

    #[test]
    fn inddom_reduction_examples() {
        for (g, want) in [(generators::star(5), 1), (generators::cycle(4), 2), (generators::path(4), 2)] {
            let oracle = exact(ParameterKind::MinIndependentDominatingSet);
            let (sol, trace) = constructive_inddom(&g, &oracle).unwrap();
            assert_eq!(sol.value, want);
            assert!(sol.certified);
            assert!(trace.within_bound());
        }
    }

    #[test]
    fn wrong_oracle_is_detected() {
        let off_by_one = ValueOracle::new(|g: &Graph| Ok(g.n() + 1));
        assert!(matches!(
            constructive_inddom(&generators::cycle(4), &off_by_one),
            Err(Error::ContractViolation(_))
        ));
        let constant = ValueOracle::new(|_: &Graph| Ok(3));
        assert!(matches!(constructive_gamma(&generators::star(3), &constant), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn bound_helper() {
        assert_eq!(decision_call_bound(0), 4);
        assert_eq!(decision_call_bound(1), 4);
        assert_eq!(decision_call_bound(5), 10);
        assert_eq!(decision_call_bound(8), 10);
    }
}
