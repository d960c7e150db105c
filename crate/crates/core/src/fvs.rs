//! Minimum feedback vertex set by iterative deepening over a bounded search tree.
//!
//! Every node of the search first reduces the instance to a multigraph of
//! minimum degree three (see [`reduce_instance`]), then branches on the
//! vertices of a shortest cycle in ascending id order. Budgets `k = 0, 1, …`
//! are tried in turn, so the first solution found is minimum.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::forest::leaves_forest;
use crate::graph::Graph;
use crate::interrupt::{Interrupt, Poll};

/// Undirected multigraph with self-loops, used only inside the search.
/// Edge multiplicities are capped at two and loops at one, which preserves
/// every feedback vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    /// `adj[u][v]` is the multiplicity of `uv`; `adj[u][u]` marks a loop.
    adj: Vec<BTreeMap<usize, usize>>,
    alive: Vec<bool>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { adj: vec![BTreeMap::new(); n], alive: vec![true; n] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut mg = Multigraph::new(g.n());
        for (u, v) in g.edges() {
            mg.add_edge(u, v);
        }
        mg
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        let cap = if u == v { 1 } else { 2 };
        let slot = self.adj[u].entry(v).or_insert(0);
        *slot = (*slot + 1).min(cap);
        if u != v {
            let back = self.adj[v].entry(u).or_insert(0);
            *back = (*back + 1).min(cap);
        }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u].get(&v).copied().unwrap_or(0)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.multiplicity(v, v) > 0
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().map(|(&w, &m)| if w == v { 2 * m } else { m }).sum()
    }

    pub fn remove_vertex(&mut self, v: usize) {
        if !self.alive[v] {
            return;
        }
        let nbrs = core::mem::take(&mut self.adj[v]);
        for &w in nbrs.keys() {
            if w != v {
                self.adj[w].remove(&v);
            }
        }
        self.alive[v] = false;
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    /// Edges counted with multiplicity, loops included.
    pub fn edge_count(&self) -> usize {
        let mut twice = 0;
        for (u, list) in self.adj.iter().enumerate() {
            for (&w, &m) in list {
                twice += if w == u { 2 * m } else { m };
            }
        }
        twice / 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }

    fn neighbors_except_self(&self, v: usize) -> Vec<usize> {
        self.adj[v].keys().copied().filter(|&w| w != v).collect()
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.alive.len()];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in self.adj[v].keys() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}

/// Applies, to a fixpoint: a looped vertex is forced into the solution and
/// deleted; a vertex of degree at most one is deleted; a loop-free vertex of
/// degree two is smoothed (its two edge ends are joined, possibly creating a
/// parallel edge or a loop). Returns the reduced multigraph and the forced
/// vertices, ascending. The minimum FVS of the input equals the number of
/// forced vertices plus that of the output.
pub fn reduce_instance(mut mg: Multigraph) -> (Multigraph, Vec<usize>) {
    let mut forced = Vec::new();
    let mut queued = mg.alive.clone();
    let mut queue: VecDeque<usize> = mg.vertices().collect();
    let push = |queue: &mut VecDeque<usize>, queued: &mut Vec<bool>, w: usize| {
        if !queued[w] {
            queued[w] = true;
            queue.push_back(w);
        }
    };
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        if !mg.alive[v] {
            continue;
        }
        if mg.has_loop(v) {
            let nbrs = mg.neighbors_except_self(v);
            mg.remove_vertex(v);
            forced.push(v);
            nbrs.into_iter().for_each(|w| push(&mut queue, &mut queued, w));
            continue;
        }
        match mg.degree(v) {
            0 | 1 => {
                let nbrs = mg.neighbors_except_self(v);
                mg.remove_vertex(v);
                nbrs.into_iter().for_each(|w| push(&mut queue, &mut queued, w));
            }
            2 => {
                let nbrs = mg.neighbors_except_self(v);
                mg.remove_vertex(v);
                match nbrs[..] {
                    [a] => mg.add_edge(a, a),
                    [a, b] => mg.add_edge(a, b),
                    _ => unreachable!("degree two without loop has one or two neighbors"),
                }
                nbrs.into_iter().for_each(|w| push(&mut queue, &mut queued, w));
            }
            _ => {}
        }
    }
    forced.sort_unstable();
    (mg, forced)
}

/// Vertex set of a shortest cycle, ascending. Expects a loop-free multigraph
/// that contains a cycle.
fn shortest_cycle(mg: &Multigraph) -> Vec<usize> {
    for u in mg.vertices() {
        if let Some((&v, _)) = mg.adj[u].iter().find(|(&w, &m)| w > u && m >= 2) {
            return vec![u, v];
        }
    }
    let n = mg.alive.len();
    let mut best: Option<Vec<usize>> = None;
    let mut best_len = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for s in mg.vertices() {
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = usize::MAX;
        }
        touched.clear();
        dist[s] = 0;
        touched.push(s);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best_len {
                break;
            }
            for &y in mg.adj[x].keys() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y && dist[y] >= dist[x] {
                    let len = dist[x] + dist[y] + 1;
                    if len < best_len {
                        best_len = len;
                        let mut cycle = Vec::with_capacity(len);
                        for mut w in [x, y] {
                            while w != s {
                                cycle.push(w);
                                w = parent[w];
                            }
                        }
                        cycle.push(s);
                        cycle.sort_unstable();
                        cycle.dedup();
                        best = Some(cycle);
                    }
                }
            }
        }
        if best_len == 3 {
            break;
        }
    }
    best.expect("reduced multigraph of minimum degree three has a cycle")
}

fn search(mg: Multigraph, budget: usize, poll: &mut Poll<'_>) -> Result<Option<Vec<usize>>> {
    poll.tick()?;
    let (mg, mut forced) = reduce_instance(mg);
    if forced.len() > budget {
        return Ok(None);
    }
    let budget = budget - forced.len();
    if mg.is_empty() {
        return Ok(Some(forced));
    }
    if budget == 0 {
        return Ok(None);
    }
    // each deletion lowers the cyclomatic number by at most Δ − 1
    let cyclomatic = mg.edge_count() + mg.component_count() - mg.vertex_count();
    let max_degree = mg.vertices().map(|v| mg.degree(v)).max().unwrap_or(0);
    if budget * max_degree.saturating_sub(1) < cyclomatic {
        return Ok(None);
    }
    for v in shortest_cycle(&mg) {
        let mut next = mg.clone();
        next.remove_vertex(v);
        if let Some(rest) = search(next, budget - 1, poll)? {
            forced.push(v);
            forced.extend(rest);
            forced.sort_unstable();
            return Ok(Some(forced));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvsResult {
    /// The feedback vertex set `F*`, ascending.
    pub fvs: Vec<usize>,
    /// `ν`
    pub size: usize,
    /// Whether deleting `fvs` leaves a forest; always true for solver output.
    pub forest_check: bool,
}

/// A minimum feedback vertex set of `g`. Deterministic for a fixed input.
pub fn min_fvs(g: &Graph, stop: &dyn Interrupt) -> Result<FvsResult> {
    let mut poll = Poll::new(stop);
    let (kernel, forced) = reduce_instance(Multigraph::from_graph(g));
    let mut budget = 0;
    let rest = loop {
        poll.check()?;
        if let Some(rest) = search(kernel.clone(), budget, &mut poll)? {
            break rest;
        }
        budget += 1;
    };
    let mut fvs = forced;
    fvs.extend(rest);
    fvs.sort_unstable();
    let forest_check = leaves_forest(g, &fvs);
    Ok(FvsResult { size: fvs.len(), fvs, forest_check })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::interrupt::Unlimited;

    fn nu(g: &Graph) -> FvsResult {
        min_fvs(g, &Unlimited).unwrap()
    }

    #[test]
    fn forests_need_nothing() {
        let r = nu(&generators::tree_plus_edges(30, 0, 5));
        assert_eq!(r.size, 0);
        assert!(r.forest_check);
    }

    #[test]
    fn small_named_graphs() {
        assert_eq!(nu(&generators::cycle(4)).size, 1);
        assert_eq!(nu(&generators::petersen()).size, 3);
        assert_eq!(nu(&generators::complete(5)).size, 3);
        assert_eq!(nu(&Graph::empty(0)).size, 0);
    }

    #[test]
    fn reduce_consumes_paths() {
        let (mg, forced) = reduce_instance(Multigraph::from_graph(&generators::path(7)));
        assert!(mg.is_empty());
        assert!(forced.is_empty());
    }

    #[test]
    fn reduce_triangle_forces_one_vertex() {
        let (mg, forced) = reduce_instance(Multigraph::from_graph(&generators::cycle(3)));
        assert!(mg.is_empty());
        assert_eq!(forced.len(), 1);
    }

    #[test]
    fn double_edge_forces_one_endpoint() {
        let mut mg = Multigraph::new(2);
        mg.add_edge(0, 1);
        mg.add_edge(0, 1);
        assert_eq!(mg.multiplicity(0, 1), 2);
        let (rest, forced) = reduce_instance(mg);
        assert!(rest.is_empty());
        assert_eq!(forced.len(), 1);
    }

    #[test]
    fn reduction_leaves_minimum_degree_three() {
        let g = generators::gnp(14, 0.3, 11);
        let (mg, _) = reduce_instance(Multigraph::from_graph(&g));
        assert!(mg.vertices().all(|v| mg.degree(v) >= 3 && !mg.has_loop(v)));
    }

    #[test]
    fn timeout_propagates() {
        let g = generators::gnp(40, 0.5, 2);
        let always = || true;
        assert_eq!(min_fvs(&g, &always).unwrap_err(), crate::Error::Timeout);
    }
}
