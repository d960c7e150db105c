//! Simple undirected graphs on dense vertex ids and the parameter vocabulary.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted, so neighbor iteration is in ascending id
/// order everywhere in the crate.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges. Self-loops and endpoints
    /// `>= n` are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Graph { adj, edge_count: twice / 2, name: None })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Maximum degree `Δ`; `0` for the graph on no vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Whether some vertex is adjacent to all others.
    pub fn has_universal_vertex(&self) -> bool {
        let n = self.n();
        n > 0 && self.adj.iter().any(|list| list.len() + 1 == n)
    }

    /// Per-vertex neighborhood bitmasks. Only valid for `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    pub(crate) fn check_vertices(&self, vertices: &[usize]) -> Result<()> {
        let n = self.n();
        match vertices.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(Error::InvalidVertex { vertex, n }),
            None => Ok(()),
        }
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                if it.peek() == Some(&&v) {
                    it.next();
                    continue;
                }
                if v != u {
                    list.push(v);
                    if v > u {
                        edge_count += 1;
                    }
                }
            }
        }
        Graph { adj, edge_count, name: None }
    }

    /// The subgraph induced by `keep`, relabeled in ascending old-id order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Induced> {
        self.check_vertices(keep)?;
        let mut new_to_old = keep.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let mut old_to_new = vec![None; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut adj = vec![Vec::new(); new_to_old.len()];
        let mut edge_count = 0;
        for (new, &old) in new_to_old.iter().enumerate() {
            for &w in &self.adj[old] {
                if let Some(nw) = old_to_new[w] {
                    adj[new].push(nw);
                    if nw > new {
                        edge_count += 1;
                    }
                }
            }
        }
        Ok(Induced { graph: Graph { adj, edge_count, name: None }, old_to_new, new_to_old })
    }

    /// The graph with `removed` deleted, relabeled as by [`Graph::induced_subgraph`].
    pub fn without_vertices(&self, removed: &[usize]) -> Result<Induced> {
        self.check_vertices(removed)?;
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// A stable 64-bit FNV-1a fingerprint of `n` and the sorted edge list.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.n() as u64);
        for (u, v) in self.edges() {
            feed(u as u64);
            feed(v as u64);
        }
        h
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Graph,
    /// `old_to_new[v]` is the new id of original vertex `v`, if kept.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[u]` is the original id of new vertex `u`.
    pub new_to_old: Vec<usize>,
}

impl Induced {
    pub fn to_old(&self, vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = vertices.iter().map(|&v| self.new_to_old[v]).collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    VertexSet,
    Coloring,
}

/// The seven vertex parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParameterKind {
    /// `α`
    MaxIndependentSet,
    /// `τ`
    MinVertexCover,
    /// `ω`
    MaxClique,
    /// `χ`
    ChromaticNumber,
    /// `γ`
    MinDominatingSet,
    /// `i`
    MinIndependentDominatingSet,
    /// `ν`
    MinFeedbackVertexSet,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 7] = [
        ParameterKind::MaxIndependentSet,
        ParameterKind::MinVertexCover,
        ParameterKind::MaxClique,
        ParameterKind::ChromaticNumber,
        ParameterKind::MinDominatingSet,
        ParameterKind::MinIndependentDominatingSet,
        ParameterKind::MinFeedbackVertexSet,
    ];

    pub fn direction(self) -> Direction {
        match self {
            ParameterKind::MaxIndependentSet | ParameterKind::MaxClique => Direction::Maximize,
            _ => Direction::Minimize,
        }
    }

    pub fn witness_kind(self) -> WitnessKind {
        match self {
            ParameterKind::ChromaticNumber => WitnessKind::Coloring,
            _ => WitnessKind::VertexSet,
        }
    }

    /// Short ASCII name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::MaxIndependentSet => "alpha",
            ParameterKind::MinVertexCover => "tau",
            ParameterKind::MaxClique => "omega",
            ParameterKind::ChromaticNumber => "chi",
            ParameterKind::MinDominatingSet => "gamma",
            ParameterKind::MinIndependentDominatingSet => "i",
            ParameterKind::MinFeedbackVertexSet => "nu",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ParameterKind::MaxIndependentSet => "α",
            ParameterKind::MinVertexCover => "τ",
            ParameterKind::MaxClique => "ω",
            ParameterKind::ChromaticNumber => "χ",
            ParameterKind::MinDominatingSet => "γ",
            ParameterKind::MinIndependentDominatingSet => "i",
            ParameterKind::MinFeedbackVertexSet => "ν",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
