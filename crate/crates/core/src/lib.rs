//! Exact and fixed-parameter algorithms for seven classical vertex parameters
//! of simple undirected graphs.
//!
//! The parameters are the independence number `α`, vertex cover number `τ`,
//! clique number `ω`, chromatic number `χ`, domination number `γ`, independent
//! domination number `i` and feedback vertex number `ν`.
//!
//! The crate is `no_std` (it needs `alloc`). Wall-clock budgets are supplied by
//! the caller through the [`Interrupt`] trait; the `vparam` crate provides a
//! deadline-based implementation together with file formats and the CLI.
//!
//! Layout:
//! - [`graph`], [`forest`], [`inequalities`]: representation, rooted-forest
//!   decomposition and the parameter inequality chain.
//! - [`exact`]: brute-force ground truth for all seven parameters.
//! - [`oracle`]: instrumented value and decision oracles.
//! - [`fvs`]: minimum feedback vertex set by bounded search.
//! - [`fpt`]: the algorithms parameterized by the feedback vertex number.
//! - [`reductions`]: value-from-decision and constructive-from-value reductions.
//! - [`gadgets`]: graph constructions with checked parameter identities.
//! - [`generators`]: named graphs and seeded random families.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod exact;
pub mod forest;
pub mod fpt;
pub mod fvs;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod inequalities;
pub mod interrupt;
pub mod oracle;
pub mod reductions;
pub mod solution;

pub use error::{Error, Result};
pub use exact::ExactSolver;
pub use forest::{decompose_forest, MergeStep, RootedForestPlan, RootedTree};
pub use fvs::{min_fvs, FvsResult, Multigraph};
pub use graph::{Direction, Graph, Induced, ParameterKind, WitnessKind};
pub use inequalities::{parameter_inequalities, ParameterValues, Relation};
pub use interrupt::{Interrupt, Unlimited};
pub use oracle::{as_decision, DecisionOracle, OracleCall, ValueOracle};
pub use solution::{verify_witness, VertexSetSolution, Witness};
