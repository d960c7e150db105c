//! Instrumented oracles: every query is counted, optionally logged.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use spin::Mutex;

use crate::error::Result;
use crate::exact::ExactSolver;
use crate::graph::{Direction, Graph, ParameterKind};
use crate::interrupt::Unlimited;

/// One logged oracle query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCall {
    pub instance_size: usize,
    /// `None` when the backing solver failed.
    pub answer: Option<usize>,
}

type ValueFn<'a> = dyn Fn(&Graph) -> Result<usize> + Send + Sync + 'a;
type PredicateFn<'a> = dyn Fn(&Graph, i64) -> Result<bool> + Send + Sync + 'a;

/// Answers the optimum of one fixed parameter.
pub struct ValueOracle<'a> {
    solver: Box<ValueFn<'a>>,
    calls: AtomicUsize,
    log: Option<Mutex<Vec<OracleCall>>>,
}

impl<'a> ValueOracle<'a> {
    pub fn new(solver: impl Fn(&Graph) -> Result<usize> + Send + Sync + 'a) -> Self {
        ValueOracle { solver: Box::new(solver), calls: AtomicUsize::new(0), log: None }
    }

    /// Backed by [`ExactSolver`] with no time budget.
    pub fn exact(kind: ParameterKind, solver: ExactSolver) -> Self {
        Self::new(move |g| solver.value(g, kind, &Unlimited))
    }

    /// Backed by the exact maximum induced forest size (`n − ν`).
    pub fn exact_induced_forest(solver: ExactSolver) -> Self {
        Self::new(move |g| solver.max_induced_forest(g, &Unlimited).map(|s| s.len()))
    }

    pub fn with_logging(mut self) -> Self {
        self.log = Some(Mutex::new(Vec::new()));
        self
    }

    pub fn query(&self, g: &Graph) -> Result<usize> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        let answer = (self.solver)(g);
        if let Some(log) = &self.log {
            log.lock().push(OracleCall { instance_size: g.n(), answer: answer.as_ref().ok().copied() });
        }
        answer
    }

    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }

    /// Logged calls in order; empty when logging is off.
    pub fn call_log(&self) -> Vec<OracleCall> {
        self.log.as_ref().map(|l| l.lock().clone()).unwrap_or_default()
    }
}

enum Source<'o> {
    Value { oracle: &'o ValueOracle<'o>, direction: Direction },
    Predicate { f: Box<PredicateFn<'o>>, calls: AtomicUsize },
}

/// Answers `f(x) ≥ k` (maximization) or `f(x) ≤ k` (minimization).
pub struct DecisionOracle<'o> {
    source: Source<'o>,
}

impl<'o> DecisionOracle<'o> {
    /// A standalone decision procedure with its own call counter.
    pub fn from_predicate(f: impl Fn(&Graph, i64) -> Result<bool> + Send + Sync + 'o) -> Self {
        DecisionOracle { source: Source::Predicate { f: Box::new(f), calls: AtomicUsize::new(0) } }
    }

    pub fn query(&self, g: &Graph, threshold: i64) -> Result<bool> {
        match &self.source {
            Source::Value { oracle, direction } => {
                let value = oracle.query(g)? as i64;
                Ok(match direction {
                    Direction::Maximize => value >= threshold,
                    Direction::Minimize => value <= threshold,
                })
            }
            Source::Predicate { f, calls } => {
                calls.fetch_add(1, Ordering::SeqCst);
                f(g, threshold)
            }
        }
    }

    /// Shared with the underlying value oracle when built by [`as_decision`].
    pub fn calls(&self) -> usize {
        match &self.source {
            Source::Value { oracle, .. } => oracle.calls(),
            Source::Predicate { calls, .. } => calls.load(Ordering::SeqCst),
        }
    }
}

/// The decision version of a value oracle; queries count against `oracle`.
pub fn as_decision<'o>(oracle: &'o ValueOracle<'o>, direction: Direction) -> DecisionOracle<'o> {
    DecisionOracle { source: Source::Value { oracle, direction } }
}
