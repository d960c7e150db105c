//! Property suites run by `vparam verify`. Every trial draws its graph from
//! the suite seed and the trial index alone, so runs are reproducible and
//! trials can be checked in parallel.

use std::time::Duration;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use vparam_core::gadgets::{verify_identity, Gadget};
use vparam_core::reductions::{
    constructive_gamma, constructive_hereditary, constructive_inddom, trivial_start, value_from_decision,
    HereditaryKind,
};
use vparam_core::{
    as_decision, exact::chromatic_coloring, generators, min_fvs, parameter_inequalities, Graph, Interrupt,
    ParameterKind, ValueOracle,
};

use crate::deadline::Deadline;
use crate::solve::{exact_solver, run_solver, SolverChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    FptVsOracle,
    Fvs,
    GadgetIdentities,
    ReductionCallBounds,
    Inequalities,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::FptVsOracle, Suite::Fvs, Suite::GadgetIdentities, Suite::ReductionCallBounds, Suite::Inequalities];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FptVsOracle => "fpt-vs-oracle",
            Suite::Fvs => "fvs",
            Suite::GadgetIdentities => "gadget-identities",
            Suite::ReductionCallBounds => "reduction-call-bounds",
            Suite::Inequalities => "inequalities",
        }
    }

    /// Largest graph the suite accepts; gadget outputs and reduction
    /// instances grow with the input.
    pub fn size_cap(self) -> usize {
        match self {
            Suite::GadgetIdentities => 8,
            Suite::ReductionCallBounds => 12,
            _ => 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub min_n: usize,
    pub max_n: usize,
    /// Budget for each trial.
    pub timeout: Duration,
}

impl SuiteConfig {
    pub fn new(trials: usize, seed: u64, min_n: usize, max_n: usize) -> Self {
        SuiteConfig { trials, seed, min_n, max_n, timeout: Duration::from_secs(60) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub min_n: usize,
    pub max_n: usize,
    pub properties: Vec<PropertyResult>,
    pub all_pass: bool,
}

impl SuiteSummary {
    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

type Check = (&'static str, Result<(), String>);

/// The graph of trial `trial`: `n` uniform in `min_n..=max_n`, edge
/// probability one of 0.2, 0.5, 0.8.
pub fn corpus_graph(cfg: &SuiteConfig, trial: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64);
    let n = rng.random_range(cfg.min_n..=cfg.max_n.max(cfg.min_n));
    let p = [0.2, 0.5, 0.8][rng.random_range(0..3usize)];
    generators::gnp(n, p, rng.next_u64())
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteSummary {
    let mut cfg = *cfg;
    cfg.max_n = cfg.max_n.min(suite.size_cap());
    if suite == Suite::GadgetIdentities {
        cfg.min_n = cfg.min_n.max(1);
    }
    cfg.min_n = cfg.min_n.min(cfg.max_n);
    let per_trial: Vec<Vec<Check>> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let g = corpus_graph(&cfg, trial);
            let stop = Deadline::after(cfg.timeout);
            let checks = match suite {
                Suite::FptVsOracle => fpt_checks(&g, &stop),
                Suite::Fvs => fvs_checks(&g, &stop),
                Suite::GadgetIdentities => gadget_checks(&g, trial as u64 ^ cfg.seed, &stop),
                Suite::ReductionCallBounds => reduction_checks(&g, &stop),
                Suite::Inequalities => vec![("inequality chain", inequality_check(&g, &stop))],
            };
            checks
                .into_iter()
                .map(|(name, r)| (name, r.map_err(|e| format!("trial {trial} ({}): {e}", g.name().unwrap_or("")))))
                .collect()
        })
        .collect();
    let mut properties: Vec<PropertyResult> = Vec::new();
    for checks in per_trial {
        for (name, outcome) in checks {
            let pos = match properties.iter().position(|p| p.name == name) {
                Some(pos) => pos,
                None => {
                    properties.push(PropertyResult { name: name.to_owned(), passed: 0, failed: 0, first_failure: None });
                    properties.len() - 1
                }
            };
            let entry = &mut properties[pos];
            match outcome {
                Ok(()) => entry.passed += 1,
                Err(e) => {
                    entry.failed += 1;
                    entry.first_failure.get_or_insert(e);
                }
            }
        }
    }
    let all_pass = properties.iter().all(|p| p.failed == 0);
    SuiteSummary { suite, trials: cfg.trials, seed: cfg.seed, min_n: cfg.min_n, max_n: cfg.max_n, properties, all_pass }
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn exact_value(g: &Graph, kind: ParameterKind, stop: &dyn Interrupt) -> Result<usize, String> {
    exact_solver().value(g, kind, stop).map_err(|e| e.to_string())
}

fn fpt_checks(g: &Graph, stop: &dyn Interrupt) -> Vec<Check> {
    let mut checks = Vec::new();
    for kind in ParameterKind::ALL {
        let name = match kind {
            ParameterKind::MaxIndependentSet => "fpt-nu alpha",
            ParameterKind::MinVertexCover => "fpt-nu tau",
            ParameterKind::MaxClique => "fpt-nu omega",
            ParameterKind::ChromaticNumber => "fpt-nu chi",
            ParameterKind::MinDominatingSet => "fpt-nu gamma",
            ParameterKind::MinIndependentDominatingSet => "fpt-nu i",
            ParameterKind::MinFeedbackVertexSet => "fpt-nu nu",
        };
        let outcome = (|| {
            let (sol, _) = run_solver(g, kind, SolverChoice::FptNu, stop).map_err(|e| e.to_string())?;
            let truth = exact_value(g, kind, stop)?;
            ensure(sol.value == truth, || format!("{kind}: fpt {} vs exact {truth}", sol.value))?;
            ensure(sol.certified, || format!("{kind}: witness not certified"))
        })();
        checks.push((name, outcome));
    }
    checks.push(("chi window", chi_window(g, stop)));
    checks
}

/// `χ(F*) ≤ k ≤ χ(F*) + 2` for the coloring found by the FPT solver.
fn chi_window(g: &Graph, stop: &dyn Interrupt) -> Result<(), String> {
    let fstar = min_fvs(g, stop).map_err(|e| e.to_string())?.fvs;
    let inner = g.induced_subgraph(&fstar).map_err(|e| e.to_string())?.graph;
    let chi_f = chromatic_coloring(&inner, stop).map_err(|e| e.to_string())?.into_iter().max().unwrap_or(0);
    let (sol, _) = run_solver(g, ParameterKind::ChromaticNumber, SolverChoice::FptNu, stop).map_err(|e| e.to_string())?;
    ensure(chi_f <= sol.value && sol.value <= chi_f + 2, || format!("k = {} outside [{chi_f}, {}]", sol.value, chi_f + 2))
}

fn fvs_checks(g: &Graph, stop: &dyn Interrupt) -> Vec<Check> {
    let result = min_fvs(g, stop);
    let minimum = match &result {
        Ok(r) => exact_value(g, ParameterKind::MinFeedbackVertexSet, stop)
            .and_then(|truth| ensure(truth == r.size, || format!("min_fvs {} vs exact {truth}", r.size))),
        Err(e) => Err(e.to_string()),
    };
    let acyclic = match &result {
        Ok(r) => ensure(r.forest_check && vparam_core::forest::leaves_forest(g, &r.fvs), || {
            format!("removing {:?} leaves a cycle", r.fvs)
        }),
        Err(e) => Err(e.to_string()),
    };
    vec![("min_fvs is minimum", minimum), ("min_fvs leaves a forest", acyclic)]
}

/// The gadget list exercised on `g`, with extra arguments drawn from `seed`.
pub fn gadgets_for(g: &Graph, seed: u64) -> Vec<Gadget> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=n.max(1));
    vec![
        Gadget::AddDominatingVertex,
        Gadget::DoubleCopy,
        Gadget::PendantMatching { vprime: generators::random_subset(n, rng.next_u64()) },
        Gadget::EdgeProduct,
        Gadget::CliqueBlowup { k: None },
        Gadget::PruneMonochromatic { coloring: generators::random_coloring(n, k, rng.next_u64()), k },
    ]
}

fn gadget_checks(g: &Graph, seed: u64, stop: &dyn Interrupt) -> Vec<Check> {
    gadgets_for(g, seed)
        .into_iter()
        .map(|gadget| {
            let outcome = verify_identity(&gadget, g, stop).map_err(|e| e.to_string()).and_then(|report| {
                let failing: Vec<&str> =
                    report.relations.iter().filter(|r| !r.holds).map(|r| r.relation.as_str()).collect();
                ensure(report.all_hold, || format!("{}: {failing:?}", report.gadget))
            });
            (gadget.name(), outcome)
        })
        .collect()
}

fn reduction_checks(g: &Graph, stop: &dyn Interrupt) -> Vec<Check> {
    let exact = exact_solver();
    let n = g.n();
    let binary = (|| {
        for kind in ParameterKind::ALL {
            let oracle = ValueOracle::new(move |h: &Graph| exact.value(h, kind, stop));
            let decision = as_decision(&oracle, kind.direction());
            let (start, range) = trivial_start(g, kind);
            let (value, trace) =
                value_from_decision(g, &decision, kind.direction(), start, range).map_err(|e| e.to_string())?;
            let truth = exact_value(g, kind, stop)?;
            ensure(value == truth as i64, || format!("{kind}: search {value} vs exact {truth}"))?;
            ensure(trace.within_bound(), || format!("{kind}: {} calls > {}", trace.oracle_calls, trace.call_bound))?;
        }
        Ok(())
    })();
    let hereditary = (|| {
        use ParameterKind::*;
        for kind in [MaxIndependentSet, MaxClique, MinVertexCover, MinFeedbackVertexSet] {
            let (sol, calls) = run_solver(g, kind, SolverChoice::ViaHereditary, stop).map_err(|e| e.to_string())?;
            let calls = calls.unwrap_or(usize::MAX);
            let truth = exact_value(g, kind, stop)?;
            ensure(sol.certified && sol.value == truth, || format!("{kind}: {} vs exact {truth}", sol.value))?;
            ensure(calls <= n + 1, || format!("{kind}: {calls} calls > n + 1"))?;
        }
        // the induced-forest size itself, as a hereditary maximum
        let forest = ValueOracle::new(move |h: &Graph| exact.max_induced_forest(h, stop).map(|s| s.len()));
        let (kept, trace) =
            constructive_hereditary(g, &forest, HereditaryKind::InducedForest)
                .map_err(|e| e.to_string())?;
        let truth = n - exact_value(g, MinFeedbackVertexSet, stop)?;
        ensure(kept.len() == truth && trace.oracle_calls <= n + 1, || format!("induced forest {} vs {truth}", kept.len()))
    })();
    let gamma = (|| {
        let oracle = ValueOracle::new(move |h: &Graph| exact.value(h, ParameterKind::MinDominatingSet, stop)).with_logging();
        let (sol, trace) = constructive_gamma(g, &oracle).map_err(|e| e.to_string())?;
        let truth = exact_value(g, ParameterKind::MinDominatingSet, stop)?;
        ensure(sol.certified && sol.value == truth, || format!("gamma {} vs exact {truth}", sol.value))?;
        ensure(trace.oracle_calls <= n * truth + 1, || format!("{} calls > n·γ + 1", trace.oracle_calls))?;
        for call in oracle.call_log() {
            ensure(call.instance_size <= 2 * n, || format!("instance of {} vertices", call.instance_size))?;
            let answer = call.answer.unwrap_or(usize::MAX);
            ensure(answer <= truth + 1, || format!("gadget gamma {answer} > γ + 1"))?;
        }
        Ok(())
    })();
    let inddom = (|| {
        let oracle = ValueOracle::new(move |h: &Graph| exact.value(h, ParameterKind::MinIndependentDominatingSet, stop));
        let (sol, trace) = constructive_inddom(g, &oracle).map_err(|e| e.to_string())?;
        let truth = exact_value(g, ParameterKind::MinIndependentDominatingSet, stop)?;
        ensure(sol.certified && sol.value == truth, || format!("i {} vs exact {truth}", sol.value))?;
        ensure(trace.oracle_calls <= n * truth + 1, || format!("{} calls > n·i + 1", trace.oracle_calls))
    })();
    vec![
        ("value_from_decision", binary),
        ("constructive_hereditary", hereditary),
        ("constructive_gamma", gamma),
        ("constructive_inddom", inddom),
    ]
}

/// No relation of the inequality chain fails on the exact values of `g`.
pub fn inequality_check(g: &Graph, stop: &dyn Interrupt) -> Result<(), String> {
    let values = exact_solver().all_values(g, stop).map_err(|e| e.to_string())?;
    let violated = parameter_inequalities(&values, g.n(), g.max_degree());
    ensure(violated.is_empty(), || format!("{violated:?} fail for {values:?}"))
}
