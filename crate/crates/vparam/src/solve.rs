//! Solver selection for a single parameter, and the all-parameter matrix.

use std::time::{Duration, Instant};

use vparam_core::fpt::{
    chromatic_fpt_nu, clique_fpt_nu, dominating_fpt_nu, inddom_fpt_nu, independent_set_fpt_nu,
    vertex_cover_fpt_nu,
};
use vparam_core::reductions::{
    constructive_gamma, constructive_inddom, constructive_via_hereditary, trivial_start, value_from_decision,
};
use vparam_core::{
    as_decision, min_fvs, parameter_inequalities, Error, ExactSolver, Graph, Interrupt, ParameterKind,
    ValueOracle, VertexSetSolution, Witness,
};

use crate::deadline::Deadline;
use crate::report::{graph_label, MatrixEntry, MatrixReport, MatrixValues, SolveReport, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum SolverChoice {
    Exact,
    FptNu,
    ViaHereditary,
    ViaGammaReduction,
    ViaInddomReduction,
    ViaBinarySearch,
}

impl SolverChoice {
    pub fn name(self) -> &'static str {
        match self {
            SolverChoice::Exact => "exact",
            SolverChoice::FptNu => "fpt-nu",
            SolverChoice::ViaHereditary => "via-hereditary",
            SolverChoice::ViaGammaReduction => "via-gamma-reduction",
            SolverChoice::ViaInddomReduction => "via-inddom-reduction",
            SolverChoice::ViaBinarySearch => "via-binary-search",
        }
    }

    pub fn supports(self, kind: ParameterKind) -> bool {
        use ParameterKind::*;
        match self {
            SolverChoice::Exact | SolverChoice::FptNu | SolverChoice::ViaBinarySearch => true,
            SolverChoice::ViaHereditary => {
                matches!(kind, MaxIndependentSet | MaxClique | MinVertexCover | MinFeedbackVertexSet)
            }
            SolverChoice::ViaGammaReduction => kind == MinDominatingSet,
            SolverChoice::ViaInddomReduction => kind == MinIndependentDominatingSet,
        }
    }
}

/// Exact solver with the ceiling raised to the 64-vertex mask limit.
pub fn exact_solver() -> ExactSolver {
    ExactSolver::new(ExactSolver::MAX_CEILING)
}

fn oracle_for<'a>(kind: ParameterKind, stop: &'a dyn Interrupt) -> ValueOracle<'a> {
    let exact = exact_solver();
    ValueOracle::new(move |g: &Graph| exact.value(g, kind, stop))
}

/// Runs one solver; returns the solution and the oracle calls made, if any.
pub fn run_solver(
    g: &Graph,
    kind: ParameterKind,
    solver: SolverChoice,
    stop: &dyn Interrupt,
) -> vparam_core::Result<(VertexSetSolution, Option<usize>)> {
    use ParameterKind::*;
    if !solver.supports(kind) {
        return Err(Error::Precondition("solver does not support this parameter"));
    }
    match solver {
        SolverChoice::Exact => exact_solver().solve(g, kind, stop).map(|s| (s, None)),
        SolverChoice::FptNu => {
            let sol = match kind {
                MaxIndependentSet => independent_set_fpt_nu(g, stop)?,
                MinVertexCover => vertex_cover_fpt_nu(g, stop)?,
                MaxClique => clique_fpt_nu(g, stop)?,
                ChromaticNumber => chromatic_fpt_nu(g, stop)?,
                MinDominatingSet => dominating_fpt_nu(g, stop)?,
                MinIndependentDominatingSet => inddom_fpt_nu(g, stop)?,
                MinFeedbackVertexSet => VertexSetSolution::from_vertices(g, kind, min_fvs(g, stop)?.fvs),
            };
            Ok((sol, None))
        }
        SolverChoice::ViaHereditary => {
            let exact = exact_solver();
            let oracle = match kind {
                MinFeedbackVertexSet => {
                    ValueOracle::new(move |h: &Graph| exact.max_induced_forest(h, stop).map(|s| s.len()))
                }
                MinVertexCover => oracle_for(MaxIndependentSet, stop),
                _ => oracle_for(kind, stop),
            };
            let (sol, trace) = constructive_via_hereditary(g, &oracle, kind)?;
            Ok((sol, Some(trace.oracle_calls)))
        }
        SolverChoice::ViaGammaReduction => {
            let (sol, trace) = constructive_gamma(g, &oracle_for(kind, stop))?;
            Ok((sol, Some(trace.oracle_calls)))
        }
        SolverChoice::ViaInddomReduction => {
            let (sol, trace) = constructive_inddom(g, &oracle_for(kind, stop))?;
            Ok((sol, Some(trace.oracle_calls)))
        }
        SolverChoice::ViaBinarySearch => {
            let oracle = oracle_for(kind, stop);
            let decision = as_decision(&oracle, kind.direction());
            let (start, range) = trivial_start(g, kind);
            let (value, trace) = value_from_decision(g, &decision, kind.direction(), start, range)?;
            // the decision oracle yields only the value; the witness comes from the exact solver
            let sol = exact_solver().solve(g, kind, stop)?;
            if sol.value as i64 != value {
                return Err(Error::ContractViolation(format!(
                    "binary search found {value}, exact solver {}",
                    sol.value
                )));
            }
            Ok((sol, Some(trace.oracle_calls)))
        }
    }
}

fn witness_list(w: &Witness) -> Vec<usize> {
    match w {
        Witness::Vertices(v) | Witness::Coloring(v) => v.clone(),
    }
}

pub fn solve_param(g: &Graph, kind: ParameterKind, solver: SolverChoice, timeout: Duration) -> SolveReport {
    let started = Instant::now();
    let deadline = Deadline::after(timeout);
    let outcome = run_solver(g, kind, solver, &deadline);
    let runtime_ms = started.elapsed().as_millis() as u64;
    let mut report = SolveReport {
        graph: graph_label(g),
        parameter: kind.name().to_owned(),
        value: None,
        witness: None,
        solver: solver.name().to_owned(),
        oracle_calls: None,
        runtime_ms,
        status: Status::Ok,
        error: None,
    };
    match outcome {
        Ok((sol, calls)) if sol.certified => {
            report.value = Some(sol.value);
            report.witness = Some(witness_list(&sol.witness));
            report.oracle_calls = calls;
        }
        Ok(_) => {
            report.status = Status::Error;
            report.error = Some("witness failed verification".to_owned());
        }
        Err(Error::Timeout) => report.status = Status::Timeout,
        Err(e) => {
            report.status = Status::Error;
            report.error = Some(e.to_string());
        }
    }
    report
}

/// All seven parameters with one solver. Parameters the solver does not
/// support fall back to the exact solver.
pub fn matrix(g: &Graph, solver: SolverChoice, timeout: Duration) -> MatrixReport {
    let mut values = MatrixValues::default();
    let mut entries = Vec::new();
    let mut status = Status::Ok;
    for kind in ParameterKind::ALL {
        let chosen = if solver.supports(kind) { solver } else { SolverChoice::Exact };
        let r = solve_param(g, kind, chosen, timeout);
        *values.slot(kind.name()) = r.value;
        status = status.worst(r.status);
        entries.push(MatrixEntry { parameter: r.parameter, status: r.status, runtime_ms: r.runtime_ms, error: r.error });
    }
    let inequality_violations: Option<Vec<String>> = values.complete().map(|v| {
        parameter_inequalities(&v, g.n(), g.max_degree()).into_iter().map(|r| r.as_str().to_owned()).collect()
    });
    if matches!(&inequality_violations, Some(v) if !v.is_empty()) {
        status = status.worst(Status::Error);
    }
    MatrixReport {
        graph: graph_label(g),
        n: g.n(),
        max_degree: g.max_degree(),
        solver: solver.name().to_owned(),
        values,
        inequality_violations,
        entries,
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use vparam_core::generators;

    const MINUTE: Duration = Duration::from_secs(60);

    #[test]
    fn spec_param_examples() {
        let r = solve_param(&generators::cycle(4), ParameterKind::MinDominatingSet, SolverChoice::FptNu, MINUTE);
        assert_eq!((r.value, r.status), (Some(2), Status::Ok));
        let r = solve_param(&Graph::empty(1), ParameterKind::MaxIndependentSet, SolverChoice::Exact, MINUTE);
        assert_eq!(r.value, Some(1));
        let r = solve_param(&generators::cycle(5), ParameterKind::ChromaticNumber, SolverChoice::FptNu, MINUTE);
        assert_eq!(r.value, Some(3));
    }

    #[test]
    fn every_solver_agrees_where_supported() {
        let g = generators::gnp(9, 0.4, 3);
        for kind in ParameterKind::ALL {
            let truth = solve_param(&g, kind, SolverChoice::Exact, MINUTE).value.unwrap();
            for solver in [
                SolverChoice::FptNu,
                SolverChoice::ViaHereditary,
                SolverChoice::ViaGammaReduction,
                SolverChoice::ViaInddomReduction,
                SolverChoice::ViaBinarySearch,
            ] {
                let r = solve_param(&g, kind, solver, MINUTE);
                if solver.supports(kind) {
                    assert_eq!(r.value, Some(truth), "{kind} via {}", solver.name());
                    assert_eq!(r.oracle_calls.is_some(), solver != SolverChoice::FptNu);
                } else {
                    assert_eq!(r.status, Status::Error);
                }
            }
        }
    }

    #[test]
    fn zero_budget_times_out() {
        let r = solve_param(&generators::gnp(20, 0.5, 1), ParameterKind::MinDominatingSet, SolverChoice::Exact, Duration::ZERO);
        assert_eq!(r.status, Status::Timeout);
        assert_eq!(r.status.exit_code(), 2);
    }

    #[test]
    fn matrix_examples() {
        let m = matrix(&generators::cycle(5), SolverChoice::FptNu, MINUTE);
        let v = &m.values;
        assert_eq!(
            [v.alpha, v.tau, v.omega, v.chi, v.gamma, v.i, v.nu],
            [2, 3, 2, 3, 2, 2, 1].map(Some)
        );
        assert_eq!(m.inequality_violations, Some(vec![]));
        let m = matrix(&Graph::empty(1), SolverChoice::Exact, MINUTE);
        assert_eq!(m.values.complete().unwrap().tau, 0);
        let m = matrix(&Graph::empty(0), SolverChoice::Exact, MINUTE);
        assert_eq!(m.values, MatrixValues {
            alpha: Some(0), tau: Some(0), omega: Some(0), chi: Some(0), gamma: Some(0), i: Some(0), nu: Some(0)
        });
        assert_eq!(m.status, Status::Ok);
    }
}
