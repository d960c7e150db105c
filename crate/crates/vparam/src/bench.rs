//! Runtime measurements over seeded graph families.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use vparam_core::{generators, Graph, ParameterKind};

use crate::report::Status;
use crate::solve::{solve_param, SolverChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Family {
    /// `G(n, p)`.
    Gnp,
    /// A random tree plus a fixed number of extra edges.
    TreePlus,
    Cycle,
    Complete,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gnp => "gnp",
            Family::TreePlus => "tree-plus",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }

    pub fn build(self, n: usize, p: f64, extra: usize, seed: u64) -> Graph {
        match self {
            Family::Gnp => generators::gnp(n, p, seed),
            Family::TreePlus => generators::tree_plus_edges(n, extra, seed),
            Family::Cycle => generators::cycle(n.max(3)),
            Family::Complete => generators::complete(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: &'static str,
    pub n: usize,
    pub m: usize,
    pub parameter: &'static str,
    pub solver: &'static str,
    pub value: Option<usize>,
    pub status: Status,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub parameter: ParameterKind,
    pub solver: SolverChoice,
    pub p: f64,
    pub extra: usize,
    pub seed: u64,
    pub timeout: Duration,
}

pub fn run_bench(plan: &BenchPlan) -> Vec<BenchRow> {
    plan.sizes
        .iter()
        .map(|&n| {
            let g = plan.family.build(n, plan.p, plan.extra, plan.seed);
            let report = solve_param(&g, plan.parameter, plan.solver, plan.timeout);
            BenchRow {
                family: plan.family.name(),
                n: g.n(),
                m: g.edge_count(),
                parameter: plan.parameter.name(),
                solver: plan.solver.name(),
                value: report.value,
                status: report.status,
                runtime_ms: report.runtime_ms,
            }
        })
        .collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("family,n,m,parameter,solver,value,status,runtime_ms\n");
    for r in rows {
        let value = r.value.map(|v| v.to_string()).unwrap_or_default();
        let status = serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        let _ = writeln!(out, "{},{},{},{},{},{},{},{}", r.family, r.n, r.m, r.parameter, r.solver, value, status, r.runtime_ms);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_per_size() {
        let plan = BenchPlan {
            family: Family::TreePlus,
            sizes: vec![10, 20],
            parameter: ParameterKind::MinDominatingSet,
            solver: SolverChoice::FptNu,
            p: 0.0,
            extra: 3,
            seed: 1,
            timeout: Duration::from_secs(60),
        };
        let rows = run_bench(&plan);
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.status == Status::Ok && r.m == r.n - 1 + 3));
        let csv = to_csv(&rows);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.lines().nth(1).unwrap().starts_with("tree-plus,10,12,gamma,fpt-nu,"));
    }
}
