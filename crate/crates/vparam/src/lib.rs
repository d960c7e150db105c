//! File formats, JSON reports, wall-clock deadlines, verification suites and
//! benchmarks on top of `vparam-core`. The `vparam` binary is a thin layer
//! over this library.

pub mod bench;
pub mod deadline;
pub mod format;
pub mod report;
pub mod solve;
pub mod suites;

pub use deadline::Deadline;
pub use format::{parse_graph, write_graph, GraphFormat, ParseError};
pub use report::{GadgetReportJson, MatrixReport, SolveReport, Status};
pub use solve::{matrix, solve_param, SolverChoice};
pub use suites::{run_suite, Suite, SuiteConfig, SuiteSummary};
