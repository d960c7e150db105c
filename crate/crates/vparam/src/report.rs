//! JSON report types. Field names and order are a compatibility surface.

use serde::Serialize;
use vparam_core::gadgets::{Comparison, GadgetReport};
use vparam_core::{Graph, ParameterValues};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Timeout,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Timeout => 2,
            Status::Error => 1,
        }
    }

    /// The worse of two statuses; a timeout outranks an error.
    pub fn worst(self, other: Status) -> Status {
        match (self, other) {
            (Status::Timeout, _) | (_, Status::Timeout) => Status::Timeout,
            (Status::Error, _) | (_, Status::Error) => Status::Error,
            _ => Status::Ok,
        }
    }
}

/// The graph's name, or its fingerprint in hex.
pub fn graph_label(g: &Graph) -> String {
    g.name().map(str::to_owned).unwrap_or_else(|| format!("{:016x}", g.fingerprint()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub graph: String,
    pub parameter: String,
    pub value: Option<usize>,
    /// Sorted vertex ids, or one color (from 1) per vertex for `chi`.
    pub witness: Option<Vec<usize>>,
    pub solver: String,
    pub oracle_calls: Option<usize>,
    pub runtime_ms: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MatrixValues {
    pub alpha: Option<usize>,
    pub tau: Option<usize>,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub gamma: Option<usize>,
    pub i: Option<usize>,
    pub nu: Option<usize>,
}

impl MatrixValues {
    pub fn slot(&mut self, name: &str) -> &mut Option<usize> {
        match name {
            "alpha" => &mut self.alpha,
            "tau" => &mut self.tau,
            "omega" => &mut self.omega,
            "chi" => &mut self.chi,
            "gamma" => &mut self.gamma,
            "i" => &mut self.i,
            "nu" => &mut self.nu,
            other => panic!("unknown parameter {other}"),
        }
    }

    pub fn complete(&self) -> Option<ParameterValues> {
        Some(ParameterValues {
            alpha: self.alpha?,
            tau: self.tau?,
            omega: self.omega?,
            chi: self.chi?,
            gamma: self.gamma?,
            inddom: self.i?,
            nu: self.nu?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixEntry {
    pub parameter: String,
    pub status: Status,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub graph: String,
    pub n: usize,
    pub max_degree: usize,
    pub solver: String,
    pub values: MatrixValues,
    /// Relations of the inequality chain that fail; `null` when some value is missing.
    pub inequality_violations: Option<Vec<String>>,
    pub entries: Vec<MatrixEntry>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationJson {
    pub relation: String,
    pub lhs: usize,
    pub rhs: usize,
    pub comparison: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetReportJson {
    pub gadget: String,
    pub base_graph: String,
    pub input_n: usize,
    pub output_n: usize,
    pub expected: Vec<String>,
    pub measured: Vec<RelationJson>,
    pub all_hold: bool,
}

impl From<&GadgetReport> for GadgetReportJson {
    fn from(r: &GadgetReport) -> Self {
        GadgetReportJson {
            gadget: r.gadget.clone(),
            base_graph: r.base_graph.clone(),
            input_n: r.input_n,
            output_n: r.output_n,
            expected: r.relations.iter().map(|c| c.relation.clone()).collect(),
            measured: r
                .relations
                .iter()
                .map(|c| RelationJson {
                    relation: c.relation.clone(),
                    lhs: c.lhs,
                    rhs: c.rhs,
                    comparison: match c.comparison {
                        Comparison::Eq => "=",
                        Comparison::Le => "<=",
                        Comparison::Ge => ">=",
                    },
                    holds: c.holds,
                })
                .collect(),
            all_hold: r.all_hold,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
