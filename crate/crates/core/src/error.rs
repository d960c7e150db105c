use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id outside `0..n`.
    InvalidVertex { vertex: usize, n: usize },
    /// Simple graphs carry no self-loops.
    SelfLoop { vertex: usize },
    /// The input was required to be acyclic; `vertex` lies on a cycle.
    NotAForest { vertex: usize },
    /// The exact solver refuses instances above its configured ceiling.
    TooLarge { n: usize, ceiling: usize },
    /// The FPT solvers index subsets of the feedback vertex set by machine words.
    ParameterTooLarge { parameter: usize, limit: usize },
    /// The caller's [`crate::Interrupt`] fired.
    Timeout,
    /// An operation's documented precondition does not hold.
    Precondition(&'static str),
    /// An oracle or internal table broke its contract.
    ContractViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::NotAForest { vertex } => write!(f, "graph is not a forest: vertex {vertex} lies on a cycle"),
            Error::TooLarge { n, ceiling } => {
                write!(f, "instance with {n} vertices exceeds the exact-solver ceiling of {ceiling}")
            }
            Error::ParameterTooLarge { parameter, limit } => {
                write!(f, "parameter value {parameter} exceeds the supported limit {limit}")
            }
            Error::Timeout => f.write_str("time budget exceeded"),
            Error::Precondition(what) => write!(f, "precondition failed: {what}"),
            Error::ContractViolation(what) => write!(f, "contract violation: {what}"),
        }
    }
}

impl core::error::Error for Error {}
