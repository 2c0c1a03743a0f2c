use thiserror::Error;

use crate::hypergraph::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A documented precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid hypergraph: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("hypergraph is not connected")]
    NotConnected,

    /// An exhaustive search would exceed its configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error(
        "no convergence after {iterations} iterations; last bracket [{lower}, {upper}]"
    )]
    NoConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    #[error("operation would create a repeated edge {0:?}")]
    MultiEdge(Vec<usize>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no sign change bracketing the largest root")]
    NoSignChange,
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
