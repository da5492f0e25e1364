use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CentralityError>;

#[derive(Debug, Error)]
pub enum CentralityError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: edge weight must be positive, got {weight}")]
    NonPositiveWeight { line: usize, weight: f64 },

    #[error("line {line}: self-loop on node {node:?} rejected in strict mode")]
    SelfLoop { line: usize, node: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The graph is not (strongly) connected; `a` cannot reach `b`.
    #[error("{measure} requires a connected graph: node {a_label} cannot reach node {b_label}")]
    Disconnected {
        measure: &'static str,
        a: usize,
        b: usize,
        a_label: String,
        b_label: String,
    },

    #[error("{0} requires an undirected graph")]
    RequiresUndirected(&'static str),

    #[error("{0} requires unit edge weights")]
    RequiresUnitWeights(&'static str),

    #[error("{measure} is undefined: {reason}")]
    Undefined {
        measure: &'static str,
        reason: String,
    },

    #[error("{measure}: graph has {nodes} nodes, dense spectral backend is limited to {limit}")]
    Capacity {
        measure: &'static str,
        nodes: usize,
        limit: usize,
    },

    #[error("{measure} did not converge after {iterations} iterations (last change {residual:e})")]
    NotConverged {
        measure: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("{measure} diverges: {reason}")]
    Diverges {
        measure: &'static str,
        reason: String,
    },

    #[error("unknown measure {0:?}")]
    UnknownMeasure(String),

    #[error("comparison failed: {0}")]
    Comparison(String),
}

impl CentralityError {
    /// Stable, machine-readable reason token.
    pub fn reason(&self) -> &'static str {
        match self {
            CentralityError::Io { .. } => "io-error",
            CentralityError::Parse { .. } => "parse-error",
            CentralityError::NonPositiveWeight { .. } => "non-positive-weight",
            CentralityError::SelfLoop { .. } => "self-loop",
            CentralityError::InvalidArgument(_) => "invalid-argument",
            CentralityError::Disconnected { .. } => "requires-connected",
            CentralityError::RequiresUndirected(_) => "requires-undirected",
            CentralityError::RequiresUnitWeights(_) => "requires-unit-weights",
            CentralityError::Undefined { .. } => "measure-undefined",
            CentralityError::Capacity { .. } => "capacity-exceeded",
            CentralityError::NotConverged { .. } => "not-converged",
            CentralityError::Diverges { .. } => "diverges",
            CentralityError::UnknownMeasure(_) => "unknown-measure",
            CentralityError::Comparison(_) => "comparison-error",
        }
    }

    /// Process exit code: 1 usage, 2 requirement violation, 3 convergence, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CentralityError::InvalidArgument(_)
            | CentralityError::UnknownMeasure(_)
            | CentralityError::Comparison(_) => 1,
            CentralityError::Disconnected { .. }
            | CentralityError::RequiresUndirected(_)
            | CentralityError::RequiresUnitWeights(_)
            | CentralityError::Undefined { .. }
            | CentralityError::Capacity { .. } => 2,
            CentralityError::NotConverged { .. } | CentralityError::Diverges { .. } => 3,
            CentralityError::Io { .. }
            | CentralityError::Parse { .. }
            | CentralityError::NonPositiveWeight { .. }
            | CentralityError::SelfLoop { .. } => 4,
        }
    }
}
