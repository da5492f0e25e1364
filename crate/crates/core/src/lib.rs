//! Node centrality measures for complex networks.

pub mod betweenness;
pub mod communicability;
pub mod decomposition;
pub mod distance;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod geodesic;
pub mod graph;
pub mod gravity;
pub mod local;
pub mod output;
pub mod parallel;
pub mod rank;
pub mod registry;
pub mod score;
pub mod seeds;
pub mod spectral;
pub mod vitality;

pub use error::{CentralityError, Result};
pub use graph::Graph;
pub use score::{Score, ScoreVector};
