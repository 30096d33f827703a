//! Exact centrality measures, Condorcet comparisons and verification tools
//! for small undirected graphs.

pub mod canonical;
pub mod centrality;
pub mod condorcet;
pub mod error;
pub mod graph;
pub mod harness;
mod linalg;
pub mod random_walk;
pub mod score;

pub use error::{Error, ParseError, Result};
pub use graph::{Graph, NodeId};
pub use score::{Rational, Ranking, ScoreVector};
