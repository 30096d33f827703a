use thiserror::Error;

use crate::graph::NodeId;

/// Errors raised while reading the edge-list text format. Every variant
/// names the 1-based line it was raised on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: missing header \"n m\"")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed line ({reason})")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: self-loop on node {node}")]
    SelfLoop { line: usize, node: NodeId },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: NodeId, v: NodeId },
    #[error("line {line}: node id {id} out of range for n = {n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: header declares {expected} edges but {found} were given")]
    EdgeCount {
        line: usize,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("node {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: NodeId, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph needs at least {min} nodes, got {n}")]
    TooFewNodes { min: usize, n: usize },
    #[error("{{{u},{v}}} is not an edge")]
    EdgeAbsent { u: NodeId, v: NodeId },
    #[error("edge {{{u},{v}}} is not a bridge")]
    NotABridge { u: NodeId, v: NodeId },
    #[error("nodes must be distinct, got {0} twice")]
    SameNode(NodeId),
    #[error("node {0} is isolated")]
    IsolatedNode(NodeId),
    #[error("tree enumeration limited to n <= {cap}, requested {n}")]
    TreeCapExceeded { n: usize, cap: usize },
    #[error("edge probability must lie in (0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("decay parameter must lie strictly between 0 and 1, got {0}")]
    InvalidDelta(String),
    #[error("score vector has {found} entries, graph has {expected} nodes")]
    NodeCountMismatch { expected: usize, found: usize },
    #[error("invalid distance list: {0}")]
    InvalidList(String),
    #[error("sum {sum} out of range for n = {n} (allowed {min}..={max})")]
    SumOutOfRange {
        sum: usize,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("invalid shift indices: {0}")]
    InvalidIndices(String),
    #[error("list entry at position {position} is {value}, needs at least {required}")]
    MinEntry {
        position: usize,
        value: usize,
        required: usize,
    },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("unknown measure {0:?}")]
    UnknownMeasure(String),
    #[error("unknown axiom {0:?}")]
    UnknownAxiom(String),
    #[error("fixture {name} failed its load-time check: {detail}")]
    FixtureMismatch { name: String, detail: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
