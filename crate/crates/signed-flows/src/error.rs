use std::fmt;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph file input.
    Parse { line: usize, message: String },
    /// A group was described with a non-positive cyclic order or too many factors.
    InvalidGroup(String),
    /// Two elements from different groups were combined.
    GroupMismatch,
    /// The operation requires a connected graph.
    Disconnected,
    /// The operation requires an unbalanced graph.
    BalancedGraph,
    /// An edge id outside `0..m` was used.
    EdgeOutOfRange { edge: usize, edge_count: usize },
    /// A vertex id outside `0..n` was used.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// The root edge of an orientation must be negative.
    PositiveRootEdge(usize),
    /// Input graph is not a tree.
    NotATree(String),
    /// The element is not of order dividing 2.
    NotInvolution,
    /// The edge assignment violates the conservation law.
    NotConservative,
    /// An edge order must be a permutation of `0..m`.
    InvalidOrder(String),
    /// The enumeration would exceed the configured work budget.
    Budget { required: u128, limit: u64 },
    /// Graphs are limited to 64 edges.
    TooManyEdges { edges: usize, limit: usize },
    /// A precondition of the requested check does not hold for this graph.
    Unsupported(String),
    /// Internal consistency violation; indicates a bug.
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse-error",
            Error::InvalidGroup(_) => "invalid-group",
            Error::GroupMismatch => "group-mismatch",
            Error::Disconnected => "disconnected",
            Error::BalancedGraph => "balanced-graph",
            Error::EdgeOutOfRange { .. } => "edge-out-of-range",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::PositiveRootEdge(_) => "positive-root-edge",
            Error::NotATree(_) => "not-a-tree",
            Error::NotInvolution => "not-involution",
            Error::NotConservative => "not-conservative",
            Error::InvalidOrder(_) => "invalid-order",
            Error::Budget { .. } => "budget-exceeded",
            Error::TooManyEdges { .. } => "too-many-edges",
            Error::Unsupported(_) => "unsupported",
            Error::Internal(_) => "internal",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::InvalidGroup(msg) => write!(f, "invalid group: {msg}"),
            Error::GroupMismatch => write!(f, "elements belong to different groups"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::BalancedGraph => write!(f, "graph is balanced"),
            Error::EdgeOutOfRange { edge, edge_count } => {
                write!(f, "edge id {edge} out of range (graph has {edge_count} edges)")
            }
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex id {vertex} out of range (graph has {vertex_count} vertices)")
            }
            Error::PositiveRootEdge(e) => write!(f, "root edge {e} is positive"),
            Error::NotATree(msg) => write!(f, "not a tree: {msg}"),
            Error::NotInvolution => write!(f, "element is not of order dividing 2"),
            Error::NotConservative => write!(f, "assignment violates conservation"),
            Error::InvalidOrder(msg) => write!(f, "invalid edge order: {msg}"),
            Error::Budget { required, limit } => {
                write!(f, "work budget exceeded: {required} > {limit}")
            }
            Error::TooManyEdges { edges, limit } => {
                write!(f, "graph has {edges} edges, limit is {limit}")
            }
            Error::Unsupported(msg) => write!(f, "unsupported input: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Work cap for exponential enumerations.
///
/// All potentially exponential operations take a budget and fail with
/// [`Error::Budget`] instead of running away. The unit is "candidate
/// states visited" (edge subsets, value assignments, vertex subsets).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    pub fn check(&self, required: u128) -> Result<()> {
        if required > self.0 as u128 {
            Err(Error::Budget { required, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
