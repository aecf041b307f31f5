//! Error type shared by every module in the crate.
//!
//! All fallible operations return [`Result`]. Variants carry enough context
//! to produce a useful one-line diagnostic; none of them capture backtraces
//! or wrap foreign errors, so the type stays `Clone` and comparable in tests.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode the toolkit can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An edit operation cannot be applied to the given graph
    /// (adding something already present, removing something absent,
    /// or removing a vertex that still has incident edges).
    #[error("edit not applicable: {reason}")]
    InapplicableEdit { reason: String },

    /// A generator was asked for fewer vertices than its shape requires.
    #[error("invalid size {got}: need at least {min}")]
    InvalidSize { got: usize, min: usize },

    /// Two graphs passed to a single-edit operation are not at edit distance 1.
    #[error("graphs are not neighbors: edit distance is {ged}, expected 1")]
    NotNeighbors { ged: usize },

    /// The vertex universe would produce a metagraph too large to enumerate.
    #[error("universe of {vertices} vertices exceeds cap {cap}; refusing to enumerate 2^({vertices} choose 2) graphs")]
    UniverseTooLarge { vertices: usize, cap: usize },

    /// A graph mentions a vertex that is not part of the declared universe.
    #[error("vertex '{vertex}' is outside the declared universe")]
    VertexOutsideUniverse { vertex: String },

    /// A graph's vertex set does not equal the universe it must be encoded over.
    #[error("vertex set mismatch: {reason}")]
    VertexMismatch { reason: String },

    /// A shortest-path weight function returned a zero or negative weight.
    #[error("non-positive weight {weight} on a metagraph edge")]
    NonPositiveWeight { weight: f64 },

    /// A sampling radius exceeds the number of distinct vertex pairs.
    #[error("radius {radius} exceeds the {max} vertex pairs available")]
    RadiusTooLarge { radius: usize, max: usize },

    /// Sampling requires at least one vertex to form pairs over.
    #[error("cannot sample around a graph with an empty vertex set")]
    EmptyVertexSet,

    /// Greedy path construction requires the start's edges to be a subset of
    /// the target's edges over the same vertex set.
    #[error("graphs are not nested: {reason}")]
    NotNested { reason: String },

    /// A dynamic-network experiment needs at least two snapshots.
    #[error("need at least 2 timesteps, got {got}")]
    TooFewTimesteps { got: usize },

    /// Rank statistics were requested but every timestep was skipped.
    #[error("no usable records: every timestep had radius 0")]
    NoUsableRecords,

    /// An event trace contained no events.
    #[error("event trace is empty")]
    EmptyTrace,

    /// Event timestamps must be non-decreasing.
    #[error("non-monotone timestamp at line {line}: {got} is earlier than {previous}")]
    NonMonotoneTimestamps { line: usize, got: u64, previous: u64 },

    /// A line of input text could not be parsed.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// Self-loops are not representable: both edge endpoints were '{vertex}'.
    #[error("self-loop on vertex '{vertex}'")]
    SelfLoop { vertex: String },

    /// An edge list declared the same edge twice.
    #[error("duplicate edge '{a} {b}' at line {line}")]
    DuplicateEdge { line: usize, a: String, b: String },

    /// Snapshots of one dynamic network must share a single vertex set.
    #[error("timestep {timestep} has a different vertex set from timestep 0")]
    UniverseMismatch { timestep: usize },
}
