use thiserror::Error;

/// Crate-wide error type. Every fallible operation reports through this enum
/// so callers (and the CLI) can map failures to exit codes uniformly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An edge endpoint is out of range or the edge is a self-loop.
    #[error("invalid edge ({0}, {1}): endpoint out of range or self-loop")]
    InvalidEdge(usize, usize),

    /// A vertex argument is not in 0..n.
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    InvalidVertex { v: usize, n: usize },

    /// The operation is only defined for connected graphs.
    #[error("graph is not connected")]
    Disconnected,

    #[error("{what} requires n >= {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("{what} supports n <= {max}, got {got}")]
    TooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },

    /// Malformed graph6 input.
    #[error("malformed graph6: {0}")]
    Malformed(String),

    /// (n, k) does not describe a valid class: need n >= 4 and 1 <= k <= n-3.
    #[error("invalid class: need n >= 4 and 1 <= k <= n-3, got n={n}, k={k}")]
    InvalidClass { n: usize, k: usize },

    /// A transform's structural precondition does not hold for the given vertices.
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),

    /// An extremal search over an empty class.
    #[error("class is empty")]
    EmptyClass,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
