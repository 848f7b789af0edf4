use thiserror::Error;

/// Errors raised by tournament construction and queries.
///
/// Vertex numbers carried by the variants are 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tournament: vertex {0} beats itself")]
    Loop(usize),

    #[error("not a tournament: pair ({u},{v}) has {arcs} arcs, expected exactly one")]
    BadPair { u: usize, v: usize, arcs: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("vertex set contains a directed cycle")]
    Cyclic,

    #[error("vertex {label} out of range 1..={n}")]
    VertexOutOfRange { label: usize, n: usize },

    #[error("score sequence is not non-decreasing at position {0}")]
    Unsorted(usize),

    #[error("score {score} at position {position} exceeds n-1 = {max}")]
    ScoreTooLarge { position: usize, score: usize, max: usize },

    #[error("score sequence violates Landau's condition at prefix k = {k}: sum {sum} vs required {required}")]
    Landau { k: usize, sum: usize, required: usize },

    #[error("invalid residue set for circular tournament of order {n}: {reason}")]
    Residues { n: usize, reason: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{what} requires n <= {max}, got {n}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
