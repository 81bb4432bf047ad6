use thiserror::Error;

use crate::types::{Color, Side, Vertex};

/// Malformed instances and assignments.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("both partite sets must be nonempty (n = {n}, m = {m})")]
    EmptySide { n: usize, m: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("{side}: expected {expected} lists, found {found}")]
    ListCount {
        side: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("list of {vertex} has {found} colors, expected k = {expected}")]
    ListLength {
        vertex: Vertex,
        expected: usize,
        found: usize,
    },
    #[error("list of {vertex} repeats color {color}")]
    DuplicateColor { vertex: Vertex, color: Color },
}

/// A coloring that does not even have the shape of its assignment.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("coloring has {found} colors on side {side:?}, the instance has {expected} vertices there")]
    LengthMismatch { side: Side, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorerError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("list {index} has {len} colors, fewer than eta = {eta}")]
    ListTooShort { index: usize, len: usize, eta: usize },
    #[error("{count} vertices exceed sigma * eta = {capacity}")]
    TooManyVertices { count: usize, capacity: usize },
    #[error("expected a partite set of size 2, got n = {0}")]
    NotTwoSided(usize),
    #[error("the two lists on side A' share color {0}")]
    ListsNotDisjoint(Color),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration budget of {budget} assignments exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("color universe of size {universe} is smaller than k = {k}")]
    UniverseTooSmall { universe: usize, k: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Raised when a sufficient condition and an obstruction fire together.
/// It always points to a bug in the criteria code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("criteria contradict each other on K_{{{n},{m}}} with k = {k}: {detail}")]
pub struct Contradiction {
    pub n: u64,
    pub m: u64,
    pub k: u64,
    pub detail: String,
}
