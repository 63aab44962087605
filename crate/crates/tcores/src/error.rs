//! Error type shared across the crate.

use std::fmt;

/// Errors surfaced by fallible operations on user-supplied values.
///
/// Conditions that would contradict a structural guarantee of the underlying
/// combinatorics (a non-unique bead-count normalization, a residue collision
/// in a hook-shift set, an unclassifiable self-conjugate core) panic instead
/// of returning a variant: they indicate a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts are not a non-increasing sequence of positive integers.
    InvalidPartition(String),
    /// The cell (row, col) lies outside the Ferrers-Young diagram.
    CellOutOfDiagram { row: usize, col: usize },
    /// The partition has a cell whose hook length is divisible by `t`.
    NotTCore { t: u32, hook: u32 },
    /// The value is not fixed by conjugation.
    NotSelfConjugate(String),
    /// Entries of an integer vector do not sum to zero.
    NonZeroSum(Vec<i64>),
    /// A residue, sum, or shape condition on the input is violated.
    ConditionViolated(String),
    /// The requested bead count is too small to host the coding.
    BeadCountTooSmall { s: u64 },
    /// All-partitions enumeration refused above the configured cap.
    OracleCapExceeded { n: u64, cap: u64 },
    /// Discriminant is not negative and congruent to 0 or 1 modulo 4.
    InvalidDiscriminant(i64),
    /// The form does not satisfy a > 0 and b^2 - 4ac < 0.
    NotPositiveDefinite { a: i64, b: i64, c: i64 },
    /// Bounded search for a cross-product preimage gave up.
    LiftSearchExhausted { x: i64, y: i64, z: i64, bound: i64 },
    /// A documented precondition on the arguments does not hold.
    PreconditionViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::CellOutOfDiagram { row, col } => {
                write!(f, "cell ({row},{col}) is outside the diagram")
            }
            Error::NotTCore { t, hook } => {
                write!(f, "not a {t}-core: hook length {hook} is divisible by {t}")
            }
            Error::NotSelfConjugate(msg) => write!(f, "not self-conjugate: {msg}"),
            Error::NonZeroSum(v) => write!(f, "entries do not sum to zero: {v:?}"),
            Error::ConditionViolated(msg) => write!(f, "condition violated: {msg}"),
            Error::BeadCountTooSmall { s } => {
                write!(
                    f,
                    "bead count {s} is too small: abacus entry would be negative"
                )
            }
            Error::OracleCapExceeded { n, cap } => write!(
                f,
                "n = {n} exceeds the all-partitions cap {cap}; \
                 use the lattice enumerator for large n"
            ),
            Error::InvalidDiscriminant(d) => write!(
                f,
                "invalid discriminant {d}: must be negative and 0 or 1 modulo 4"
            ),
            Error::NotPositiveDefinite { a, b, c } => {
                write!(f, "form ({a},{b},{c}) is not positive definite")
            }
            Error::LiftSearchExhausted { x, y, z, bound } => write!(
                f,
                "no cross-product preimage of ({x},{y},{z}) within bound {bound}"
            ),
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
