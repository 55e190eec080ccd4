//! Exact combinatorics of flag simplicial complexes: face enumeration,
//! f/h/gamma-vector transforms, the Kruskal-Katona and Frankl-Furedi-Kalai
//! inequalities, and explicit complexes whose f-vectors realize the
//! gamma-vectors of Coxeter complexes (types A, B, D), the associahedron
//! and the cyclohedron.
//!
//! Everything is computed over exact integers; enumerations are bounded by
//! per-operation budgets so the whole verification battery runs at desk
//! scale.

pub mod complex;
pub mod gamma;
pub mod homology;
pub mod io;
pub mod models;
pub mod permstats;
pub mod vectors;
pub mod verify;

pub use complex::{Complex, Face, VertexId};
pub use vectors::{FVector, GammaVector, HVector};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Structurally invalid input (duplicate vertices in a facet, bad word, ...).
    #[error("malformed input: {0}")]
    Malformed(String),
    /// Argument outside the operation's domain (unknown vertex, not an edge, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A stated precondition does not hold (non-symmetric h-vector, non-clique face, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An enumeration or storage budget was exceeded.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// Facet-file parse failure.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
