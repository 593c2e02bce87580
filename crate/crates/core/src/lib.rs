//! Decision procedures and exact solvers for two domination-flavored
//! variants of graph coloring.
//!
//! A *dominator coloring* is a proper coloring in which every vertex has some
//! nonempty color class entirely inside its closed neighborhood. A *CD
//! coloring* (class domination coloring) is a proper coloring in which every
//! used color class lies entirely inside some vertex's closed neighborhood.
//! Both minimization problems are NP-hard; this crate implements
//!
//! * brute-force oracles for tiny graphs ([`oracle`]),
//! * exact exponential algorithms via inclusion-exclusion ([`exact`]),
//! * a randomized algebraic solver parameterized by a clique modulator
//!   ([`clq`]),
//! * fixed-parameter algorithms for twin covers ([`tc`]) and cluster vertex
//!   deletion sets ([`cvd`]),
//! * parameter detection ([`params`]) and hard-instance constructions
//!   ([`reductions`]).
//!
//! Every solver answers the threshold question "does a coloring with at most
//! `ell` colors exist?"; the FPT solvers additionally return a validating
//! witness coloring.

pub mod bitset;
pub mod clq;
pub mod coloring;
pub mod config;
pub mod cvd;
pub mod exact;
pub mod field;
pub mod format;
pub mod graph;
pub mod instances;
pub mod matching;
pub mod oracle;
pub mod params;
pub mod reductions;
pub mod tc;

pub use bitset::VertexSet;
pub use coloring::{validate_cdcol, validate_domcol, Coloring, DominatorWitness};
pub use graph::Graph;

/// Errors shared by every module.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("size guard exceeded: {what} = {actual} exceeds limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Exit-code classification used by the CLI: guard violations are
    /// distinguished from plain usage errors.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
