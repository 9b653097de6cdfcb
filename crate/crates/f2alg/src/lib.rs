//! Exact calculators over the two-element field.
//!
//! The crate is organized around a sparse multivariate polynomial ring with
//! per-variable truncation (`poly`), on top of which sit:
//!
//! - `invariants`: the classical mod-2 invariant polynomials of the general
//!   linear group and their upper-triangular variants, computed by three
//!   independent routes (orbit products, a mixed-term recurrence, and a
//!   closed summation formula);
//! - `sw`: total and dual characteristic-class expansions in truncated
//!   polynomial rings, with height/triviality laws and witness extraction;
//! - `ideal`: membership and kernel slices for the ideal of relations that
//!   the truncation imposes on the invariant generators;
//! - `parity`: binomial parity with negative upper argument, and the closed
//!   key condition used by the counting lemmas;
//! - `bounds`: non-embedding bounds (k-regular, l-skew, combined, complex)
//!   with per-case provenance and best-bound selection;
//! - `homology`: dimension counts for unordered configuration spaces of
//!   Euclidean spaces;
//! - `pe`: additive bases of pairwise product decompositions and their
//!   degree series, split into subalgebra and ideal parts.
//!
//! Everything is exact: coefficients live in F2, counts in checked integers.
//! Long-running grid sweeps go through [`exec`], which runs in parallel when
//! the `parallel` feature (default) is enabled.

pub mod bounds;
pub mod exec;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod parity;
pub mod pe;
pub mod poly;
pub mod sw;

/// Errors shared by all modules.
///
/// `Parameter` covers precondition violations (bad dimensions, out-of-range
/// arguments), `Resource` a tripped resource guard (term budget, count
/// overflow), and `Parse` malformed polynomial text.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
