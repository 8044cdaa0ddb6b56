//! Congruence prover for multipartition functions and divisor-function
//! convolutions modulo a prime q > 3.
//!
//! The pipeline turns a congruence statement such as `p(5n+4) ≡ 0 (mod 5)`
//! into a membership test for a multivariate polynomial ideal over GF(q):
//!
//! - [`oracle`]: ground-truth integer sequences mod q (partition numbers,
//!   divisor sums, convolutions) used both to discover candidate congruences
//!   and to cross-check every algebraic proof numerically.
//! - [`fq`]: exact arithmetic in GF(q) for a runtime-chosen prime q.
//! - [`diffpoly`]: polynomials in the variables X_0..X_{q-1} standing for a
//!   power series and its iterated derivations, with grevlex term order.
//! - [`relations`]: the two base differential relations derived from the
//!   pentagonal and Jacobi identities, and target relations for each
//!   congruence family.
//! - [`groebner`]: Buchberger's algorithm and cofactor-tracking normal form.
//! - [`prover`]: the end-to-end pipeline producing re-checkable certificates.
//! - [`search`]: numerical discovery of candidate congruences (Ramanujan
//!   pairs, linear-combination bases, sparse convolution weights).

pub mod diffpoly;
pub mod fq;
pub mod groebner;
pub mod known;
pub mod oracle;
pub mod prover;
pub mod relations;
pub mod search;

pub use diffpoly::{DiffPoly, Monomial};
pub use fq::{Fq, FqElem};
pub use groebner::{Certificate, GroebnerBasis};
pub use oracle::{CongruenceCheck, SeqModQ, SigmaVariant, WeightPoly2};
pub use prover::{ProofResult, Prover, Side};
pub use relations::{CongruenceSpec, Family, Series};

use std::time::Duration;

/// Errors shared across the crate. Programming errors (mixed moduli, zero
/// division) panic instead; these are the recoverable, user-facing cases.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("modulus {0} must be a prime greater than 3")]
    BadModulus(u64),

    #[error("residue {r} is out of range for modulus {q}")]
    BadResidue { r: i64, q: u64 },

    #[error("convolution exponent {k} is divisible by {q}; the congruence is trivial")]
    TrivialExponent { k: i64, q: u64 },

    #[error("coefficient vector must have length {expected}, got {got}")]
    CoeffLength { expected: usize, got: usize },

    #[error("coefficient vector is zero")]
    ZeroCoeffs,

    #[error("weight polynomial is empty")]
    EmptyWeight,

    #[error("weight exponent {e} exceeds q - 1 = {max}; reduce the weight first")]
    WeightExponent { e: u32, max: u64 },

    #[error("linear combinations are only searched/proved for the divisor series")]
    LinCombSeries,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("computation exceeded the configured time limit of {0:?}")]
    Timeout(Duration),

    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
