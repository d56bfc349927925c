//! Exact machinery for maximum pairwise cross-intersecting set families.
//!
//! A `(n, k_1, ..., k_t)`-cross intersecting system is a tuple of non-empty
//! families `F_i ⊆ C([n], k_i)` such that every member of `F_i` meets every
//! member of `F_j` for `i != j`. By lexicographic compression it suffices to
//! consider L-initial families (the first `r` k-sets in lex order), each named
//! by its last member, the *ID*. This crate provides:
//!
//! - [`subsets`]: lexicographic arithmetic on k-subsets of `[n]`: comparison,
//!   successor, rank/unrank, L-initial family sizes, tail decomposition.
//! - [`partners`]: the pairing machinery of partner, k-partner, parity,
//!   corresponding k-set, and maximality of ID pairs.
//! - [`bounds`]: exact evaluation of the closed-form bounds and the objective
//!   `f(R_1)` with its increment functions.
//! - [`oracle`]: brute-force ground truth: membership-level checks, exact
//!   maximum search over ID tuples, extremal-structure classification.
//! - [`verify`]: exhaustive and randomized suites that cross-check the closed
//!   forms against the oracles at desk scale.
//!
//! All counts are exact (`num_bigint`); there is no floating point anywhere.

pub mod bounds;
mod error;
pub mod oracle;
pub mod partners;
pub mod subsets;
pub mod verify;

pub use error::{Error, Result};
pub use subsets::{Count, KSubset, Params, Regime};
