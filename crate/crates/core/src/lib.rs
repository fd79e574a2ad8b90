//! Multinomial coefficients of integer partitions that are divisible by the
//! number of parts, and the integer sequence they count (OEIS A200144).
//!
//! For a partition `π` of `n` into `k` parts with `j_1, ..., j_m` copies of
//! its distinct values, `b(π) = k! / (j_1! ⋯ j_m!)`. The term `a(n)` counts
//! the pairs `(k, π)` with `k | b(π)`:
//!
//! ```
//! let terms: Vec<u64> = a200144::a200144_range(8)
//!     .unwrap()
//!     .iter()
//!     .map(|t| t.a_n)
//!     .collect();
//! assert_eq!(terms, [1, 1, 2, 3, 6, 7, 14, 17]);
//! ```
//!
//! The crate is organized as:
//!
//! - [`partitions`]: Hindenburg enumeration of partitions into `k` parts,
//!   `p(n, k)` and the partition function `p(n)`.
//! - [`divisibility`]: exact multinomials, Legendre valuations and the
//!   factorial-free test for `k | b(π)`.
//! - [`sequence`]: terms and ranges of A200144, and the prime deficit
//!   `p(n) - 1 - a(n)`, which vanishes at every prime.
//! - [`verify`]: exhaustive and seeded checks of the divisibility theorems.
//! - [`cli`]: the command-line front end used by the `a200144` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod divisibility;
mod error;
pub mod partitions;
pub mod sequence;
pub mod verify;

pub use divisibility::{
    divides_multinomial, divides_multinomial_exact, factorize, is_prime, legendre_valuation,
    multinomial, multinomial_valuation, DivisibilityPath, PrimeFactorization,
};
pub use error::{Error, Result};
pub use partitions::{
    count_partitions_k, enumerate_partitions, multiplicity_profile, partition_count,
    MultiplicityProfile, PartitionCounter, PartitionK,
};
pub use sequence::{
    a200144_range, a200144_term, count_divisible, prime_deficit, prime_scan, PrimalityReport,
    SequenceTerm,
};
pub use verify::{CheckKind, CheckReport};
