//! Star factorizations of permutations and their noncrossing combinatorics.
//!
//! A *star factorization* of a permutation writes it as a product of
//! transpositions that all share one fixed value, the *pivot*. This crate
//! implements the minimal transitive star factorizations of a permutation,
//! their correspondence with labeled noncrossing partitions and necklaces,
//! the pivot-change bijection between factorization sets with different
//! pivots, and the graded poset on the symmetric group whose covers slice
//! one cycle into two arcs and whose intervals are products of noncrossing
//! partition lattices.
//!
//! Everything is exact and deterministic: counts use big integers,
//! enumeration orders are fixed, and the [`oracle`] module provides
//! independent brute-force baselines that the test suite compares against
//! the structural implementations at small sizes.

pub mod bijection;
pub mod error;
pub mod noncross;
pub mod oracle;
pub mod perm;
pub mod poset;
pub mod star;

mod words;

pub use error::{Error, Result};
