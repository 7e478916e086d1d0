//! Leaf-to-leaf path-length spectra of trees.
//!
//! A tree on `n` vertices (ids `0..n`) has a *spectrum*: the set of distinct
//! leaf-to-leaf path lengths, with 0 included by the single-vertex-path
//! convention. This crate computes spectra, produces machine-checkable
//! certificates realizing the lower bounds of the numbered results it
//! implements (Theorem 1, Lemma 5, Lemma 8, Theorem 2), builds the matching
//! extremal constructions (Theorem 4 among them), and audits the related
//! conjectures by exhaustive small-scale search.
//!
//! Everything is deterministic: ties break toward smaller vertex ids, all
//! bound checks are integer-exact, and randomized search is seeded.

pub mod conjecture;
pub mod constructions;
pub mod enumeration;
mod error;
pub mod exec;
mod intmath;
pub mod spectrum;
pub mod tree;
pub mod witness;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
