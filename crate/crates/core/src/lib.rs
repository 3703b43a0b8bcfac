//! Card-deal permutations, permutation parity, and quadratic-residue
//! symbols, together with exhaustive verification sweeps over desk-scale
//! parameter ranges and micro-benchmarks of the alternative algorithms.
//!
//! The crate is organized around five modules:
//!
//! - [`perm`] — exact permutation arithmetic with parity via inversion
//!   counting (naive and merge-based) and via cycle structure;
//! - [`deals`] — the row, column, diagonal, zigzag, and modified-zigzag
//!   dealing arrangements and the permutations between them;
//! - [`symbols`] — Zolotarev symbols as permutation signs, Legendre symbols
//!   by square enumeration and by the Euler criterion, Jacobi symbols by
//!   factorization and by reciprocity reduction, plus primality and
//!   primitive-root support;
//! - [`verifier`] — sweep suites that machine-check the sign identities and
//!   reciprocity laws over exhaustive ranges and emit persistable reports;
//! - [`bench`] — wall-clock micro-benchmarks comparing the alternative
//!   algorithms with output checksums.
//!
//! All computational values are immutable after construction and safe to
//! share across threads.

pub mod bench;
pub mod deals;
pub mod perm;
pub mod symbols;
pub mod verifier;

pub use deals::{Deal, DealError, DealKind, GridSpec};
pub use perm::{CycleDecomposition, PermError, Permutation, Sign};
pub use symbols::{ModulusProfile, SymbolError, SymbolValue};
pub use verifier::{Failure, Suite, SweepConfig, SweepReport};
