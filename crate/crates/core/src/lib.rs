//! Orientation invariants of r-uniform hypergraphs.
//!
//! An orientation assigns every edge an ordering of its vertices. For a
//! p-set `A` the degree vector counts, for each p-subset of positions, the
//! edges in which `A` sits exactly on those positions. The crate computes
//!
//! * degree-bounded orientations through max-flow ([`orient`]),
//! * the maximum average degree, degeneracy, colorings and the partition
//!   invariant `M(H,k)` ([`extremal`]),
//! * the minimum over orientations of the number of p-sets whose degree
//!   vector is at least `k` everywhere, with exact, closed-form and bound
//!   evaluators ([`fcalc`]),
//! * Ramsey p-chromatic numbers and maximum colorable families ([`ramsey`]),
//!
//! together with brute-force oracles and a verification harness
//! ([`verify`]) used by the `hyperf` command-line tool.

pub mod cli;
pub mod error;
pub mod extremal;
pub mod fcalc;
pub mod hypercore;
pub mod netflow;
pub mod orient;
pub mod ramsey;
pub mod verify;

pub use error::{Error, Result};
pub use extremal::{PartitionWitness, Rational};
pub use fcalc::FReport;
pub use hypercore::{DegreeVector, Hypergraph, Orientation, PositionIndex};
pub use ramsey::PSetColoring;

/// Default limit on enumerated orientations for brute-force evaluation.
pub const DEFAULT_ORIENTATION_BUDGET: u64 = 100_000_000;

/// Default limit on branch-and-bound nodes for exact searches.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
