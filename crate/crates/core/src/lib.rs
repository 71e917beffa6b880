//! Exact intersection-theoretic bookkeeping for smooth threefolds in P⁶.
//!
//! - [`ring`]: truncated graded polynomials, Chern classes of the normal
//!   bundle, Schur classes, and the identity registry.
//! - [`invariants`]: the tuple `(d, δ, χ, u, v)` and its numeric profile.
//! - [`constraints`]: the inequality system with exact slack values.
//! - [`bounds`]: lifting threshold, genus bound, and the degree bound.
//! - [`scan`]: deterministic parallel enumeration of feasible tuples.

pub mod bounds;
pub mod constraints;
pub mod error;
pub mod invariants;
pub mod rational;
pub mod ring;
pub mod scan;

pub use bounds::{degree_bound, BoundReport, LowerBoundMode};
pub use constraints::{evaluate, is_feasible, ConstraintReport, CoverFlag, HypothesisConfig};
pub use error::{Error, Result};
pub use invariants::{profile, InvariantTuple, Profile};
pub use rational::Rational;
pub use scan::{scan, ScanBox, ScanFormat, ScanOptions, ScanSummary};
