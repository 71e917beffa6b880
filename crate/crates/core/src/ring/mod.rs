//! Symbolic intersection ring of a threefold in P⁶ and the identity
//! registry built on top of it.

mod chern;
mod graded;
mod identities;
mod params;

pub use chern::{
    normal_chern, reduce_to_params, schur_values, substitution_table, tangent_total_chern,
    twist_rank3, twisted_normal_schur, Basis3, SchurClasses, BASIS3,
};
pub use graded::{times, GradedPoly, Monomial, TOP_DEGREE};
pub use identities::{schur_closed_forms, verify_all, verify_identity, IdentityId, Side, Verdict};
pub use params::{Param, ParamExpr, ParamMonomial};
