//! Storage, evaluation and substitution of the pipeline's polynomials:
//! discriminant expressions in fundamental invariants and the explicit
//! coordinate quartics, with an exact text format for both.

mod builtins;
mod coordpoly;
mod expr;

pub use builtins::{
    binary_cubic_disc, builtin, delta222, f10_relation, f14_relation, f18_relation,
    gr36_dual, gr36_projection_map, gr39_discriminant, gr48_generators, hd2222,
    plucker_vars_36, symmetrization_map_222, BuiltinPolynomial, BUILTIN_NAMES,
    GR39_DISCRIMINANT_TERMS, GR48_ANCHOR_FIRST, GR48_ANCHOR_LAST, HD2222_TERMS,
};
pub use coordpoly::{evaluate_named, identity_map, substitute, vanishes_at, SignedImage};
pub use expr::InvariantExpression;
