//! Restricted root systems of E8 and E7, their power-sum fundamental
//! invariants, product-of-roots discriminants, and the semi-simple tensor
//! families they live on.

mod factors;
mod families;
mod poly;
mod powersums;
mod systems;

pub use factors::{
    cube2222_deleted_product_display, cube2222_slice_factors, del39_slice_h,
    expand_root_product, gr39_slice_factors, gr39_slice_h, gr39_vanishing_factor_count, gr48_slice_h,
    gr48_slice_factors, rational_slice_factors, root_product_value, vandermonde_2222,
    GR39_SLICE_FACTORS, GR48_FACTOR_QUADS,
};
pub use families::{
    basis_tensors, cube2222_grouping, cube2222_y_point, cube333_grouping, semisimple_tensor,
    CUBE2222_BASIS, CUBE333_BASIS, GR39_BASIS, GR48_BASIS,
};
pub use poly::CoordinatePolynomial;
pub use powersums::{all_power_sums, power_sum_invariant, power_sum_value};
pub use systems::{
    cube2222_restricted_roots, e7_restricted_roots, e8_restricted_roots, restricted_roots,
    table_transposition, Family, RestrictedRootSystem, E7_EPSILON_TABLE, E8_EPSILON_TABLE,
};
