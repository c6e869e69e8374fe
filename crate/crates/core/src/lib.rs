//! Exact computation of discriminants of Grassmannian dual varieties.
//!
//! The crate evaluates the defining polynomials of `Gr(3,9)^v`, `Gr(4,8)^v`
//! and the 2x2x2x2 hyperdeterminant through three layers:
//!
//! * restricted root systems of E8 and E7 on distinguished semi-simple
//!   subspaces of `wedge^3 C^9` and `wedge^4 C^8`, whose power sums are the
//!   fundamental invariants and whose products are the discriminants on
//!   those subspaces ([`roots`]);
//! * trace-matrix constructions that evaluate the same invariants on
//!   arbitrary tensors ([`invariants`], [`exterior`]);
//! * exact linear interpolation expressing each discriminant as a polynomial
//!   in fundamental invariants, in rational arithmetic or modulo a battery
//!   of primes with CRT lifting, rational reconstruction and integer
//!   certification ([`interp`], [`exactnum`]).
//!
//! Everything is exact: no floating point anywhere.

pub mod error;
pub mod exactnum;
pub mod exprdb;
pub mod exterior;
pub mod interp;
pub mod invariants;
pub mod roots;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
