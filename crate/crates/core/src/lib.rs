//! Exact topological and monodromy zeta functions of non-degenerate
//! polynomial singularities, computed directly from Newton polyhedra.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact:
//! integers and rationals are arbitrary precision, rational functions are
//! kept fully reduced, and products of cyclotomic-type factors `(1 - t^M)^e`
//! are stored in factored form.
//!
//! Module map:
//!
//! - [`exact`]: integers, rationals, univariate polynomials, rational
//!   functions, factored cyclotomic products, Smith normal form.
//! - [`newton`]: the Newton polyhedron, its face lattice, dual cones,
//!   cone triangulations, lattice volumes and distances, projections.
//! - [`zetatop`]: the local topological zeta function and its poles.
//! - [`monozeta`]: the monodromy zeta function at the origin and its strata.
//! - [`facets`]: facet and simplex classification (pyramids, walls, corners).
//! - [`supermod`]: set-function calculus on subset lattices and the
//!   reduced corner-simplex gcd combinatorics.
//! - [`pipeline`]: per-pole eigenvalue verification with certificates.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exact;
pub mod facets;
pub mod monozeta;
pub mod newton;
pub mod pipeline;
pub mod supermod;
pub mod zetatop;

pub use error::{Error, Result};
pub use exact::{FactoredCyclo, Integer, Rational, RationalFunction, RootOfUnity, UniPoly};
pub use newton::{build_newton, NewtonPolyhedron, SupportSet};
