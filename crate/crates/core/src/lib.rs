//! Exact combinatorial commutative algebra for matroidal monomial ideals.
//!
//! The crate is organised bottom-up:
//!
//! - [`monomial`] and [`ideal`]: monomials, variable subsets and monomial
//!   ideals with their minimal generating sets (colon, intersection, product).
//! - [`matroid`]: the polymatroidal exchange property, named families and
//!   exhaustive enumeration of matroidal ideals for small `(n, d)`.
//! - [`decomp`]: irreducible decompositions, associated primes, the degree-2
//!   partition structure and the unmixedness criteria for matroidal ideals.
//! - [`homology`]: Stanley-Reisner complexes, reduced homology and graded
//!   Betti numbers via Hochster's formula (projective dimension, depth).
//! - [`sv`]: Schmitt-Vogel layer witnesses bounding the arithmetical rank.
//! - [`groebner`]: a small Buchberger engine used to certify radical
//!   equalities independently.

pub mod decomp;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod ideal;
pub mod matroid;
pub mod monomial;
pub mod sv;

pub use error::{Error, Result};
pub use ideal::{IdealSummary, MonomialIdeal};
pub use monomial::{Monomial, VarSet};
