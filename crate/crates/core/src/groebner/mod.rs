//! A small exact Buchberger engine: reduced Gröbner bases in degrevlex order,
//! normal forms, ideal and radical membership, and certification of
//! Schmitt-Vogel witnesses.

mod buchberger;
mod certify;
mod poly;

pub use buchberger::{buchberger, normal_form, radical_membership, reduce, GroebnerBasis, PAIR_BUDGET};
pub use certify::{certify_witness, WitnessCertificate};
pub use poly::{MonomialOrder, Polynomial};
