use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldChoice};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::sv::SvWitness;

use super::buchberger::radical_membership;
use super::poly::Polynomial;

/// Outcome of checking `√(q_0, ..., q_r) = √I` for a layer witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub field: FieldChoice,
    /// Terms of some `q_j` that are not in `I`.
    pub containment_failures: Vec<Monomial>,
    /// Generators of `I` not in `√(q_0, ..., q_r)`.
    pub radical_failures: Vec<Monomial>,
    pub certified: bool,
}

/// Certifies both inclusions between `√(q_0..q_r)` and `√I` over `field`.
///
/// The inclusion `(q) ⊆ I` is a term-wise membership check; `I ⊆ √(q)` runs
/// one Rabinowitsch test per minimal generator of `I`.
pub fn certify_witness<G: Field>(
    ideal: &MonomialIdeal,
    witness: &SvWitness,
    field: G,
) -> Result<WitnessCertificate> {
    let n = ideal.nvars();
    if witness.n != n {
        return Err(Error::AmbientMismatch { expected: n, found: witness.n });
    }
    let qs: Vec<Polynomial<G>> = witness
        .q
        .iter()
        .map(|q| {
            q.map_field(field.clone())
                .ok_or_else(|| Error::domain(format!("witness coefficients undefined over {}", field.choice())))
        })
        .collect::<Result<_>>()?;

    let mut containment_failures = Vec::new();
    for q in &witness.q {
        for (m, _) in q.terms() {
            if !ideal.contains(m)? && !containment_failures.contains(m) {
                containment_failures.push(m.clone());
            }
        }
    }

    let memberships = ideal
        .gens()
        .par_iter()
        .map(|u| {
            let f = Polynomial::monomial(field.clone(), u.clone());
            radical_membership(&f, &qs).map(|inside| (u, inside))
        })
        .collect::<Result<Vec<_>>>()?;
    let radical_failures: Vec<Monomial> =
        memberships.into_iter().filter(|(_, inside)| !inside).map(|(u, _)| u.clone()).collect();

    Ok(WitnessCertificate {
        field: field.choice(),
        certified: containment_failures.is_empty() && radical_failures.is_empty(),
        containment_failures,
        radical_failures,
    })
}
