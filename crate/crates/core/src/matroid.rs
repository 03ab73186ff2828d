//! The polymatroidal exchange property, named families of (poly)matroidal
//! ideals, and exhaustive enumeration of matroidal ideals on small `[n]`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

/// Largest `n` accepted by [`enumerate_matroidal`].
pub const ENUMERATION_MAX_N: usize = 7;
/// Largest number of candidate generators `C(n, d)`; the search visits `2^C(n, d)` collections.
pub const ENUMERATION_MAX_CANDIDATES: usize = 24;

/// Why the exchange property fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum ExchangeFailure {
    /// Generators of different degrees; the exchange property is only
    /// defined for ideals generated in a single degree.
    NotSingleDegree,
    /// `deg_{x_i}(u) > deg_{x_i}(v)` but no `j` with `deg_{x_j}(v) > deg_{x_j}(u)`
    /// has `x_j (u / x_i)` in the ideal.
    Exchange { u: Monomial, v: Monomial, i: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeCertificate {
    pub holds: bool,
    pub failure: Option<ExchangeFailure>,
}

impl ExchangeCertificate {
    fn holds() -> Self {
        ExchangeCertificate { holds: true, failure: None }
    }

    fn fails(failure: ExchangeFailure) -> Self {
        ExchangeCertificate { holds: false, failure: Some(failure) }
    }
}

/// Checks the polymatroidal exchange property, returning the first failing
/// triple `(u, v, i)` in generator order when it does not hold.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<ExchangeCertificate> {
    if ideal.is_zero() {
        return Err(Error::domain("the exchange property is undefined for the zero ideal"));
    }
    if ideal.single_degree().is_none() {
        return Ok(ExchangeCertificate::fails(ExchangeFailure::NotSingleDegree));
    }
    let n = ideal.nvars();
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            if u == v {
                continue;
            }
            for i in 1..=n {
                if u.exponent(i) <= v.exponent(i) {
                    continue;
                }
                let exchanged = (1..=n)
                    .filter(|&j| v.exponent(j) > u.exponent(j))
                    .any(|j| ideal.contains_exchanged(u, i, j));
                if !exchanged {
                    return Ok(ExchangeCertificate::fails(ExchangeFailure::Exchange {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                    }));
                }
            }
        }
    }
    Ok(ExchangeCertificate::holds())
}

/// A square-free polymatroidal ideal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<bool> {
    let cert = is_polymatroidal(ideal)?;
    Ok(ideal.is_squarefree() && cert.holds)
}

/// Named families of polymatroidal ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// All square-free monomials of degree `d`.
    SquarefreeVeronese { d: usize },
    /// `m^d`.
    Veronese { d: u32 },
    /// `(B_1)(B_2)...(B_k)`, each factor generated by a set of variables.
    Transversal { blocks: Vec<VarSet> },
}

pub fn generate_family(n: usize, family: &Family) -> Result<MonomialIdeal> {
    match family {
        Family::SquarefreeVeronese { d } => {
            if *d == 0 || *d > n {
                return Err(Error::domain(format!(
                    "square-free Veronese degree {d} outside 1..={n}"
                )));
            }
            MonomialIdeal::from_varsets(n, (1..=n).combinations(*d).map(VarSet::from_indices))
        }
        Family::Veronese { d } => {
            if *d == 0 {
                return Err(Error::domain("Veronese degree must be at least 1"));
            }
            MonomialIdeal::maximal(n).power(*d)
        }
        Family::Transversal { blocks } => {
            if blocks.is_empty() {
                return Err(Error::domain("transversal ideal needs at least one block"));
            }
            let mut acc = MonomialIdeal::unit(n);
            for block in blocks {
                if block.is_empty() {
                    return Err(Error::domain("transversal block is empty"));
                }
                if block.last().is_some_and(|m| m > n) {
                    return Err(Error::VariableOutOfRange { index: block.last().unwrap(), n });
                }
                acc = acc.product(&MonomialIdeal::prime(n, *block))?;
            }
            Ok(acc)
        }
    }
}

/// `G(I)` is the full set of square-free monomials of some degree `d >= 1`.
pub fn is_squarefree_veronese(ideal: &MonomialIdeal) -> bool {
    let Some(d) = ideal.single_degree() else {
        return false;
    };
    let n = ideal.nvars();
    d >= 1 && d as usize <= n && ideal.is_squarefree() && ideal.mu() == binomial(n, d as usize)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The `d`-subsets of `[n]` in lexicographic order of their monomials
/// (`x1x2 > x1x3 > ... > x_{n-1}x_n`).
pub fn squarefree_candidates(n: usize, d: usize) -> Vec<VarSet> {
    (1..=n).combinations(d).map(VarSet::from_indices).collect()
}

/// Exchange property on a collection of `d`-subsets; `members[mask]` tells
/// whether the subset `mask` belongs to the collection.
fn exchange_holds_on_sets(sets: &[u64], members: &[bool]) -> bool {
    for &a in sets {
        for &b in sets {
            if a == b {
                continue;
            }
            let mut only_a = a & !b;
            while only_a != 0 {
                let e = only_a & only_a.wrapping_neg();
                only_a &= only_a - 1;
                let base = a & !e;
                let mut only_b = b & !a;
                let mut found = false;
                while only_b != 0 {
                    let f = only_b & only_b.wrapping_neg();
                    only_b &= only_b - 1;
                    if members[(base | f) as usize] {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// All matroidal ideals generated by nonempty collections of square-free
/// degree-`d` monomials in `n` variables.
///
/// Collections are visited as bitmasks over [`squarefree_candidates`]; the
/// output follows increasing bitmask, independent of thread scheduling.
pub fn enumerate_matroidal(
    n: usize,
    d: usize,
    full_support_only: bool,
) -> Result<Vec<MonomialIdeal>> {
    if n == 0 || n > ENUMERATION_MAX_N {
        return Err(Error::Guard(format!("n = {n} outside 1..={ENUMERATION_MAX_N}")));
    }
    if d == 0 || d > n {
        return Err(Error::Guard(format!("degree {d} outside 1..={n}")));
    }
    let candidates = squarefree_candidates(n, d);
    let count = candidates.len();
    if count > ENUMERATION_MAX_CANDIDATES {
        return Err(Error::Guard(format!(
            "C({n},{d}) = {count} candidate generators exceeds {ENUMERATION_MAX_CANDIDATES}"
        )));
    }
    let full = VarSet::full(n).bits();
    let mut masks: Vec<u32> = (1u32..(1u32 << count))
        .into_par_iter()
        .map_init(
            || (vec![false; 1 << n], Vec::with_capacity(count)),
            |(members, sets), mask| {
                sets.clear();
                let mut support = 0u64;
                for (k, c) in candidates.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        sets.push(c.bits());
                        support |= c.bits();
                    }
                }
                if full_support_only && support != full {
                    return None;
                }
                for &s in sets.iter() {
                    members[s as usize] = true;
                }
                let ok = exchange_holds_on_sets(sets, members);
                for &s in sets.iter() {
                    members[s as usize] = false;
                }
                ok.then_some(mask)
            },
        )
        .flatten()
        .collect();
    masks.sort_unstable();

    masks
        .into_iter()
        .map(|mask| {
            let sets = candidates
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, c)| *c);
            let ideal = MonomialIdeal::from_varsets(n, sets)?;
            if !is_matroidal(&ideal)? {
                return Err(Error::Internal(format!(
                    "bitmask exchange check accepted non-matroidal {ideal}"
                )));
            }
            Ok(ideal)
        })
        .collect()
}

/// The lexicographically smallest relabeling of `ideal` under permutations of
/// the variables. Brute force over all `n!` permutations.
pub fn canonical_form(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = ideal.nvars();
    if n > ENUMERATION_MAX_N {
        return Err(Error::Guard(format!("canonical labeling needs n <= {ENUMERATION_MAX_N}")));
    }
    let mut best: Option<MonomialIdeal> = None;
    for perm in (0..n).permutations(n) {
        let gens = ideal.gens().iter().map(|g| {
            let mut exps = vec![0; n];
            for (k, &e) in g.exponents().iter().enumerate() {
                exps[perm[k]] = e;
            }
            Monomial::new(exps)
        });
        let relabeled = MonomialIdeal::new(n, gens)?;
        if best.as_ref().is_none_or(|b| relabeled.gens() > b.gens()) {
            best = Some(relabeled);
        }
    }
    Ok(best.unwrap_or_else(|| ideal.clone()))
}

/// Keeps the first member of each isomorphism class, preserving order.
pub fn dedup_isomorphic(ideals: &[MonomialIdeal]) -> Result<Vec<MonomialIdeal>> {
    let forms = ideals.par_iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
    let mut seen = std::collections::HashSet::new();
    Ok(ideals
        .iter()
        .zip(forms)
        .filter(|(_, form)| seen.insert(form.clone()))
        .map(|(i, _)| i.clone())
        .collect())
}
