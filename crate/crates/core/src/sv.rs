//! Schmitt-Vogel witnesses for the arithmetical rank of square-free monomial
//! ideals.
//!
//! For a square-free ideal `I` in `n` variables with least generator degree
//! `d >= 2`, layer `P_j` (`0 <= j <= n - d`) holds the square-free monomials
//! of `I` of degree `n - j`. The layer sums `q_j` generate an ideal with the
//! same radical as `I`, so `ara(I) <= n - d + 1`. Together with the lower
//! bound `pd(R/I) <= ara(I)` this pins down `ara(I)` for matroidal ideals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldChoice, Rationals};
use crate::groebner::Polynomial;
use crate::homology;
use crate::ideal::MonomialIdeal;
use crate::matroid;
use crate::monomial::{Monomial, VarSet};

#[derive(Debug, Clone, PartialEq)]
pub struct SvWitness {
    pub n: usize,
    /// Least generator degree.
    pub d: usize,
    /// Index of the last layer, `n - d`.
    pub r: usize,
    /// `P_0, ..., P_r`; each layer sorted in decreasing lexicographic order.
    pub layers: Vec<Vec<Monomial>>,
    /// `q_j = Σ_{p ∈ P_j} p`.
    pub q: Vec<Polynomial<Rationals>>,
    pub ara_upper: usize,
    /// `pd(R/I)`.
    pub ara_lower: usize,
    pub ara_exact: bool,
}

fn require_squarefree_full(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("witness construction needs a non-zero, non-unit ideal"));
    }
    if !ideal.is_squarefree() {
        return Err(Error::domain(format!("{ideal} is not square-free")));
    }
    if !ideal.is_full_supported() {
        return Err(Error::domain(format!("{ideal} is not full-supported, so x1...xn is not in it")));
    }
    if ideal.nvars() > homology::MAX_HOMOLOGY_VARS {
        return Err(Error::domain(format!("witness construction limited to n <= {}", homology::MAX_HOMOLOGY_VARS)));
    }
    Ok(ideal.min_degree().expect("non-zero ideal") as usize)
}

/// Square-free members of `I` of the given degree, found by testing every
/// square-free monomial of that degree for membership.
pub fn layer_by_membership(ideal: &MonomialIdeal, degree: usize) -> Vec<Monomial> {
    let n = ideal.nvars();
    let mut out: Vec<Monomial> = VarSet::full(n)
        .subsets()
        .filter(|s| s.len() == degree && ideal.contains_set(*s))
        .map(|s| Monomial::from_varset(n, s).expect("subset of [n]"))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Square-free members of `I` of the given degree, built as products of a
/// square-free generator with disjoint variables.
pub fn layer_by_extension(ideal: &MonomialIdeal, degree: usize) -> Vec<Monomial> {
    let n = ideal.nvars();
    let full = VarSet::full(n);
    let mut sets: Vec<VarSet> = Vec::new();
    for g in ideal.gens() {
        let Some(base) = g.as_varset() else { continue };
        if base.len() > degree {
            continue;
        }
        let free = full.difference(base);
        for extra in free.subsets().filter(|e| e.len() == degree - base.len()) {
            sets.push(base.union(extra));
        }
    }
    sets.sort_by_key(|s| s.bits());
    sets.dedup();
    let mut out: Vec<Monomial> =
        sets.into_iter().map(|s| Monomial::from_varset(n, s).expect("subset of [n]")).collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Builds the layers and layer sums for a full-support square-free ideal
/// with least generator degree at least 2.
pub fn build_sv_witness(ideal: &MonomialIdeal) -> Result<SvWitness> {
    let d = require_squarefree_full(ideal)?;
    if d < 2 {
        return Err(Error::domain("layer witnesses need least generator degree >= 2"));
    }
    let n = ideal.nvars();
    let r = n - d;
    let mut layers = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let degree = n - j;
        let layer = layer_by_membership(ideal, degree);
        if layer != layer_by_extension(ideal, degree) {
            return Err(Error::Internal(format!("layer of degree {degree} differs between characterizations")));
        }
        if layer.is_empty() {
            return Err(Error::Internal(format!("layer P_{j} of {ideal} is empty")));
        }
        layers.push(layer);
    }
    let q = layers.iter().map(|layer| Polynomial::sum_of(Rationals, n, layer)).collect();

    let profile = homology::pd_depth(ideal, FieldChoice::Rationals)?;
    let ara_upper = r + 1;
    let ara_lower = profile.pd;
    if ara_lower > ara_upper {
        return Err(Error::theorem(format!(
            "{ideal}: pd = {ara_lower} exceeds the witness size {ara_upper}"
        )));
    }
    let ara_exact = ara_lower == ara_upper;
    if !ara_exact && matroid::is_matroidal(ideal)? {
        return Err(Error::theorem(format!(
            "{ideal} is matroidal but pd = {ara_lower} differs from n - d + 1 = {ara_upper}"
        )));
    }
    Ok(SvWitness { n, d, r, layers, q, ara_upper, ara_lower, ara_exact })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum SvViolation {
    /// (a): the layers do not cover exactly the square-free members of `I`.
    Union { missing: Vec<Monomial>, extra: Vec<Monomial> },
    /// (b): `P_0` does not have exactly one element.
    FirstLayerSize { size: usize },
    /// (c): no `p'` in an earlier layer divides `p * p2`.
    Divisibility { layer: usize, p: Monomial, p2: Monomial },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SvCheck {
    pub holds: bool,
    pub violation: Option<SvViolation>,
}

/// Checks the three hypotheses of the Schmitt-Vogel lemma for `layers`
/// against `P` = all square-free monomials of `I`, reporting the first
/// violated condition.
pub fn verify_sv_conditions(layers: &[Vec<Monomial>], ideal: &MonomialIdeal) -> SvCheck {
    let fail = |v| SvCheck { holds: false, violation: Some(v) };
    let n = ideal.nvars();

    let mut expected: Vec<Monomial> = VarSet::full(n)
        .subsets()
        .filter(|s| ideal.contains_set(*s))
        .map(|s| Monomial::from_varset(n, s).expect("subset of [n]"))
        .collect();
    expected.sort();
    let mut covered: Vec<Monomial> = layers.iter().flatten().cloned().collect();
    covered.sort();
    covered.dedup();
    let missing: Vec<Monomial> = expected.iter().filter(|m| covered.binary_search(m).is_err()).cloned().collect();
    let extra: Vec<Monomial> = covered.iter().filter(|m| expected.binary_search(m).is_err()).cloned().collect();
    if !missing.is_empty() || !extra.is_empty() {
        return fail(SvViolation::Union { missing, extra });
    }

    let first = layers.first().map_or(0, Vec::len);
    if first != 1 {
        return fail(SvViolation::FirstLayerSize { size: first });
    }

    for (i, layer) in layers.iter().enumerate().skip(1) {
        for (a, p) in layer.iter().enumerate() {
            for p2 in &layer[a + 1..] {
                if p == p2 {
                    continue;
                }
                let Ok(prod) = p.try_mul(p2) else {
                    return fail(SvViolation::Divisibility { layer: i, p: p.clone(), p2: p2.clone() });
                };
                let found = layers[..i].iter().flatten().any(|q| q.divides(&prod));
                if !found {
                    return fail(SvViolation::Divisibility { layer: i, p: p.clone(), p2: p2.clone() });
                }
            }
        }
    }
    SvCheck { holds: true, violation: None }
}

/// Elements realizing the upper bound on the arithmetical rank.
#[derive(Debug, Clone, PartialEq)]
pub enum AraWitness {
    SchmittVogel(SvWitness),
    /// `d = 1`: the ideal is generated by variables.
    Variables(Vec<Monomial>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AraReport {
    pub n: usize,
    pub d: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: AraWitness,
}

impl AraReport {
    /// `ara(I)` when the bounds meet.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lower)
    }
}

/// `pd(R/I) <= ara(I) <= n - d + 1` for a full-support matroidal ideal,
/// with the witness attaining the upper bound.
pub fn ara_report(ideal: &MonomialIdeal) -> Result<AraReport> {
    if ideal.is_zero() || !matroid::is_matroidal(ideal)? {
        return Err(Error::domain(format!("{ideal} is not matroidal")));
    }
    require_squarefree_full(ideal)?;
    let n = ideal.nvars();
    let d = ideal.single_degree().expect("matroidal") as usize;
    if d == 1 {
        let lower = homology::pd_depth(ideal, FieldChoice::Rationals)?.pd;
        if lower != n {
            return Err(Error::theorem(format!("{ideal}: pd = {lower} but n = {n}")));
        }
        return Ok(AraReport {
            n,
            d,
            lower,
            upper: n,
            exact: true,
            witness: AraWitness::Variables(ideal.gens().to_vec()),
        });
    }
    let witness = build_sv_witness(ideal)?;
    Ok(AraReport {
        n,
        d,
        lower: witness.ara_lower,
        upper: witness.ara_upper,
        exact: witness.ara_exact,
        witness: AraWitness::SchmittVogel(witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{generate_family, Family};

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_varsets(n, sets.iter().map(|s| VarSet::from_indices(s.iter().copied())))
            .unwrap()
    }

    fn monos(n: usize, sets: &[&[usize]]) -> Vec<Monomial> {
        sets.iter()
            .map(|s| Monomial::from_varset(n, VarSet::from_indices(s.iter().copied())).unwrap())
            .collect()
    }

    #[test]
    fn witness_for_squarefree_veronese_3_2() {
        let i = generate_family(3, &Family::SquarefreeVeronese { d: 2 }).unwrap();
        let w = build_sv_witness(&i).unwrap();
        assert_eq!(w.layers, vec![monos(3, &[&[1, 2, 3]]), monos(3, &[&[1, 2], &[1, 3], &[2, 3]])]);
        assert_eq!(w.q[0].to_string(), "x1*x2*x3");
        assert_eq!(w.q[1].to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert_eq!((w.ara_upper, w.ara_lower, w.ara_exact), (2, 2, true));
    }

    #[test]
    fn witness_for_n4_example() {
        let i = sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let w = build_sv_witness(&i).unwrap();
        assert_eq!(w.r, 2);
        assert_eq!(w.layers[0], monos(4, &[&[1, 2, 3, 4]]));
        assert_eq!(w.layers[1], monos(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]));
        assert_eq!(w.layers[2], i.gens().to_vec());
        assert_eq!((w.ara_upper, w.ara_lower, w.ara_exact), (3, 3, true));
        assert!(verify_sv_conditions(&w.layers, &i).holds);
    }

    #[test]
    fn witness_preconditions() {
        assert!(matches!(build_sv_witness(&MonomialIdeal::maximal(3)), Err(Error::Domain(_))));
        assert!(matches!(build_sv_witness(&sq(4, &[&[1, 2], &[1, 3]])), Err(Error::Domain(_))));
        let non_sf = MonomialIdeal::new(2, [Monomial::new(vec![2, 1])]).unwrap();
        assert!(matches!(build_sv_witness(&non_sf), Err(Error::Domain(_))));
    }

    #[test]
    fn conditions_hold_for_squarefree_veronese() {
        let i = generate_family(3, &Family::SquarefreeVeronese { d: 2 }).unwrap();
        let w = build_sv_witness(&i).unwrap();
        assert_eq!(verify_sv_conditions(&w.layers, &i), SvCheck { holds: true, violation: None });
    }

    #[test]
    fn two_element_first_layer_violates_b() {
        let i = generate_family(3, &Family::SquarefreeVeronese { d: 2 }).unwrap();
        let layers = vec![monos(3, &[&[1, 2, 3], &[1, 2]]), monos(3, &[&[1, 3], &[2, 3]])];
        let check = verify_sv_conditions(&layers, &i);
        assert!(!check.holds);
        assert_eq!(check.violation, Some(SvViolation::FirstLayerSize { size: 2 }));
    }

    #[test]
    fn missing_member_violates_a() {
        let i = generate_family(3, &Family::SquarefreeVeronese { d: 2 }).unwrap();
        let layers = vec![monos(3, &[&[1, 2, 3]]), monos(3, &[&[1, 2], &[1, 3]])];
        let check = verify_sv_conditions(&layers, &i);
        assert!(matches!(check.violation, Some(SvViolation::Union { ref missing, .. }) if missing.len() == 1));
        assert!(!verify_sv_conditions(&[], &i).holds);
    }

    #[test]
    fn merged_layers_violate_c() {
        let i = sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let mut merged = layer_by_membership(&i, 3);
        merged.extend(layer_by_membership(&i, 2));
        let layers = vec![monos(4, &[&[1, 2, 3, 4]]), merged];
        let check = verify_sv_conditions(&layers, &i);
        assert!(matches!(check.violation, Some(SvViolation::Divisibility { layer: 1, .. })));
    }

    #[test]
    fn layer_characterizations_agree_on_mixed_degrees() {
        let i = sq(5, &[&[1, 2], &[3, 4, 5], &[1, 3, 5]]);
        for degree in 0..=5 {
            assert_eq!(layer_by_membership(&i, degree), layer_by_extension(&i, degree));
        }
        let w = build_sv_witness(&i).unwrap();
        assert!(w.ara_lower <= w.ara_upper);
        assert!(verify_sv_conditions(&w.layers, &i).holds);
    }

    #[test]
    fn ara_reports() {
        let n4 = sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let r = ara_report(&n4).unwrap();
        assert_eq!((r.lower, r.upper, r.exact, r.value()), (3, 3, true, Some(3)));

        let m = MonomialIdeal::maximal(3);
        let r = ara_report(&m).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (3, 3, true));
        assert!(matches!(r.witness, AraWitness::Variables(ref v) if v.len() == 3));

        for (n, d) in [(4, 2), (5, 3), (5, 5), (6, 4)] {
            let i = generate_family(n, &Family::SquarefreeVeronese { d }).unwrap();
            let r = ara_report(&i).unwrap();
            assert_eq!(r.value(), Some(n - d + 1));
            assert_eq!(r.value(), Some(crate::decomp::height(&i).unwrap()));
        }
    }

    #[test]
    fn ara_report_rejects_non_matroidal() {
        assert!(matches!(ara_report(&sq(4, &[&[1, 2], &[3, 4]])), Err(Error::Domain(_))));
        assert!(matches!(ara_report(&MonomialIdeal::zero(3)), Err(Error::Domain(_))));
    }
}
