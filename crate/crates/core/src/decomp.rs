//! Irreducible decompositions and associated primes of monomial ideals, and
//! the unmixedness criteria for matroidal ideals.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::matroid;
use crate::monomial::{Monomial, VarSet};

/// Associated and minimal primes of `R/I`; primes are sets of variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDecomposition {
    pub ass: Vec<VarSet>,
    pub minimal: Vec<VarSet>,
    pub height: usize,
    pub big_height: usize,
    pub is_unmixed: bool,
}

/// The blocks `S_1..S_m` of a degree-2 matroidal ideal: distinct variables
/// `x, y` share a block exactly when `xy` is not in the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub blocks: Vec<VarSet>,
    pub m: usize,
}

fn check_proper(ideal: &MonomialIdeal, what: &str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::domain(format!("{what} is undefined for the zero ideal")));
    }
    if ideal.is_unit() {
        return Err(Error::domain(format!("{what} is undefined for the unit ideal")));
    }
    Ok(())
}

/// Splits `g = a * b` with `a` the power of the lowest-index variable of `g`.
/// Returns `None` for pure powers.
fn split_generator(g: &Monomial) -> Option<(Monomial, Monomial)> {
    if g.pure_power_index().is_some() || g.is_one() {
        return None;
    }
    let k = g.exponents().iter().position(|&e| e > 0)?;
    let a = Monomial::var_power(g.nvars(), k + 1, g.exponents()[k]).ok()?;
    let b = g.checked_div(&a)?;
    Some((a, b))
}

fn component_order(a: &MonomialIdeal, b: &MonomialIdeal) -> std::cmp::Ordering {
    a.support().cmp(&b.support()).then_with(|| b.gens().cmp(a.gens()))
}

/// The irredundant decomposition of `I` into irreducible monomial ideals
/// (ideals generated by pure powers of variables).
///
/// Uses the splitting rule `I + (ab) = (I + (a)) ∩ (I + (b))` for coprime
/// `a, b`, always splitting the first generator (in stored order) that is not
/// a pure power.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    check_proper(ideal, "irreducible decomposition")?;
    let mut stack = vec![ideal.clone()];
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    seen.insert(ideal.clone());
    let mut leaves: Vec<MonomialIdeal> = Vec::new();

    while let Some(current) = stack.pop() {
        match current.gens().iter().find_map(split_generator) {
            None => leaves.push(current),
            Some((a, b)) => {
                for part in [a, b] {
                    let next = current.with_generator(part)?;
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
    }

    // For irreducible components, irredundancy is inclusion-minimality.
    let mut minimal: Vec<MonomialIdeal> = Vec::new();
    for leaf in &leaves {
        let dominated = leaves
            .iter()
            .any(|other| other != leaf && other.is_subideal_of(leaf).unwrap_or(false));
        if !dominated {
            minimal.push(leaf.clone());
        }
    }
    minimal.sort_by(component_order);
    minimal.dedup();

    let mut k = 0;
    while k < minimal.len() && minimal.len() > 1 {
        let others = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, c)| c.clone())
            .reduce(|acc, c| acc.intersect(&c).expect("same ambient"))
            .expect("at least one other component");
        if others.is_subideal_of(&minimal[k])? {
            minimal.remove(k);
        } else {
            k += 1;
        }
    }
    Ok(minimal)
}

/// `Ass(R/I)` as the radicals of an irredundant irreducible decomposition.
/// For square-free `I` these are the minimal vertex covers of the generator
/// supports and `Ass = Min`.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<PrimeDecomposition> {
    let components = irreducible_decomposition(ideal)?;
    let ass: BTreeSet<VarSet> = components.iter().map(MonomialIdeal::support).collect();
    let ass: Vec<VarSet> = ass.into_iter().collect();
    let minimal: Vec<VarSet> = ass
        .iter()
        .copied()
        .filter(|p| !ass.iter().any(|q| q != p && q.is_subset(*p)))
        .collect();
    let height = minimal.iter().map(|p| p.len()).min().unwrap_or(0);
    let big_height = ass.iter().map(|p| p.len()).max().unwrap_or(0);
    let is_unmixed = ass.iter().all(|p| p.len() == height);
    Ok(PrimeDecomposition { ass, minimal, height, big_height, is_unmixed })
}

/// `height(I)`.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(associated_primes(ideal)?.height)
}

fn require_matroidal(ideal: &MonomialIdeal, what: &str) -> Result<u64> {
    check_proper(ideal, what)?;
    if !matroid::is_matroidal(ideal)? {
        return Err(Error::domain(format!("{what} requires a matroidal ideal, got {ideal}")));
    }
    if !ideal.is_full_supported() {
        return Err(Error::domain(format!("{what} requires full support, got {ideal}")));
    }
    Ok(ideal.single_degree().expect("matroidal ideals are single-degree"))
}

/// The partition `S_1..S_m` of the variables attached to a full-support
/// degree-2 matroidal ideal, validated against all four structure conditions.
pub fn partition_degree2(ideal: &MonomialIdeal) -> Result<Partition> {
    let d = require_matroidal(ideal, "degree-2 partition")?;
    if d != 2 {
        return Err(Error::domain(format!("degree-2 partition requires d = 2, got d = {d}")));
    }
    let n = ideal.nvars();
    let product_in = |x: usize, y: usize| ideal.contains_set(VarSet::from_indices([x, y]));

    let mut blocks: Vec<VarSet> = Vec::new();
    let mut assigned = VarSet::empty();
    for x in 1..=n {
        if assigned.contains(x) {
            continue;
        }
        let mut block = VarSet::from_indices([x]);
        for y in (x + 1)..=n {
            if !product_in(x, y) {
                block.insert(y);
            }
        }
        for a in block.iter() {
            for b in block.iter() {
                if a < b && product_in(a, b) {
                    return Err(Error::Internal(format!(
                        "the relation xy ∉ I is not transitive on {ideal}: x{a}x{b} ∈ I"
                    )));
                }
            }
        }
        if !block.intersection(assigned).is_empty() {
            return Err(Error::Internal(format!(
                "the relation xy ∉ I is not transitive on {ideal}: block {block} overlaps"
            )));
        }
        assigned = assigned.union(block);
        blocks.push(block);
    }
    let partition = Partition { m: blocks.len(), blocks };
    verify_partition(ideal, &partition)?;
    Ok(partition)
}

/// Conditions (i)-(iv) of the degree-2 structure theorem.
pub fn verify_partition(ideal: &MonomialIdeal, partition: &Partition) -> Result<()> {
    let n = ideal.nvars();
    let fail = |msg: String| Err(Error::theorem(format!("partition of {ideal}: {msg}")));
    if partition.m != partition.blocks.len() {
        return fail("m differs from the number of blocks".into());
    }
    if partition.m < 2 || partition.blocks.iter().any(|b| b.is_empty()) {
        return fail("condition (i): need m >= 2 nonempty blocks".into());
    }
    let mut union = VarSet::empty();
    for (k, a) in partition.blocks.iter().enumerate() {
        for b in &partition.blocks[k + 1..] {
            if !a.intersection(*b).is_empty() {
                return fail(format!("condition (ii): {a} meets {b}"));
            }
        }
        union = union.union(*a);
    }
    if union != VarSet::full(n) {
        return fail(format!("condition (ii): union {union} is not [n]"));
    }
    let block_of = |x: usize| partition.blocks.iter().position(|b| b.contains(x));
    for x in 1..=n {
        for y in (x + 1)..=n {
            let in_ideal = ideal.contains_set(VarSet::from_indices([x, y]));
            let same = block_of(x) == block_of(y);
            if in_ideal == same {
                let cond = if in_ideal { "(iii)" } else { "(iv)" };
                return fail(format!("condition {cond} fails for x{x}, x{y}"));
            }
        }
    }
    Ok(())
}

/// Colon data for one variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonData {
    pub var: usize,
    pub height: usize,
    pub is_unmixed: bool,
}

/// The degree-2 partition identity `m (n - height) = n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCriterion {
    pub m: usize,
    pub lhs: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub n: usize,
    pub d: u64,
    pub height: usize,
    pub is_unmixed: bool,
    pub ass_count: usize,
    /// Only for `d = 2`.
    pub partition_criterion: Option<PartitionCriterion>,
    /// `|Ass| = m`; only for unmixed `d = 2`.
    pub ass_count_equals_m: Option<bool>,
    pub colons: Vec<ColonData>,
    /// Every `(I : x_i)` is unmixed of height `height(I)`.
    pub colon_criterion: bool,
}

/// Evaluates the unmixedness criteria for a full-support matroidal ideal of
/// degree at least 2 and checks each against the actual decomposition.
pub fn criteria_check(ideal: &MonomialIdeal) -> Result<CriteriaReport> {
    let d = require_matroidal(ideal, "criteria check")?;
    if d < 2 {
        return Err(Error::domain(format!("criteria check requires d >= 2, got d = {d}")));
    }
    let n = ideal.nvars();
    let primes = associated_primes(ideal)?;

    let mut partition_criterion = None;
    let mut ass_count_equals_m = None;
    if d == 2 {
        let partition = partition_degree2(ideal)?;
        let lhs = partition.m * (n - primes.height);
        let holds = lhs == n;
        if holds != primes.is_unmixed {
            return Err(Error::theorem(format!(
                "{ideal}: m(n - height) = {lhs} vs n = {n}, but unmixed = {}",
                primes.is_unmixed
            )));
        }
        partition_criterion = Some(PartitionCriterion { m: partition.m, lhs, holds });
        if primes.is_unmixed {
            let eq = primes.ass.len() == partition.m;
            if !eq {
                return Err(Error::theorem(format!(
                    "{ideal}: unmixed with |Ass| = {} but m = {}",
                    primes.ass.len(),
                    partition.m
                )));
            }
            ass_count_equals_m = Some(eq);
        }
    }

    let mut colons = Vec::with_capacity(n);
    for var in 1..=n {
        let colon = ideal.colon_var(var)?;
        let cp = associated_primes(&colon)?;
        colons.push(ColonData { var, height: cp.height, is_unmixed: cp.is_unmixed });
    }
    let colon_criterion = colons.iter().all(|c| c.is_unmixed && c.height == primes.height);
    if colon_criterion != primes.is_unmixed {
        return Err(Error::theorem(format!(
            "{ideal}: colon criterion = {colon_criterion} but unmixed = {}",
            primes.is_unmixed
        )));
    }

    Ok(CriteriaReport {
        n,
        d,
        height: primes.height,
        is_unmixed: primes.is_unmixed,
        ass_count: primes.ass.len(),
        partition_criterion,
        ass_count_equals_m,
        colons,
        colon_criterion,
    })
}

/// Which alternative holds for a degree-2 polymatroidal ideal with `Ass = Min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeTwoClass {
    Matroidal,
    SquareOfMaximal,
}

/// Classifies a full-support degree-2 polymatroidal ideal without embedded
/// primes as matroidal or `m^2`. Any other outcome is reported as a theorem
/// violation.
pub fn p1_classify(ideal: &MonomialIdeal) -> Result<DegreeTwoClass> {
    check_proper(ideal, "degree-2 classification")?;
    if ideal.single_degree() != Some(2) {
        return Err(Error::domain(format!("{ideal} is not generated in degree 2")));
    }
    if !ideal.is_full_supported() {
        return Err(Error::domain(format!("{ideal} is not full-supported")));
    }
    if !matroid::is_polymatroidal(ideal)?.holds {
        return Err(Error::domain(format!("{ideal} is not polymatroidal")));
    }
    let primes = associated_primes(ideal)?;
    if primes.ass != primes.minimal {
        return Err(Error::domain(format!("{ideal} has embedded primes")));
    }
    if matroid::is_matroidal(ideal)? {
        return Ok(DegreeTwoClass::Matroidal);
    }
    if *ideal == MonomialIdeal::maximal(ideal.nvars()).power(2)? {
        return Ok(DegreeTwoClass::SquareOfMaximal);
    }
    Err(Error::theorem(format!(
        "{ideal} is polymatroidal of degree 2 with Ass = Min but neither matroidal nor m^2"
    )))
}
