//! Monomial ideals represented by their unique minimal generating set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet};

/// A monomial ideal of `k[x1..xn]` given by its minimal generators `G(I)`.
///
/// Generators are kept minimal (no generator divides another) and sorted in
/// decreasing lexicographic order, so equal ideals are structurally equal.
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Shape data used to check the standing hypotheses of most operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub is_squarefree: bool,
    pub is_single_degree: bool,
    pub degree: Option<u64>,
    pub is_full_supported: bool,
    pub support: VarSet,
    pub mu: usize,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw_gens`, discarding non-minimal ones.
    pub fn new(n: usize, raw_gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let raw: Vec<Monomial> = raw_gens.into_iter().collect();
        if let Some(bad) = raw.iter().find(|m| m.nvars() != n) {
            return Err(Error::AmbientMismatch { expected: n, found: bad.nvars() });
        }
        Ok(Self::from_unchecked(n, raw))
    }

    /// Minimalizes `raw` whose members are already known to have `n` variables.
    pub(crate) fn from_unchecked(n: usize, mut raw: Vec<Monomial>) -> Self {
        // Ascending degree: a divisor always precedes its multiples.
        raw.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        raw.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(raw.len());
        for m in raw {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// The maximal ideal `(x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        Self::prime(n, VarSet::full(n))
    }

    /// The monomial prime generated by the variables in `set`.
    pub fn prime(n: usize, set: VarSet) -> Self {
        let gens = set
            .iter()
            .map(|i| Monomial::var(n, i).expect("prime variable within ambient range"))
            .collect();
        Self::from_unchecked(n, gens)
    }

    /// The square-free ideal whose generators have the given supports.
    pub fn from_varsets(n: usize, sets: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let gens = sets
            .into_iter()
            .map(|s| Monomial::from_varset(n, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unchecked(n, gens))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// The minimal generators `G(I)`.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// `μ(I)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `supp(I)`.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::empty(), |acc, g| acc.union(g.support()))
    }

    pub fn is_full_supported(&self) -> bool {
        self.support() == VarSet::full(self.n)
    }

    /// The common degree of all generators, if there is one.
    pub fn single_degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// Supports of the generators of a square-free ideal.
    pub fn gen_supports(&self) -> Option<Vec<VarSet>> {
        self.gens.iter().map(Monomial::as_varset).collect()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::AmbientMismatch { expected: self.n, found: n });
        }
        Ok(())
    }

    /// Membership of a monomial: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check_ambient(u.nvars())?;
        Ok(self.gens.iter().any(|g| g.divides(u)))
    }

    /// Membership of a square-free monomial given by its support.
    pub fn contains_set(&self, set: VarSet) -> bool {
        self.gens.iter().any(|g| {
            g.exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || (e == 1 && set.contains(i + 1)))
        })
    }

    /// Membership of `x_add * (u / x_remove)` without building the monomial.
    /// Requires `x_remove | u`; indices are 1-based.
    pub(crate) fn contains_exchanged(&self, u: &Monomial, remove: usize, add: usize) -> bool {
        let (r, a) = (remove - 1, add - 1);
        self.gens.iter().any(|g| {
            g.exponents().iter().zip(u.exponents()).enumerate().all(|(k, (&ge, &ue))| {
                let mut e = ue;
                if k == r {
                    e -= 1;
                }
                if k == a {
                    e += 1;
                }
                ge <= e
            })
        })
    }

    /// `I ⊆ J`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ambient(other.n)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    /// The colon ideal `(I : u)`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(u.nvars())?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(u)).collect();
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// `(I : x_index)`, 1-based.
    pub fn colon_var(&self, index: usize) -> Result<MonomialIdeal> {
        self.colon(&Monomial::var(self.n, index)?)
    }

    /// `I ∩ J`, generated by pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// `I · J`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.try_mul(h)?);
            }
        }
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// `I + (u)`.
    pub fn with_generator(&self, u: Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(u.nvars())?;
        let mut gens = self.gens.clone();
        gens.push(u);
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// `I^k`, with `I^0` the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn summarize(&self) -> IdealSummary {
        let degree = self.single_degree();
        IdealSummary {
            is_squarefree: self.is_squarefree(),
            is_single_degree: degree.is_some(),
            degree,
            is_full_supported: self.is_full_supported(),
            support: self.support(),
            mu: self.mu(),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_varsets(n, sets.iter().map(|s| VarSet::from_indices(s.iter().copied())))
            .unwrap()
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn n4_example() -> MonomialIdeal {
        sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])
    }

    #[test]
    fn make_ideal_drops_multiples() {
        let i = MonomialIdeal::new(3, [mono(&[1, 1, 0]), mono(&[1, 1, 1])]).unwrap();
        assert_eq!(i.gens(), &[mono(&[1, 1, 0])]);
    }

    #[test]
    fn make_ideal_keeps_minimal_set_and_is_idempotent() {
        let i = n4_example();
        assert_eq!(i.mu(), 4);
        assert_eq!(i.to_string(), "(x1*x3, x1*x4, x2*x3, x2*x4)");
        let again = MonomialIdeal::new(4, i.gens().to_vec()).unwrap();
        assert_eq!(again, i);
    }

    #[test]
    fn make_ideal_empty_is_zero() {
        let i = MonomialIdeal::new(2, []).unwrap();
        assert!(i.is_zero());
        assert_eq!(i.mu(), 0);
    }

    #[test]
    fn make_ideal_rejects_wrong_length() {
        let err = MonomialIdeal::new(3, [mono(&[1, 0])]).unwrap_err();
        assert_eq!(err, Error::AmbientMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn membership() {
        let i = n4_example();
        assert!(i.contains(&mono(&[1, 1, 1, 0])).unwrap());
        assert!(!i.contains(&mono(&[1, 1, 0, 0])).unwrap());
        assert!(MonomialIdeal::unit(4).contains(&mono(&[0, 0, 0, 0])).unwrap());
        assert!(!MonomialIdeal::zero(4).contains(&mono(&[3, 3, 3, 3])).unwrap());
    }

    #[test]
    fn colon_examples() {
        let i = n4_example();
        assert_eq!(i.colon_var(1).unwrap(), sq(4, &[&[3], &[4]]));
        assert_eq!(i.colon(&Monomial::one(4)).unwrap(), i);
        let j = MonomialIdeal::new(3, [mono(&[2, 1, 0]), mono(&[2, 0, 1])]).unwrap();
        assert_eq!(j.colon(&mono(&[2, 0, 0])).unwrap(), sq(3, &[&[2], &[3]]));
        assert_eq!(MonomialIdeal::zero(3).colon(&mono(&[1, 0, 0])).unwrap(), MonomialIdeal::zero(3));
        assert!(i.colon(&mono(&[1, 0, 1, 0])).unwrap().is_unit());
    }

    #[test]
    fn intersection_examples() {
        let x1 = sq(3, &[&[1]]);
        let x2 = sq(3, &[&[2]]);
        assert_eq!(x1.intersect(&x2).unwrap(), sq(3, &[&[1, 2]]));
        let a = MonomialIdeal::new(3, [mono(&[2, 0, 0])]).unwrap();
        let b = sq(3, &[&[2], &[3]]);
        let expected = MonomialIdeal::new(3, [mono(&[2, 1, 0]), mono(&[2, 0, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), expected);
        let i = n4_example();
        assert_eq!(i.intersect(&i).unwrap(), i);
        assert!(i.intersect(&MonomialIdeal::zero(4)).unwrap().is_zero());
    }

    #[test]
    fn product_examples() {
        let a = sq(4, &[&[1], &[2]]);
        let b = sq(4, &[&[3], &[4]]);
        assert_eq!(a.product(&b).unwrap(), n4_example());
        let i = n4_example();
        assert_eq!(i.product(&MonomialIdeal::unit(4)).unwrap(), i);
        let m2 = MonomialIdeal::maximal(3).power(2).unwrap();
        assert_eq!(m2.mu(), 6);
        assert_eq!(m2.single_degree(), Some(2));
    }

    #[test]
    fn summaries() {
        let s = n4_example().summarize();
        assert!(s.is_squarefree && s.is_single_degree && s.is_full_supported);
        assert_eq!((s.degree, s.mu), (Some(2), 4));

        let j = MonomialIdeal::new(3, [mono(&[2, 1, 0]), mono(&[2, 0, 1])]).unwrap();
        let s = j.summarize();
        assert!(!s.is_squarefree && s.is_full_supported);
        assert_eq!((s.degree, s.mu), (Some(3), 2));

        let s = MonomialIdeal::zero(3).summarize();
        assert!(!s.is_single_degree);
        assert_eq!(s.degree, None);
        assert!(s.support.is_empty());
    }

    #[test]
    fn mismatched_ambient_is_structural_error() {
        let a = sq(3, &[&[1]]);
        let b = sq(4, &[&[1]]);
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(a.contains(&mono(&[1, 0])), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn contains_exchanged_matches_explicit_monomial() {
        let i = n4_example();
        let u = mono(&[1, 0, 1, 0]);
        for r in [1, 3] {
            for a in 1..=4 {
                let mut e = u.exponents().to_vec();
                e[r - 1] -= 1;
                e[a - 1] += 1;
                assert_eq!(i.contains_exchanged(&u, r, a), i.contains(&Monomial::new(e)).unwrap());
            }
        }
    }
}
