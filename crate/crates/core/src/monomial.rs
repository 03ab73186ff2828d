//! Monomials as exponent vectors, and subsets of the variables `x1..xn`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest variable count supported by the bitmask view of square-free data.
pub const MAX_MASK_VARS: usize = 64;

/// A monomial `x1^a1 ... xn^an` stored as its exponent vector.
///
/// Variables are addressed 1-based (`x1..xn`) in every public method. The
/// derived ordering compares exponent vectors lexicographically, which is the
/// lexicographic monomial order with `x1 > x2 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_index` (1-based) in `n` variables.
    pub fn var(n: usize, index: usize) -> Result<Self> {
        check_index(n, index)?;
        let mut exps = vec![0; n];
        exps[index - 1] = 1;
        Ok(Monomial { exps })
    }

    /// `x_index^exp` in `n` variables.
    pub fn var_power(n: usize, index: usize, exp: u32) -> Result<Self> {
        check_index(n, index)?;
        let mut exps = vec![0; n];
        exps[index - 1] = exp;
        Ok(Monomial { exps })
    }

    /// The square-free monomial whose support is `set`.
    pub fn from_varset(n: usize, set: VarSet) -> Result<Self> {
        if let Some(top) = set.last() {
            check_index(n, top)?;
        }
        let mut exps = vec![0; n];
        for i in set.iter() {
            exps[i - 1] = 1;
        }
        Ok(Monomial { exps })
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `deg_{x_index}`, 1-based.
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Pure power `x_i^e` with `e > 0`; returns the 1-based index.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i + 1);
            }
        }
        found
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> VarSet {
        let mut set = VarSet::empty();
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                set.insert(i + 1);
            }
        }
        set
    }

    /// The subset view of a square-free monomial.
    pub fn as_varset(&self) -> Option<VarSet> {
        if self.is_squarefree() && self.nvars() <= MAX_MASK_VARS {
            Some(self.support())
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.nvars() != other.nvars() || !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The monomial in `n + extra` variables with zero exponents appended.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        Monomial { exps }
    }

    pub(crate) fn same_ambient(&self, other: &Monomial) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::AmbientMismatch { expected: self.nvars(), found: other.nvars() });
        }
        Ok(())
    }
}

fn check_index(n: usize, index: usize) -> Result<()> {
    if index == 0 || index > n {
        return Err(Error::VariableOutOfRange { index, n });
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A subset of `{x1, ..., xn}` as a bitmask (bit `i - 1` is `x_i`).
///
/// Monomial primes, partition blocks and simplicial faces all use this view.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VarSet(u64);

impl VarSet {
    pub const fn empty() -> Self {
        VarSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    /// `{x1, ..., xn}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_MASK_VARS, "variable subsets support at most 64 variables");
        if n == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut set = VarSet::empty();
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, index: usize) {
        assert!((1..=MAX_MASK_VARS).contains(&index), "variable index {index} out of range");
        self.0 |= 1u64 << (index - 1);
    }

    pub fn remove(&mut self, index: usize) {
        if (1..=MAX_MASK_VARS).contains(&index) {
            self.0 &= !(1u64 << (index - 1));
        }
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_MASK_VARS).contains(&index) && self.0 & (1u64 << (index - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Members in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VarSet(cur))
        })
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for VarSet {
    /// Smaller sets first, then lexicographic on the sorted member lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl From<VarSet> for Vec<usize> {
    fn from(set: VarSet) -> Self {
        set.iter().collect()
    }
}

impl TryFrom<Vec<usize>> for VarSet {
    type Error = String;

    fn try_from(indices: Vec<usize>) -> std::result::Result<Self, Self::Error> {
        if let Some(bad) = indices.iter().find(|&&i| i == 0 || i > MAX_MASK_VARS) {
            return Err(format!("variable index {bad} out of range"));
        }
        Ok(VarSet::from_indices(indices))
    }
}
