//! Coefficient fields: the rationals and prime fields `GF(p)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime used by the fast modular path.
pub const DEFAULT_PRIME: u64 = 32003;

/// Runtime selection of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldChoice {
    Rationals,
    Prime(u64),
}

impl FieldChoice {
    pub fn validate(self) -> Result<Self> {
        if let FieldChoice::Prime(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => f.write_str("q"),
            FieldChoice::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// Accepts `q` (or `qq`, `rationals`) and `gf:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "q" | "qq" | "rationals" => return Ok(FieldChoice::Rationals),
            _ => {}
        }
        let p = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("GF:"))
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| Error::domain(format!("unknown field '{s}', expected q or gf:<prime>")))?;
        FieldChoice::Prime(p).validate()
    }
}

/// Arithmetic of a coefficient field.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn choice(&self) -> FieldChoice;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `None` when the denominator vanishes in the field.
    fn from_rational(&self, v: &BigRational) -> Option<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn choice(&self) -> FieldChoice {
        FieldChoice::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(&self, v: &BigRational) -> Option<BigRational> {
        Some(v.clone())
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// `GF(p)` for a prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::domain(format!("{p} is not a prime below 2^32")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn choice(&self) -> FieldChoice {
        FieldChoice::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let mut result = 1u64;
        let mut base = *a;
        let mut exp = self.p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        result
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_rational(&self, v: &BigRational) -> Option<u64> {
        let den = self.reduce_bigint(v.denom());
        if den == 0 {
            return None;
        }
        Some(self.mul(&self.reduce_bigint(v.numer()), &self.inv(&den)))
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Rank of a dense integer matrix over the chosen field.
///
/// Over the rationals this is fraction-free (Bareiss) elimination on
/// arbitrary-precision integers; over `GF(p)` plain Gaussian elimination.
pub fn matrix_rank(rows: usize, cols: usize, entries: &[i64], field: FieldChoice) -> Result<usize> {
    assert_eq!(entries.len(), rows * cols, "matrix shape");
    match field {
        FieldChoice::Rationals => Ok(rank_bareiss(rows, cols, entries)),
        FieldChoice::Prime(p) => Ok(rank_mod_p(rows, cols, entries, PrimeField::new(p)?)),
    }
}

fn rank_bareiss(rows: usize, cols: usize, entries: &[i64]) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: usize, cols: usize, entries: &[i64], field: PrimeField) -> usize {
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].iter().map(|&v| field.from_i64(v)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(&m[rank][col]);
        for r in (rank + 1)..rows {
            if m[r][col] == 0 {
                continue;
            }
            let factor = field.mul(&m[r][col], &inv);
            for c in col..cols {
                let sub = field.mul(&factor, &m[rank][c]);
                m[r][c] = field.sub(&m[r][c], &sub);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_choices() {
        assert_eq!("q".parse::<FieldChoice>().unwrap(), FieldChoice::Rationals);
        assert_eq!("gf:32003".parse::<FieldChoice>().unwrap(), FieldChoice::Prime(32003));
        assert!("gf:32004".parse::<FieldChoice>().is_err());
        assert!("zz".parse::<FieldChoice>().is_err());
        assert_eq!(FieldChoice::Prime(2).to_string(), "gf:2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        for a in [1u64, 2, 17, 32002] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.mul(&f.from_rational(&half).unwrap(), &2), 1);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.from_rational(&half), None);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: full rank over Q, rank 1 over GF(2)
        let m = [1, 1, 1, -1];
        assert_eq!(matrix_rank(2, 2, &m, FieldChoice::Rationals).unwrap(), 2);
        assert_eq!(matrix_rank(2, 2, &m, FieldChoice::Prime(2)).unwrap(), 1);
        assert_eq!(matrix_rank(2, 2, &m, FieldChoice::Prime(3)).unwrap(), 2);
    }

    fn rank_rational_naive(rows: usize, cols: usize, entries: &[i64]) -> usize {
        let q = Rationals;
        let mut m: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| (0..cols).map(|c| q.from_i64(entries[r * cols + c])).collect())
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(rank, p);
            for r in 0..rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] / &m[rank][col];
                    for c in 0..cols {
                        let s = &f * &m[rank][c];
                        m[r][c] -= s;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest::proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(
            rows in 1usize..6,
            cols in 1usize..6,
            seed in proptest::collection::vec(-3i64..=3, 36),
        ) {
            let entries = &seed[..rows * cols];
            proptest::prop_assert_eq!(
                matrix_rank(rows, cols, entries, FieldChoice::Rationals).unwrap(),
                rank_rational_naive(rows, cols, entries)
            );
        }
    }

    #[test]
    fn rank_of_rectangular_matrices() {
        let m = [1, 2, 3, 2, 4, 6, 1, 0, 1];
        assert_eq!(matrix_rank(3, 3, &m, FieldChoice::Rationals).unwrap(), 2);
        assert_eq!(matrix_rank(0, 4, &[], FieldChoice::Rationals).unwrap(), 0);
        let wide = [0, 0, 1, 0, 1, 0];
        assert_eq!(matrix_rank(2, 3, &wide, FieldChoice::Rationals).unwrap(), 2);
    }
}
