#![allow(dead_code)]

use matroidal_core::{matroid, Monomial, MonomialIdeal, VarSet};
use proptest::prelude::*;

pub fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::from_varsets(n, sets.iter().map(|s| VarSet::from_indices(s.iter().copied()))).unwrap()
}

/// Every full-support matroidal ideal with `n <= max_n` and `d` in `degrees`.
pub fn matroidal_suite(max_n: usize, degrees: std::ops::RangeInclusive<usize>) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for d in degrees.clone() {
            if d > n || matroid::binomial(n, d) > matroid::ENUMERATION_MAX_CANDIDATES {
                continue;
            }
            out.extend(matroid::enumerate_matroidal(n, d, true).unwrap());
        }
    }
    out
}

/// Random monomial ideals in `n` variables with small exponents.
pub fn arb_ideal(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 0..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(n, gens.into_iter().map(Monomial::new)).unwrap())
}

pub fn arb_squarefree_ideal(n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    arb_ideal(n, 1, max_gens)
}

pub fn arb_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

/// Brute-force monomial membership straight from exponent vectors.
pub fn divides_naive(g: &[u32], u: &[u32]) -> bool {
    g.iter().zip(u).all(|(a, b)| a <= b)
}

pub fn member_naive(ideal: &MonomialIdeal, u: &Monomial) -> bool {
    ideal.gens().iter().any(|g| divides_naive(g.exponents(), u.exponents()))
}

pub fn no_generator_divides_another(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.gens();
    gens.iter().enumerate().all(|(a, g)| {
        gens.iter().enumerate().all(|(b, h)| a == b || !divides_naive(g.exponents(), h.exponents()))
    })
}

/// Every monomial with exponents bounded by `max_exp` in `n` variables.
pub fn all_monomials(n: usize, max_exp: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max_exp).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ideal(rng: &mut impl rand::Rng, n: usize, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(0..=max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()))
        .collect();
    MonomialIdeal::new(n, gens).unwrap()
}
