mod common;

use common::*;
use matroidal_core::{Monomial, MonomialIdeal, VarSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn operations_keep_generators_minimal(
        a in arb_ideal(5, 2, 6),
        b in arb_ideal(5, 2, 6),
        u in arb_monomial(5, 2),
    ) {
        prop_assert!(no_generator_divides_another(&a));
        prop_assert!(no_generator_divides_another(&a.colon(&u).unwrap()));
        prop_assert!(no_generator_divides_another(&a.intersect(&b).unwrap()));
        prop_assert!(no_generator_divides_another(&a.product(&b).unwrap()));
        prop_assert!(no_generator_divides_another(&a.sum(&b).unwrap()));
    }

    #[test]
    fn colon_composes(i in arb_ideal(6, 2, 7), u in arb_monomial(6, 2), v in arb_monomial(6, 2)) {
        let left = i.colon(&u).unwrap().colon(&v).unwrap();
        let right = i.colon(&u.try_mul(&v).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn colon_matches_definition(i in arb_ideal(3, 2, 5), u in arb_monomial(3, 2)) {
        // w ∈ (I : u) iff u·w ∈ I, on every monomial with exponents <= 4
        let colon = i.colon(&u).unwrap();
        for w in all_monomials(3, 4) {
            prop_assert_eq!(member_naive(&colon, &w), member_naive(&i, &u.try_mul(&w).unwrap()));
        }
    }

    #[test]
    fn intersection_is_commutative_and_associative(
        a in arb_ideal(4, 2, 4),
        b in arb_ideal(4, 2, 4),
        c in arb_ideal(4, 2, 4),
    ) {
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn make_ideal_is_idempotent(i in arb_ideal(5, 3, 8)) {
        prop_assert_eq!(MonomialIdeal::new(5, i.gens().to_vec()).unwrap(), i);
    }
}

#[test]
fn membership_agrees_with_brute_force_on_squarefree_monomials() {
    let mut rng = rng(7);
    for n in 1..=6 {
        for _ in 0..40 {
            let i = random_ideal(&mut rng, n, 2, 6);
            for set in VarSet::full(n).subsets() {
                let u = Monomial::from_varset(n, set).unwrap();
                assert_eq!(i.contains(&u).unwrap(), member_naive(&i, &u), "{i:?} {u}");
                assert_eq!(i.contains_set(set), member_naive(&i, &u));
            }
        }
    }
}

#[test]
fn intersection_agrees_with_membership_on_squarefree_monomials() {
    let mut rng = rng(7);
    for n in 1..=6 {
        for _ in 0..40 {
            let a = random_ideal(&mut rng, n, 2, 5);
            let b = random_ideal(&mut rng, n, 2, 5);
            let both = a.intersect(&b).unwrap();
            for set in VarSet::full(n).subsets() {
                let u = Monomial::from_varset(n, set).unwrap();
                assert_eq!(member_naive(&both, &u), member_naive(&a, &u) && member_naive(&b, &u));
            }
        }
    }
}

#[test]
fn variables_with_disjoint_generators_have_equal_colons() {
    // If xy divides no generator of a matroidal I then (I : x) = (I : y).
    let mut checked = 0;
    for ideal in matroidal_suite(6, 1..=6) {
        let n = ideal.nvars();
        let supports = ideal.gen_supports().unwrap();
        for x in 1..=n {
            for y in (x + 1)..=n {
                let pair = VarSet::from_indices([x, y]);
                if supports.iter().any(|s| pair.is_subset(*s)) {
                    continue;
                }
                assert_eq!(ideal.colon_var(x).unwrap(), ideal.colon_var(y).unwrap(), "{ideal:?} x{x} x{y}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn zero_and_unit_ideals_behave() {
    let n = 3;
    let u = Monomial::new(vec![1, 2, 0]);
    let zero = MonomialIdeal::zero(n);
    let unit = MonomialIdeal::unit(n);
    assert_eq!(zero.colon(&u).unwrap(), zero);
    assert_eq!(unit.colon(&u).unwrap(), unit);
    assert_eq!(zero.intersect(&unit).unwrap(), zero);
    assert_eq!(zero.product(&unit).unwrap(), zero);
    assert_eq!(zero.sum(&unit).unwrap(), unit);
}
