mod common;

use common::*;
use matroidal_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use matroidal_core::groebner::{self, MonomialOrder, Polynomial};
use matroidal_core::sv;
use matroidal_core::Monomial;
use rand::Rng;

#[test]
fn layer_invariants_over_the_enumeration() {
    for ideal in matroidal_suite(6, 2..=3) {
        let n = ideal.nvars();
        let w = sv::build_sv_witness(&ideal).unwrap();
        let d = ideal.single_degree().unwrap() as usize;
        assert_eq!(w.layers.len(), n - d + 1);
        assert_eq!(w.layers[0], vec![Monomial::from_varset(n, matroidal_core::VarSet::full(n)).unwrap()]);
        assert_eq!(w.layers[w.r], ideal.gens().to_vec());
        for (j, layer) in w.layers.iter().enumerate() {
            assert!(layer.iter().all(|p| p.degree() as usize == n - j && member_naive(&ideal, p)));
            assert_eq!(sv::layer_by_extension(&ideal, n - j), *layer);
        }
        for q in &w.q {
            assert!(q.terms().iter().all(|(m, c)| member_naive(&ideal, m) && Rationals.is_one(c)));
        }
        assert!(sv::verify_sv_conditions(&w.layers, &ideal).holds, "{ideal:?}");
        assert!(w.ara_exact);
        assert_eq!(w.ara_upper, n - d + 1);
    }
}

#[test]
fn certification_agrees_over_rationals_and_gf_32003() {
    let gf = PrimeField::new(DEFAULT_PRIME).unwrap();
    for ideal in matroidal_suite(5, 2..=3) {
        let w = sv::build_sv_witness(&ideal).unwrap();
        let over_q = groebner::certify_witness(&ideal, &w, Rationals).unwrap();
        let over_p = groebner::certify_witness(&ideal, &w, gf).unwrap();
        assert!(over_q.certified, "{ideal:?}");
        assert_eq!(over_q.certified, over_p.certified);
        assert_eq!(over_q.radical_failures, over_p.radical_failures);
    }
}

#[test]
fn dropping_a_layer_sum_is_detected_somewhere() {
    // The bound n - d + 1 is sharp for matroidal ideals, so no proper subset of
    // the layer sums can generate an ideal with the right radical.
    for ideal in matroidal_suite(4, 2..=3) {
        let w = sv::build_sv_witness(&ideal).unwrap();
        for drop in 0..w.q.len() {
            let mut broken = w.clone();
            broken.q.remove(drop);
            let cert = groebner::certify_witness(&ideal, &broken, Rationals).unwrap();
            assert!(!cert.certified, "{ideal:?} without q_{drop}");
        }
    }
}

fn random_poly(rng: &mut impl Rng, n: usize, terms: usize, max_exp: u32) -> Polynomial<Rationals> {
    let t = (0..terms).map(|_| {
        let m = Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
        (m, Rationals.from_i64(rng.gen_range(-3..=3)))
    });
    Polynomial::from_terms(Rationals, n, t)
}

#[test]
fn normal_form_ignores_ideal_multiples() {
    let mut rng = rng(31);
    for _ in 0..40 {
        let n = 3;
        let gens: Vec<_> = (0..3).map(|_| random_poly(&mut rng, n, 3, 2)).filter(|p| !p.is_zero()).collect();
        if gens.is_empty() {
            continue;
        }
        let gb = groebner::buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        let f = gens[rng.gen_range(0..gens.len())].mul(&random_poly(&mut rng, n, 2, 1));
        let g = random_poly(&mut rng, n, 2, 1);
        let h = random_poly(&mut rng, n, 3, 2);
        let lhs = groebner::normal_form(&f.mul(&g).add(&h), &gb).unwrap();
        assert_eq!(lhs, groebner::normal_form(&h, &gb).unwrap());
    }
}

#[test]
fn radical_membership_is_monotone() {
    let mut rng = rng(32);
    for _ in 0..30 {
        let n = 3;
        let mut gens: Vec<_> = (0..2).map(|_| random_poly(&mut rng, n, 2, 2)).collect();
        let f = random_poly(&mut rng, n, 2, 1);
        if f.is_zero() {
            continue;
        }
        let before = groebner::radical_membership(&f, &gens).unwrap();
        gens.push(random_poly(&mut rng, n, 2, 2));
        let after = groebner::radical_membership(&f, &gens).unwrap();
        assert!(!before || after);
    }
}
