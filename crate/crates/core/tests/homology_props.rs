mod common;

use common::*;
use matroidal_core::field::FieldChoice;
use matroidal_core::homology::{self, MultidegreeScan, SimplicialComplex};
use matroidal_core::{decomp, VarSet};

#[test]
fn euler_characteristic_matches_homology() {
    let mut rng = rng(21);
    use rand::Rng;
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let facets: Vec<VarSet> =
            (0..rng.gen_range(0..6)).map(|_| VarSet::from_bits(rng.gen_range(0..(1u64 << n)))).collect();
        let c = SimplicialComplex::from_faces(n, facets).unwrap();
        for field in [FieldChoice::Rationals, FieldChoice::Prime(2)] {
            let ranks = homology::reduced_homology_ranks(&c, field).unwrap();
            let faces = c.faces_by_size();
            let sign = |k: usize| if k.is_multiple_of(2) { 1i64 } else { -1 };
            let chi_faces: i64 = faces.iter().enumerate().map(|(k, f)| sign(k) * f.len() as i64).sum();
            let chi_homology: i64 = ranks.iter().enumerate().map(|(k, r)| sign(k) * *r as i64).sum();
            assert_eq!(chi_faces, chi_homology, "{c:?}");
            assert_eq!(ranks.len(), faces.len());
        }
    }
}

#[test]
fn profile_invariants_on_random_squarefree_ideals() {
    let mut rng = rng(22);
    for n in 1..=6 {
        for _ in 0..40 {
            let i = random_ideal(&mut rng, n, 1, 6);
            if i.is_zero() || i.is_unit() {
                continue;
            }
            let h = homology::pd_depth(&i, FieldChoice::Rationals).unwrap();
            assert_eq!(h.pd + h.depth, n);
            assert!(h.height <= h.pd && h.pd <= i.mu(), "{i:?}");
            assert_eq!(h.height, decomp::height(&i).unwrap());
            assert_eq!(h.is_cm, h.height == h.pd);
            let totals = h.betti_totals();
            assert_eq!(totals[0], 1);
            assert_eq!(totals[1], i.mu());
            if n <= 5 {
                let exhaustive = homology::pd_depth_with(&i, FieldChoice::Rationals, MultidegreeScan::Exhaustive).unwrap();
                assert_eq!(exhaustive, h);
            }
        }
    }
}

#[test]
fn betti_numbers_alternate_to_zero() {
    // Σ (-1)^i β_i = 0 for R/I with I ≠ 0 (Hilbert series numerator vanishes at 1).
    let mut rng = rng(23);
    for n in 1..=6 {
        for _ in 0..30 {
            let i = random_ideal(&mut rng, n, 1, 5);
            if i.is_zero() || i.is_unit() {
                continue;
            }
            let h = homology::pd_depth(&i, FieldChoice::Prime(2)).unwrap();
            let alt: i64 = h
                .betti_totals()
                .iter()
                .enumerate()
                .map(|(k, b)| if k % 2 == 0 { *b as i64 } else { -(*b as i64) })
                .sum();
            assert_eq!(alt, 0, "{i:?}");
        }
    }
}

#[test]
fn matroidal_pd_is_field_independent() {
    for ideal in matroidal_suite(6, 1..=3) {
        let q = homology::pd_depth(&ideal, FieldChoice::Rationals).unwrap();
        let d = ideal.single_degree().unwrap() as usize;
        assert_eq!(q.pd, ideal.nvars() - d + 1, "{ideal:?}");
        assert_eq!(q.depth, d - 1);
        for p in [2, 32003] {
            let h = homology::pd_depth(&ideal, FieldChoice::Prime(p)).unwrap();
            assert_eq!(h.pd, q.pd, "{ideal:?} over GF({p})");
        }
    }
}

#[test]
fn squarefree_veronese_ideals_are_cohen_macaulay() {
    use matroidal_core::matroid::{generate_family, Family};
    for n in 2..=7 {
        for d in 1..=n {
            let i = generate_family(n, &Family::SquarefreeVeronese { d }).unwrap();
            let h = homology::pd_depth(&i, FieldChoice::Rationals).unwrap();
            assert!(h.is_cm, "{i:?}");
            assert_eq!(h.pd, n - d + 1);
        }
    }
}
