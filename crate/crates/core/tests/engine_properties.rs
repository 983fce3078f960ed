//! Randomized invariants of the standard-basis engine and of resolutions.

use fibergerm_core::poly::{is_standard_basis, map_kernel};
use fibergerm_core::resolution::{minimal_free_resolution, PresentedModule};
use fibergerm_core::{AnalyticGerm, Coeff, Ideal, Monomial, MonomialOrder, Polynomial};
use proptest::prelude::*;
use std::sync::Arc;

fn poly(nvars: usize, min_deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0u32..=3, nvars), -3i64..=3);
    prop::collection::vec(term, 1..=3).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().filter_map(|(e, c)| {
                let m = Monomial::from_exponents(&e);
                (m.degree() >= min_deg && m.degree() <= 3).then(|| (m, Coeff::from_int(c)))
            }),
        )
    })
}

fn gens(nvars: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(poly(nvars, 1), 1..=2)
        .prop_map(|g| g.into_iter().filter(|p| !p.is_zero()).collect::<Vec<_>>())
        .prop_filter("nonzero ideal", |g| !g.is_empty())
}

fn ideal_and_poly() -> impl Strategy<Value = (Ideal, Polynomial)> {
    (1usize..=3).prop_flat_map(|n| (gens(n), poly(n, 0)).prop_map(move |(g, f)| (Ideal::local(n, g), f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_idempotent((i, f) in ideal_and_poly()) {
        let r = i.normal_form(&f).unwrap();
        prop_assert_eq!(i.normal_form(&r).unwrap(), r);
    }

    #[test]
    fn normal_form_differs_from_a_unit_multiple_by_the_ideal((i, f) in ideal_and_poly()) {
        let sb = i.standard_basis().unwrap();
        let (r, u) = sb.normal_form_with_unit(&f).unwrap();
        prop_assert!(!u.constant_term().is_zero());
        prop_assert!(i.contains(&u.mul(&f).sub(&r)).unwrap());
    }

    #[test]
    fn standard_basis_is_confluent((i, _f) in ideal_and_poly()) {
        let sb = i.standard_basis().unwrap();
        prop_assert!(is_standard_basis(&sb.polynomials(), &MonomialOrder::NegDegRevLex).unwrap());
        let mut rev = i.generators().to_vec();
        rev.reverse();
        let j = Ideal::local(i.nvars(), rev);
        let a = sb.leading_monomials();
        let b = j.leading_monomials().unwrap();
        let covered = |xs: &[Monomial], ys: &[Monomial]| xs.iter().all(|x| ys.iter().any(|y| y.divides(x)));
        prop_assert!(covered(&a, &b) && covered(&b, &a));
        prop_assert!(i.same_as(&j).unwrap());
    }

    #[test]
    fn combinations_of_generators_are_members((i, f) in ideal_and_poly()) {
        let mut s = Polynomial::zero(i.nvars());
        for (k, g) in i.generators().iter().enumerate() {
            s = s.add(&g.mul(&f.pow(k as u32 + 1)));
        }
        prop_assert!(i.contains(&s).unwrap());
        prop_assert!(i.normal_form(&s).unwrap().is_zero());
    }

    #[test]
    fn intersection_lies_in_both_and_contains_the_product(
        (i, j) in (1usize..=2).prop_flat_map(|n| (gens(n), gens(n)).prop_map(move |(a, b)| (Ideal::local(n, a), Ideal::local(n, b))))
    ) {
        let k = i.intersection(&j).unwrap();
        prop_assert!(i.contains_all(k.generators()).unwrap());
        prop_assert!(j.contains_all(k.generators()).unwrap());
        for a in i.generators() {
            for b in j.generators() {
                prop_assert!(k.contains(&a.mul(b)).unwrap());
            }
        }
    }

    #[test]
    fn kernel_generators_map_to_zero(
        (rel, extra) in (poly(2, 2), poly(2, 2))
    ) {
        // An automorphism of the plane, hence a surjection onto the quotient by `rel`.
        let target = Ideal::local(2, vec![rel.clone()].into_iter().filter(|p| !p.is_zero()).collect());
        let images = vec![Polynomial::variable(2, 0).add(&extra), Polynomial::variable(2, 1)];
        let k = map_kernel(2, &target, &images).unwrap();
        for g in k.generators() {
            prop_assert!(target.contains(&g.substitute(&images, 2)).unwrap());
        }
    }

    #[test]
    fn resolutions_are_minimal_complexes(
        (n, rels) in (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(poly(n, 2), 0..=2)))
    ) {
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let rels: Vec<Polynomial> = rels.into_iter().filter(|p| !p.is_zero()).collect();
        let germ = Arc::new(AnalyticGerm::new("X", vars, rels).unwrap());
        let res = minimal_free_resolution(&PresentedModule::residue_field(germ.clone()), 3).unwrap();
        prop_assert!(res.check_complex().unwrap());
        prop_assert!(res.is_minimal());
        prop_assert_eq!(res.rank(1), germ.embedding_dim());
    }
}
