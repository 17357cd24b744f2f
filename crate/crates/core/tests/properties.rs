mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use tspec_core::dynamics::{det_one_minus_t, exterior_power};
use tspec_core::equivariant::{cp1_twisted_trace, euler_number, FixedComponent, FixedPointData};
use tspec_core::laurent::{rat, ratio, Rational};
use tspec_core::localize::{fraction_field_trace, verify_endomorphism};
use tspec_core::random;
use tspec_core::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 0..=4)).prop_map(|(low, c)| LaurentPoly::from_coeffs(low, &c))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn unit() -> impl Strategy<Value = LaurentPoly> {
    ((-5i64..=5).prop_filter("nonzero", |c| *c != 0), -4i64..=4).prop_map(|(c, e)| LaurentPoly::monomial(rat(c), e))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    ((-6i64..=6).prop_filter("nonzero", |n| *n != 0), 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn int_matrix_strategy(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| v[i * n + j].into()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f * &LaurentPoly::x()) * &LaurentPoly::x_pow(-1), f.clone());
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f - &f, LaurentPoly::zero());
    }

    #[test]
    fn canonical_associate_is_idempotent_and_unit_invariant(f in nonzero_poly(), u in unit()) {
        let c = canonical_associate(&f).unwrap();
        prop_assert_eq!(canonical_associate(c.as_poly()).unwrap(), c.clone());
        prop_assert_eq!(canonical_associate(&(&u * &f)).unwrap(), c.clone());
        prop_assert!(c.min_exp() == Some(0));
        prop_assert!(c.leading_coeff().unwrap().is_one());
    }

    #[test]
    fn gcd_laws(f in nonzero_poly(), g in nonzero_poly(), h in nonzero_poly()) {
        prop_assert_eq!(gcd(&f, &g).unwrap(), gcd(&g, &f).unwrap());
        let lhs = gcd(&(&f * &h), &(&g * &h)).unwrap();
        let rhs = canonical_associate(&h).unwrap().as_poly() * gcd(&f, &g).unwrap().as_poly();
        prop_assert_eq!(lhs.as_poly(), &rhs);
        let d = gcd(&f, &g).unwrap();
        prop_assert!(f.exact_div(&d).is_some() && g.exact_div(&d).is_some());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in poly(), g in poly(), z in nonzero_rational()) {
        let ev = |p: &LaurentPoly| p.evaluate(&z).unwrap();
        prop_assert_eq!(ev(&(&f + &g)), ev(&f) + ev(&g));
        prop_assert_eq!(ev(&(&f * &g)), ev(&f) * ev(&g));
        prop_assert_eq!(ev(&LaurentPoly::one()), Rational::one());
    }

    #[test]
    fn display_round_trips(f in poly()) {
        let printed = f.to_string();
        prop_assert_eq!(printed.parse::<LaurentPoly>().unwrap(), f);
    }

    #[test]
    fn series_exp_is_additive(
        a in prop::collection::vec(-3i64..=3, 1..8),
        b in prop::collection::vec(-3i64..=3, 1..8),
    ) {
        let order = 12;
        let s = |c: &[i64]| TruncatedSeries::from_coeffs(order, std::iter::once(Rational::zero()).chain(c.iter().map(|&x| rat(x))));
        let (a, b) = (s(&a), s(&b));
        let lhs = a.add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.log().unwrap(), a.add(&b).unwrap());
    }

    #[test]
    fn classification_ignores_presentation(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let m = random::torsion_module(&mut rng, 3);
        let n = m.generators();
        let base = classify(&m);
        let (p, _) = random::unimodular(&mut rng, n, 3);
        let (q, _) = random::unimodular(&mut rng, m.relations().cols(), 3);
        let moved = p.mul(m.relations()).unwrap().mul(&q).unwrap();
        prop_assert_eq!(classify(&PresentedModule::new(n, moved).unwrap()), base.clone());
        let padded = m.relations().hstack(&PolyMatrix::zeros(n, 2)).unwrap();
        prop_assert_eq!(classify(&PresentedModule::new(n, padded).unwrap()), base.clone());
        prop_assert_eq!(classify(&base.to_presented()), base);
    }

    #[test]
    fn supports_and_annihilators_of_sums(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = classify(&random::torsion_module(&mut rng, 2));
        let b = classify(&random::torsion_module(&mut rng, 2));
        let sum = direct_sum(&a, &b);
        prop_assert_eq!(support(&sum), support(&a).union(&support(&b)));
        prop_assert_eq!(annihilator(&sum), lcm(&annihilator(&a), &annihilator(&b)).unwrap().into_poly());
        prop_assert_eq!(support(&direct_sum(&a, &InvariantFactors::free(1))), Support::Full);
    }

    #[test]
    fn localization_laws(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = classify(&random::torsion_module(&mut rng, 2));
        let b = classify(&random::torsion_module(&mut rng, 2)).clone();
        let b = direct_sum(&b, &InvariantFactors::free((seed % 2) as usize));
        let f = random::small_factor(&mut rng);
        let g = random::small_factor(&mut rng);

        let whole = localize(&direct_sum(&a, &b), &f).unwrap();
        let parts = direct_sum(localize(&a, &f).unwrap().factors(), localize(&b, &f).unwrap().factors());
        prop_assert_eq!(whole.factors(), &parts);

        if let Some(gen) = whole.support().generator() {
            prop_assert!(gcd(gen.as_poly(), &f).unwrap().is_one());
        }

        let twice = localize(&a, &f).unwrap().localize(&g).unwrap();
        let once = localize(&a, &(&f * &g)).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn trace_is_linear_and_similarity_invariant(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let (m, l1) = random::module_with_endomorphism(&mut rng, 2, 2);
        let n = m.generators();
        // scalar multiples and the identity are endomorphisms of any module
        let c = random::laurent_poly(&mut rng, 1);
        let l2 = PolyMatrix::identity(n).scale(&c);
        let sum = l1.add(&l2).unwrap();
        prop_assert_eq!(
            module_trace(&m, &sum).unwrap(),
            &module_trace(&m, &l1).unwrap() + &module_trace(&m, &l2).unwrap()
        );

        // change of generators: relations P R, endomorphism P L P^-1
        let (p, p_inv) = random::unimodular(&mut rng, n, 3);
        let moved = PresentedModule::new(n, p.mul(m.relations()).unwrap()).unwrap();
        let conj = p.mul(&l1).unwrap().mul(&p_inv).unwrap();
        prop_assert!(verify_endomorphism(&moved, &conj).unwrap());
        prop_assert_eq!(module_trace(&moved, &conj).unwrap(), module_trace(&m, &l1).unwrap());
    }

    #[test]
    fn localized_trace_is_the_localized_module_trace(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let (m, l) = random::module_with_endomorphism(&mut rng, 2, 2);
        let f = random::small_factor(&mut rng);
        let expected = RationalFunction::from_poly(module_trace(&m, &l).unwrap());
        prop_assert_eq!(localized_trace(&m, &l, &f).unwrap(), expected.clone());
        prop_assert_eq!(fraction_field_trace(&m, &l).unwrap(), expected);
    }

    #[test]
    fn charpoly_matches_faddeev_leverrier(a in int_matrix_strategy(4)) {
        let cp = charpoly(&a).unwrap();
        prop_assert_eq!(&cp, &common::faddeev_leverrier(&a));
        prop_assert_eq!(charpoly(&a.transpose()).unwrap(), cp.clone());
        let mp = minimal_polynomial(&a).unwrap();
        prop_assert!(cp.exact_div(&mp).is_some());
        prop_assert_eq!(squarefree_part(&mp).unwrap(), squarefree_part(&cp).unwrap());
    }

    #[test]
    fn ck_spectrum_is_transpose_invariant(seed in any::<u64>(), n in 1usize..=4) {
        let a = random::zero_one_matrix(&mut random::rng(seed), n);
        prop_assert_eq!(ck_spectrum(&a).unwrap(), ck_spectrum(&a.transpose()).unwrap());
    }

    #[test]
    fn crossed_product_spectra_are_algebraic_integers(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let k0 = random::invertible_int_matrix(&mut rng, 1 + (seed % 3) as usize, 2);
        let k1 = random::invertible_int_matrix(&mut rng, 1 + (seed / 3 % 3) as usize, 2);
        let s = tspec_of_crossed_product(&KTheoryAction::new(k0, k1).unwrap()).unwrap();
        let g = s.generator().unwrap();
        prop_assert!(!g.coeff(0).is_zero());
        prop_assert!(g.is_integral());
    }

    #[test]
    fn log_derivative_of_char_gives_power_sums(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let k0 = random::invertible_int_matrix(&mut rng, 1 + (seed % 3) as usize, 2);
        let k1 = random::invertible_int_matrix(&mut rng, 1 + (seed / 3 % 3) as usize, 2);
        let a = KTheoryAction::new(k0.clone(), k1.clone()).unwrap();
        let order = 10;
        let series = char_function(&a).unwrap().to_series(order).unwrap();
        let lhs = series.log().unwrap().euler_derivative().scale(&rat(-1));
        let (mut p0, mut p1) = (IntMatrix::identity(k0.rows()), IntMatrix::identity(k1.rows()));
        let mut rhs = vec![Rational::zero()];
        for _ in 1..=order {
            p0 = p0.mul(&k0).unwrap();
            p1 = p1.mul(&k1).unwrap();
            rhs.push(Rational::from_integer(p0.trace() - p1.trace()));
        }
        prop_assert_eq!(lhs, TruncatedSeries::from_coeffs(order, rhs));
    }

    #[test]
    fn exterior_powers_are_multiplicative(a in int_matrix_strategy(3), k in 0usize..=3) {
        let sq = a.mul(&a).unwrap();
        let lhs = exterior_power(&sq, k).unwrap();
        let e = exterior_power(&a, k).unwrap();
        prop_assert_eq!(lhs, e.mul(&e).unwrap());
        if k == a.rows() {
            prop_assert_eq!(e[(0, 0)].clone(), common::int_det(&a));
        }
    }

    #[test]
    fn det_one_minus_t_is_reversed_charpoly(a in int_matrix_strategy(4)) {
        let n = a.rows() as i64;
        let reversed = charpoly(&a).unwrap().invert_variable().shift(n);
        prop_assert_eq!(det_one_minus_t(&a).unwrap(), reversed);
    }

    #[test]
    fn euler_number_at_one_is_the_plain_index(
        comps in prop::collection::vec((-3i64..=3, prop::collection::vec((-4i64..=4, 0u64..=3), 0..4)), 0..4),
    ) {
        let fp = FixedPointData::new(comps.iter().map(|(e, ch)| FixedComponent { euler: *e, characters: ch.clone() }).collect());
        let expected: i64 = comps.iter().map(|(e, ch)| e * ch.iter().map(|(_, m)| *m as i64).sum::<i64>()).sum();
        prop_assert_eq!(euler_number(&fp).evaluate(&rat(1)).unwrap(), rat(expected));
    }
}

#[test]
fn cp1_traces_follow_the_chebyshev_recursion() {
    let s = LaurentPoly::from_coeffs(-1, &[1, 0, 1]);
    let mut prev = LaurentPoly::int(2);
    let mut cur = s.clone();
    assert_eq!(cp1_twisted_trace(0).unwrap(), prev);
    assert_eq!(cp1_twisted_trace(1).unwrap(), cur);
    for k in 2..=12 {
        let next = &(&s * &cur) - &prev;
        assert_eq!(cp1_twisted_trace(k).unwrap(), next);
        assert_eq!(next.evaluate(&rat(1)).unwrap(), rat(2));
        prev = cur;
        cur = next;
    }
}

#[test]
fn toral_periodic_points_match_brute_force() {
    for t in [[[1, 1], [1, 0]], [[2, 1], [1, 1]], [[3, 2], [1, 1]]] {
        let m = tspec_core::matrix::int_matrix(&[&t[0], &t[1]]);
        let aut = ToralAutomorphism::new(m.clone()).unwrap();
        for n in 1..=5 {
            let shifted = m.pow(n).unwrap().sub(&IntMatrix::identity(2)).unwrap();
            let count = periodic_points(&aut, n).unwrap();
            assert_eq!(count, common::brute_force_fixed_points_2d(&shifted).into());
            assert_eq!(count, num_traits::Signed::abs(&common::int_det(&shifted)));
        }
    }
}
