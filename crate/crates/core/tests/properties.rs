use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use infinigb::alphabet::{VariableSet, WeightedAlphabet};
use infinigb::coefficient::Field;
use infinigb::division::remainder;
use infinigb::groebner::{
    bayer_stillman_basis, buchberger_truncated, check_fr_condition, reduce_basis,
    verify_buchberger, GeneratorRule, IdealPresentation, RegularSequenceCandidate,
    TruncationWindow,
};
use infinigb::hilbert::quotient_series_from_standard_monomials;
use infinigb::monomial::{monomials_of_degree, monomials_of_degree_in, Monomial, OrderKind};
use infinigb::partition::{
    enumerate, monomial_to_partition, partition_to_monomial, Bijection, FamilySpec, Partition,
    PowerSpec,
};
use infinigb::polynomial::{Polynomial, Ring};

fn family_ideal(order: OrderKind, spec: &PowerSpec) -> IdealPresentation {
    IdealPresentation::new(
        &Ring::standard(order),
        GeneratorRule::PowerBinomial { p: spec.p() },
        spec.w().clone(),
    )
    .unwrap()
}

/// Unconstrained partitions of `n`, built part by part in non-increasing order.
fn plain_partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n.min(max))
        .flat_map(|first| {
            plain_partitions(n - first, first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

#[test]
fn degree_slices_are_partitions() {
    let w = WeightedAlphabet::standard();
    for n in 0..=30u32 {
        let mut from_monomials: Vec<Vec<u32>> = monomials_of_degree(n as u64, &w)
            .iter()
            .map(|m| monomial_to_partition(m).parts().to_vec())
            .collect();
        let mut expected = plain_partitions(n, n);
        from_monomials.sort();
        expected.sort();
        assert_eq!(from_monomials, expected, "n = {n}");
    }
}

#[test]
fn dictionary_round_trip() {
    for n in 0..=30u32 {
        for parts in plain_partitions(n, n) {
            let lambda = Partition::new(parts).unwrap();
            let m = partition_to_monomial(&lambda);
            assert_eq!(m.degree(&WeightedAlphabet::standard()), n as u64);
            assert_eq!(monomial_to_partition(&m), lambda);
        }
    }
}

#[test]
fn psi_lands_in_the_complement_of_multiples() {
    for spec in [PowerSpec::schur_p2(), PowerSpec::schur_p3()] {
        for n in 0..=30 {
            let b = Bijection::new(&spec, n);
            for rho in enumerate(&spec.y(), n) {
                let lambda = b.psi(&rho).unwrap();
                assert_eq!(lambda.weight(), n as u64);
                for &k in lambda.parts() {
                    assert!(spec.w().contains(k));
                    assert!(
                        !(k % spec.p() == 0 && spec.w().contains(k / spec.p())),
                        "{k}"
                    );
                }
            }
        }
    }
}

#[test]
fn remainders_against_a_basis_ignore_divisor_order() {
    let ring = Ring::standard(OrderKind::HomRevLex);
    let gens: Vec<Polynomial> = ["x1*x2 - x3", "x2^2 - x1*x3", "x1^3 - x3"]
        .iter()
        .map(|s| ring.parse(s).unwrap())
        .collect();
    let window = TruncationWindow::new(3, 16).unwrap();
    let basis = reduce_basis(&buchberger_truncated(&ring, &gens, window).unwrap());
    assert!(!verify_buchberger(&gens, 16).unwrap().passed());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let vars = VariableSet::up_to(3);
    for d in 1..=12u64 {
        let pool = monomials_of_degree_in(d, ring.weights(), &vars);
        let f = Polynomial::from_int_terms(
            &ring,
            pool.iter()
                .enumerate()
                .map(|(k, m)| ((k as i64 % 5) - 2, m.clone())),
        );
        let reference = remainder(&f, basis.elements()).unwrap();
        let mut divisors = basis.elements().to_vec();
        for _ in 0..10 {
            divisors.shuffle(&mut rng);
            assert_eq!(remainder(&f, &divisors).unwrap(), reference, "degree {d}");
        }
    }
}

#[test]
fn bayer_stillman_agrees_with_buchberger() {
    for spec in [PowerSpec::schur_p2(), PowerSpec::schur_p3()] {
        for order in [OrderKind::HomAntiRevLex, OrderKind::HomLex] {
            let ideal = family_ideal(order, &spec);
            for n in [4u32, 9, 15] {
                let window = TruncationWindow::new(n, 40).unwrap();
                let gens = ideal.instantiate(window).unwrap();
                let fast = bayer_stillman_basis(ideal.ring(), &gens).unwrap();
                let full = buchberger_truncated(ideal.ring(), &gens, window).unwrap();
                let mut a = fast.leading_monomials();
                let mut b = full.leading_monomials();
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn family_sequences_are_regular_in_every_order() {
    for spec in [PowerSpec::schur_p2(), PowerSpec::schur_p3()] {
        let ideal = family_ideal(OrderKind::HomAntiRevLex, &spec);
        let gens = ideal
            .instantiate(TruncationWindow::new(16, 40).unwrap())
            .unwrap();
        for len in 1..=gens.len().min(4) {
            let cand = RegularSequenceCandidate::new(ideal.ring(), gens[..len].to_vec()).unwrap();
            for perm in (0..len).permutations(len) {
                assert!(check_fr_condition(&cand.permuted(&perm), 12).unwrap());
            }
        }
    }
}

#[test]
fn quotient_series_are_nonnegative() {
    for spec in [PowerSpec::schur_p2(), PowerSpec::schur_p3()] {
        let ideal = family_ideal(OrderKind::HomAntiRevLex, &spec);
        let window = TruncationWindow::new(30, 30).unwrap();
        let gb = buchberger_truncated(ideal.ring(), &ideal.instantiate(window).unwrap(), window)
            .unwrap();
        let series = quotient_series_from_standard_monomials(&gb, spec.w(), 30).unwrap();
        assert!(series.coeffs().iter().all(|&c| c >= 0));
        let x: Vec<i64> = (0..=30)
            .map(|n| enumerate(&FamilySpec::X(spec.clone()), n).len() as i64)
            .collect();
        assert_eq!(series.coeffs(), &x[..]);
    }
}

/// Generators as lists of (coefficient, variable indices) terms.
type RawIdeal = (OrderKind, Vec<Vec<(i64, Vec<u32>)>>);

fn arb_homogeneous_ideal() -> impl Strategy<Value = RawIdeal> {
    let order = prop::sample::select(vec![
        OrderKind::HomLex,
        OrderKind::HomRevLex,
        OrderKind::HomAntiRevLex,
        OrderKind::HomAntiLex,
    ]);
    let term = (-3i64..=3, prop::collection::vec(1u32..=4, 1..=3));
    (
        order,
        prop::collection::vec(prop::collection::vec(term, 1..=3), 1..=3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn buchberger_output_reverifies((order, raw) in arb_homogeneous_ideal()) {
        let ring = Ring::new(order, WeightedAlphabet::unit_on(4), Field::Rational);
        // homogenize each generator by keeping only the terms of its first term's degree
        let gens: Vec<Polynomial> = raw
            .into_iter()
            .filter_map(|terms| {
                let degree = terms[0].1.len();
                let f = Polynomial::from_int_terms(
                    &ring,
                    terms
                        .into_iter()
                        .filter(|(_, v)| v.len() == degree)
                        .map(|(c, v)| (c, Monomial::from_indices(v))),
                );
                (!f.is_zero()).then_some(f)
            })
            .collect();
        prop_assume!(!gens.is_empty());
        let window = TruncationWindow::new(4, 7).unwrap();
        let gb = buchberger_truncated(&ring, &gens, window).unwrap();
        prop_assert!(verify_buchberger(gb.elements(), 7).unwrap().passed());
        let reduced = reduce_basis(&gb);
        prop_assert!(verify_buchberger(reduced.elements(), 7).unwrap().passed());
        for g in &gens {
            prop_assert!(remainder(g, reduced.elements()).unwrap().is_zero());
        }
    }
}
