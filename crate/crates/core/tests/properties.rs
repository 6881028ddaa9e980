use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gspecht::characters::graded_character;
use gspecht::combinatorics::{AlgebraParams, LaurentPoly, Multipartition, Permutation, Tableau};
use gspecht::hecke::RegularRep;
use gspecht::scalars::FieldSpec;

fn multipartition(level: usize, max_parts: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(prop::collection::vec(1usize..4, 0..max_parts), level).prop_map(|comps| {
        let comps = comps
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by(|a, b| b.cmp(a));
                c
            })
            .collect();
        Multipartition::new(comps).unwrap()
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..5, -3i64..4), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shapes_round_trip_through_text(mu in multipartition(3, 3)) {
        prop_assert_eq!(Multipartition::parse(&mu.to_string(), 3).unwrap(), mu);
    }

    #[test]
    fn random_reduced_words_are_reduced(one_line in Just((1..=6).collect::<Vec<usize>>()).prop_shuffle(), seed in any::<u64>()) {
        let w = Permutation::from_one_line(one_line).unwrap();
        let word = w.random_reduced_word(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(6, &word), w);
    }

    #[test]
    fn laurent_products_commute_and_specialize(a in laurent(), b in laurent(), m in -3i64..4) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!(a.shift(m).eval_at_one(), a.eval_at_one());
    }

    #[test]
    fn degree_plus_codegree_is_the_defect(
        mu in multipartition(2, 3),
        e in prop::sample::select(vec![0u32, 2, 3, 4]),
        k in (-2i64..3, -2i64..3),
    ) {
        let params = AlgebraParams::combinatorial(e, vec![k.0, k.1]).unwrap();
        let def = params.defect(&params.content(&mu));
        for t in Tableau::standard(&mu) {
            prop_assert_eq!(t.degree(&params).unwrap() + t.codegree(&params).unwrap(), def);
        }
    }

    #[test]
    fn characters_count_tableaux(mu in multipartition(2, 3), e in prop::sample::select(vec![0u32, 2, 3])) {
        let params = AlgebraParams::combinatorial(e, vec![0, 1]).unwrap();
        let ch = graded_character(&mu, &params).unwrap();
        prop_assert_eq!(ch.total(), Tableau::standard(&mu).len() as i64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hecke_products_associate_and_star_reverses(seed in any::<u64>(), e in prop::sample::select(vec![2u32, 3])) {
        let params = AlgebraParams::new(FieldSpec::default_for_e(e).unwrap(), vec![0, 1]).unwrap();
        let rep = RegularRep::build(&params, 3, 100).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (rep.random_element(&mut rng, 3), rep.random_element(&mut rng, 3), rep.random_element(&mut rng, 3));
        let left = rep.element_product(&rep.element_product(&a, &b), &c);
        let right = rep.element_product(&a, &rep.element_product(&b, &c));
        prop_assert_eq!(left, right);
        prop_assert_eq!(rep.star(&rep.element_product(&a, &b)), rep.element_product(&rep.star(&b), &rep.star(&a)));
        prop_assert_eq!(rep.star(&rep.star(&a)), a);
    }
}
