//! Property tests for the algebraic invariants that hold on all inputs, not
//! just the golden examples.

mod common;

use common::*;
use proptest::prelude::*;

use sturmian::closeability::{is_sturm_number, yasutomi_gamma, yasutomi_theta};
use sturmian::derived::{derived_word, equal_up_to_letter_permutation, Source};
use sturmian::morphism::{
    apply_morphism, incidence_matrix, realize, BinaryWord, Letter, MorphismWord,
};
use sturmian::normalization::{is_normalized, normalize};
use sturmian::quad::{QuadNumber, Rational, Sign};

fn arb_letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        Just(Letter::A),
        Just(Letter::B),
        Just(Letter::Alpha),
        Just(Letter::Beta),
    ]
}

fn arb_name(max_len: usize) -> impl Strategy<Value = MorphismWord> {
    prop::collection::vec(arb_letter(), 0..=max_len).prop_map(MorphismWord::new)
}

fn arb_binary(max_len: usize) -> impl Strategy<Value = BinaryWord> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(|bits| {
        bits.iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect::<String>()
            .parse()
            .unwrap()
    })
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_radicand() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7), Just(11)]
}

fn arb_quad() -> impl Strategy<Value = QuadNumber> {
    (arb_rational(), arb_rational(), arb_radicand())
        .prop_map(|(c, d, r)| QuadNumber::new(c, d, r).unwrap())
}

/// Two or three values drawn from one common field, so the binary operations
/// are always defined.
fn arb_quad_pair() -> impl Strategy<Value = (QuadNumber, QuadNumber)> {
    (arb_rational(), arb_rational(), arb_rational(), arb_rational(), arb_radicand()).prop_map(
        |(c1, d1, c2, d2, r)| {
            (
                QuadNumber::new(c1, d1, r).unwrap(),
                QuadNumber::new(c2, d2, r).unwrap(),
            )
        },
    )
}

fn arb_quad_triple() -> impl Strategy<Value = (QuadNumber, QuadNumber, QuadNumber)> {
    (
        prop::collection::vec(arb_rational(), 6),
        arb_radicand(),
    )
        .prop_map(|(r, rad)| {
            (
                QuadNumber::new(r[0].clone(), r[1].clone(), rad).unwrap(),
                QuadNumber::new(r[2].clone(), r[3].clone(), rad).unwrap(),
                QuadNumber::new(r[4].clone(), r[5].clone(), rad).unwrap(),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn realize_is_a_monoid_homomorphism(u in arb_name(6), v in arb_name(6), x in arb_binary(12)) {
        let composed = apply_morphism(&u.concat(&v), &x);
        let nested = realize(&u).apply(&realize(&v).apply(&x));
        prop_assert_eq!(composed, nested);
    }

    #[test]
    fn incidence_is_unimodular_and_counts_images(w in arb_name(10)) {
        use num_bigint::BigInt;
        let inc = incidence_matrix(&w);
        let det = inc.det();
        prop_assert!(det == BigInt::from(1) || det == BigInt::from(-1));
        let m = realize(&w);
        prop_assert_eq!(inc.e[0][0].clone(), BigInt::from(m.image0().count(0)));
        prop_assert_eq!(inc.e[1][0].clone(), BigInt::from(m.image0().count(1)));
        prop_assert_eq!(inc.e[0][1].clone(), BigInt::from(m.image1().count(0)));
        prop_assert_eq!(inc.e[1][1].clone(), BigInt::from(m.image1().count(1)));
    }

    #[test]
    fn normal_form_is_sound_and_canonical(w in arb_name(8)) {
        let n = normalize(&w);
        // Same substitution.
        prop_assert_eq!(realize(&w), realize(&n));
        // Rule-free, idempotent, skeleton- and length-preserving, and the
        // class maximum.
        prop_assert!(is_normalized(&n));
        prop_assert_eq!(&normalize(&n), &n);
        prop_assert_eq!(w.len(), n.len());
        for (x, y) in w.letters().iter().zip(n.letters()) {
            prop_assert_eq!(x.is_latin(), y.is_latin());
        }
        prop_assert!(n >= w);
        prop_assert_eq!(&oracle_normalize(&w), &n);
    }

    #[test]
    fn conjugation_distributes((x, y) in arb_quad_pair()) {
        prop_assert_eq!(
            x.try_add(&y).unwrap().conjugate(),
            x.conjugate().try_add(&y.conjugate()).unwrap()
        );
        prop_assert_eq!(
            x.try_mul(&y).unwrap().conjugate(),
            x.conjugate().try_mul(&y.conjugate()).unwrap()
        );
    }

    #[test]
    fn field_axioms((x, y, z) in arb_quad_triple()) {
        let assoc_l = x.try_add(&y).unwrap().try_add(&z).unwrap();
        let assoc_r = x.try_add(&y.try_add(&z).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
        let dist_l = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
        let dist_r = x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap();
        prop_assert_eq!(dist_l, dist_r);
        if !x.is_zero() {
            let inv = x.recip().unwrap();
            prop_assert_eq!(x.try_mul(&inv).unwrap(), QuadNumber::one());
        }
    }

    #[test]
    fn sign_agrees_with_float_oracle(x in arb_quad()) {
        let approx = x.to_f64();
        if approx.abs() > 1e-7 {
            prop_assert_eq!(x.sign() == Sign::Positive, approx > 0.0);
            prop_assert_eq!(x.sign() == Sign::Negative, approx < 0.0);
        }
    }

    #[test]
    fn parse_format_round_trip(x in arb_quad()) {
        let reparsed: QuadNumber = x.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, x);
    }

    #[test]
    fn permutation_matching_is_symmetric(x in arb_binary(24), y in arb_binary(24)) {
        let forward = equal_up_to_letter_permutation(x.as_str(), y.as_str()).is_some();
        let backward = equal_up_to_letter_permutation(y.as_str(), x.as_str()).is_some();
        prop_assert_eq!(forward, backward);
        prop_assert!(equal_up_to_letter_permutation(x.as_str(), x.as_str()).is_some());
    }
}

proptest! {
    // Orbit arithmetic and derivations regenerate words; keep the case count
    // modest.
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shift_commutes_with_coding(seed in 0u64..1 << 48) {
        let mut r = rng(seed);
        let p = sample_params(&mut r);
        let n = 80;
        prop_assert_eq!(p.generate(n + 1).suffix_from(1), p.shift().generate(n));
    }

    #[test]
    fn image_transport_commutes(seed in 0u64..1 << 48) {
        let mut r = rng(seed);
        let p = sample_params(&mut r);
        let n = 120;
        for g in Letter::ALL {
            let transported = p.image(g).generate(n);
            let applied = realize(&MorphismWord::new(vec![g])).apply(&p.generate(n));
            prop_assert_eq!(applied.prefix(n), transported);
        }
    }

    #[test]
    fn derivation_reconstructs_the_source(seed in 0u64..1 << 48) {
        let mut r = rng(seed);
        let p = sample_params_moderate(&mut r);
        let source = Source::iet(p);
        let u = source.prefix(400).unwrap();
        // Derive on a factor guaranteed to occur.
        let factor = u.prefix(3);
        if let Ok(report) = derived_word(&source, &factor, 20) {
            prop_assert_eq!(report.return_words.len(), 2);
            let occurrence = sturmian::derived::occurrences(&u, &factor)[0];
            let head = u.prefix(occurrence);
            let rebuilt = report.reconstruct(&head);
            prop_assert_eq!(rebuilt.len(), report.source_prefix_length);
            let expected = source.prefix(report.source_prefix_length).unwrap();
            prop_assert_eq!(rebuilt, expected);
        }
    }

    #[test]
    fn yasutomi_forms_agree(seed in 0u64..1 << 48) {
        let mut r = rng(seed);
        // theta in (0, 1) irrational, rho in [0, 1 + theta] rational scaled.
        let p = sample_params(&mut r);
        let (theta, _) = p.theta_form();
        let denom = QuadNumber::one().try_add(&theta).unwrap();
        let numer = rat(rand::Rng::gen_range(&mut r, 0..=8), 8);
        let rho = denom.mul_rational(&numer);
        if theta.is_rational() {
            return Ok(());
        }
        let by_theta = yasutomi_theta(&theta, &rho).unwrap();
        let gamma_low = theta.try_div(&denom).unwrap();
        let gamma_high = QuadNumber::one().try_div(&denom).unwrap();
        let delta = rho.try_div(&denom).unwrap();
        prop_assert_eq!(by_theta, yasutomi_gamma(&gamma_low, &delta).unwrap());
        prop_assert_eq!(by_theta, yasutomi_gamma(&gamma_high, &delta).unwrap());
        // Both candidate slopes are Sturm numbers exactly when the conjugate
        // of theta is negative.
        let sturm = is_sturm_number(&gamma_low);
        prop_assert_eq!(sturm, theta.conjugate().sign() == Sign::Negative);
        prop_assert_eq!(sturm, is_sturm_number(&gamma_high));
    }
}
