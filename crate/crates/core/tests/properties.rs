use num_bigint::BigInt;
use proptest::prelude::*;
use qcatalan::genfun::{f_product, pt_prime, x_section, Window};
use qcatalan::{LaurentPoly, Region};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unimodal(seq: &[i64]) -> bool {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    i + 1 >= seq.len()
}

fn parity_unimodal(seq: &[i64]) -> bool {
    let even: Vec<i64> = seq.iter().step_by(2).copied().collect();
    let odd: Vec<i64> = seq.iter().skip(1).step_by(2).copied().collect();
    unimodal(&even) && unimodal(&odd)
}

/// Symmetric coefficient list of the given degree, drawn from one of three
/// shapes so that both verdicts occur often.
fn symmetric_sample(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let degree = rng.gen_range(0..=40usize);
    let half = degree / 2 + 1;
    let mut left: Vec<i64> = (0..half).map(|_| rng.gen_range(0..=9)).collect();
    match rng.gen_range(0..3) {
        0 => left.sort(),
        1 => {
            let mut even: Vec<i64> = left.iter().step_by(2).copied().collect();
            let mut odd: Vec<i64> = left.iter().skip(1).step_by(2).copied().collect();
            even.sort();
            odd.sort();
            for (i, v) in left.iter_mut().enumerate() {
                *v = if i % 2 == 0 { even[i / 2] } else { odd[i / 2] };
            }
        }
        _ => {}
    }
    left[0] = left[0].max(1);
    let mut coeffs = vec![0; degree + 1];
    for (i, v) in left.iter().enumerate() {
        coeffs[i] = *v;
        coeffs[degree - i] = *v;
    }
    coeffs
}

/// a_i <= a_{i+2} whenever both indices are at or below the centre.
fn parity_rises_to_centre(seq: &[i64]) -> bool {
    let d = seq.len().saturating_sub(1);
    (0..seq.len()).all(|i| i + 2 > d - i.min(d) || seq[i] <= seq[i + 2])
}

#[test]
fn witnesses_match_direct_predicates() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut uni, mut par, mut odd_disagreements) = (0, 0, 0);
    for _ in 0..500 {
        let coeffs = symmetric_sample(&mut rng);
        let p = LaurentPoly::from_coeffs(&coeffs);
        assert!(p.is_palindromic().unwrap());
        let (w1, w2) = p.lemma5_witnesses().unwrap();
        assert_eq!(w1.has_nonnegative_coeffs(), unimodal(&coeffs), "{coeffs:?}");
        assert_eq!(p.is_unimodal().unwrap().holds, unimodal(&coeffs));
        assert_eq!(p.is_parity_unimodal().unwrap().holds, parity_unimodal(&coeffs));
        assert_eq!(w2.has_nonnegative_coeffs(), parity_rises_to_centre(&coeffs), "{coeffs:?}");
        if coeffs.len() % 2 == 1 {
            assert_eq!(w2.has_nonnegative_coeffs(), parity_unimodal(&coeffs), "{coeffs:?}");
        } else if w2.has_nonnegative_coeffs() != parity_unimodal(&coeffs) {
            // odd degree: the two parity subsequences are reverses of each
            // other, so each can be unimodal with its peak off centre
            assert!(parity_unimodal(&coeffs));
            odd_disagreements += 1;
        }
        uni += unimodal(&coeffs) as u32;
        par += parity_unimodal(&coeffs) as u32;
    }
    assert!((50..450).contains(&uni), "unimodal count {uni}");
    assert!((50..450).contains(&par), "parity-unimodal count {par}");
    assert!(odd_disagreements > 0);
}

#[test]
fn parity_witness_rejects_off_centre_peaks() {
    let p = LaurentPoly::from_coeffs(&[1, 0, 0, 1]);
    assert!(p.is_parity_unimodal().unwrap().holds);
    let (_, w2) = p.lemma5_witnesses().unwrap();
    assert_eq!(w2, LaurentPoly::from_terms([(5, 1), (1, -1)]));
}

#[test]
fn normalization_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let random_poly = |rng: &mut ChaCha8Rng| {
        let degree = rng.gen_range(0..=30usize);
        let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9..=9)).collect();
        if c[degree] == 0 {
            c[degree] = 1;
        }
        LaurentPoly::from_coeffs(&c)
    };
    for _ in 0..200 {
        let p = random_poly(&mut rng);
        let q = random_poly(&mut rng);
        let lhs = (&p * &q).normalize().unwrap();
        let rhs = &p.normalize().unwrap() * &q.normalize().unwrap();
        assert_eq!(lhs, rhs, "P = {p}, Q = {q}");
    }
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-30i64..30, -50i64..50), 0..25)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn parts_partition_the_polynomial(p in laurent()) {
        let pos = p.extract(Region::Positive);
        let zero = p.extract(Region::Zero);
        let neg = p.extract(Region::Negative);
        prop_assert_eq!(&(&pos + &zero) + &neg, p.clone());
        prop_assert!(pos.terms().all(|(e, _)| e > 0));
        prop_assert!(zero.terms().all(|(e, _)| e == 0));
        prop_assert!(neg.terms().all(|(e, _)| e < 0));
        prop_assert_eq!(pos.extract(Region::Positive), pos.clone());
        prop_assert!(pos.extract(Region::Negative).is_zero());
    }

    #[test]
    fn reciprocal_swaps_positive_and_negative(p in laurent()) {
        let r = p.reciprocal_subst();
        prop_assert_eq!(r.reciprocal_subst(), p.clone());
        prop_assert_eq!(r.extract(Region::Positive), p.extract(Region::Negative).reciprocal_subst());
    }
}

#[test]
fn pt_prime_commutes_with_every_section() {
    for m in 1..=6u32 {
        let f = f_product(m, Window::for_m(m, 30)).unwrap();
        let g = pt_prime(&f).unwrap();
        for k in 1..=m {
            for r in 0..k {
                let a = pt_prime(&x_section(k, r, &f).unwrap()).unwrap();
                let b = x_section(k, r, &g).unwrap();
                assert_eq!(a, b, "m = {m}, section ({k}, {r})");
            }
        }
    }
}
