use num_integer::Integer;
use qcatalan::genfun::golden::{builtin_library, check_form, parse_name};
use qcatalan::genfun::operators::{numerator_from_series, q_symmetric_integer};
use qcatalan::genfun::parse::parse_expression;
use qcatalan::genfun::*;
use qcatalan::LaurentPoly;

#[test]
fn direct_and_product_agree_small() {
    for m in 1..=6 {
        let w = Window::new(18, 201);
        let a = f_direct(m, w).unwrap();
        let b = f_product(m, w).unwrap();
        let cmp = series_equal(&a, &b, 1..=18, Some((-200, 200))).unwrap();
        assert!(cmp.equal, "m = {m}: {:?}", cmp.first_mismatch);
    }
}

#[test]
fn printed_examples_for_f_direct() {
    let f = f_direct(3, Window::for_m(3, 2)).unwrap();
    assert_eq!(f.coeff(2).to_laurent().unwrap(), LaurentPoly::from_terms([(4, 1), (-4, -1)]));
}

#[test]
fn pt_prime_commutes_with_sections() {
    for m in 1..=6u32 {
        let order = 36;
        let f = f_product(m, Window::for_m(m, order)).unwrap();
        let after = pt_prime(&f).unwrap();
        for r in 0..m {
            let lhs = pt_prime(&x_section(m, r, &f).unwrap()).unwrap();
            let rhs = x_section(m, r, &after).unwrap();
            assert_eq!(lhs, rhs, "m = {m}, r = {r}");
        }
    }
}

#[test]
fn coprime_coefficients_are_antisymmetric() {
    for m in 1..=7u32 {
        let f = f_direct(m, Window::for_m(m, 20)).unwrap();
        for n in 1..=20u32 {
            if m.gcd(&n) != 1 {
                continue;
            }
            let c = f.coeff(n as usize).to_laurent().expect("coprime coefficient is exact");
            assert_eq!(c.reciprocal_subst(), -&c, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn pt_prime_output_has_positive_exponents() {
    for m in 1..=6u32 {
        let g = g_series(m, Window::for_m(m, 20)).unwrap();
        for c in g.coeffs() {
            assert!(c.is_exact());
            assert!(c.terms().all(|(e, _)| e > 0));
        }
    }
}

#[test]
fn q_one_slice_parity_support() {
    for m in 1..=8u32 {
        let g = g_series(m, Window::for_m(m, 40)).unwrap();
        let s = q_slice(&g, 1).unwrap();
        for (n, _) in s.terms() {
            assert!(m % 2 == 0 && n % 2 == 0, "m = {m}: nonzero q x^{n}");
        }
    }
}

#[test]
fn h_series_examples() {
    let w = Window::for_m(3, 12);
    let h = h_series(3, 3, w).unwrap();
    // q^2/((1-x)(1-q^2 x)): x^n coefficient q^2 + q^4 + ... + q^{2n+2}
    for n in 0..=12 {
        let expect = LaurentPoly::from_terms((0..=n as i64).map(|j| (2 + 2 * j, 1)));
        assert_eq!(h.coeff(n).to_laurent().unwrap(), expect);
    }
    assert_eq!(q_symmetric_integer(4), LaurentPoly::from_terms([(3, 1), (1, 1), (-1, 1), (-3, 1)]));
}

#[test]
fn nonneg_check_flags_g4() {
    let g = g_series(4, Window::for_m(4, 12)).unwrap();
    let (ok, first) = nonneg_check(&g, 12);
    assert!(!ok);
    let first = first.unwrap();
    assert!(first.value < 0.into());
    let sec = x_section(3, 1, &g_series(3, Window::for_m(3, 31)).unwrap()).unwrap();
    assert!(nonneg_check(&sec, 10).0);
}

#[test]
fn golden_forms_through_order_twelve() {
    let lib = builtin_library();
    for (name, forms) in lib.iter() {
        let outcome = check_form(name, forms, 12).unwrap();
        if name == "X_{5,4}G_5" {
            let m = outcome.first_mismatch.expect("listed numerator has a wrong term");
            assert_eq!((m.x, m.q), (1, 28));
        } else {
            assert!(outcome.equal, "{name}: {:?}", outcome.first_mismatch);
        }
    }
}

#[test]
fn p50_numerator_has_64_terms() {
    let s = parse_name("X_{5,0}H_5^0").unwrap().compute(12).unwrap();
    let den = parse_expression("(1 - x^2)*(1 - x^3)*(1 - q^10*x)*(1 - q^20*x)").unwrap();
    let p = numerator_from_series(&s, &den, 2).unwrap();
    assert_eq!(p.max_x(), Some(6));
    assert_eq!(p.len(), 64);
    assert!(p.has_nonnegative_coeffs());
}
