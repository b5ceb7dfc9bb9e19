mod common;

use std::sync::Arc;

use proptest::prelude::*;
use qrpw_core::coeff::rat;
use qrpw_core::grading;
use qrpw_core::ncalg::{
    algebras, check_morphism, check_presentation, morphism, random_expr, Element, Expr, Presentation,
    Strategy, Word,
};
use qrpw_core::QPoly;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn el(p: &Arc<Presentation>, s: &str) -> Element {
    Element::parse(p, s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn all_algebras(l: u32) -> Vec<Arc<Presentation>> {
    vec![
        algebras::sigma(),
        algebras::sigma_minus(l),
        algebras::sigma_plus(l),
        algebras::rp_minus(l),
        algebras::rp_plus(l),
    ]
}

#[test]
fn reduce_examples() {
    let s = algebras::sigma();
    assert_eq!(el(&s, "z1*"), el(&s, "z1 xi"));
    assert_eq!(el(&s, "z0 z0*"), el(&s, "1 - z1^2 xi"));
    assert_eq!(el(&s, "z1 z0"), el(&s, "q^-1 z0 z1"));
    assert_eq!(el(&s, "z0* z0"), el(&s, "1 - q^-2 z1^2 xi"));
    assert_eq!(el(&s, "z1 z0").to_string(), "q^-1 z0 z1");
}

#[test]
fn reduce_is_idempotent() {
    let s = algebras::sigma();
    let e = el(&s, "z0* z1 z0 z0 xi^-1 z1*");
    assert_eq!(el(&s, &e.to_string()), e);
}

#[test]
fn mul_examples() {
    let m1 = algebras::sigma_minus(1);
    assert_eq!(&el(&m1, "x") * &el(&m1, "x*"), el(&m1, "1 - y^2 z"));

    // z0² z0* = z0 (1 - z1² xi), already in normal order
    let s = algebras::sigma();
    let got = &el(&s, "z0^2") * &el(&s, "z0*");
    let z0 = el(&s, "z0");
    let rest = el(&s, "z0 z1^2 xi");
    assert_eq!(got, &z0 - &rest);
    assert_eq!(&Element::one(&s) * &got, got);
}

#[test]
fn star_examples() {
    let s = algebras::sigma();
    let e = el(&s, "z0 z1");
    // (z0 z1)* = z1* z0* = z1 xi z0* = q z0* z1 xi
    assert_eq!(e.star(), el(&s, "q z0* z1 xi"));
    assert_eq!(e.star().star(), e);
    assert_eq!(Element::one(&s).star(), Element::one(&s));

    let m = algebras::sigma_minus(2);
    let a = el(&m, "y^2 z");
    assert_eq!(a.star(), a);
}

#[test]
fn parse_examples() {
    let s = algebras::sigma();
    let w = el(&s, "z0^2 z1 xi^-1");
    assert_eq!(w.len(), 1);
    let e = el(&s, "(q^-2 - 1) z1^2 xi");
    assert_eq!(e.len(), 1);
    assert!(Element::parse(&s, "z0 w").is_err());
}

#[test]
fn presentations_pass_their_checks() {
    for l in 1..=3 {
        for p in all_algebras(l) {
            let r = check_presentation(&p, &[], 60, 7);
            assert!(r.passed, "{}", r.render());
        }
    }
    let s = algebras::sigma();
    let r = check_presentation(&s, &[grading::rho(1, 2), grading::phi_cyclic(2)], 40, 1);
    assert!(r.passed, "{}", r.render());
}

#[test]
fn dropped_commutation_rule_is_caught() {
    let s = algebras::sigma();
    let z1 = s.letter_by_name("z1").unwrap();
    let z0 = s.letter_by_name("z0").unwrap();
    let broken = Arc::new(s.without_rule([z1, z0]));
    let r = check_presentation(&broken, &[], 200, 0);
    assert!(!r.passed);
    let failure = r.first_failure().unwrap();
    assert!(!failure.detail.is_empty());
}

#[test]
fn morphisms_respect_relations() {
    for l in 1..=3 {
        for name in ["embed-", "embed+", "fix-", "fix+", "coinv-", "coinv+"] {
            let m = morphism::by_name(name, l).unwrap();
            let r = check_morphism(&m);
            assert!(r.passed, "{}", r.render());
        }
    }
    let id = morphism::by_name("id-sigma", 1).unwrap();
    assert!(check_morphism(&id).passed);
}

#[test]
fn embed_minus_maps_b_squared() {
    let m = morphism::embed_minus(2);
    let rp = algebras::rp_minus(2);
    let lhs = m.apply(&el(&rp, "b^2"));
    let rhs = m.apply(&el(&rp, "q^6 a c-"));
    assert_eq!(lhs, rhs);
}

#[test]
fn q4_relation_for_y_prime_fails() {
    // Under the inclusion y' -> z1², z' -> xi, y' and y'* commute, so the
    // a q^4 factor cannot hold.
    let sp = algebras::sigma_plus(3);
    let e = el(&sp, "y' y'* - q^4 y'* y'");
    assert!(!e.is_zero());
    assert_eq!(e, el(&sp, "(1 - q^4) y'^2 z'^2"));
    let img = morphism::fix_plus(3).apply(&e);
    assert!(!img.is_zero());
    assert!(morphism::fix_plus(3).apply(&el(&sp, "y' y'* - y'* y'")).is_zero());
}

#[test]
fn power_products_match_closed_forms() {
    let s = algebras::sigma();
    for m in 1..=4 {
        for n in 1..=4 {
            let got = el(&s, &format!("z0^{m} z0*^{n}"));
            let want = Element::from_terms(&s, common::power_product_closed_form(m, n, true));
            assert_eq!(got, want, "z0^{m} z0*^{n}");
            let got = el(&s, &format!("z0*^{n} z0^{m}"));
            let want = Element::from_terms(&s, common::power_product_closed_form(m, n, false));
            assert_eq!(got, want, "z0*^{n} z0^{m}");
        }
    }
}

#[test]
fn rational_coefficients_survive() {
    let s = algebras::sigma();
    let e = el(&s, "3/2*q^-2 z0 - 1/3 z1");
    assert_eq!(e.coeff(&Word::letter(0)), QPoly::monomial(rat(3) / rat(2), -2));
}

fn sample(p: &Arc<Presentation>, seed: u64, depth: u32) -> Expr {
    random_expr(p, &mut ChaCha8Rng::seed_from_u64(seed), depth)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn strategies_agree(seed in any::<u64>(), which in 0usize..5, l in 1u32..=3) {
        let p = all_algebras(l)[which].clone();
        let e = sample(&p, seed, 6);
        let a = Element::eval_with(&p, &e, Strategy::Leftmost);
        let b = Element::eval_with(&p, &e, Strategy::Random(seed ^ 0x9e37));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn normal_words_fit_a_family(seed in any::<u64>(), which in 0usize..5, l in 1u32..=3) {
        let p = all_algebras(l)[which].clone();
        let e = Element::eval(&p, &sample(&p, seed, 5));
        for w in e.terms().keys() {
            prop_assert!(p.is_normal(w), "{}", p.word_to_string(w));
        }
    }

    #[test]
    fn sigma_words_are_never_mixed(seed in any::<u64>()) {
        let s = algebras::sigma();
        let e = Element::eval(&s, &sample(&s, seed, 6));
        for w in e.terms().keys() {
            prop_assert!(w.count(0) == 0 || w.count(1) == 0);
        }
    }

    #[test]
    fn reduce_is_multiplicative(s1 in any::<u64>(), s2 in any::<u64>(), which in 0usize..5) {
        let p = all_algebras(2)[which].clone();
        let (e1, e2) = (sample(&p, s1, 4), sample(&p, s2, 4));
        let joint = Element::eval(&p, &Expr::Product(vec![e1.clone(), e2.clone()]));
        prop_assert_eq!(&Element::eval(&p, &e1) * &Element::eval(&p, &e2), joint);
    }

    #[test]
    fn star_is_an_involutive_antiautomorphism(s1 in any::<u64>(), s2 in any::<u64>(), which in 0usize..5) {
        let p = all_algebras(2)[which].clone();
        let a = Element::eval(&p, &sample(&p, s1, 4));
        let b = Element::eval(&p, &sample(&p, s2, 4));
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>(), which in 0usize..5) {
        let p = all_algebras(3)[which].clone();
        let e = Element::eval(&p, &sample(&p, seed, 5));
        prop_assert_eq!(Element::parse(&p, &e.to_string()).unwrap(), e);
    }
}
