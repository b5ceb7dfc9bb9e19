use proptest::prelude::*;
use qrpw_core::assocmod::chern_rec;
use qrpw_core::grading::{self, express_in_coinvariants};
use qrpw_core::ncalg::{algebras, morphism, random_expr, Element, Expr};
use qrpw_core::reps::{
    block_norm, chern_numeric_check, chern_scalar, relation_check, residual_suite, spectrum_check,
    star_check, term_scale, CMatrix, RepLabel, TruncatedRep, RESIDUAL_TOL,
};
use qrpw_core::{Rep, Sign};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn series(sign: Sign, l: u32, r: u32, dim: usize, q: f64) -> Rep {
    Rep::build(sign, l, RepLabel::Series(r), dim, q).unwrap()
}

#[test]
fn matrices_match_hand_formulas() {
    let (q, dim) = (0.6f64, 8);
    for (l, r) in [(1u32, 1u32), (2, 1), (2, 2), (3, 2)] {
        let (li, ri) = (l as i32, r as i32);
        let rep = series(Sign::Neg, l, r, dim, q);
        let a = rep.generator("a").unwrap();
        let b = rep.generator("b").unwrap();
        let cm = rep.generator("c-").unwrap();
        for n in 0..dim {
            let k = li * n as i32 + ri;
            assert!((a[(n, n)].re - q.powi(2 * k)).abs() < 1e-15);
            let wb: f64 = (1..=li).map(|m| (1.0 - q.powi(2 * (k - m))).sqrt()).product();
            if n >= 1 {
                assert!((b[(n - 1, n)].re - q.powi(k) * wb).abs() < 1e-14, "b l={l} r={r} n={n}");
            }
            let wc: f64 = (1..=2 * li).map(|m| (1.0 - q.powi(2 * (k - m))).max(0.0).sqrt()).product();
            if n >= 2 {
                assert!((cm[(n - 2, n)].re - wc).abs() < 1e-14, "c- l={l} r={r} n={n}");
            }
        }
        // lowest vectors are killed by the shifts
        assert_eq!(b.column(0).norm(), 0.0);
        assert_eq!(cm.column(1).norm(), 0.0);
    }
}

#[test]
fn positive_series_shift_by_one() {
    let q = 0.4f64;
    let rep = series(Sign::Pos, 3, 2, 6, q);
    let c = rep.generator("c+").unwrap();
    for n in 1..6 {
        let k = 3 * n as i32 + 2;
        let w: f64 = (1..=3).map(|m| (1.0 - q.powi(2 * (k - m))).sqrt()).product();
        assert!((c[(n - 1, n)].re - w).abs() < 1e-14);
    }
    assert_eq!(rep.max_shift(), 1);
    assert_eq!(rep.safe_len(), 5);
}

#[test]
fn phase_reps_are_one_dimensional() {
    let rep = Rep::build(Sign::Neg, 2, RepLabel::Phase(0.25), 40, 0.5).unwrap();
    assert_eq!(rep.dim(), 1);
    let c = rep.generator("c-").unwrap()[(0, 0)];
    assert!((c.re).abs() < 1e-15 && (c.im - 1.0).abs() < 1e-15);
    assert_eq!(rep.generator("b").unwrap()[(0, 0)].norm(), 0.0);
    assert!(relation_check(&rep, true).passed);
    assert_eq!(RepLabel::Phase(0.25).to_string(), "theta=0.25");
    assert_eq!(RepLabel::Series(1).to_string(), "r=1");
}

#[test]
fn invalid_parameters() {
    assert!(Rep::build(Sign::Neg, 2, RepLabel::Series(1), 10, 1.0).is_err());
    assert!(Rep::build(Sign::Neg, 2, RepLabel::Series(1), 10, 0.0).is_err());
    assert!(Rep::build(Sign::Neg, 2, RepLabel::Series(3), 10, 0.5).is_err());
    assert!(Rep::build(Sign::Neg, 2, RepLabel::Series(0), 10, 0.5).is_err());
    assert!(Rep::build(Sign::Pos, 2, RepLabel::Series(1), 3, 0.5).is_err());
    assert!(Rep::build(Sign::Pos, 2, RepLabel::Phase(1.0), 10, 0.5).is_err());
}

#[test]
fn relations_hold_on_the_safe_block() {
    for sign in [Sign::Neg, Sign::Pos] {
        for l in 1..=3 {
            for r in 1..=l {
                for q in [0.3, 0.5, 0.9] {
                    let rep = series(sign, l, r, 24, q);
                    let rc = relation_check(&rep, false);
                    assert!(rc.passed, "{}", rc.render());
                    let sc = spectrum_check(&rep);
                    assert!(sc.passed, "{}", sc.render());
                }
            }
        }
    }
}

#[test]
fn truncation_shows_at_the_boundary() {
    let rep = series(Sign::Neg, 2, 1, 4, 0.5);
    assert!(relation_check(&rep, false).passed);
    assert!(!relation_check(&rep, true).passed);
}

#[test]
fn star_is_adjoint() {
    for sign in [Sign::Neg, Sign::Pos] {
        let rep = series(sign, 2, 1, 20, 0.5);
        let r = star_check(&rep, 20, 3);
        assert!(r.passed, "{}", r.render());
    }
}

#[test]
fn chern_polynomials_numerically() {
    for l in 1..=3 {
        let rep = series(Sign::Neg, l, 1, 20, 0.7);
        for n in -3..=3 {
            let r = chern_numeric_check(&rep, n);
            assert!(r.passed, "{}", r.render());
        }
    }
}

#[test]
fn chern_scalar_matches_polynomial() {
    for l in 1..=3 {
        for n in -3..=3 {
            let p = chern_rec(l, n);
            for (q, lambda) in [(0.5, 0.1), (0.8, 0.3), (0.9, 0.9)] {
                let got = chern_scalar(l, n, q, lambda);
                let want: f64 = p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.eval(q).unwrap() * lambda.powi(k as i32))
                    .sum();
                assert!((got - want).abs() <= 1e-9 * (1.0 + want.abs()), "l={l} n={n}");
            }
        }
    }
}

#[test]
fn residual_suite_passes() {
    let r = residual_suite(Sign::Neg, 2, 20, 0.5, 0).unwrap();
    assert!(r.passed, "{}", r.render());
    let r = residual_suite(Sign::Pos, 1, 20, 0.3, 0).unwrap();
    assert!(r.passed, "{}", r.render());
}

#[test]
fn single_precision_agrees() {
    let lo = TruncatedRep::<f32>::build(Sign::Neg, 2, RepLabel::Series(1), 10, 0.5f32).unwrap();
    let hi = series(Sign::Neg, 2, 1, 10, 0.5);
    for name in ["a", "b", "c-"] {
        let (x, y) = (lo.generator(name).unwrap(), hi.generator(name).unwrap());
        for i in 0..10 {
            for j in 0..10 {
                assert!((x[(i, j)].re as f64 - y[(i, j)].re).abs() < 1e-6);
            }
        }
    }
}

#[test]
fn quadratic_and_product_relations_vanish() {
    for l in 1..=3 {
        let rep = series(Sign::Neg, l, 1, 40, 0.5);
        let e = Element::parse(rep.presentation(), &format!("b^2 - q^{} a c-", 3 * l)).unwrap();
        assert!(e.is_zero());
        let raw = rep.presentation().parse_expr(&format!("b^2 - q^{} a c-", 3 * l)).unwrap();
        assert!(block_norm(&rep.eval_expr(&raw), rep.safe_len()) < RESIDUAL_TOL);

        let rep = series(Sign::Pos, l, 1, 40, 0.7);
        let prod: Vec<String> = (0..l).map(|m| format!("(1 - q^{} a)", 2 * m)).collect();
        let text = format!("c+ c+* - {}", prod.join(""));
        let raw = rep.presentation().parse_expr(&text).unwrap();
        assert!(block_norm(&rep.eval_expr(&raw), rep.safe_len()) < RESIDUAL_TOL, "{text}");
    }
}

#[test]
fn identity_evaluates_to_identity() {
    let rep = series(Sign::Neg, 2, 1, 12, 0.5);
    let one = rep.eval_element(&Element::one(rep.presentation())).unwrap();
    assert_eq!(one, CMatrix::<f64>::identity(12, 12));
    let other = Element::one(&algebras::rp_plus(2));
    assert!(rep.eval_element(&other).is_err());
}

/// Twenty random coinvariant elements, pushed into the total algebra and
/// rewritten back, evaluate to the same matrices.
#[test]
fn coinvariant_round_trip_evaluates_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (sign, l) in [(Sign::Neg, 2), (Sign::Pos, 3)] {
        let rep = series(sign, l, 1, 40, 0.5);
        let p = rep.presentation().clone();
        let (iota, table) = match sign {
            Sign::Neg => (morphism::coinv_minus(l), grading::phi()),
            Sign::Pos => (morphism::coinv_plus(l), grading::omega()),
        };
        for _ in 0..20 {
            let b = Element::eval(&p, &random_expr(&p, &mut rng, 3));
            let back = express_in_coinvariants(&iota.apply(&b), &table).unwrap();
            let diff = rep.eval_element(&(&back - &b)).unwrap();
            let scale = 1.0 + term_scale(&rep, &b);
            assert!(block_norm(&diff, rep.safe_len()) / scale < RESIDUAL_TOL);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Rewriting an expression and then evaluating it agrees with multiplying
    /// the matrices of the raw expression.
    #[test]
    fn rewriting_commutes_with_evaluation(
        seed in any::<u64>(),
        l in 1u32..=3,
        neg in any::<bool>(),
        q in prop::sample::select(vec![0.3, 0.5, 0.8]),
    ) {
        let sign = if neg { Sign::Neg } else { Sign::Pos };
        let rep = series(sign, l, 1, 40, q);
        let p = rep.presentation().clone();
        let expr: Expr = random_expr(&p, &mut ChaCha8Rng::seed_from_u64(seed), 3);
        let reduced = Element::eval(&p, &expr);
        let lhs = rep.eval_element(&reduced).unwrap();
        let rhs = rep.eval_expr(&expr);
        let scale = 1.0 + term_scale(&rep, &reduced);
        let res = block_norm(&(lhs - rhs), 10) / scale;
        prop_assert!(res < RESIDUAL_TOL, "residual {res:e} for {reduced}");
    }
}
